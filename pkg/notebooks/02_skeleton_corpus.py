# coding: utf-8

# # Building skeletons by good ear additions
#
# Each corpus entry starts from an odd hole. Good ear additions then grow it
# while staying triangle-free, cap-free and even-hole-free. The entry records
# every step, so any graph in the corpus can be rebuilt from its steps.

# In[1]:

from collections import Counter

from capcolor import classify, generate_skeleton_corpus, validate_good_ear
from capcolor.graph import Graph


# In[2]:

corpus = generate_skeleton_corpus(1, 18, 3)
print(len(corpus), "skeletons")
print(Counter((e.initial_hole, len(e.steps)) for e in corpus))


# Every entry replays to the same graph and stays in the class.

# In[3]:

for e in corpus:
    assert e.replay() == e.graph
    r = classify(e.graph)
    assert r.triangle_free and r.cap_free and r.even_hole_free
print("all replay and classify cleanly")


# The validator explains each step. This is the first step of the first entry
# that has one.

# In[4]:

e = next(e for e in corpus if e.steps)
step = e.steps[0]
print(step)
print(validate_good_ear(Graph.cycle(e.initial_hole), step))


# Raising the minimum hole length to 7 gives 5-hole-free skeletons. These are
# the ones used with the (7, 3) parameters.

# In[5]:

long_holes = generate_skeleton_corpus(3, 24, 3, min_hole=7, initial_lengths=(7, 9, 11, 13))
print(len(long_holes), all(classify(x.graph).five_hole_free for x in long_holes))
