# coding: utf-8

# # Extending a coloring along a path blowup
#
# The cliques V_0 .. V_n sit on a path, with V_0 and V_n already colored.
# A set s of colors is missing from V_n. We want to color the rest with r
# colors so that s appears on every even clique. Clique V_j, with j odd, is
# left out; it gets colored later from s.

# In[1]:

from capcolor import PathBlowup, greedy_chain_extension, path_extension
from capcolor.engine import check_path_coloring


# In[2]:

pb = PathBlowup((2, 1, 2, 1, 2, 2), 4)
ends = {0: {1, 2}, 5: {3, 4}}
out = path_extension(pb, ends, {1}, 3)
for i in sorted(out):
    print(i, sorted(out[i]))
print(check_path_coloring(pb, out, 3))


# The greedy chain sweeps left to right. Each clique takes colors free of its
# left neighbor, and it prefers colors seen two cliques back. It reports where
# it gets stuck when r is too small.

# In[3]:

print(greedy_chain_extension(PathBlowup((1, 1, 1, 1), 2), {0: {1}, 3: {1}}, order=[1, 2]))
print(greedy_chain_extension(PathBlowup((1, 1, 1, 1), 3), {0: {1}, 3: {1}}, order=[1, 2]))
