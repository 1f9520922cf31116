# coding: utf-8

# # Tightness of the bound on cycle blowups
#
# A k-clique blowup of the cycle C_{2q+1} has clique number 2k. Every color
# class meets at most q of its 2q+1 fibers, so it needs at least
# ceil((2q+1)k / q) colors. That equals the bound ceil((2q+1)ω / 2q), so these
# graphs show the bound cannot be lowered.

# In[1]:

from capcolor import BoundParams, color_blowup, compute_bound, cycle_blowup, exact_chromatic
from capcolor.verify import tightness_table


# The table below computes χ exactly for each k.

# In[2]:

for q in (2, 3):
    print(tightness_table(q, 4 if q == 2 else 3).to_tsv())


# The engine also meets the bound on these graphs. The C5 blowup with k = 4
# has ω = 8, so it goes through one split before reaching the base case.

# In[3]:

g, b = cycle_blowup(5, 4)
cert = color_blowup(b, BoundParams(5, 2))
print(cert.used, cert.bound, exact_chromatic(g).value)
for level in cert.trace:
    print(level["kind"], level.get("omega"), level.get("budget"))


# The bound grows in steps: each increase of 2q in ω adds p colors.

# In[4]:

p52 = BoundParams(5, 2)
print([(w, compute_bound(p52, w)) for w in range(1, 17)])
