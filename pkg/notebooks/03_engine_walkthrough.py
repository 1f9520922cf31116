# coding: utf-8

# # One split of the coloring recursion
#
# When ω is above the base threshold, the engine picks a transversal T that
# takes min(q, |Q_v|) vertices from every fiber. It then splits the rest into
# V1 and V2. V1 holds the small fibers next to very large ones, and the pieces
# of V1 - T are cliques. Removing T from V2 drops the clique number by 2q, so
# V2 - T recurses with p fewer colors. T is colored from a fresh palette of p.

# In[1]:

import random

from capcolor import (
    BoundParams,
    blowup_omega,
    build_blowup,
    check_certificate,
    color_blowup,
    generate_skeleton_corpus,
    partition_v1_v2,
)


# In[2]:

params = BoundParams(5, 2)
corpus = generate_skeleton_corpus(1, 18, 3)
# fibers of size 1 next to fibers of size 6 or 7 put vertices in V1
rng = random.Random(42)
sk = corpus[-1].graph
g, b = build_blowup(sk, [rng.choice([1, 1, 6, 7]) for _ in range(sk.n)])
omega = blowup_omega(b)
print(sk.n, "skeleton vertices,", g.n, "vertices, omega", omega)


# In[3]:

part = partition_v1_v2(b, params, omega)
print("|T| =", len(part.t_set), " |V1| =", len(part.v1), " |V2| =", len(part.v2))
print("V1 - T cliques:", sorted(len(k) for k in part.v1_cliques))


# The certificate records every level and the checks made at it.

# In[4]:

cert = color_blowup(b, params)
for level in cert.trace:
    print(level)
print(cert.used, "colors, bound", cert.bound)
print(check_certificate(g, cert))
