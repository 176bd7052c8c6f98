"""
Searching strong complete mappings
==================================

A strong complete mapping f of Z_n has both x -> f(x) - x and x -> f(x) + x
bijective; these are the maps whose every shift has at most one fixed point
and no transposition.  The numba backtracker enumerates them with f(0) = 0.
"""

import time
from collections import Counter

from circsort import Perm, coset_profile
from circsort.search import (ScmSearchConfig, avoid_cycle_search,
                             canonical_form, count_scm, exhaustive_t_witness,
                             profile_witness_search, scm_enumerate,
                             shard_prefixes)

for n in (5, 7, 11, 13, 17):
    start = time.perf_counter()
    print(f"n = {n:2d}: {count_scm(n):6d} maps ({time.perf_counter() - start:.2f}s)")

# shards split the tree by the first two images; their counts add up
shards = shard_prefixes(13)
print(len(shards), "shards, total", sum(count_scm(13, prefix=s) for s in shards))

# maps whose every shift is one fixed point plus an (n-1)-cycle
for n in (7, 11, 13, 17):
    found = profile_witness_search(n)
    print(f"n = {n}: {len(found)} maps with every shift of type (1, {n - 1})")

# exact values by branch and bound
for n in (4, 6, 8, 9, 10, 12):
    t, wit = exhaustive_t_witness(n)
    print(f"t({n}) = {t}, e.g. {wit.image}")

# orthomorphisms of Z_13 avoiding short cycles in every shift, grouped into
# classes under x -> a^-1 p(a(x + b)) + b'
found = avoid_cycle_search(13, 3)
reps = sorted({canonical_form(p) for p in found})
print(len(found), "maps in", len(reps), "classes")
for r in reps[:5]:
    print(r.image, dict(Counter(coset_profile(r).shift_types)))

# two maps on Z_25 whose shifts avoid every cycle of length 2..6
for img in [(0, 2, 4, 23, 14, 18, 10, 22, 16, 12, 1, 8, 5, 9, 20, 24, 21, 3,
             17, 13, 7, 19, 11, 15, 6),
            (0, 2, 12, 1, 11, 17, 3, 16, 4, 15, 21, 6, 20, 5, 7, 18, 10, 19,
             23, 8, 24, 9, 13, 22, 14)]:
    p = Perm(img)
    print(canonical_form(p) == p, dict(Counter(coset_profile(p).shift_types)))

# "first" mode stops at the first map and reports the nodes it visited
out = scm_enumerate(ScmSearchConfig(n=19, mode="first"))
print("first map for n = 19:", out.witnesses[0].image, out.nodes_visited, "nodes")
