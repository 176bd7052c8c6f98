"""
Building large permutations from small ones
===========================================

Wreath elements act on Z_m x Z_n as (x, y) -> (pi(x), pi_x(y)) and are
flattened to Z_mn through r + m t <-> (r, t).  The product, pq5 and pq3
constructions all live in this form.
"""

from collections import Counter

from circsort import coset_profile, t_coset
from circsort.bounds import run_table, t_bounds
from circsort.constructions import (affine, construct_pq3, construct_pq5,
                                    construct_product, wreath_flatten)

# product of two affine maps: the outer map drives the columns, one fiber
# carries the inner map and the rest are identities
w = construct_product(affine(5, 2), affine(3, 2))
p = wreath_flatten(w)
print("product on Z_15:", p.image)
print("t_coset:", t_coset(p), ">= 3 * 3 + 1")

# pq5: fibers y -> g^e y with exponents chosen so the cycle count of each
# shift stays small
cfg, w = construct_pq5(7, 5)
print("pq5 exponents:", cfg.exponents, "sum", cfg.e)
print("t_coset on Z_35:", t_coset(wreath_flatten(w)))

# pq3: affine fibers with offsets solved over F_q so that every shift has
# exactly three cycles
for p_, q_ in [(5, 3), (7, 3), (13, 7)]:
    wit = construct_pq3(p_, q_)
    perm = wit.perm()
    print(f"pq3({p_},{q_}) offsets {wit.offsets}")
    print("   shift cycle counts:", Counter(coset_profile(perm).cycle_counts))

# certified bounds for a few moduli, then the whole table
for n in (15, 22, 25, 35):
    r = t_bounds(n)
    print(n, r.interval(), r.lower_provenance, r.upper_provenance)
print(run_table(30))
