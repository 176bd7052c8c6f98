"""
Permutation polynomials over Z_n
================================

Over a prime field every permutation is a polynomial; over Z_{mn} a
permutation polynomial splits into an outer polynomial on Z_m and one
polynomial per column, exactly the wreath form.
"""

import numpy as np

from circsort import Perm
from circsort.constructions import (PermPoly, c_poly_bruteforce,
                                    poly_interpolate_prime, poly_is_permutation,
                                    poly_wreath_decompose, wreath_unflatten)

rng = np.random.default_rng(0)
img = rng.permutation(7).tolist()
f = poly_interpolate_prime(Perm(img))
print("permutation", img)
print("polynomial ", f)
print("round trip ", poly_is_permutation(f).image == tuple(img))

# 2x^2 + x permutes Z_4 although x^2 does not
print(poly_is_permutation(PermPoly(4, (0, 1, 2))))
print(poly_is_permutation(PermPoly(4, (0, 0, 1))))

# split a permutation polynomial of Z_12 along Z_3 x Z_4
g = PermPoly(12, (5, 7, 0, 4))
perm = poly_is_permutation(g)
outer, fibers = poly_wreath_decompose(g, 3, 4)
print("outer:", outer, "->", outer.values())
for r, h in enumerate(fibers):
    print(f"column {r}: {h} -> {h.values()}")
w = wreath_unflatten(perm, 3, 4)
print("matches unflatten:", w.pi.image == outer.values()
      and all(fi.image == h.values() for fi, h in zip(w.fibers, fibers)))

# smallest achievable worst-shift cycle count among polynomial permutations
for n in (2, 3, 4, 5, 6, 8):
    print(f"c_poly({n}) = {c_poly_bruteforce(n)}")
