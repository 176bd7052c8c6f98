"""
Shifts, cycle counts and the coset distance
===========================================

A permutation p of Z_n has n cyclic shifts x -> p(x + k).  Sorting the
circular arrangement needs n - (cycles of the best shift) transpositions,
and t_coset records that number.
"""

import numpy as np

from circsort import Perm, classify_mapping, coset_profile, identity, shift
from circsort.constructions import affine, quadratic_map

# a small example: the shifts alternate between 2 and 3 cycles
p = Perm([1, 3, 5, 2, 4, 0])
prof = coset_profile(p)
print("cycle counts per shift:", prof.cycle_counts)
print("t_coset:", prof.t_coset)
for k in range(p.n):
    print(k, shift(p, k).image, prof.shift_types[k])

# the identity is already sorted
print("identity:", coset_profile(identity(9)).t_coset)

# multiplication by a primitive root: every shift is one fixed point plus
# one long cycle, which is as bad as it gets for a prime modulus
a = affine(23, 5)
print("x -> 5x mod 23:", set(coset_profile(a).shift_types))

# table of t_coset for all multipliers on Z_24, as an array
units = [u for u in range(1, 24) if np.gcd(u, 24) == 1]
tc = np.array([coset_profile(affine(24, u)).t_coset for u in units])
print("units mod 24:", units)
print("t_coset:     ", tc.tolist(), "best", tc.max())

# a non-affine map on Z_23 with the same extreme profile: square inputs are
# multiplied by 7, the others by 5, and the result is translated
q = quadratic_map(7, 5, 23)
c = 13
r = Perm([(q((x + c) % 23) - q(c)) % 23 for x in range(23)])
print("translated quadratic map:", r.image)
print("t_coset:", coset_profile(r).t_coset, classify_mapping(r))
