"""Algebraic constructions of permutations with few cycles in every shift."""

from .affine import AffineParams, affine, affine_cycle_count, affine_perm, t_aff
from .numtheory import (carmichael, crt, divisors, euler_phi, factorize,
                        is_prime, mult_order, primitive_root, totients)
from .polys import (PermPoly, c_poly_bruteforce, poly_interpolate_prime,
                    poly_is_permutation, poly_wreath_decompose)
from .pq3 import Pq3Witness, circulant_rank, construct_pq3
from .quadratic import (QuadraticMap, quadratic_is_scm, quadratic_map,
                        quadratic_witness_scan)
from .wreath import (Pq5Config, WreathElement, construct_pq5,
                     construct_product, shift_pair, w_value, wreath_flatten,
                     wreath_unflatten)
