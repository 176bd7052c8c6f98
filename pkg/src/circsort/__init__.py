"""Circular sorting numbers t(n): coset statistics of permutations of Z_n,
strong complete mappings, algebraic lower-bound constructions and the
backtracking searches behind exact values."""

from .errors import (BudgetExceeded, CircSortError, DivisibilityViolated,
                     EmptyInput, InvalidWitness, ModulusMismatch, NotABijection,
                     NotAPermutationPolynomial, NotCoprime, NotPrime,
                     ParseError, PreconditionViolated, SolverFailed)
from .mappings import (MappingClass, carry_count, classify_mapping,
                       existence_scan, is_complete, is_orthomorphism)
from .perm import (CosetProfile, Perm, compose, coset_profile,
                   cycle_count, cycle_decomposition, cycle_type, identity,
                   inverse, make_perm, normalize_zero, shift,
                   shift_cycle_counts, t_coset, translate,
                   transposition_distance)

__version__ = "0.1.0"
