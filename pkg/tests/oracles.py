"""Independent reference implementations used to check the package.

Nothing here imports circsort: cycle structure comes from sympy's
Permutation, number theory from sympy.ntheory, ranks from sympy's
DomainMatrix over GF(q), and the search oracles are plain brute force.
"""

from __future__ import annotations

import itertools
from math import gcd

import numpy as np
from sympy.combinatorics import Permutation
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix


def cycles(img) -> int:
    return Permutation(list(img)).cycles


def cycle_type(img) -> tuple:
    return tuple(sorted(len(c) for c in Permutation(list(img)).full_cyclic_form))


def shifted(img, k):
    n = len(img)
    return [img[(x + k) % n] for x in range(n)]


def t_coset(img) -> int:
    n = len(img)
    return n - max(cycles(shifted(img, k)) for k in range(n))


def is_orthomorphism(img) -> bool:
    n = len(img)
    return len({(v - x) % n for x, v in enumerate(img)}) == n


def is_complete(img) -> bool:
    n = len(img)
    return len({(v + x) % n for x, v in enumerate(img)}) == n


def rank_gf(rows, q) -> int:
    return DomainMatrix([[GF(q)(v) for v in r] for r in rows],
                        (len(rows), len(rows[0])), GF(q)).rank()


def zero_fixing_perms(n: int, chunk_first: bool = True):
    """Yield numpy blocks of all permutations of Z_n with p(0) = 0, one block
    per value of p(1)."""
    rest = list(range(1, n))
    if n <= 2:
        yield np.array([[0] + rest], dtype=np.int64)
        return
    for first in rest:
        others = [v for v in rest if v != first]
        block = np.array(list(itertools.permutations(others)), dtype=np.int64)
        head = np.zeros((block.shape[0], 2), dtype=np.int64)
        head[:, 1] = first
        yield np.hstack([head, block])


def _rows_bijective(vals: np.ndarray, n: int) -> np.ndarray:
    bits = np.left_shift(np.int64(1), vals)
    return np.bitwise_or.reduce(bits, axis=1) == (1 << n) - 1


def brute_scm_count(n: int) -> int:
    """Strong complete mappings of Z_n fixing 0, by filtering every
    zero-fixing permutation."""
    xs = np.arange(n, dtype=np.int64)
    total = 0
    for block in zero_fixing_perms(n):
        ok = _rows_bijective((block - xs) % n, n)
        ok &= _rows_bijective((block + xs) % n, n)
        total += int(ok.sum())
    return total


def brute_t(n: int) -> int:
    return max(t_coset(p) for p in itertools.permutations(range(n)))


def affine_cycles(a: int, n: int) -> int:
    return cycles([a * x % n for x in range(n)])


def units(n: int):
    return [a for a in range(1, n) if gcd(a, n) == 1] or [0]
