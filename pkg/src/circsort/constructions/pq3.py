"""Wreath elements on Z_p x Z_q whose every shift has exactly three cycles.

The element is ``(x, y) -> (a x, g y + b_x)`` with ``a`` generating the units
mod p and ``g`` generating the units mod q.  For the shift by ``r`` the outer
map has one fixed column and one long cycle of columns; walking once around
the long cycle translates the row by ``C_r(b)``, which is affine in the offsets
``b``.  Choosing ``b`` with every ``C_r(b) != 0`` leaves exactly three cycles
in every shift when ``(q - 1) | (p - 1)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import DivisibilityViolated, NotPrime, PreconditionViolated, SolverFailed
from ..perm import Perm, shift_cycle_counts
from .gf import avoid_values, rank_mod
from .numtheory import is_prime, primitive_root
from .wreath import WreathElement, wreath_flatten, wreath_from_affine_fibers


@dataclass(frozen=True)
class Pq3Witness:
    p: int
    q: int
    a: int
    g: int
    offsets: tuple

    def wreath(self) -> WreathElement:
        return wreath_from_affine_fibers(self.p, self.q, self.a, self.g,
                                         self.offsets)

    def perm(self) -> Perm:
        return wreath_flatten(self.wreath())


def _check_pq(p: int, q: int):
    for v in (p, q):
        if v < 3 or not is_prime(v):
            raise NotPrime(f"{v} is not an odd prime")
    if (p - 1) % (q - 1):
        raise DivisibilityViolated(f"{q - 1} does not divide {p - 1}")


def _walk_offset(p, q, a, g, offsets, r):
    """Row translation after one pass around the long column cycle of the
    shift by r, simulated on Z_{pq} directly."""
    N = p * q
    d = r * a * pow(1 - a, -1, p) % p
    start = (a + d) % p
    z = start
    for _ in range(p - 1):
        w = (z + r) % N
        x, y = w % p, w // p
        z = a * x % p + p * ((g * y + offsets[x]) % q)
    assert z % p == start
    return (z // p) % q


def shift_constraints(p: int, q: int, a: int, g: int):
    """Rows and forbidden values: for each r, ``rows[r] . b != forbidden[r]``
    is exactly ``C_r(b) != 0``."""
    rows, forbidden = [], []
    zero = [0] * p
    for r in range(p):
        const = _walk_offset(p, q, a, g, zero, r)
        row = []
        for x in range(p):
            unit = [0] * p
            unit[x] = 1
            row.append((_walk_offset(p, q, a, g, unit, r) - const) % q)
        rows.append(row)
        forbidden.append(-const % q)
    return rows, forbidden


def verify_three_cycles(perm: Perm) -> bool:
    return all(c == 3 for c in shift_cycle_counts(perm))


def construct_pq3(p: int, q: int, randomized: bool = False, seed: int = 0,
                  tries: int = 10_000) -> Pq3Witness:
    """Three cycles in every shift on Z_{pq}, so ``t_coset = pq - 3``.

    The default solver is deterministic row reduction over F_q; with
    ``randomized=True`` offsets are sampled (seeded) until verification passes.
    """
    _check_pq(p, q)
    a = primitive_root(p)
    g = primitive_root(q)
    if randomized:
        rng = random.Random(seed)
        for _ in range(tries):
            offsets = tuple(rng.randrange(q) for _ in range(p))
            w = Pq3Witness(p, q, a, g, offsets)
            if verify_three_cycles(w.perm()):
                return w
        raise SolverFailed(f"no offsets found in {tries} samples")
    rows, forbidden = shift_constraints(p, q, a, g)
    b = avoid_values(rows, forbidden, q)
    if b is None:
        raise SolverFailed(f"no offsets avoid all forbidden values for ({p}, {q})")
    w = Pq3Witness(p, q, a, g, tuple(b))
    if not verify_three_cycles(w.perm()):
        raise SolverFailed(f"offsets for ({p}, {q}) failed verification")
    return w


def character_table(p: int, q: int) -> list[int]:
    """``f(0) = 0`` and ``f(a^i) = g^{-i}`` for the smallest generators."""
    if (p - 1) % (q - 1):
        raise DivisibilityViolated(f"{q - 1} does not divide {p - 1}")
    a = primitive_root(p)
    g = primitive_root(q)
    ginv = pow(g, -1, q)
    f = [0] * p
    x = 1
    for i in range(p - 1):
        f[x] = pow(ginv, i, q)
        x = x * a % p
    return f


def circulant_matrix(p: int, q: int) -> list[list[int]]:
    """``A[i + j][i] = f(j)`` with indices mod p."""
    f = character_table(p, q)
    A = [[0] * p for _ in range(p)]
    for i in range(p):
        for j in range(p):
            A[(i + j) % p][i] = f[j]
    return A


def circulant_rank(p: int, q: int) -> int:
    for v in (p, q):
        if not is_prime(v):
            raise NotPrime(f"{v} is not prime")
    if (p - 1) % (q - 1):
        raise DivisibilityViolated(f"{q - 1} does not divide {p - 1}")
    if q >= p:
        raise PreconditionViolated("circulant_rank needs q < p")
    return rank_mod(circulant_matrix(p, q), q)
