"""Quadratic maps ``[a, b]`` on Z_p: multiply squares by a, non-squares by b."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotABijection, NotPrime
from ..perm import Perm, coset_profile
from .numtheory import is_prime


def squares_mod(p: int) -> frozenset:
    return frozenset(y * y % p for y in range(p))


def _check_odd_prime(p: int):
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")


@dataclass(frozen=True)
class QuadraticMap:
    p: int
    a: int
    b: int

    @property
    def squares(self) -> frozenset:
        return squares_mod(self.p)

    def perm(self) -> Perm:
        return quadratic_map(self.a, self.b, self.p)


def quadratic_map(a: int, b: int, p: int) -> Perm:
    _check_odd_prime(p)
    if a % p == 0 or b % p == 0:
        raise NotABijection("a and b must be units")
    sq = squares_mod(p)
    img = tuple((a * x if x in sq else b * x) % p for x in range(p))
    return Perm(img)  # validates bijectivity


def quadratic_is_scm(a: int, b: int, p: int) -> bool:
    """``ab``, ``(a-1)(b-1)`` and ``(a+1)(b+1)`` all nonzero squares."""
    _check_odd_prime(p)
    nonzero_sq = squares_mod(p) - {0}
    return all(v % p in nonzero_sq
               for v in (a * b, (a - 1) * (b - 1), (a + 1) * (b + 1)))


def quadratic_witness_scan(p: int) -> list[tuple[int, int]]:
    """Pairs ``a != b`` for which ``[a, b]`` has every shift of cycle type
    ``(1, p-1)``."""
    _check_odd_prime(p)
    out = []
    for a in range(1, p):
        for b in range(1, p):
            if a == b or not quadratic_is_scm(a, b, p):
                continue
            if coset_profile(quadratic_map(a, b, p)).t_coset == p - 2:
                out.append((a, b))
    return out
