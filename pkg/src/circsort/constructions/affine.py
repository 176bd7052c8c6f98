"""Affine permutations ``x -> a x + b`` and the best affine sorting distance."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..errors import NotCoprime
from ..perm import Perm
from .numtheory import (carmichael, crt, divisors, euler_phi, factorize,
                        mult_order, primitive_root_prime_power)


@dataclass(frozen=True)
class AffineParams:
    n: int
    a: int
    b: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if gcd(self.a, self.n) != 1:
            raise NotCoprime(f"multiplier {self.a} is not a unit mod {self.n}")


def affine_perm(params: AffineParams) -> Perm:
    n, a, b = params.n, params.a, params.b
    return Perm._trusted(tuple((a * x + b) % n for x in range(n)))


def affine(n: int, a: int, b: int = 0) -> Perm:
    return affine_perm(AffineParams(n, a, b))


def affine_cycle_count(a: int, n: int) -> int:
    """Cycles of ``x -> a x`` on Z_n, summed over divisors as
    ``phi(d) / ord_d(a)``."""
    if gcd(a, n) != 1:
        raise NotCoprime(f"gcd({a}, {n}) != 1")
    return sum(euler_phi(d) // mult_order(a, d) for d in divisors(n))


def t_aff(n: int) -> tuple[int, int]:
    """``(t_aff(n), a)``: the largest circular sorting distance of an affine
    permutation of Z_n, and a multiplier attaining it."""
    if n < 1:
        raise ValueError("n must be positive")
    value = n - sum(euler_phi(d) // carmichael(d) for d in divisors(n))
    residues, moduli = [], []
    for p, k in factorize(n).items():
        q = p**k
        residues.append(3 % q if p == 2 else primitive_root_prime_power(p, k))
        moduli.append(q)
    a = crt(residues, moduli)
    assert n - affine_cycle_count(a, n) == value
    return value, a
