"""Polynomials over Z_n viewed as functions, and permutation polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from ..errors import BudgetExceeded, NotAPermutationPolynomial, NotPrime
from ..perm import Perm, _cycle_lengths
from .numtheory import is_prime


@dataclass(frozen=True)
class PermPoly:
    n: int
    coeffs: tuple  # a_0, a_1, ..., a_d

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "coeffs",
                           tuple(int(c) % self.n for c in self.coeffs) or (0,))

    @property
    def degree(self) -> int:
        nz = [i for i, c in enumerate(self.coeffs) if c]
        return nz[-1] if nz else -1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.n
        return acc

    def values(self) -> tuple:
        return tuple(self(x) for x in range(self.n))

    def trimmed(self) -> "PermPoly":
        return PermPoly(self.n, self.coeffs[: self.degree + 1])

    def __str__(self) -> str:
        return f"{self.n}: " + " ".join(str(c) for c in self.coeffs)


def poly_is_permutation(f: PermPoly) -> Optional[Perm]:
    vals = f.values()
    if len(set(vals)) != f.n:
        return None
    return Perm._trusted(vals)


def poly_interpolate_prime(p: Perm) -> PermPoly:
    """Coefficients of ``sum_a p(a) (1 - (x - a)^{n-1})`` over the prime field."""
    n = p.n
    if not is_prime(n):
        raise NotPrime(f"{n} is not prime")
    coeffs = [0] * n
    for a, pa in enumerate(p.image):
        if pa == 0:
            continue
        coeffs[0] += pa
        # subtract pa * (x - a)^{n-1}
        for j in range(n):
            coeffs[j] -= pa * comb(n - 1, j) * pow(-a, n - 1 - j, n)
    return PermPoly(n, coeffs).trimmed()


def poly_wreath_decompose(f: PermPoly, m: int, n: int) -> tuple[PermPoly, list]:
    """Split a permutation polynomial of Z_{mn} into the outer polynomial
    (coefficients mod m) and the column polynomials ``g_r`` on Z_n.

    ``f(r + m y) = R(f(r)) + m g_r(y)`` with
    ``g_r(y) = Q(f(r)) + sum_{j>=1} y^j m^{j-1} sum_{i>=j} C(i, j) r^{i-j} a_i``.
    """
    if f.n != m * n:
        raise ValueError(f"polynomial modulus {f.n} != {m} * {n}")
    if poly_is_permutation(f) is None:
        raise NotAPermutationPolynomial(str(f))
    a = f.coeffs
    d = len(a) - 1
    outer = PermPoly(m, a)
    fibers = []
    for r in range(m):
        fr = f(r)
        g = [fr // m]
        for j in range(1, d + 1):
            s = sum(comb(i, j) * r ** (i - j) * a[i] for i in range(j, d + 1))
            g.append(m ** (j - 1) * s)
        fibers.append(PermPoly(n, g))
    return outer, fibers


def polynomial_functions(n: int, degree_cap: Optional[int] = None,
                         budget: int = 2_000_000) -> set:
    """All functions Z_n -> Z_n induced by polynomials of degree <= cap,
    as value tuples (the additive span of the monomial functions)."""
    cap = n if degree_cap is None else degree_cap
    funcs = {tuple([0] * n)}
    for i in range(cap + 1):
        mono = tuple(pow(x, i, n) for x in range(n))
        if i == 0:
            mono = tuple([1 % n] * n)
        new = set()
        for fn in funcs:
            for c in range(n):
                new.add(tuple((u + c * v) % n for u, v in zip(fn, mono)))
            if len(new) > budget:
                raise BudgetExceeded(f"more than {budget} polynomial functions")
        funcs = new
    return funcs


def c_poly_bruteforce(n: int, degree_cap: Optional[int] = None,
                      budget: int = 2_000_000) -> int:
    """Min over permutation-polynomial functions of the max shift cycle count."""
    if n < 1:
        raise ValueError("n must be positive")
    best = None
    for vals in polynomial_functions(n, degree_cap, budget):
        if len(set(vals)) != n:
            continue
        worst = max(len(_cycle_lengths(vals[k:] + vals[:k])) for k in range(n))
        if best is None or worst < best:
            best = worst
    return best
