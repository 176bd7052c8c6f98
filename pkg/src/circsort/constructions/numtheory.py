"""Small-integer number theory: factorization, totients, orders, generators."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from ..errors import NotCoprime, NotPrime


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, k in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def carmichael(n: int) -> int:
    """Exponent of the unit group of Z_n."""
    out = 1
    for p, k in factorize(n).items():
        if p == 2 and k >= 3:
            part = 2 ** (k - 2)
        else:
            part = (p - 1) * p ** (k - 1)
        out = lcm(out, part)
    return out


@dataclass(frozen=True)
class TotientData:
    n: int
    phi: int
    lam: int
    divisors: tuple


def totients(n: int) -> TotientData:
    return TotientData(n, euler_phi(n), carmichael(n), tuple(divisors(n)))


def mult_order(a: int, d: int) -> int:
    """Least ``l >= 1`` with ``a^l = 1 (mod d)``."""
    if d < 1:
        raise ValueError("modulus must be positive")
    if d == 1:
        return 1
    if gcd(a, d) != 1:
        raise NotCoprime(f"gcd({a}, {d}) != 1")
    a %= d
    order = carmichael(d)
    # shrink the exponent one prime at a time
    for p in factorize(order):
        while order % p == 0 and pow(a, order // p, d) == 1:
            order //= p
    return order


def primitive_root(p: int) -> int:
    """Smallest generator of the unit group of Z_p, p prime."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        return 1
    qs = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")


def primitive_root_prime_power(p: int, k: int) -> int:
    """A generator of the unit group of Z_{p^k} for odd prime p."""
    g = primitive_root(p)
    if k >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def crt(residues: list[int], moduli: list[int]) -> int:
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        # solve x + m t = r (mod mi)
        t = (r - x) * pow(m, -1, mi) % mi if mi > 1 else 0
        x += m * t
        m *= mi
    return x % m
