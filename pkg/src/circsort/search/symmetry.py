"""Slopes, the slope-preserving transforms and canonical representatives."""

from __future__ import annotations

from collections import Counter
from math import gcd

from ..errors import NotCoprime
from ..perm import Perm


def units(n: int) -> list[int]:
    if n == 1:
        return [0]
    return [a for a in range(1, n) if gcd(a, n) == 1]


def slope_set(p: Perm) -> Counter:
    """Multiset of ``(p(x) - p(y)) / (x - y)`` over unordered pairs whose
    difference is a unit."""
    n = p.n
    img = p.image
    out: Counter = Counter()
    for y in range(n):
        for x in range(y + 1, n):
            d = x - y
            if gcd(d, n) != 1:
                continue
            out[(img[x] - img[y]) * pow(d, -1, n) % n] += 1
    return out


def slope_transform(p: Perm, a: int, b: int) -> Perm:
    """``x -> a^{-1} (p(a x + b) - p(b))``."""
    n = p.n
    if gcd(a, n) != 1:
        raise NotCoprime(f"{a} is not a unit mod {n}")
    ainv = pow(a, -1, n) if n > 1 else 0
    img = p.image
    base = img[b % n]
    return Perm._trusted(tuple(ainv * (img[(a * x + b) % n] - base) % n
                               for x in range(n)))


def slope_orbit(p: Perm) -> set:
    return {slope_transform(p, a, b) for a in units(p.n) for b in range(p.n)}


def canonical_form(p: Perm) -> Perm:
    """Lexicographically smallest image over ``x -> a^{-1} p(a(x + b)) + b'``.

    For fixed ``(a, b)`` the offset ``b'`` that makes the image start at 0
    is optimal, so only ``(a, b)`` are enumerated.
    """
    n = p.n
    img = p.image
    best = None
    for a in units(n):
        ainv = pow(a, -1, n) if n > 1 else 0
        for b in range(n):
            q = [ainv * img[(a * (x + b)) % n] % n for x in range(n)]
            c = q[0]
            cand = tuple((v - c) % n for v in q)
            if best is None or cand < best:
                best = cand
    return Perm._trusted(best)


def canonical_orbit(p: Perm) -> set:
    """The full orbit of ``p`` under the canonical-form transform group."""
    n = p.n
    img = p.image
    out = set()
    for a in units(n):
        ainv = pow(a, -1, n) if n > 1 else 0
        for b in range(n):
            q = [ainv * img[(a * (x + b)) % n] % n for x in range(n)]
            for b2 in range(n):
                out.add(Perm._trusted(tuple((v + b2) % n for v in q)))
    return out
