"""Permutations of Z_m x Z_n of the form ``(x, y) -> (pi(x), pi_x(y))``.

The grid is identified with Z_{mn} through ``r + m t <-> (r, t)``; under this
identification the shift ``z -> z + 1`` moves along a column index and carries
into the row index when leaving column ``m - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..errors import ModulusMismatch, NotPrime, PreconditionViolated
from ..perm import Perm, identity
from .numtheory import is_prime, primitive_root


@dataclass(frozen=True)
class WreathElement:
    m: int
    n: int
    pi: Perm
    fibers: tuple

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(self.fibers))
        if self.pi.n != self.m or len(self.fibers) != self.m:
            raise ModulusMismatch("outer permutation must act on Z_m with m fibers")
        if any(f.n != self.n for f in self.fibers):
            raise ModulusMismatch("all fibers must act on Z_n")

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.pi(x), self.fibers[x % self.m](y)

    def flatten(self) -> Perm:
        return wreath_flatten(self)


def wreath_flatten(w: WreathElement) -> Perm:
    m, n = w.m, w.n
    img = [0] * (m * n)
    for r in range(m):
        pr = w.pi.image[r]
        fib = w.fibers[r].image
        for t in range(n):
            img[r + m * t] = pr + m * fib[t]
    return Perm._trusted(tuple(img))


def wreath_unflatten(p: Perm, m: int, n: int) -> Optional[WreathElement]:
    """The wreath form of ``p``, or None if ``p`` does not map columns
    (residue classes mod m) onto columns."""
    if p.n != m * n:
        raise ModulusMismatch(f"{p.n} != {m} * {n}")
    img = p.image
    outer = []
    fibers = []
    for r in range(m):
        col = [img[r + m * t] for t in range(n)]
        target = col[0] % m
        if any(v % m != target for v in col):
            return None
        outer.append(target)
        fibers.append(Perm._trusted(tuple(v // m for v in col)))
    return WreathElement(m, n, Perm._trusted(tuple(outer)), tuple(fibers))


def w_value(k: int, m: int, n: int, x: int) -> int:
    """Row offset picked up when shifting column x by k: ``c^k(x, y) =
    (x + k, y + w_k(x))``."""
    r = k % m
    t = (k - r) // m
    return (t if x % m <= m - 1 - r else t + 1) % n


def shift_pair(m: int, n: int, k: int, x: int, y: int) -> tuple[int, int]:
    """``c^k(x, y)`` in grid coordinates."""
    return (x + k) % m, (y + w_value(k, m, n, x)) % n


def construct_product(pi_m: Perm, pi0_n: Perm) -> WreathElement:
    """Outer ``pi_m`` with ``pi0_n`` on column 0 and identity elsewhere."""
    m, n = pi_m.n, pi0_n.n
    if m < 2 or n < 2:
        raise PreconditionViolated("need m, n >= 2")
    fibers = [pi0_n] + [identity(n)] * (m - 1)
    return WreathElement(m, n, pi_m, tuple(fibers))


@dataclass(frozen=True)
class Pq5Config:
    p: int
    q: int
    exponents: tuple
    e: int
    g: int
    outer_multiplier: int


def construct_pq5(p: int, q: int) -> tuple[Pq5Config, WreathElement]:
    """Outer ``x -> a x`` (a a primitive root mod p), fibers ``y -> g^{e_x} y``
    with ``e_x`` in {1, 2} chosen so that ``sum e_x = 3 (mod q - 1)``."""
    for v in (p, q):
        if v < 3 or not is_prime(v):
            raise NotPrime(f"{v} is not an odd prime")
    if p < q:
        raise PreconditionViolated("construct_pq5 needs p >= q")
    ones = (2 * p - 3) % (q - 1)
    exps = tuple(1 if x < ones else 2 for x in range(p))
    e = sum(exps)
    g = primitive_root(q)
    a = primitive_root(p)
    outer = Perm._trusted(tuple(a * x % p for x in range(p)))
    fibers = tuple(
        Perm._trusted(tuple(pow(g, ex, q) * y % q for y in range(q)))
        for ex in exps)
    cfg = Pq5Config(p, q, exps, e, g, a)
    return cfg, WreathElement(p, q, outer, fibers)


def wreath_from_affine_fibers(p: int, q: int, a: int, g: int,
                              offsets: Sequence[int]) -> WreathElement:
    """``(x, y) -> (a x, g y + b_x)`` on Z_p x Z_q."""
    outer = Perm._trusted(tuple(a * x % p for x in range(p)))
    fibers = tuple(Perm._trusted(tuple((g * y + b) % q for y in range(q)))
                   for b in offsets)
    return WreathElement(p, q, outer, fibers)
