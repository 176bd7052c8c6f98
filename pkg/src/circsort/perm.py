"""Permutations of Z_n and the statistics of their cyclic-shift cosets.

A :class:`Perm` stores its image sequence ``image[x] = p(x)``.  The coset of
``p`` is the family of maps ``x -> p(x + k)``, ``k`` in Z_n, and the circular
sorting distance of ``p`` is the smallest transposition distance in that
family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import EmptyInput, ModulusMismatch, NotABijection

CycleType = tuple  # sorted tuple of cycle lengths


class Perm:
    """A bijection of Z_n, immutable and hashable."""

    __slots__ = ("n", "image")

    def __init__(self, image: Iterable[int]):
        img = tuple(int(v) for v in image)
        n = len(img)
        if n == 0:
            raise EmptyInput("a permutation needs at least one point")
        seen = bytearray(n)
        for v in img:
            if not 0 <= v < n:
                raise NotABijection(f"value {v} out of range for n={n}")
            if seen[v]:
                raise NotABijection(f"value {v} appears twice")
            seen[v] = 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "image", img)

    @classmethod
    def _trusted(cls, image: tuple) -> "Perm":
        # skips validation; callers guarantee a bijection
        p = object.__new__(cls)
        object.__setattr__(p, "n", len(image))
        object.__setattr__(p, "image", image)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    def __call__(self, x: int) -> int:
        return self.image[x % self.n]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.image)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.image == other.image

    def __lt__(self, other: "Perm") -> bool:
        return self.image < other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Perm({list(self.image)})"

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)


def make_perm(images: Sequence[int]) -> Perm:
    return Perm(images)


def identity(n: int) -> Perm:
    return Perm._trusted(tuple(range(n)))


def compose(p: Perm, q: Perm) -> Perm:
    """``compose(p, q)(x) = p(q(x))``."""
    if p.n != q.n:
        raise ModulusMismatch(f"cannot compose n={p.n} with n={q.n}")
    pi = p.image
    return Perm._trusted(tuple(pi[y] for y in q.image))


def inverse(p: Perm) -> Perm:
    inv = [0] * p.n
    for x, y in enumerate(p.image):
        inv[y] = x
    return Perm._trusted(tuple(inv))


def shift(p: Perm, k: int) -> Perm:
    """The coset element ``x -> p(x + k)``."""
    n = p.n
    k %= n
    img = p.image
    return Perm._trusted(img[k:] + img[:k])


def _cycle_lengths(img: Sequence[int]) -> list:
    n = len(img)
    seen = bytearray(n)
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = img[x]
            length += 1
        lengths.append(length)
    return lengths


def cycle_decomposition(p: Perm) -> tuple[list[tuple[int, ...]], CycleType]:
    """Cycles (each starting at its minimum, sorted by that minimum) and the
    cycle type."""
    img = p.image
    seen = bytearray(p.n)
    cycles = []
    for start in range(p.n):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = 1
            cyc.append(x)
            x = img[x]
        cycles.append(tuple(cyc))
    return cycles, tuple(sorted(len(c) for c in cycles))


def cycle_type(p: Perm) -> CycleType:
    return tuple(sorted(_cycle_lengths(p.image)))


def cycle_count(p: Perm) -> int:
    return len(_cycle_lengths(p.image))


def transposition_distance(p: Perm) -> int:
    return p.n - cycle_count(p)


def shift_cycle_counts(p: Perm) -> list[int]:
    """Number of cycles of ``x -> p(x + k)`` for every k."""
    img = p.image
    return [len(_cycle_lengths(img[k:] + img[:k])) for k in range(p.n)]


def t_coset(p: Perm) -> int:
    return p.n - max(shift_cycle_counts(p))


@dataclass(frozen=True)
class CosetProfile:
    n: int
    shift_types: tuple  # shift_types[k] is the cycle type of x -> p(x + k)
    t_coset: int
    fixed_counts: tuple
    min_nontrivial_cycle: tuple  # entries are ints in [2, n] or None

    @property
    def cycle_counts(self) -> tuple:
        return tuple(len(t) for t in self.shift_types)

    def type_multiset(self) -> dict:
        out: dict = {}
        for t in self.shift_types:
            out[t] = out.get(t, 0) + 1
        return out


def coset_profile(p: Perm) -> CosetProfile:
    n = p.n
    img = p.image
    types = []
    fixed = []
    shortest: list[Optional[int]] = []
    for k in range(n):
        t = tuple(sorted(_cycle_lengths(img[k:] + img[:k])))
        types.append(t)
        fixed.append(t.count(1))
        shortest.append(next((c for c in t if c >= 2), None))
    best = max(len(t) for t in types)
    return CosetProfile(
        n=n,
        shift_types=tuple(types),
        t_coset=n - best,
        fixed_counts=tuple(fixed),
        min_nontrivial_cycle=tuple(shortest),
    )


def normalize_zero(p: Perm) -> Perm:
    """``x -> p(x) - p(0)``; same coset statistics up to rotation."""
    n = p.n
    c = p.image[0]
    return Perm._trusted(tuple((v - c) % n for v in p.image))


def translate(p: Perm, c: int) -> Perm:
    """``x -> p(x) + c``."""
    n = p.n
    return Perm._trusted(tuple((v + c) % n for v in p.image))
