"""Orthomorphisms, complete mappings and strong complete mappings of Z_n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .perm import Perm


@dataclass(frozen=True)
class MappingClass:
    is_orthomorphism: bool
    is_complete: bool

    @property
    def is_strong_complete(self) -> bool:
        return self.is_orthomorphism and self.is_complete


def _is_bijective_offset(p: Perm, sign: int) -> bool:
    n = p.n
    seen = bytearray(n)
    for x, y in enumerate(p.image):
        z = (y + sign * x) % n
        if seen[z]:
            return False
        seen[z] = 1
    return True


def is_orthomorphism(p: Perm) -> bool:
    """``p - Id`` is a bijection."""
    return _is_bijective_offset(p, -1)


def is_complete(p: Perm) -> bool:
    """``p + Id`` is a bijection."""
    return _is_bijective_offset(p, 1)


def classify_mapping(p: Perm) -> MappingClass:
    return MappingClass(is_orthomorphism(p), is_complete(p))


KINDS = ("orthomorphism", "complete", "strong_complete")


def existence_scan(n: int, kind: str, budget: int = 50_000_000) -> Optional[Perm]:
    """First (lexicographically smallest, zero-fixing) mapping of the given
    kind on Z_n, or ``None`` when the exhaustive search finds none.

    Raises BudgetExceeded when the node limit stops the search early.
    """
    from .search.scm import ScmSearchConfig, scm_enumerate

    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if n < 1:
        raise ValueError("n must be positive")
    cfg = ScmSearchConfig(n=n, mode="first", constraint=kind, budget=budget)
    out = scm_enumerate(cfg)
    return out.witnesses[0] if out.witnesses else None


def carry_count(p: Perm) -> int:
    """Number of ``i`` with ``i + p(i) >= n`` (integer addition)."""
    n = p.n
    return sum(1 for i, v in enumerate(p.image) if i + v >= n)
