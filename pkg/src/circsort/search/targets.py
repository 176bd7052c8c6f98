"""Searches for permutations with prescribed shift cycle structure."""

from __future__ import annotations

from typing import Optional

from ..errors import BudgetExceeded
from ..perm import Perm, coset_profile
from . import _kernel as K
from .scm import ScmSearchConfig, scm_enumerate, scm_enumerate_sharded
from .symmetry import slope_orbit

STRATEGIES = ("slope", "direct", "unpruned")


def _all_shifts_full_cycle(p: Perm) -> bool:
    want = (1, p.n - 1)
    return all(t == want for t in coset_profile(p).shift_types)


def _avoids(p: Perm, max_cycle: int) -> bool:
    prof = coset_profile(p)
    if any(c > 1 for c in prof.fixed_counts):
        return False
    return all(m is None or m > max_cycle for m in prof.min_nontrivial_cycle)


def _run(cfg: ScmSearchConfig, workers: int) -> list:
    if workers > 1 and cfg.n > 3:
        return scm_enumerate_sharded(cfg, workers=workers).witnesses
    return scm_enumerate(cfg).witnesses


def profile_witness_search(n: int, strategy: str = "slope",
                           budget: Optional[int] = None,
                           workers: int = 1) -> list[Perm]:
    """All zero-fixing permutations of Z_n whose every shift has cycle type
    ``(1, n-1)``, in lexicographic order.

    ``strategy``:
      * ``"slope"`` searches only maps whose smallest slope is ``f(1)`` and
        closes the result under the slope transforms (which preserve the
        shift cycle types), then re-checks every map;
      * ``"direct"`` prunes on closed cycles but keeps every branch;
      * ``"unpruned"`` enumerates all strong complete mappings and filters.
    """
    if n < 4:
        raise ValueError("profile_witness_search needs n >= 4")
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    cfg = ScmSearchConfig(
        n=n,
        mode="collect",
        constraint="strong_complete",
        target=None if strategy == "unpruned" else "full_cycle",
        slope_normalize=strategy == "slope",
        budget=budget,
    )
    found = _run(cfg, workers)
    if strategy == "slope":
        expanded = set()
        for p in found:
            expanded |= slope_orbit(p)
        found = expanded
    return sorted(p for p in found if _all_shifts_full_cycle(p))


def avoid_cycle_search(n: int, max_cycle: int, strategy: str = "slope",
                       budget: Optional[int] = None,
                       workers: int = 1) -> list[Perm]:
    """Zero-fixing orthomorphisms none of whose shifts has a cycle of length
    in ``[2, max_cycle]``.

    For ``max_cycle >= 2`` no shift may contain a transposition, so the
    search also enforces the complete-mapping constraint.
    """
    if n < 3 or not 1 <= max_cycle <= n - 2:
        raise ValueError("need n >= 3 and 1 <= max_cycle <= n - 2")
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}")
    cfg = ScmSearchConfig(
        n=n,
        mode="collect",
        constraint="strong_complete" if max_cycle >= 2 else "orthomorphism",
        target=None if strategy == "unpruned" else "avoid",
        max_cycle=max_cycle,
        slope_normalize=strategy == "slope",
        budget=budget,
    )
    found = _run(cfg, workers)
    if strategy == "slope":
        expanded = set()
        for p in found:
            expanded |= slope_orbit(p)
        found = expanded
    return sorted(p for p in found if _avoids(p, max_cycle))


EXHAUSTIVE_MAX_N = 13


def exhaustive_t_witness(n: int, budget: Optional[int] = None,
                         max_n: int = EXHAUSTIVE_MAX_N) -> tuple[int, Perm]:
    """Exact ``t(n)`` with a permutation attaining it.

    Branch and bound over zero-fixing permutations: a branch is cut once some
    shift has as many closed cycles as the incumbent's worst shift (plus one
    if that shift still has unfinished points).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise BudgetExceeded(f"exhaustive search is guarded at n <= {max_n}")
    best, wit, nodes, exhausted = K._min_max_cycles(n, budget or 0)
    if not exhausted:
        raise BudgetExceeded(f"node budget {budget} exhausted")
    p = Perm(tuple(int(v) for v in wit))
    t = n - int(best)
    assert coset_profile(p).t_coset == t
    return t, p


def exhaustive_t(n: int, budget: Optional[int] = None,
                 max_n: int = EXHAUSTIVE_MAX_N) -> int:
    return exhaustive_t_witness(n, budget, max_n)[0]
