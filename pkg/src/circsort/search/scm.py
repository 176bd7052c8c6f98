"""Backtracking enumeration of (strong) complete mappings and orthomorphisms.

The tree assigns ``f(1), f(2), ...`` with ``f(0) = 0`` fixed; a fixed prefix
``(f(1), ..., f(d))`` selects one shard of the tree.  Shards are independent,
so their counts add and their witness lists merge by sorted union.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from ..errors import BudgetExceeded
from ..perm import Perm
from . import _kernel as K

CONSTRAINTS = {
    "none": 0,
    "orthomorphism": K.C_DIFF,
    "complete": K.C_SUM,
    "strong_complete": K.C_DIFF | K.C_SUM,
}
TARGETS = {None: K.T_NONE, "full_cycle": K.T_FULL_CYCLE, "avoid": K.T_AVOID}
MODES = {"count": K.M_COUNT, "collect": K.M_COLLECT, "first": K.M_FIRST}


@dataclass(frozen=True)
class ScmSearchConfig:
    """Parameters of one enumeration.

    ``target="full_cycle"`` prunes branches where a shift closes a cycle
    that rules out cycle type (1, n-1); ``target="avoid"`` prunes shifts
    closing a cycle of length in ``[2, max_cycle]``.  ``slope_normalize``
    keeps only maps whose smallest slope is ``f(1)``.
    """

    n: int
    mode: str = "count"
    constraint: str = "strong_complete"
    target: Optional[str] = None
    max_cycle: int = 0
    slope_normalize: bool = False
    prefix: tuple = ()
    budget: Optional[int] = None

    def __post_init__(self):
        if not 1 <= self.n <= K.MAX_N:
            raise ValueError(f"search supports 1 <= n <= {K.MAX_N}, got {self.n}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {sorted(MODES)}")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"constraint must be one of {sorted(CONSTRAINTS)}")
        if self.target not in TARGETS:
            raise ValueError(f"target must be None, 'full_cycle' or 'avoid'")
        object.__setattr__(self, "prefix", tuple(int(v) for v in self.prefix))


@dataclass
class SearchOutcome:
    count: int
    witnesses: list = field(default_factory=list)
    nodes_visited: int = 0
    exhausted: bool = True

    def merge(self, other: "SearchOutcome") -> "SearchOutcome":
        return SearchOutcome(
            count=self.count + other.count,
            witnesses=sorted(self.witnesses + other.witnesses),
            nodes_visited=self.nodes_visited + other.nodes_visited,
            exhausted=self.exhausted and other.exhausted,
        )


def scm_enumerate(config: ScmSearchConfig) -> SearchOutcome:
    """Run one (possibly sharded) enumeration.

    In ``first`` mode the search stops at the first witness and reports
    ``exhausted=False`` if it found one.  Hitting the node budget raises
    BudgetExceeded with the partial outcome attached as ``.outcome``.
    """
    prefix = np.asarray(config.prefix, dtype=np.int64)
    count, wit, nodes, exhausted, consistent = K._enumerate(
        config.n,
        CONSTRAINTS[config.constraint],
        TARGETS[config.target],
        config.max_cycle,
        config.slope_normalize,
        prefix,
        MODES[config.mode],
        config.budget or 0,
        16,
    )
    if not consistent:
        raise ValueError(f"prefix {config.prefix} is not a consistent partial "
                         f"{config.constraint} assignment")
    out = SearchOutcome(
        count=int(count),
        witnesses=[Perm._trusted(tuple(int(v) for v in row)) for row in wit],
        nodes_visited=int(nodes),
        exhausted=bool(exhausted),
    )
    if not exhausted and not (config.mode == "first" and out.witnesses):
        err = BudgetExceeded(f"node budget {config.budget} exhausted")
        err.outcome = out
        raise err
    return out


def shard_prefixes(n: int, depth: int = 2, constraint: str = "strong_complete"):
    """All prefixes ``(f(1), ..., f(depth))`` consistent with the injectivity
    and distinctness constraints.  Together they cover the whole tree."""
    bits = CONSTRAINTS[constraint]
    depth = min(depth, n - 1)
    out = []
    for vals in itertools.permutations(range(1, n), depth):
        diffs = {0}
        sums = {0}
        ok = True
        for x, v in enumerate(vals, start=1):
            d, s = (v - x) % n, (v + x) % n
            if (bits & K.C_DIFF and d in diffs) or (bits & K.C_SUM and s in sums):
                ok = False
                break
            diffs.add(d)
            sums.add(s)
        if ok:
            out.append(vals)
    return out


def _run_shard(config):
    return scm_enumerate(config)


def scm_enumerate_sharded(config: ScmSearchConfig, depth: int = 2,
                          workers: int = 1) -> SearchOutcome:
    """Split ``config`` into prefix shards and merge their outcomes."""
    if config.mode == "first":
        raise ValueError("sharded runs support count and collect modes only")
    if config.prefix:
        raise ValueError("config already carries a prefix")
    shards = [replace(config, prefix=p)
              for p in shard_prefixes(config.n, depth, config.constraint)]
    total = SearchOutcome(count=0)
    if workers <= 1:
        results = map(_run_shard, shards)
        for r in results:
            total = total.merge(r)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for r in pool.map(_run_shard, shards):
                total = total.merge(r)
    return total


def count_scm(n: int, slope_normalize: bool = False,
              prefix: Sequence[int] = ()) -> int:
    cfg = ScmSearchConfig(n=n, mode="count", slope_normalize=slope_normalize,
                          prefix=tuple(prefix))
    return scm_enumerate(cfg).count
