"""Backtracking searches over strong complete mappings."""

from .scm import (ScmSearchConfig, SearchOutcome, count_scm, scm_enumerate,
                  scm_enumerate_sharded, shard_prefixes)
from .symmetry import (canonical_form, canonical_orbit, slope_orbit, slope_set,
                       slope_transform)
from .targets import (avoid_cycle_search, exhaustive_t, exhaustive_t_witness,
                      profile_witness_search)
