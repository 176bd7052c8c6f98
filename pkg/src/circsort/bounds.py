"""Lower and upper bounds on t(n) with the permutation or argument behind each.

Every lower bound except the prime rule carries a permutation that is
re-verified here; the prime rule is backed by the affine primitive-root map.
Upper bounds come from the strong-complete-mapping argument (``n - 3`` when
2 or 3 divides n), the general ``n - 2``, and a cached exhaustive-search
certificate for n = 25.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .constructions.affine import affine, t_aff
from .constructions.numtheory import factorize, is_prime
from .constructions.pq3 import construct_pq3
from .constructions.wreath import construct_pq5, construct_product, wreath_flatten
from .errors import InvalidWitness
from .perm import Perm, t_coset
from .search.scm import ScmSearchConfig
from .search.targets import exhaustive_t_witness
from .textio import read_witness

LOWER_PROVENANCE = ("affine", "product", "pq5", "pq3", "witness_file",
                    "exhaustive", "prime_rule")
UPPER_PROVENANCE = ("n_minus_2", "div_2_or_3", "scm_nonexistence",
                    "exhaustive", "cached_search")

# exhaustive branch and bound is used for bounds only below this size
EXHAUSTIVE_BOUNDS_MAX = 8

# bounds listed in the published table for composite n <= 42, as
# (lower, upper); several lower bounds rest on permutations not bundled here
REPORTED_BOUNDS = {
    4: (1, 1), 6: (3, 3), 8: (5, 5), 9: (6, 6), 10: (7, 7), 12: (9, 9),
    14: (11, 11), 15: (12, 12), 16: (13, 13), 18: (15, 15), 20: (17, 17),
    21: (18, 18), 22: (18, 19), 24: (20, 21), 25: (22, 22), 26: (22, 23),
    27: (24, 24), 28: (24, 25), 30: (26, 27), 32: (28, 29), 33: (30, 30),
    34: (30, 31), 35: (31, 33), 36: (31, 33), 38: (34, 35), 39: (36, 36),
    40: (35, 37), 42: (37, 39),
}

PathLike = Union[str, Path]


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lower: int
    lower_provenance: str
    upper: int
    upper_provenance: str
    exact: bool
    lower_witness: Optional[Perm] = None

    def __post_init__(self):
        if self.lower > self.upper:
            raise InvalidWitness(
                f"n={self.n}: lower bound {self.lower} exceeds upper bound "
                f"{self.upper}")

    def interval(self) -> str:
        return str(self.lower) if self.exact else f"[{self.lower},{self.upper}]"


def _data_dir():
    return resources.files("circsort") / "data"


def bundled_table_dir() -> Path:
    return Path(str(_data_dir() / "exact"))


def load_t25_certificate() -> dict:
    cert = json.loads((_data_dir() / "t25_certificate.json").read_text())
    if cert["config_hash"] != search_config_hash(cert["search_config"]):
        raise InvalidWitness("t(25) certificate hash does not match its config")
    return cert


def search_config_hash(config: dict) -> str:
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def t25_search_config() -> dict:
    """The configuration whose empty result certifies t(25) <= 22."""
    cfg = ScmSearchConfig(n=25, mode="collect", constraint="strong_complete",
                          target="full_cycle", slope_normalize=True)
    d = asdict(cfg)
    d["prefix"] = list(d["prefix"])
    return d


def verify_witness(path: PathLike) -> dict:
    """Check every permutation in a witness file.

    Returns a summary with the best permutation; raises InvalidWitness when
    the file's ``# expect t>=V`` claim is not met.
    """
    wf = read_witness(path)
    best = max(wf.perms, key=t_coset)
    t = t_coset(best)
    ok = wf.expect is None or t >= wf.expect
    report = {"path": str(path), "n": best.n, "t_coset": t,
              "expect": wf.expect, "ok": ok, "perm": best}
    if not ok:
        raise InvalidWitness(
            f"{path}: best t_coset {t} is below the claimed {wf.expect}")
    return report


def _witness_files(witness_dir: Optional[PathLike]) -> dict:
    """Best verified permutation per n among the files in a directory."""
    out: dict = {}
    if witness_dir is None:
        return out
    d = Path(witness_dir)
    if not d.is_dir():
        raise FileNotFoundError(f"witness directory {d} not found")
    for path in sorted(d.glob("*.txt")):
        rep = verify_witness(path)
        n = rep["n"]
        if n not in out or rep["t_coset"] > out[n][0]:
            out[n] = (rep["t_coset"], rep["perm"])
    return out


def _factor_pairs(n: int):
    for m in range(2, n):
        if n % m == 0:
            yield m, n // m


class _LowerBounds:
    """Best certified permutation for each n, built recursively."""

    def __init__(self, witness_dir: Optional[PathLike] = None,
                 use_bundled: bool = True):
        self.files = {}
        if use_bundled:
            self.files.update(_witness_files(bundled_table_dir()))
        for n, entry in _witness_files(witness_dir).items():
            if n not in self.files or entry[0] > self.files[n][0]:
                self.files[n] = entry
        self._memo: dict = {}

    def candidates(self, n: int):
        """(value, provenance, permutation) for every applicable source, in
        order of preference when values tie."""
        out = []
        if is_prime(n):
            value, a = t_aff(n)
            out.append((n - 2, "prime_rule", affine(n, a)))
        if n >= 2:
            value, a = t_aff(n)
            out.append((value, "affine", affine(n, a)))
        fac = factorize(n)
        if len(fac) <= 2 and sum(fac.values()) == 2 and n % 2:
            primes = sorted(fac)
            q, p = primes[0], primes[-1]
            if (p - 1) % (q - 1) == 0:
                pp = construct_pq3(p, q).perm()
                out.append((t_coset(pp), "pq3", pp))
            _, w = construct_pq5(p, q)
            pp = wreath_flatten(w)
            out.append((t_coset(pp), "pq5", pp))
        for m, k in _factor_pairs(n):
            _, _, wm = self.best(m)
            _, _, wk = self.best(k)
            p = wreath_flatten(construct_product(wm, wk))
            out.append((t_coset(p), "product", p))
        if n <= EXHAUSTIVE_BOUNDS_MAX:
            value, p = exhaustive_t_witness(n)
            out.append((value, "exhaustive", p))
        if n in self.files:
            value, p = self.files[n]
            out.append((value, "witness_file", p))
        return out

    def best(self, n: int):
        if n not in self._memo:
            best = None
            for cand in self.candidates(n):
                if best is None or cand[0] > best[0]:
                    best = cand
            self._memo[n] = best
        return self._memo[n]


def _upper(n: int) -> tuple[int, str]:
    if n <= 3:
        return max(n - 2, 0), "n_minus_2"
    if n % 2 == 0 or n % 3 == 0:
        return n - 3, "div_2_or_3"
    if n == 25:
        cert = load_t25_certificate()
        return cert["upper"], "cached_search"
    return n - 2, "n_minus_2"


def t_bounds(n: int, witness_dir: Optional[PathLike] = None,
             _lower: Optional[_LowerBounds] = None) -> BoundsReport:
    if n < 2:
        raise ValueError("t_bounds needs n >= 2")
    lb = _lower or _LowerBounds(witness_dir)
    value, prov, perm = lb.best(n)
    if prov != "prime_rule":
        assert t_coset(perm) == value
    upper, uprov = _upper(n)
    return BoundsReport(n=n, lower=value, lower_provenance=prov, upper=upper,
                        upper_provenance=uprov, exact=value == upper,
                        lower_witness=perm)


def _is_composite(n: int) -> bool:
    return n >= 4 and not is_prime(n)


def check_bundled_table():
    """Every bundled witness must reach exactly the tabulated exact value."""
    for path in sorted(bundled_table_dir().glob("*.txt")):
        rep = verify_witness(path)
        n = rep["n"]
        reported = REPORTED_BOUNDS.get(n)
        if reported is None or reported[0] != reported[1]:
            raise InvalidWitness(f"{path}: n={n} is not an exact table row")
        if rep["t_coset"] != reported[0]:
            raise InvalidWitness(
                f"{path}: t_coset {rep['t_coset']} != table value {reported[0]}")


def table_rows(max_n: int, witness_dir: Optional[PathLike] = None) -> list:
    if max_n < 4:
        raise ValueError("max_n must be at least 4")
    check_bundled_table()
    lb = _LowerBounds(witness_dir)
    return [t_bounds(n, _lower=lb) for n in range(4, max_n + 1)
            if _is_composite(n)]


def run_table(max_n: int, witness_dir: Optional[PathLike] = None) -> str:
    """Composite-n bounds table, with the published interval alongside."""
    rows = table_rows(max_n, witness_dir)
    bundled = _witness_files(bundled_table_dir())
    lines = [f"{'n':>3}  {'bounds':<9} {'lower via':<13} {'upper via':<16} "
             f"{'published':<9} witness"]
    for r in rows:
        pub = REPORTED_BOUNDS.get(r.n)
        pub_s = "-" if pub is None else (
            str(pub[0]) if pub[0] == pub[1] else f"[{pub[0]},{pub[1]}]")
        shown = r.lower_witness
        if r.n in bundled and bundled[r.n][0] == r.lower:
            shown = bundled[r.n][1]
        wit = "(" + ",".join(str(v) for v in shown.image) + ")"
        lines.append(f"{r.n:>3}  {r.interval():<9} {r.lower_provenance:<13} "
                     f"{r.upper_provenance:<16} {pub_s:<9} {wit}")
    return "\n".join(lines) + "\n"
