"""Command-line interface for circsort.

Usage:
  circsort verify FILE [--json] [--canonical]
  circsort t exact N
  circsort t bounds N [--witness-dir DIR]
  circsort construct affine N A [B] --out FILE
  circsort construct quadratic P A B --out FILE
  circsort construct product M N --out FILE
  circsort construct pq5 P Q --out FILE
  circsort construct pq3 P Q [--randomized --seed S] --out FILE
  circsort search scm N [--count] [--target-n2] [--normalize-slope] [--prefix v1,v2]
  circsort search avoid N --max-cycle L
  circsort table --max 44 [--witness-dir DIR]

Exit codes: 0 = success / verified, 1 = verification failure, 2 = usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import bounds
from .constructions.affine import affine
from .constructions.pq3 import construct_pq3
from .constructions.quadratic import quadratic_map
from .constructions.wreath import (construct_pq5, construct_product,
                                   wreath_flatten)
from .errors import (BudgetExceeded, CircSortError, InvalidWitness,
                     ParseError, SolverFailed)
from .mappings import classify_mapping
from .perm import Perm, coset_profile
from .search.scm import ScmSearchConfig, scm_enumerate, scm_enumerate_sharded
from .search.symmetry import canonical_form
from .search.targets import avoid_cycle_search, exhaustive_t_witness
from .textio import format_perm, format_wreath, read_witness, write_witness

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def perm_summary(p: Perm, canonical: bool = False) -> dict:
    prof = coset_profile(p)
    mc = classify_mapping(p)
    out = {
        "n": p.n,
        "t_coset": prof.t_coset,
        "shift_cycle_types": [list(t) for t in prof.shift_types],
        "mapping": {
            "orthomorphism": mc.is_orthomorphism,
            "complete": mc.is_complete,
            "strong_complete": mc.is_strong_complete,
        },
    }
    if canonical:
        out["canonical_form"] = list(canonical_form(p).image)
    return out


def _type_stats(p: Perm) -> str:
    counts = Counter(coset_profile(p).shift_types)
    return ", ".join(f"{c} x {t}" for t, c in sorted(counts.items()))


def _print_summary(summary: dict, stats: str):
    mc = summary["mapping"]
    kinds = [k for k in ("orthomorphism", "complete", "strong_complete") if mc[k]]
    print(f"n = {summary['n']}")
    print(f"t_coset = {summary['t_coset']}")
    print(f"shift cycle types: {stats}")
    print(f"mapping: {', '.join(kinds) if kinds else 'none'}")
    if "canonical_form" in summary:
        print("canonical form: " + " ".join(map(str, summary["canonical_form"])))


def cmd_verify(args) -> int:
    wf = read_witness(args.file)
    summaries = [perm_summary(p, args.canonical) for p in wf.perms]
    if args.json:
        print(json.dumps(summaries[0] if len(summaries) == 1 else summaries))
    else:
        for p, s in zip(wf.perms, summaries):
            _print_summary(s, _type_stats(p))
    best = max(s["t_coset"] for s in summaries)
    if wf.expect is not None and best < wf.expect:
        print(f"FAIL: t_coset {best} < expected {wf.expect}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_t_exact(args) -> int:
    t, p = exhaustive_t_witness(args.n, budget=args.budget)
    print(f"t({args.n}) = {t}")
    print("witness: " + format_perm(p))
    return EXIT_OK


def cmd_t_bounds(args) -> int:
    r = bounds.t_bounds(args.n, args.witness_dir)
    print(f"t({r.n}) in {r.interval()}")
    print(f"lower {r.lower} via {r.lower_provenance}")
    print(f"upper {r.upper} via {r.upper_provenance}")
    if r.lower_witness is not None:
        print("witness: " + format_perm(r.lower_witness))
    return EXIT_OK


def cmd_construct(args) -> int:
    wreath = None
    kind = args.kind
    if kind == "affine":
        n, a = args.args[0], args.args[1]
        b = args.args[2] if len(args.args) > 2 else 0
        p = affine(n, a, b)
    elif kind == "quadratic":
        p = quadratic_map(args.args[1], args.args[2], args.args[0])
    elif kind == "product":
        m, n = args.args
        lb = bounds._LowerBounds()
        wreath = construct_product(lb.best(m)[2], lb.best(n)[2])
        p = wreath_flatten(wreath)
    elif kind == "pq5":
        _, wreath = construct_pq5(*args.args)
        p = wreath_flatten(wreath)
    else:
        w = construct_pq3(*args.args, randomized=args.randomized, seed=args.seed)
        wreath = w.wreath()
        p = w.perm()
    t = coset_profile(p).t_coset
    desc = f"{kind} {' '.join(map(str, args.args))}"
    if args.format == "wreath":
        if wreath is None:
            raise InvalidWitness(f"{kind} has no wreath form")
        with open(args.out, "w") as fh:
            fh.write(format_wreath(wreath))
    else:
        write_witness(args.out, [p], expect=t, comments=(desc,))
    print(f"{desc}: n = {p.n}, t_coset = {t} -> {args.out}")
    return EXIT_OK


def _prefix(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise ParseError(f"bad prefix {text!r}") from exc


def _emit(perms, as_json: bool):
    for p in sorted(perms):
        if as_json:
            print(json.dumps(perm_summary(p)))
        else:
            print(format_perm(p))


def cmd_search_scm(args) -> int:
    cfg = ScmSearchConfig(
        n=args.n,
        mode="count" if args.count else "collect",
        constraint="strong_complete",
        target="full_cycle" if args.target_n2 else None,
        slope_normalize=args.normalize_slope,
        prefix=_prefix(args.prefix) if args.prefix else (),
        budget=args.budget,
    )
    if args.threads > 1 and not cfg.prefix:
        out = scm_enumerate_sharded(cfg, workers=args.threads)
    else:
        out = scm_enumerate(cfg)
    if args.count:
        print(out.count)
    else:
        _emit(out.witnesses, args.json)
        print(f"# {len(out.witnesses)} found, {out.nodes_visited} nodes",
              file=sys.stderr)
    return EXIT_OK


def cmd_search_avoid(args) -> int:
    found = avoid_cycle_search(args.n, args.max_cycle, workers=args.threads,
                               budget=args.budget)
    _emit(found, args.json)
    print(f"# {len(found)} found", file=sys.stderr)
    if found and not args.json:
        reps = sorted({canonical_form(p) for p in found})
        print(f"# {len(reps)} up to x -> a^-1 p(a(x+b)) + b'", file=sys.stderr)
        for r in reps:
            print(f"# {format_perm(r)}: {_type_stats(r)}", file=sys.stderr)
    return EXIT_OK


def cmd_table(args) -> int:
    sys.stdout.write(bounds.run_table(args.max, args.witness_dir))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="circsort",
        description="Circular sorting numbers: verification, bounds, "
                    "constructions and searches.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="verify a witness permutation file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.add_argument("--canonical", action="store_true",
                   help="also print the canonical representative")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("t", help="exact value or bounds for t(n)")
    tsub = t.add_subparsers(dest="t_command", required=True)
    te = tsub.add_parser("exact", help="branch and bound for small n")
    te.add_argument("n", type=int)
    te.add_argument("--threads", type=int, default=1,
                    help="accepted for symmetry; the branch and bound is sequential")
    te.add_argument("--budget", type=int, default=None)
    te.set_defaults(func=cmd_t_exact)
    tb = tsub.add_parser("bounds", help="certified lower and upper bounds")
    tb.add_argument("n", type=int)
    tb.add_argument("--witness-dir", default=None)
    tb.set_defaults(func=cmd_t_bounds)

    c = sub.add_parser("construct", help="export an algebraic construction")
    c.add_argument("kind", choices=["affine", "quadratic", "product", "pq5", "pq3"])
    c.add_argument("args", type=int, nargs="+")
    c.add_argument("--out", required=True)
    c.add_argument("--format", choices=["perm", "wreath"], default="perm")
    c.add_argument("--randomized", action="store_true")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="backtracking searches")
    ssub = s.add_subparsers(dest="s_command", required=True)
    sc = ssub.add_parser("scm", help="strong complete mappings fixing 0")
    sc.add_argument("n", type=int)
    sc.add_argument("--count", action="store_true")
    sc.add_argument("--target-n2", action="store_true",
                    help="keep only maps with every shift of type (1, n-1)")
    sc.add_argument("--normalize-slope", action="store_true")
    sc.add_argument("--prefix", default=None, help="shard: f(1),f(2),...")
    sc.add_argument("--threads", type=int, default=1)
    sc.add_argument("--budget", type=int, default=None)
    sc.add_argument("--json", action="store_true")
    sc.set_defaults(func=cmd_search_scm)
    sa = ssub.add_parser("avoid", help="orthomorphisms avoiding short cycles")
    sa.add_argument("n", type=int)
    sa.add_argument("--max-cycle", type=int, required=True)
    sa.add_argument("--threads", type=int, default=1)
    sa.add_argument("--budget", type=int, default=None)
    sa.add_argument("--json", action="store_true")
    sa.set_defaults(func=cmd_search_avoid)

    tab = sub.add_parser("table", help="bounds table for composite n")
    tab.add_argument("--max", type=int, default=44)
    tab.add_argument("--witness-dir", default=None)
    tab.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidWitness, BudgetExceeded, SolverFailed) as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (CircSortError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
