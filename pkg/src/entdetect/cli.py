"""Command-line entry points: scan-rank, scan-dim, asymmetry, bounds, verify.

Flags can be pre-loaded from a JSON config file (--config); explicit
flags always win. ENTDETECT_WORKERS overrides the worker count.
"""

import argparse
import json
import os
import sys
import time

from . import analytics
from .analytics import aggregate
from .criteria import CRITERIA, EPS
from .harness import (
    SweepConfig,
    results_current,
    run_cell,
    stats_row,
    write_results,
)
from .verify import run_checks


def _parse_range(text):
    """'2..10' -> [2..10]; '7' -> [7]."""
    text = str(text)
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise SystemExit(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise SystemExit(
            "missing required option(s): " + ", ".join(f"--{n}" for n in missing)
        )


def _workers(args):
    env = os.environ.get("ENTDETECT_WORKERS")
    if env:
        return int(env)
    if args.workers is None:
        return 1
    if args.workers == "auto":
        return os.cpu_count() or 1
    return int(args.workers)


def _criteria(args):
    if not args.criteria:
        return CRITERIA
    chosen = tuple(c.strip() for c in args.criteria.split(","))
    unknown = set(chosen) - set(CRITERIA)
    if unknown:
        raise SystemExit(f"unknown criteria: {', '.join(sorted(unknown))}")
    return chosen


def _columns(criteria, extra=()):
    cols = list(extra) + ["d1", "d2", "k", "n", "n_npt"]
    for c in criteria:
        cols += [f"{c}_F", f"{c}_F_stderr", f"{c}_M", f"{c}_m"]
    return cols


def _run_and_write(name, cells, args, extra_per_cell=None):
    workers = _workers(args)
    config = SweepConfig(
        cells=tuple(cells),
        samples_per_cell=args.samples,
        master_seed=args.seed,
        eps=args.eps,
        workers=workers,
    )
    if results_current(args.out, name, config):
        print(f"{name}: results are current, skipping")
        return os.path.join(args.out, name + ".csv")

    started = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())
    rows, cells_meta = [], []
    for idx, (d1, d2, k) in enumerate(config.cells):
        records = run_cell(
            d1, d2, k, config.samples_per_cell, config.master_seed,
            eps=config.eps, workers=workers,
        )
        stats = aggregate(records, eps=config.eps)
        extra = extra_per_cell[idx] if extra_per_cell else None
        rows.append(stats_row(stats, extra=extra))
        cells_meta.append(
            {"d1": d1, "d2": d2, "k": k, "n": stats.n_total, "n_npt": stats.n_npt}
        )
    extra_cols = list(extra_per_cell[0].keys()) if extra_per_cell else ()
    columns = _columns(_criteria(args), extra=extra_cols)
    path = write_results(
        args.out, name, rows, config, columns=columns,
        cells_meta=cells_meta, started_at=started,
    )
    print(f"{name}: wrote {path}")
    return path


def cmd_scan_rank(args):
    _require(args, "d1", "d2", "k")
    cells = [(args.d1, args.d2, k) for k in _parse_range(args.k)]
    _run_and_write(f"scan_rank_{args.d1}x{args.d2}", cells, args)
    return 0


def cmd_scan_dim(args):
    _require(args, "d1", "d2", "k")
    ks = _parse_range(args.k)
    if len(ks) != 1:
        raise SystemExit("scan-dim expects a single rank --k")
    cells = [(args.d1, d2, ks[0]) for d2 in _parse_range(args.d2)]
    _run_and_write(f"scan_dim_d1{args.d1}_k{ks[0]}", cells, args)
    return 0


def cmd_asymmetry(args):
    _require(args, "d12")
    d12 = args.d12
    factorizations = [
        (d1, d12 // d1) for d1 in range(2, int(d12 ** 0.5) + 1) if d12 % d1 == 0
    ]
    if len(factorizations) < 2:
        raise SystemExit(
            f"d12={d12} does not admit two factorizations with both factors >= 2"
        )
    cells, extras = [], []
    for d1, d2 in factorizations:
        for k in (2, d12):
            cells.append((d1, d2, k))
            extras.append({"d12": d12})
    _run_and_write(f"asymmetry_{d12}", cells, args, extra_per_cell=extras)
    return 0


def cmd_bounds(args):
    _require(args, "d1", "d2")
    d1, d2 = args.d1, args.d2
    lo, hi = min(d1, d2), max(d1, d2)
    print(f"bounds for {d1}x{d2}")
    print(f"  entropy_rank_threshold   {analytics.entropy_rank_threshold(d1, d2)}")
    bound = analytics.realignment_rank_bound(lo, hi)
    if bound == float("inf"):
        print("  realignment_rank_bound   vacuous (equal dimensions)")
    else:
        print(f"  realignment_rank_bound   {bound:.6g}")
    print(f"  ppt_rank_sufficient      {analytics.ppt_rank_sufficient(d1, d2)}")
    print("  k  avg_S1     avg_S2     avg_S12    avg_purity")
    for k in range(1, d1 * d2 + 1):
        s1, s2, s12 = analytics.page_entropies(d1, d2, k)
        p = analytics.average_purity(d1, d2, k)
        print(f"  {k:<2} {s1:<10.6g} {s2:<10.6g} {s12:<10.6g} {p:.6g}")
    return 0


def cmd_verify(args):
    results = run_checks(samples=args.samples, master_seed=args.seed, eps=args.eps)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<34} margin={r.margin:+.3g}  {r.detail}")
        failed += not r.passed
    print(f"{len(results) - failed}/{len(results)} invariant checks passed")
    return 1 if failed else 0


_SUBPARSERS = {}


def _add_common(sub, samples_default=10000):
    sub.add_argument("--samples", type=int, default=samples_default)
    sub.add_argument("--seed", type=int, default=42)
    sub.add_argument("--eps", type=float, default=EPS)
    sub.add_argument("--out", default="runs")
    sub.add_argument("--workers", default=None, help="worker count or 'auto'")
    sub.add_argument("--criteria", default=None,
                     help="comma-separated subset of criteria columns to emit")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="entdetect",
        description="Entanglement-detection hierarchy on Haar-random states",
    )
    parser.add_argument("--config", default=None, help="JSON file of default flags")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan-rank", help="sweep rank k at fixed d1 x d2")
    p.add_argument("--d1", type=int)
    p.add_argument("--d2", type=int)
    p.add_argument("--k", help="rank or range, e.g. 2..10")
    _add_common(p)
    p.set_defaults(func=cmd_scan_rank)
    _SUBPARSERS["scan-rank"] = p

    p = sub.add_parser("scan-dim", help="sweep d2 at fixed d1 and rank")
    p.add_argument("--d1", type=int)
    p.add_argument("--d2", help="d2 value or range, e.g. 3..10")
    p.add_argument("--k")
    _add_common(p)
    p.set_defaults(func=cmd_scan_dim)
    _SUBPARSERS["scan-dim"] = p

    p = sub.add_parser("asymmetry", help="factorizations of a total dimension")
    p.add_argument("--d12", type=int)
    _add_common(p)
    p.set_defaults(func=cmd_asymmetry)
    _SUBPARSERS["asymmetry"] = p

    p = sub.add_parser("bounds", help="closed-form predictors for one cell")
    p.add_argument("--d1", type=int)
    p.add_argument("--d2", type=int)
    p.set_defaults(func=cmd_bounds)
    _SUBPARSERS["bounds"] = p

    p = sub.add_parser("verify", help="run the invariant suites")
    _add_common(p, samples_default=1000)
    p.set_defaults(func=cmd_verify)
    _SUBPARSERS["verify"] = p

    return parser


def _apply_config_file(argv):
    # Flags from the config file become subparser defaults, so explicit
    # command-line flags still override them.
    if "--config" not in argv:
        return
    path = argv[argv.index("--config") + 1]
    with open(path) as fh:
        defaults = json.load(fh)
    for p in _SUBPARSERS.values():
        known = {a.dest for a in p._actions}
        p.set_defaults(**{k: v for k, v in defaults.items() if k in known})


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    _apply_config_file(argv)
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
