"""Command-line interface: ``avoidance-lab <command> ...``.

Exit status is 0 on success, 2 on a parse or validation error and 3 when a
request exceeds an enumeration guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import engine, hypergraph as hg, tuples
from .core import contains_partition, parse_partition, render
from .errors import AvoidanceError, ResourceLimit
from .permutability import min_interval_cover, permutability, pm_distribution

EXEC_ONLY = {"json", "csv", "cache_dir", "threads", "func", "command"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    # subcommand copies use SUPPRESS so they do not clobber flags given earlier
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False), help="one-line JSON envelope")
    p.add_argument("--csv", action="store_true", default=d(False), help="CSV for sequence output")
    p.add_argument("--cache-dir", default=d(None), help="count cache directory")
    p.add_argument("--threads", type=int, default=d(1), help="worker processes")
    p.add_argument("--seed", type=int, default=d(0), help="random seed")
    return p


def _bool(v: bool) -> str:
    return "true" if v else "false"


# each handler returns (payload, text lines, csv rows or None)

def cmd_standardize(a):
    pi = parse_partition(a.partition)
    return render(pi), [render(pi)], None


def cmd_contains(a):
    r = contains_partition(parse_partition(a.host), parse_partition(a.pattern))
    return r, [_bool(r)], None


def cmd_contains_tuple(a):
    r = tuples.contains_parallel(tuples.parse_tuple(a.host), tuples.parse_tuple(a.pattern))
    return r, [_bool(r)], None


def cmd_contains_hg(a):
    r = hg.contains_hypergraph(hg.parse_hypergraph(a.G), hg.parse_hypergraph(a.H))
    return r, [_bool(r)], None


def cmd_permutability(a):
    pi = parse_partition(a.partition)
    value = permutability(pi)
    if not a.witness:
        return value, [str(value)], None
    _, cover = min_interval_cover(pi)
    return {"permutability": value, "cover": str(cover)}, [str(value), str(cover)], None


def cmd_pm_dist(a):
    dist = pm_distribution(a.n, threads=a.threads)
    return ([[d, c] for d, c in dist], [f"{d} {c}" for d, c in dist],
            (["d", "count"], dist))


def _cache(a):
    return engine.CountCache.from_env(a.cache_dir)


def cmd_count(a):
    rec = engine.cached_count(parse_partition(a.pattern), a.n, a.no_singletons,
                              _cache(a), a.threads)
    return rec.value, [str(rec.value)], None


def cmd_seq(a):
    recs = engine.avoidance_sequence(parse_partition(a.pattern), a.nmax, _cache(a),
                                     threads=a.threads)
    rows = [(r.n, r.value) for r in recs]
    return [[n, v] for n, v in rows], [f"{n} {v}" for n, v in rows], (["n", "value"], rows)


def cmd_count_tuples(a):
    value = tuples.count_tuple_avoiders(tuples.parse_tuple(a.pattern), a.n, threads=a.threads)
    return value, [str(value)], None


def cmd_antichain_prob(a):
    est = tuples.antichain_probability(a.d, a.n, a.samples, a.seed, threads=a.threads)
    payload = {"estimate": est.estimate, "samples": est.samples, "hits": est.hits,
               "standard_error": est.standard_error, "seed": est.seed}
    return payload, [f"{est.estimate:.6f} +- {est.standard_error:.6f}"], None


def cmd_contract(a):
    g = hg.interval_contract(hg.parse_hypergraph(a.hg), a.s)
    return hg.render_hypergraph(g), [hg.render_hypergraph(g)], None


def cmd_project(a):
    drop = [int(x) for x in a.drop.split(",") if x.strip()] if a.drop else []
    g = hg.project(hg.parse_hypergraph(a.hg), drop)
    return hg.render_hypergraph(g), [hg.render_hypergraph(g)], None


def cmd_max_weight(a):
    res = hg.max_weight_avoiding(hg.parse_hypergraph(a.hg), a.n, a.budget, a.uniform)
    best = hg.render_hypergraph(res.best)
    payload = {"best": best, "weight": res.weight, "exact": res.exact}
    return payload, [str(res.weight), best, f"exact={_bool(res.exact)}"], None


def cmd_certify_lower(a):
    cert = engine.lower_bound_certificate(parse_partition(a.pattern), a.n, seed=a.seed)
    return cert.to_dict(), [str(cert.certified_count)], None


def cmd_classify(a):
    basis = [b for b in a.basis.split(";") if b.strip()] if a.basis.strip() else []
    c = engine.classify_class(basis)
    text = c.regime if c.d is None or c.regime != "superexp" else f"superexp({c.d})"
    return c.to_dict(), [text], None


def cmd_growth_fit(a):
    recs = engine.avoidance_sequence(parse_partition(a.pattern), a.nmax, _cache(a),
                                     threads=a.threads)
    est = engine.growth_fit([r.value for r in recs])
    lines = [f"{n} {v}" for n, v in est.per_n] + [f"d_hint {est.d_hint}"]
    return est.to_dict(), lines, (["n", "alpha"], est.per_n)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="avoidance-lab", parents=[_global_flags(True)],
                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    flags = _global_flags(False)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[flags], help=help)
        p.set_defaults(func=func)
        return p

    p = add("standardize", cmd_standardize, "standard form of a partition")
    p.add_argument("partition")
    p = add("contains", cmd_contains, "partition containment")
    p.add_argument("host")
    p.add_argument("pattern")
    p = add("contains-tuple", cmd_contains_tuple, "parallel tuple containment")
    p.add_argument("host")
    p.add_argument("pattern")
    p = add("contains-hg", cmd_contains_hg, "ordered hypergraph containment")
    p.add_argument("G")
    p.add_argument("H")
    p = add("permutability", cmd_permutability, "permutability of a partition")
    p.add_argument("partition")
    p.add_argument("--witness", action="store_true")
    p = add("pm-dist", cmd_pm_dist, "permutability distribution over [n]")
    p.add_argument("--n", type=int, required=True)
    p = add("count", cmd_count, "B_n(pattern)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-singletons", action="store_true")
    p = add("seq", cmd_seq, "B_1..B_nmax of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--nmax", type=int, required=True)
    p = add("count-tuples", cmd_count_tuples, "S_n^d(pattern tuple)")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p = add("antichain-prob", cmd_antichain_prob, "Monte Carlo q_d(n)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p = add("contract", cmd_contract, "interval contraction")
    p.add_argument("--hg", required=True)
    p.add_argument("--s", type=int, required=True)
    p = add("project", cmd_project, "projection of a uniform hypergraph")
    p.add_argument("--hg", required=True)
    p.add_argument("--drop", default="")
    p = add("max-weight", cmd_max_weight, "extremal avoiding hypergraph search")
    p.add_argument("--hg", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--uniform", type=int, default=None)
    p = add("certify-lower", cmd_certify_lower, "lower-bound certificate for B'_n")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", type=int, required=True)
    p = add("classify", cmd_classify, "growth regime of a pattern class")
    p.add_argument("--basis", required=True)
    p = add("growth-fit", cmd_growth_fit, "growth exponent diagnostics")
    p.add_argument("--pattern", required=True)
    p.add_argument("--nmax", type=int, required=True)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    started = time.perf_counter()
    try:
        payload, lines, table = args.func(args)
    except ResourceLimit as exc:
        sys.stderr.write(f"avoidance-lab: resource limit: {exc}\n")
        return 3
    except AvoidanceError as exc:
        sys.stderr.write(f"avoidance-lab: error: {exc}\n")
        return 2
    elapsed = int((time.perf_counter() - started) * 1000)
    if args.json:
        inputs = {k: v for k, v in sorted(vars(args).items()) if k not in EXEC_ONLY}
        envelope = {"command": args.command, "inputs": inputs, "result": payload,
                    "elapsed_ms": elapsed}
        out.write(json.dumps(envelope, separators=(",", ":")) + "\n")
    elif args.csv and table is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table[0])
        writer.writerows(table[1])
        out.write(buf.getvalue())
    else:
        for line in lines:
            out.write(line + "\n")
    out.flush()
    return 0


def main(argv=None):
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
