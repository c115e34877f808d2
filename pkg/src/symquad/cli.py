"""Command-line front end.

Machine output is JSON with a top-level ``schema_version``; ``--format
table`` switches to aligned text for humans.  Exit codes: 0 on success,
1 on bad input or numerical failure, and 2 when certification is refused
because the rule already has enough nodes (the folded-rule error bound is
printed instead).
"""

import os

# Honor the thread cap before numpy initializes its BLAS pools.
_threads = os.environ.get("SYMQUAD_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, _threads)

import argparse
import csv
import io
import json
import sys
import time

import numpy as np

from .cubature import (
    DEFAULT_NODE_CAP,
    CubatureRule,
    apply_rule,
    folded_rectangle_rule,
    rectangle_rule,
    rectangle_worst_case_error,
)
from .errors import CertificateError, NullspaceError, RefusalError
from .fooling import construct_certificate
from .fourier import FourierPolynomial, random_polynomial
from .symmetry import (
    InvariancePattern,
    binary_orbit_representatives,
    critical_node_count,
    orbit_stats,
    parse_coordinate_set,
    parse_groups,
    symmetrize,
)
from .tractability import InvarianceProfile, evaluate_profile
from .weighted import (
    WeightSchedule,
    construct_weighted_certificate,
    order_weights,
    weight_power_sum,
)

SCHEMA_VERSION = 1


def _load_json(path):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(args, payload, table_lines):
    if getattr(args, "format", "json") == "table":
        text = "\n".join(table_lines) + "\n"
    else:
        payload = {"schema_version": SCHEMA_VERSION, **payload}
        text = json.dumps(payload, sort_keys=True) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _pattern_from_args(args, dim):
    if getattr(args, "groups", None) and getattr(args, "invariant", None):
        raise ValueError("--invariant and --groups are mutually exclusive")
    if getattr(args, "groups", None):
        return InvariancePattern(dim, parse_groups(args.groups))
    if getattr(args, "invariant", None):
        return InvariancePattern.single(dim, parse_coordinate_set(args.invariant))
    return InvariancePattern.trivial(dim)


def _complex_dict(z):
    return {"re": z.real, "im": z.imag}


def _cmd_nabla(args):
    pattern = _pattern_from_args(args, args.dim)
    rows = []
    for rep in binary_orbit_representatives(pattern, cap=args.cap):
        stats = orbit_stats(rep, pattern)
        rows.append(
            {
                "k": list(rep),
                "orbit_size": stats.orbit_size,
                "stabilizer_size": stats.stabilizer_size,
            }
        )
    payload = {
        "dim": pattern.dim,
        "pattern": pattern.to_json_dict(),
        "count": len(rows),
        "orbit_size_total": sum(r["orbit_size"] for r in rows),
        "rows": rows,
    }
    lines = [f"{'k':<{3 * pattern.dim + 2}} orbit stabilizer"]
    for r in rows:
        lines.append(
            f"{str(tuple(r['k'])):<{3 * pattern.dim + 2}} {r['orbit_size']:>5} {r['stabilizer_size']:>10}"
        )
    lines.append(f"count {len(rows)}, orbit sizes sum {payload['orbit_size_total']}")
    _emit(args, payload, lines)
    return 0


def _cmd_rule(args):
    if args.rectangle == args.folded:
        raise ValueError("choose exactly one of --rectangle / --folded")
    if args.rectangle:
        rule = rectangle_rule(args.dim)
    else:
        pattern = _pattern_from_args(args, args.dim)
        rule = folded_rectangle_rule(pattern, node_cap=args.cap)
    payload = rule.to_json_dict()
    lines = [f"{'node':<{8 * rule.dim}} weight"]
    for node, w in zip(rule.nodes, rule.weights):
        lines.append(f"{str(tuple(float(v) for v in node)):<{8 * rule.dim}} {w.real:.12g}")
    _emit(args, payload, lines)
    return 0


def _cmd_integrate(args):
    rule = CubatureRule.from_json_dict(_load_json(args.rule))
    poly = FourierPolynomial.from_json_dict(_load_json(args.poly))
    value = apply_rule(rule, poly)
    payload = {"value": _complex_dict(value), "n_nodes": rule.n_nodes}
    _emit(args, payload, [f"value {value.real:.15g} {value.imag:+.15g}i"])
    return 0


def _cmd_wce(args):
    report = rectangle_worst_case_error(args.dim, args.alpha, args.tol)
    payload = {
        "dim": args.dim,
        "alpha": args.alpha,
        "closed_form": report.closed_form,
        "oracle_value": report.oracle_value,
        "tail_bound": report.tail_bound,
    }
    lines = [
        f"closed form  {report.closed_form:.15g}",
        f"oracle value {report.oracle_value:.15g}",
        f"tail bound   {report.tail_bound:.3g}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_certify(args):
    rule = CubatureRule.from_json_dict(_load_json(args.rule))
    dim = args.dim if args.dim else rule.dim
    if dim != rule.dim:
        raise ValueError(f"--dim {dim} does not match rule dimension {rule.dim}")
    pattern = _pattern_from_args(args, dim)
    if args.weighted:
        if not args.gammas:
            raise ValueError("--weighted requires --gammas")
        schedule = WeightSchedule.from_json_dict(_load_json(args.gammas))
        cert = construct_weighted_certificate(rule, pattern, args.alpha, schedule)
    else:
        cert = construct_certificate(rule, pattern, args.alpha)
    payload = cert.to_json_dict()
    lines = [
        f"nodes {rule.n_nodes}, threshold {critical_node_count(pattern)}",
        f"rule value   |A(f)| = {abs(cert.rule_value):.3e}",
        f"integral     {cert.integral_value.real:.15g}",
        f"norm         {cert.norm_value:.15g}",
        "certificate valid: the rule cannot beat the guaranteed error",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_weights(args):
    pattern = _pattern_from_args(args, args.dim)
    schedule = WeightSchedule.from_json_dict(_load_json(args.gammas))
    ordered = order_weights(pattern, schedule)
    payload = {
        "dim": args.dim,
        "pattern": pattern.to_json_dict(),
        "ordering": [list(k) for k in ordered.ordering],
        "weights": [float(w) for w in ordered.weights],
    }
    lines = [f"{'rank':>4} {'weight':>18}  k"]
    for n, (k, w) in enumerate(zip(ordered.ordering, ordered.weights)):
        lines.append(f"{n:>4} {float(w):>18.12g}  {tuple(k)}")
    if args.kappa is not None:
        sums = weight_power_sum(pattern, schedule, args.kappa)
        payload["power_sum"] = {
            "exponent": args.kappa,
            "brute": sums.brute,
            "closed": sums.closed,
            "closed_form_applicable": sums.closed_form_applicable,
        }
        lines.append(
            f"power sum (exponent {args.kappa}): brute {sums.brute:.12g}, "
            f"closed {sums.closed:.12g}, closed form applicable: {sums.closed_form_applicable}"
        )
    _emit(args, payload, lines)
    return 0


def _cmd_tract(args):
    profile = InvarianceProfile.from_json_dict(_load_json(args.profile))
    grid = []
    for part in args.st.split(";"):
        part = part.strip()
        if not part:
            continue
        s_str, t_str = part.split(",")
        grid.append((float(s_str), float(t_str)))
    report = evaluate_profile(profile, grid or ((1.0, 1.0),))
    payload = {
        "samples": [list(row) for row in report.profile.samples],
        "node_counts": [str(c) for c in report.node_counts],
        "free_counts": list(report.free_counts),
        "log_ratios": {
            f"{s},{t}": list(v) for (s, t), v in report.log_ratios.items()
        },
        "verdicts": dict(report.verdicts),
        "st_weak": {f"{s},{t}": v for (s, t), v in report.st_weak.items()},
        "notes": list(report.notes),
    }
    lines = [f"{'d':>5} {'inv':>5} {'free':>5} node-count"]
    for (d, i), c in zip(report.profile.samples, report.node_counts):
        lines.append(f"{d:>5} {i:>5} {d - i:>5} {c}")
    for name, verdict in report.verdicts.items():
        lines.append(f"{name}: {verdict}")
    for (s, t), verdict in report.st_weak.items():
        lines.append(f"weak(s={s}, t={t}): {verdict}")
    _emit(args, payload, lines)
    return 0


def _time_apply(rule, poly, repetitions, min_time=0.02):
    loops = max(1, int(repetitions))
    while True:
        start = time.perf_counter()
        for _ in range(loops):
            value = apply_rule(rule, poly)
        elapsed = time.perf_counter() - start
        if elapsed >= min_time or loops >= 1 << 16:
            return elapsed / loops, value
        loops *= 2


def bench(dims, fractions, repetitions=3, seed=0, n_terms=8):
    """Node counts, timings, and agreement of folded vs full rules.

    For each dimension and invariant fraction, an invariant integrand is
    built by orbit-averaging a random low-frequency polynomial (ones-count
    at most 2, so orbit sizes stay small) and both rules are timed on it.
    Returns a list of row dicts.
    """
    rng = np.random.default_rng(seed)
    rows = []
    for dim in dims:
        for fraction in fractions:
            inv = int(round(fraction * dim))
            pattern = InvariancePattern.single(dim, range(1, inv + 1))
            full = rectangle_rule(dim)
            folded = folded_rectangle_rule(pattern)
            base = random_polynomial(dim, n_terms, rng, max_magnitude=1)
            # keep at most two nonzero entries per frequency so orbit sizes
            # (and hence the symmetrized support) stay moderate
            shaped: dict = {}
            for k, c in base.terms.items():
                key = list(k)
                nonzero = [i for i, e in enumerate(key) if e != 0]
                for i in nonzero[2:]:
                    key[i] = 0
                key = tuple(key)
                shaped[key] = shaped.get(key, 0j) + c
            shaped[(0,) * dim] = shaped.get((0,) * dim, 0j) + 1.0
            poly = symmetrize(FourierPolynomial(dim, shaped), pattern)
            t_full, v_full = _time_apply(full, poly, repetitions)
            t_folded, v_folded = _time_apply(folded, poly, repetitions)
            rows.append(
                {
                    "dim": dim,
                    "invariant_count": inv,
                    "nodes_full": full.n_nodes,
                    "nodes_folded": folded.n_nodes,
                    "time_full_s": t_full,
                    "time_folded_s": t_folded,
                    "speedup": t_full / t_folded,
                    "max_abs_diff": abs(v_full - v_folded),
                }
            )
    return rows


def _cmd_bench(args):
    dims = [int(v) for v in args.dims.split(",") if v.strip()]
    fractions = [float(v) for v in args.fractions.split(",") if v.strip()]
    rows = bench(dims, fractions, repetitions=args.reps, seed=args.seed)
    buffer = io.StringIO()
    fields = [
        "dim",
        "invariant_count",
        "nodes_full",
        "nodes_folded",
        "time_full_s",
        "time_folded_s",
        "speedup",
        "max_abs_diff",
    ]
    writer = csv.DictWriter(buffer, fieldnames=fields)
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    text = buffer.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _add_pattern_flags(parser):
    parser.add_argument(
        "--invariant",
        metavar="SPEC",
        help="single interchangeable block, e.g. '1-3,5'",
    )
    parser.add_argument(
        "--groups",
        metavar="SPEC",
        help="';'-separated blocks, e.g. '1-3;4,7'",
    )


def _add_output_flags(parser):
    parser.add_argument("--format", choices=("json", "table"), default="json")
    parser.add_argument("--out", metavar="FILE", help="write output to FILE")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symquad",
        description=(
            "Folded cubature rules, worst-case integration errors, and "
            "lower-bound certificates for permutation-invariant periodic functions."
        ),
        epilog=(
            "exit codes: 0 success; 1 bad input or numerical failure; "
            "2 certification refused (rule already has enough nodes)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nabla", help="enumerate canonical 0/1 vectors with orbit stats")
    p.add_argument("-d", "--dim", type=int, required=True)
    _add_pattern_flags(p)
    p.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_nabla)

    p = sub.add_parser("rule", help="emit a rectangle or folded cubature rule")
    p.add_argument("-d", "--dim", type=int, required=True)
    p.add_argument("--rectangle", action="store_true")
    p.add_argument("--folded", action="store_true")
    _add_pattern_flags(p)
    p.add_argument("--cap", type=int, default=DEFAULT_NODE_CAP)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_rule)

    p = sub.add_parser("integrate", help="apply a rule (JSON) to a polynomial (JSON)")
    p.add_argument("--rule", required=True, metavar="FILE")
    p.add_argument("--poly", required=True, metavar="FILE")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_integrate)

    p = sub.add_parser("wce", help="worst-case error of the rectangle rule")
    p.add_argument("-d", "--dim", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_wce)

    p = sub.add_parser(
        "certify",
        help="construct a fooling certificate for a rule (exit 2 when refused)",
        epilog=(
            "exit codes: 0 certificate valid (lower bound witnessed); "
            "1 numerical failure; 2 refused because the rule has at least "
            "the critical node count (the folded-rule error bound is printed)."
        ),
    )
    p.add_argument("--rule", required=True, metavar="FILE")
    p.add_argument("-d", "--dim", type=int)
    _add_pattern_flags(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--weighted", action="store_true")
    p.add_argument("--gammas", metavar="FILE", help="weight schedule JSON")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("weights", help="ordered effective weights and power sums")
    p.add_argument("-d", "--dim", type=int, required=True)
    _add_pattern_flags(p)
    p.add_argument("--gammas", required=True, metavar="FILE")
    p.add_argument("--kappa", type=float, help="also report the power sum")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("tract", help="screen tractability predicates on a profile")
    p.add_argument("--profile", required=True, metavar="FILE")
    p.add_argument("--st", default="1,1", metavar="GRID", help="e.g. '1,1;0.5,0.5'")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_tract)

    p = sub.add_parser("bench", help="time folded vs full rule applications (CSV)")
    p.add_argument("--dims", default="8,12,16", metavar="LIST")
    p.add_argument("--fractions", default="1.0,0.5", metavar="LIST")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RefusalError as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return 2
    except (NullspaceError, CertificateError) as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return 1
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
