"""Command-line front end.

Every subcommand builds a ``(payload, rows)`` pair: ``payload`` is the JSON
body and ``rows`` the flat table used for ``--format csv|tsv``. Documents
are deterministic; wall-clock timing is added to ``metadata`` only with
``--timing``.

Exit codes: 0 success, 1 a check failed, 2 usage or validation error,
3 certification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
import warnings
from fractions import Fraction

from ghostseries import __version__
from ghostseries.dims import d_iw, d_new, d_ur, weight_k
from ghostseries.ghost import _frac_str, coefficient_valuations, delta_profile
from ghostseries.newton import DEFAULT_N_MAX, CertificationError, certified_slopes, ghost_np
from ghostseries.params import ParameterError, validate
from ghostseries.steinberg import all_ns_ranges, maximal_of
from ghostseries.valuation import INF
from ghostseries.verify import (
    THREADS_ENV,
    check_local_constancy,
    check_main_proposition,
    default_grid,
    lemma_suite,
    run_grid,
    LEMMA_CHECKS,
    _default_threads,
)

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_CERT = 0, 1, 2, 3
BIG = 2**53


class CheckFailed(Exception):
    def __init__(self, payload, rows):
        self.payload, self.rows = payload, rows


def _plain(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, Fraction):
        return _frac_str(v)
    if isinstance(v, int):
        return str(v) if abs(v) >= BIG else v
    if isinstance(v, float):
        return "inf" if v == INF else v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


# ---------------------------------------------------------------------------
# subcommands


def cmd_params(params, args):
    c = params.derived
    payload = {"params": params.to_dict(), "derived": c.to_dict(), "outside_theorem_range": params.outside_theorem_range}
    return payload, [{**params.to_dict(), **c.to_dict()}]


def cmd_dims(params, args):
    rows = [
        {
            "k_bullet": kb,
            "k": weight_k(params, kb),
            "d_ur": d_ur(params, kb),
            "d_iw": d_iw(params, kb),
            "d_new": d_new(params, kb),
        }
        for kb in range(args.k_bullet_min, args.k_bullet_max + 1)
    ]
    return {"rows": rows}, rows


def cmd_ghost(params, args):
    vals = coefficient_valuations(params, args.k_bullet, args.terms, hat_bullet=args.hat)
    rows = [{"n": n, "valuation": v} for n, v in enumerate(vals)]
    payload = {"k_bullet": args.k_bullet, "k": weight_k(params, args.k_bullet), "hat": args.hat, "rows": rows}
    return payload, rows


def cmd_np(params, args):
    poly = ghost_np(params, args.k_bullet, args.terms)
    rows = [{"x": x, "y": y} for x, y in poly.vertices]
    return {"k_bullet": args.k_bullet, "terms": args.terms, **poly.to_dict()}, rows


def cmd_slopes(params, args):
    ms = certified_slopes(params, args.k_bullet, Fraction(args.bound), n_max=args.n_max)
    if not ms.certified:
        raise CertificationError(ms.certificate.get("reason", "uncertified"))
    rows = [{"slope": s, "mult": m} for s, m in ms.entries]
    return {"k_bullet": args.k_bullet, **ms.to_dict()}, rows


def cmd_delta(params, args):
    prof = delta_profile(params, args.k_bullet)
    verts = set(prof.hull_vertices)
    rows = [
        {"ell": ell, "raw": prof.raw[ell], "hull": prof.hull[ell], "vertex": ell in verts}
        for ell in sorted(prof.raw)
    ]
    return prof.to_dict(), rows


def cmd_ns(params, args):
    ranges = all_ns_ranges(params, args.k_bullet, args.k_bullet_max, prune=not args.no_prune)
    maximal = set(maximal_of(ranges))
    rows = [{**r.to_dict(), "maximal": r in maximal} for r in ranges]
    return {"eval_bullet": args.k_bullet, "k_bullet_max": args.k_bullet_max, "ranges": rows}, rows


def _report_rows(checks):
    return [{"name": c.name, "status": c.status, "checked": c.checked, "vacuous": c.vacuous} for c in checks]


def cmd_verify(params, args):
    checks = [check_local_constancy(params, args.m, args.k1, args.pairs)]
    if args.k0 is not None:
        checks.append(check_main_proposition(params, args.tilde_k or args.k0, args.k0, args.m))
    payload = {"checks": [c.to_dict() for c in checks]}
    rows = _report_rows(checks)
    if any(not c.passed for c in checks):
        raise CheckFailed(payload, rows)
    return payload, rows


def cmd_lemmas(params, args):
    checks = args.checks.split(",") if args.checks else None
    if checks:
        unknown = sorted(set(checks) - set(LEMMA_CHECKS))
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
    if args.grid:
        report = run_grid(default_grid(), args.k_bullet_max, checks=checks, threads=args.threads)
    else:
        report = lemma_suite(params, args.k_bullet_max, threads=args.threads, checks=checks)
    payload, rows = report.to_dict(), _report_rows(report.checks)
    if not report.ok:
        raise CheckFailed(payload, rows)
    return payload, rows


COMMANDS = {
    "params": cmd_params,
    "dims": cmd_dims,
    "ghost": cmd_ghost,
    "np": cmd_np,
    "slopes": cmd_slopes,
    "delta": cmd_delta,
    "ns": cmd_ns,
    "verify": cmd_verify,
    "lemmas": cmd_lemmas,
}


# ---------------------------------------------------------------------------
# parsing and output


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True)
    common.add_argument("--a", type=int, required=True)
    common.add_argument("--s", type=int, required=True)
    common.add_argument("--format", choices=("json", "csv", "tsv"), default="json")
    common.add_argument("--strict", dest="strict", action="store_true", default=True)
    common.add_argument("--no-strict", dest="strict", action="store_false")
    common.add_argument("--threads", type=int, default=None, help=f"worker processes (default ${THREADS_ENV} or 1)")
    common.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="certification index budget")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing to metadata")

    parser = argparse.ArgumentParser(prog="ghostseries", description="Ghost series slopes and local constancy checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("params", parents=[common], help="derived constants")

    p = sub.add_parser("dims", parents=[common], help="dimension table")
    p.add_argument("--k-bullet-min", type=int, default=0)
    p.add_argument("--k-bullet-max", type=int, default=20)

    for name, text in (("ghost", "coefficient valuations"), ("np", "Newton polygon")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--k-bullet", type=int, required=True)
        p.add_argument("--terms", type=int, default=20, help="last coefficient index")
        if name == "ghost":
            p.add_argument("--hat", type=int, default=None, help="k_bullet whose factors are removed")

    p = sub.add_parser("slopes", parents=[common], help="certified slope multiset")
    p.add_argument("--k-bullet", type=int, required=True)
    p.add_argument("--bound", type=Fraction, required=True)

    p = sub.add_parser("delta", parents=[common], help="tilted valuations and hull")
    p.add_argument("--k-bullet", type=int, required=True)

    p = sub.add_parser("ns", parents=[common], help="near-Steinberg ranges")
    p.add_argument("--k-bullet", type=int, required=True, help="evaluation weight index")
    p.add_argument("--k-bullet-max", type=int, default=60)
    p.add_argument("--no-prune", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="local constancy of slope multisets")
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--k1", type=int, required=True, help="base weight k (not k_bullet)")
    p.add_argument("--pairs", type=int, default=3)
    p.add_argument("--k0", type=int, default=None, help="also check the slope bound at d_ur(k0)")
    p.add_argument("--tilde-k", type=int, default=None)

    p = sub.add_parser("lemmas", parents=[common], help="invariant suite")
    p.add_argument("--k-bullet-max", type=int, default=60)
    p.add_argument("--grid", action="store_true", help="run over the default parameter grid")
    p.add_argument("--checks", default=None, help="comma separated subset")
    return parser


def render(doc: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_plain(doc), indent=2, sort_keys=True) + "\n"
    out = io.StringIO()
    rows = [_plain(r) for r in rows]
    fields = list(rows[0]) if rows else []
    writer = csv.DictWriter(out, fieldnames=fields, delimiter="," if fmt == "csv" else "\t", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.threads is None:
        args.threads = _default_threads()
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            params = validate(args.p, args.a, args.s, strict=args.strict)
        if params.outside_theorem_range:
            print(f"warning: p={params.p} is outside the proven range", file=sys.stderr)
        payload, rows = COMMANDS[args.command](params, args)
    except CheckFailed as exc:
        payload, rows, code = exc.payload, exc.rows, EXIT_CHECK
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return EXIT_CERT
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    metadata = {"command": args.command, "params": params.to_dict(), "version": __version__}
    if args.timing:
        metadata["elapsed_seconds"] = round(time.perf_counter() - t0, 6)
    sys.stdout.write(render({"metadata": metadata, "payload": payload}, rows, args.format))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
