"""Command-line front end.

Exit codes: 0 success, 1 a checked statement failed, 2 bad input,
3 an enumeration exceeded the work limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .connectivity import DEFAULT_WORK_LIMIT, WorkLimitExceeded, enumerate_separators
from .polytope import InstanceError, chain_of_cubes, connected_sum, hypercube, load_instance, vertex_census
from .verify import INDETERMINATE, INSTANCE_CLAIMS, full_suite, kappa_of, run_instance_claims

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{name} must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--work-limit", type=_positive, default=None,
                        help=f"max subset checks per enumeration (env CUBELAT_WORK_LIMIT, default {DEFAULT_WORK_LIMIT})")
    common.add_argument("--jobs", type=_positive, default=None, help="worker processes (env CUBELAT_JOBS, default 1)")
    common.add_argument("-o", "--out", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="cubelat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", parents=[common], help="write an instance file")
    gen.add_argument("family", choices=["cube", "chain", "connsum"])
    gen.add_argument("params", nargs="+",
                     help="cube: D | chain: D N | connsum: FILE1 FACET1 FILE2 FACET2")

    val = sub.add_parser("validate", parents=[common], help="load and validate an instance")
    val.add_argument("instance")

    con = sub.add_parser("connectivity", parents=[common], help="connectivity and degree census")
    con.add_argument("instance")

    sep = sub.add_parser("separators", parents=[common], help="all separators of a given size")
    sep.add_argument("instance")
    sep.add_argument("size", type=int)

    ver = sub.add_parser("verify", parents=[common], help="check statements on one instance")
    ver.add_argument("instance")
    ver.add_argument("claims", nargs="*", default=["ALL"],
                     help="claim names or ALL: " + ", ".join(INSTANCE_CLAIMS))

    sub.add_parser("report", parents=[common], help="run the full suite on the built-in corpus")
    return parser


def _emit(lines: list[str], out: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _generate(args) -> int:
    p = args.params
    try:
        if args.family == "cube":
            if len(p) != 1:
                raise UsageError("generate cube D")
            P = hypercube(int(p[0]))
        elif args.family == "chain":
            if len(p) != 2:
                raise UsageError("generate chain D N")
            P = chain_of_cubes(int(p[0]), int(p[1]))
        else:
            if len(p) != 4:
                raise UsageError("generate connsum FILE1 FACET1 FILE2 FACET2")
            P = connected_sum(load_instance(p[0]), int(p[1]), load_instance(p[2]), int(p[3]))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit([P.to_json()], args.out)
    return EXIT_OK


def _reports_exit(reports) -> int:
    if any(r.failed for r in reports):
        return EXIT_FAIL
    if any(r.passed == INDETERMINATE for r in reports):
        print("note: some checks were indeterminate (work limit reached)", file=sys.stderr)
    return EXIT_OK


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    work_limit = args.work_limit or _env_int("CUBELAT_WORK_LIMIT", DEFAULT_WORK_LIMIT)
    jobs = args.jobs or _env_int("CUBELAT_JOBS", 1)

    if args.command == "generate":
        return _generate(args)
    if args.command == "report":
        reports = full_suite(work_limit=work_limit, jobs=jobs)
        _emit([r.to_json() for r in reports], args.out)
        return _reports_exit(reports)

    P = load_instance(args.instance)
    G = P.graph
    if args.command == "validate":
        _emit([json.dumps({"valid": True, "d": P.d, "vertices": P.nverts, "edges": G.num_edges,
                           "facets": len(P.facets), "f_vector": list(P.boundary.f_vector())})], args.out)
        return EXIT_OK
    if args.command == "connectivity":
        census = vertex_census(P)
        _emit([json.dumps({"d": P.d, "vertices": P.nverts, "edges": G.num_edges, "kappa": kappa_of(G),
                           "delta": census.delta, "simple_vertices": len(census.simple_vertices)})], args.out)
        return EXIT_OK
    if args.command == "separators":
        k = kappa_of(G)
        if args.size < k:
            raise UsageError(f"size {args.size} is below the connectivity {k}; no separators exist")
        try:
            census = enumerate_separators(G, args.size, work_limit=work_limit, jobs=jobs)
        except WorkLimitExceeded as exc:
            _emit([json.dumps({"size": args.size, "truncated": True, "needed": exc.needed,
                               "work_limit": exc.limit, "separators": []})], args.out)
            return EXIT_LIMIT
        _emit([json.dumps(dict(census.to_dict(), kappa=k))], args.out)
        return EXIT_OK
    if args.command == "verify":
        claims = None if args.claims == ["ALL"] or "ALL" in args.claims else args.claims
        unknown = [c for c in claims or [] if c not in INSTANCE_CLAIMS]
        if unknown:
            raise UsageError(f"unknown claim(s): {', '.join(unknown)}")
        reports = run_instance_claims(P, claims, work_limit=work_limit, jobs=jobs)
        _emit([r.to_json() for r in reports], args.out)
        return _reports_exit(reports)
    raise UsageError(f"unknown command {args.command}")


def main(argv=None) -> int:
    try:
        code = run(argv)
    except (InstanceError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INPUT
    sys.exit(code)


if __name__ == "__main__":
    main()
