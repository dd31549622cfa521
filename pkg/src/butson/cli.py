"""Command-line frontend: construct, verify, and export in batch runs."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import arrays, construct, fileio
from .errors import ButsonError
from .rings import chain_ring
from .sums import unit_sum, zero_sum
from .verify import materialize, verify_bh

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_PARAMS = 2


def _add_ring_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=["galois", "truncated"])
    p.add_argument("--p", type=int, required=True, help="characteristic prime")
    p.add_argument("--d", type=int, required=True, help="residue field degree")
    p.add_argument("--n", type=int, required=True, help="chain length")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="butson",
        description="Construct and verify group-invariant Butson Hadamard matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="run one of the three constructions")
    csub = con.add_subparsers(dest="construction", required=True)

    cg = csub.add_parser("group", help="blocks along a normal cyclic subgroup")
    cg.add_argument("--order", type=int, required=True)
    cg.add_argument("--h", type=int, required=True)
    cg.add_argument("--m", type=int, default=1, help="multiplier coprime to the order")
    cg.add_argument("--group", default=None, help="cyclic:n | abelian:n1,n2 | semidirect:m,k,t | table:file")
    _add_out_flags(cg)

    cp = csub.add_parser("local-partition", help="partition of R x R over a chain ring")
    _add_ring_flags(cp)
    cp.add_argument("--t", type=int, required=True)
    cp.add_argument("--h", type=int, required=True)
    cp.add_argument("--seed", type=int, default=None, help="shuffle the partition")
    _add_out_flags(cp)

    cl = csub.add_parser("local-lines", help="line family of R x R over a chain ring")
    _add_ring_flags(cl)
    cl.add_argument("--h", type=int, required=True)
    _add_out_flags(cl)

    v = sub.add_parser("verify", help="verify a matrix file")
    v.add_argument("file")
    v.add_argument("--full", action="store_true", help="report all failures")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["text", "json"], default="text")

    ea = sub.add_parser("export-array", help="convert an abelian matrix to an array")
    ea.add_argument("file")
    ea.add_argument("--out", required=True)

    va = sub.add_parser("verify-array", help="verify perfect autocorrelation")
    va.add_argument("file")
    va.add_argument("--format", choices=["text", "json"], default="text")

    ss = sub.add_parser("solve-sum", help="vanishing or unit sums of roots of unity")
    ss.add_argument("--length", type=int, required=True)
    ss.add_argument("--order", type=int, required=True)
    ss.add_argument("--target", type=int, default=None)
    ss.add_argument("--format", choices=["text", "json"], default="text")

    ri = sub.add_parser("ring-info", help="inspect a supported chain ring")
    _add_ring_flags(ri)
    ri.add_argument("--format", choices=["text", "json"], default="text")

    return parser


def _add_out_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="output matrix file (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument(
        "--unsafe-skip-verify",
        action="store_true",
        help="skip the final verification pass (benchmarking only)",
    )


def _emit_matrix(args, D, group) -> int:
    M = materialize(group, D)
    if not args.unsafe_skip_verify:
        report = verify_bh(M, jobs=args.jobs)
        if not report.ok:
            print(f"verification failed: {report.first_failure}", file=sys.stderr)
            return EXIT_VERIFY_FAILED
    text = fileio.format_matrix(M)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_construct_group(args) -> int:
    spec = args.group or f"cyclic:{args.order}"
    G = fileio.parse_group_spec(spec, base_dir=Path.cwd())
    if G.order != args.order:
        raise ButsonError(f"group has order {G.order}, expected {args.order}")
    h0 = construct.min_h(G.order)
    if args.h % h0 != 0:
        raise ButsonError(
            f"h={args.h} is not a multiple of the minimal root order {h0}"
        )
    k = construct.block_count(G.order, h0)
    gen = construct.find_normal_cyclic_generator(G, G.order // k)
    D = construct.construct_group_bh(G, gen, args.h, m=args.m)
    return _emit_matrix(args, D, G)


def _cmd_local_partition(args) -> int:
    R = chain_ring(args.family, args.p, args.d, args.n)
    etas = list(zero_sum(args.p**args.t, args.h).exps)
    D = construct.construct_partition_bh(R, args.t, etas, args.h, seed=args.seed)
    return _emit_matrix(args, D, D.group)


def _cmd_local_lines(args) -> int:
    R = chain_ring(args.family, args.p, args.d, args.n)
    scheme = construct.solve_coefficient_scheme(R, args.h)
    D = construct.construct_line_bh(R, scheme)
    return _emit_matrix(args, D, D.group)


def _cmd_verify(args) -> int:
    M = fileio.read_matrix(args.file)
    report = verify_bh(M, full=args.full, jobs=args.jobs)
    payload = {
        "is_bh": report.is_bh,
        "is_invariant": report.is_invariant,
        "first_failure": report.first_failure,
        "timing_ms": report.timing_ms,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        status = "ok" if report.ok else f"FAILED at {report.first_failure}"
        print(f"bh={report.is_bh} invariant={report.is_invariant} {status}")
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def _cmd_export_array(args) -> int:
    M = fileio.read_matrix(args.file)
    report = verify_bh(M)
    if not report.is_invariant:
        print("matrix is not group-invariant; no array exists", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    # the coefficient of g is the matrix entry at (g, identity)
    exps = tuple(row[0] for row in M.exponents)
    if M.group.abelian_factors is None:
        raise ButsonError("array export needs an abelian group in factor form")
    A = arrays.PerfectArray(M.group.abelian_factors, M.h, exps)
    fileio.write_array(A, args.out)
    return EXIT_OK


def _cmd_verify_array(args) -> int:
    A = fileio.read_array(args.file)
    ok = arrays.verify_perfect(A)
    if args.format == "json":
        print(json.dumps({"is_perfect": ok, "dims": list(A.dims), "h": A.h}))
    else:
        print(f"perfect={ok}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_solve_sum(args) -> int:
    if args.target is None:
        w = zero_sum(args.length, args.order)
    else:
        w = unit_sum(args.length, args.order, args.target)
    if args.format == "json":
        print(json.dumps({"h": w.h, "exponents": list(w.exps), "target": w.target}))
    else:
        print(" ".join(str(e) for e in w.exps))
    return EXIT_OK


def _cmd_ring_info(args) -> int:
    R = chain_ring(args.family, args.p, args.d, args.n)
    G, _, _ = R.additive_group()
    info = {
        "ring": R.describe(),
        "order": R.size,
        "units": R.size - R.p ** (R.d * (R.n - 1)),
        "ideal_sizes": [len(R.ideal_elements(t)) for t in range(R.n + 1)],
        "additive_type": list(G.abelian_factors),
    }
    if args.format == "json":
        print(json.dumps(info))
    else:
        print(f"ring:          {info['ring']}")
        print(f"order:         {info['order']}")
        print(f"units:         {info['units']}")
        print(f"ideal sizes:   {info['ideal_sizes']}")
        print(f"additive type: Z_" + " x Z_".join(str(f) for f in info["additive_type"]))
    return EXIT_OK


_HANDLERS = {
    ("construct", "group"): _cmd_construct_group,
    ("construct", "local-partition"): _cmd_local_partition,
    ("construct", "local-lines"): _cmd_local_lines,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "construct":
            return _HANDLERS[(args.command, args.construction)](args)
        handler = {
            "verify": _cmd_verify,
            "export-array": _cmd_export_array,
            "verify-array": _cmd_verify_array,
            "solve-sum": _cmd_solve_sum,
            "ring-info": _cmd_ring_info,
        }[args.command]
        return handler(args)
    except ButsonError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS


if __name__ == "__main__":
    sys.exit(main())
