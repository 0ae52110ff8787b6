"""Command-line front end.

Subcommands: ``gamma`` (enumerate one point scheme as TSV),
``stabilize`` (scan counts and truncation fibers), ``sigma`` (shift
table and orbits), ``verify`` (invariant suite), ``segre-check``
(product-functional properties).  Output is plain text and byte-stable
across runs and worker counts.

Exit codes: 0 success, 1 property failure, 2 parse error,
3 precondition error, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bimodule import AlgebraSpec
from .parsing import AlgebraParseError, parse_algebra
from .points import (
    CapExceeded,
    enumerate_points,
    point_row,
    shift_map,
    stabilization_scan,
)
from .segre import check_associativity, kernel_decomposition_check, segre, segre_preimage
from .verify import all_tuples, run_invariant_suite

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CAP = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointschemes",
        description="Point schemes of path algebras with relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="algebra description file")
        p.add_argument("--cap", type=int, default=10**7, help="candidate tuple cap")
        p.add_argument("-o", "--output", default=None, help="write report here instead of stdout")

    p = sub.add_parser("gamma", help="enumerate the degree-n point scheme")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("stabilize", help="scan counts and truncation fibers")
    p.add_argument("--max", dest="n_max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("sigma", help="shift table at degree d")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    common(p)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-n", dest="max_n", type=int, default=3)
    common(p)

    p = sub.add_parser("segre-check", help="product-functional properties at degree n")
    p.add_argument("-n", type=int, required=True)
    common(p)

    return parser


def _load(path_text: str) -> AlgebraSpec:
    path = Path(path_text)
    try:
        text = path.read_text()
    except OSError as exc:
        raise AlgebraParseError(0, f"cannot read {path}: {exc}") from None
    return parse_algebra(text, name=path.stem)


def _emit(text: str, output) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", newline="\n") as handle:
            handle.write(text)


def _cmd_gamma(args) -> tuple[int, str]:
    A = _load(args.file)
    scheme = enumerate_points(A, args.n, cap=args.cap, workers=args.workers)
    return EXIT_OK, scheme.to_tsv()


def _cmd_stabilize(args) -> tuple[int, str]:
    A = _load(args.file)
    report = stabilization_scan(A, args.n_max, cap=args.cap, workers=args.workers)
    header = f"# stabilize max={args.n_max} field={A.field.label()} algebra={A.name}\n"
    return EXIT_OK, header + report.render()


def _cmd_sigma(args) -> tuple[int, str]:
    A = _load(args.file)
    gd = enumerate_points(A, args.d, cap=args.cap, workers=args.workers)
    gd1 = enumerate_points(A, args.d + 1, cap=args.cap, workers=args.workers)
    shift = shift_map(gd, gd1)
    lines = [f"# sigma d={args.d} field={A.field.label()} algebra={A.name}"]
    for q in shift.mapping:
        lines.append(f"{point_row(q)}\t->\t{point_row(shift.mapping[q])}")
    lines.append(f"# closed {str(shift.closed).lower()}")
    if shift.orbits is None:
        lines.append("# orbits none")
    else:
        lines.append("# orbits " + ",".join(str(k) for k in shift.orbits))
    lines.append("# note unique-lift condition checked on field points only")
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_verify(args) -> tuple[int, str]:
    A = _load(args.file)
    results = run_invariant_suite(A, max_n=args.max_n, cap=args.cap)
    lines = [f"# verify max-n={args.max_n} field={A.field.label()} algebra={A.name}"]
    lines.extend(r.line() for r in results)
    passed = sum(1 for r in results if r.passed)
    lines.append(f"# {passed}/{len(results)} properties passed")
    status = EXIT_OK if passed == len(results) else EXIT_PROPERTY
    return status, "\n".join(lines) + "\n"


def _cmd_segre_check(args) -> tuple[int, str]:
    A = _load(args.file)
    if not A.field.is_prime:
        raise ValueError("segre-check needs a finite prime field")
    if args.n < 1:
        raise ValueError("degree must be >= 1")
    E, field = A.bimodule, A.field

    projected = sum(1 for _ in all_tuples(A, args.n))
    if projected > args.cap:
        raise CapExceeded(projected, args.cap)

    seen: dict = {}
    inj_ok, checked = True, 0
    rt_ok = True
    assoc_ok = True
    for t in all_tuples(A, args.n):
        checked += 1
        big = segre(E, field, t)
        key = (t.path, big.coords)
        if seen.get(key, t) != t:
            inj_ok = False
        seen[key] = t
        if segre_preimage(E, field, big) != t:
            rt_ok = False
        for split in range(1, args.n):
            if not check_associativity(E, field, t, split):
                assoc_ok = False

    scheme = enumerate_points(A, args.n, cap=args.cap)
    ker_ok = all(kernel_decomposition_check(A, t) for t in scheme.points)

    lines = [f"# segre-check n={args.n} field={field.label()} algebra={A.name}"]
    lines.append(f"injectivity\t{'PASS' if inj_ok else 'FAIL'}\ttuples={checked}")
    lines.append(f"roundtrip\t{'PASS' if rt_ok else 'FAIL'}\ttuples={checked}")
    lines.append(f"associativity\t{'PASS' if assoc_ok else 'FAIL'}\ttuples={checked}")
    lines.append(f"kernel-decomposition\t{'PASS' if ker_ok else 'FAIL'}\tpoints={len(scheme)}")
    ok = inj_ok and rt_ok and assoc_ok and ker_ok
    return (EXIT_OK if ok else EXIT_PROPERTY), "\n".join(lines) + "\n"


_COMMANDS = {
    "gamma": _cmd_gamma,
    "stabilize": _cmd_stabilize,
    "sigma": _cmd_sigma,
    "verify": _cmd_verify,
    "segre-check": _cmd_segre_check,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        status, text = _COMMANDS[args.command](args)
    except AlgebraParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(text, args.output)
    return status


if __name__ == "__main__":
    sys.exit(main())
