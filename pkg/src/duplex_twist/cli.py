"""Command-line interface.

Exit codes: 0 success, 1 input or validation error, 2 property violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterator, Sequence

from .charges import p_derivative_at_one, p_polynomial
from .errors import InputError, PropertyViolation
from .lattice import PLUS_I, PLUS_J, PLUS_K
from .region import DuplexRegion, build_duplex, parse_base
from .render import render
from .sock import project_sock
from .tiling import Tiling, enumerate_tilings, tiling_from_dict, tiling_to_dict
from .twist import pretwist
from .verify import default_jobs, examine_all, flip_report, resolve_selector, run_suite

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


def load_region(path: str) -> DuplexRegion:
    text = Path(path).read_text()
    return build_duplex(parse_base(text))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def read_tiling_docs(path: str) -> Iterator[dict]:
    """A tiling file holds one JSON document, or one document per line."""
    text = _read_text(path)
    stripped = text.strip()
    if not stripped:
        raise InputError(f"{path}: no tiling found")
    try:
        yield json.loads(stripped)
        return
    except json.JSONDecodeError:
        pass
    for n, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            yield json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{n}: not valid JSON ({exc.msg})") from exc


def read_tilings(path: str, region: DuplexRegion) -> list[Tiling]:
    out = []
    for doc in read_tiling_docs(path):
        own_region, t = tiling_from_dict(doc)
        if own_region.base != region.base:
            raise InputError("tiling file was made for a different base")
        out.append(t)
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    try:
        region = load_region(args.base)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"invalid: {type(exc).__name__}: {exc}")
        return EXIT_INPUT
    base = region.base
    print(f"valid, {len(base)} cells ({base.width}x{base.height} bounding box, {len(region.cubes)} cubes)")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    region = load_region(args.base)
    if args.count_only:
        n = sum(1 for _ in enumerate_tilings(region))
        _emit(f"{n}\n", args.out)
        return EXIT_OK
    lines = (json.dumps(tiling_to_dict(region.base, t)) + "\n" for t in enumerate_tilings(region))
    if args.out:
        with open(args.out, "w") as fh:
            fh.writelines(lines)
    else:
        sys.stdout.writelines(lines)
    return EXIT_OK


def _twist_line(index: int, t: Tiling) -> tuple[str, bool]:
    ti, tj, tk = (pretwist(t, u) for u in (PLUS_I, PLUS_J, PLUS_K))
    deriv = p_derivative_at_one(p_polynomial(project_sock(t)))
    ok = ti == tj == tk == deriv
    tw = str(ti) if ok else "?"
    return f"{index}, {tw}, {ti}, {tj}, {tk}, {deriv}", ok


def cmd_twist(args) -> int:
    region = load_region(args.base)
    if args.tiling:
        tilings = read_tilings(args.tiling, region)
        ok = True
        print("# index, Tw, T^i, T^j, T^k, P'(1)")
        for k, t in enumerate(tilings):
            line, good = _twist_line(k, t)
            ok &= good
            if args.json:
                sock = project_sock(t)
                poly = p_polynomial(sock)
                print(json.dumps({"index": k, "line": line, "polynomial": poly.to_json()}))
            else:
                print(line)
        return EXIT_OK if ok else EXIT_VIOLATION

    tilings = list(enumerate_tilings(region))
    if args.lines:
        print("# index, Tw, T^i, T^j, T^k, P'(1)")
        for f in examine_all(tilings, ("prop1.1",), args.jobs):
            p = f.pretwists
            tw = f.twist if not f.failures else "?"
            print(f"{f.index}, {tw}, {p['+i']}, {p['+j']}, {p['+k']}, {f.derivative}")
    report = run_suite(region, tilings, ("prop1.1",), jobs=args.jobs)
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_verify(args) -> int:
    region = load_region(args.base)
    try:
        checks = resolve_selector(args.lemmas)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.tilings:
        tilings = read_tilings(args.tilings, region)
        # flip-graph checks need the whole tiling set
        checks = tuple(c for c in checks if c not in ("flip-invariance", "sock-coherence"))
    else:
        tilings = list(enumerate_tilings(region))
    report = run_suite(region, tilings, checks, jobs=args.jobs)
    text = json.dumps(report.to_json(), indent=2) + "\n"
    _emit(text, args.out)
    if not args.quiet:
        for key in checks:
            c = report.lemma_counts[key]
            status = "PASS" if c["fail"] == 0 else "FAIL"
            print(f"{status} {key}: {c['pass']} passed, {c['fail']} failed", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_flips(args) -> int:
    region = load_region(args.base)
    tilings = list(enumerate_tilings(region))
    facts = examine_all(tilings, (), args.jobs)
    rep = flip_report(tilings, facts)
    out = {"tiling_count": len(tilings), **rep.to_json()}
    out["component_twists"] = [
        sorted({facts[k].twist for k in comp}, key=str) for comp in rep.components
    ]
    out["components_detail"] = [
        {"size": len(comp), "first_index": comp[0]} for comp in rep.components
    ]
    print(json.dumps(out, indent=2))
    return EXIT_OK if rep.flip_invariant and rep.socks_coherent else EXIT_VIOLATION


def cmd_sock(args) -> int:
    region = load_region(args.base)
    (t,) = _single_tiling(args, region)
    sock = project_sock(t)
    doc = sock.to_json()
    text = json.dumps(doc)
    if args.polynomial:
        text = json.dumps({**doc, "polynomial": p_polynomial(sock).to_json()})
    _emit(text + "\n", args.out)
    return EXIT_OK


def _single_tiling(args, region: DuplexRegion) -> list[Tiling]:
    if args.tiling is not None:
        tilings = read_tilings(args.tiling, region)
        if len(tilings) != 1:
            raise InputError("expected exactly one tiling")
        return tilings
    if args.index is None:
        raise InputError("give --tiling FILE or --index N")
    for k, t in enumerate(enumerate_tilings(region)):
        if k == args.index:
            return [t]
    raise InputError(f"the region has no tiling with index {args.index}")


def cmd_render(args) -> int:
    region = load_region(args.base)
    (t,) = _single_tiling(args, region)
    _emit(render(region.base, t, args.format, args.view, args.annotate), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="duplex-twist",
        description="Domino tilings of duplex regions: enumeration, twist and its identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a base file")
    p.add_argument("base")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("enumerate", help="list all tilings as JSON lines")
    p.add_argument("base")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("twist", help="twist, pretwists and P'(1) of tilings")
    p.add_argument("base")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--tiling", help="tiling file (JSON, or JSON lines)")
    which.add_argument("--all", action="store_true", help="every tiling of the base")
    p.add_argument("--lines", action="store_true", help="with --all, also print one line per tiling")
    p.add_argument("--json", action="store_true", help="with --tiling, print JSON including P(q)")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("verify", help="run the identity suites over all tilings")
    p.add_argument("base")
    p.add_argument(
        "--lemmas", default="all",
        help="all, or a comma list of 2.1, 3.1, 3.2, 3.3, 3.4, prop1.1, flips",
    )
    p.add_argument("--tilings", help="check these tilings (file or '-') instead of enumerating")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--out")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("flips", help="flip graph components and invariance report")
    p.add_argument("base")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_flips)

    for name, func, helptext in (
        ("render", cmd_render, "draw a tiling or its sock"),
        ("sock", cmd_sock, "print the sock of a tiling as JSON"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("base")
        which = p.add_mutually_exclusive_group(required=True)
        which.add_argument("--tiling")
        which.add_argument("--index", type=int, help="index in enumeration order")
        p.add_argument("--out")
        p.set_defaults(func=func)
        if name == "render":
            p.add_argument("--format", choices=("svg", "ascii"), default="svg")
            p.add_argument("--view", choices=("tiling", "sock"), default="tiling")
            p.add_argument("--annotate", choices=("none", "angles", "weights"), default="none")
        else:
            p.add_argument("--polynomial", action="store_true", help="add P(q) as [exponent, coefficient] pairs")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (InputError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
