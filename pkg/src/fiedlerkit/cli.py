"""Command-line front end.

Exit codes: 0 success, 2 unreadable input, 3 precondition violated,
4 a check or certificate failed.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import checks
from .embeddings import PlacementError, UnbalancedSeparatorError, certify, format_certificate
from .families import FamilyError, FamilySpec, is_family_spec
from .graph import EdgeListError, Graph, GraphError, format_edge_list, parse_edge_list
from .separators import (
    MaximalOuterplanarGraph,
    NotATreeError,
    TriangulationError,
    auto_separator,
    fan_triangulation,
    outerplanar_separator,
    parse_triangulation,
    refine_balanced,
    tree_centroid_finder,
)
from .spectra import DEFAULT_TOL, fiedler_value, laplacian_spectrum

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_FAILED = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _default_tol() -> float:
    env = os.environ.get("FF_TOL")
    if env is None:
        return DEFAULT_TOL
    try:
        return float(env)
    except ValueError:
        raise CliError(f"FF_TOL={env!r} is not a number", EXIT_PARSE) from None


def load_input(source: str) -> tuple[Graph, MaximalOuterplanarGraph | None]:
    """Edge-list file, triangulation file (one-number header) or family spec string."""
    path = Path(source)
    if path.is_file():
        text = path.read_text()
        first = next((ln for ln in text.splitlines() if ln.strip()), "")
        try:
            if len(first.split()) == 1:
                P = parse_triangulation(text)
                return P.graph, P
            return parse_edge_list(text), None
        except EdgeListError as exc:
            raise CliError(f"{source}: {exc}", EXIT_PARSE) from None
    if is_family_spec(source):
        try:
            spec = FamilySpec.parse(source)
            G = spec.build()
        except FamilyError as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
        P = fan_triangulation(spec.n) if spec.kind == "fan" else None
        return G, P
    raise CliError(f"{source!r} is neither a readable file nor a family spec", EXIT_PARSE)


def _fmt(x: float) -> str:
    s = f"{x:.12f}"
    return s[1:] if s.startswith("-") and float(s) == 0.0 else s


def cmd_fiedler(args) -> int:
    G, _ = load_input(args.input)
    if G.n < 2:
        raise CliError("Fiedler value needs at least 2 vertices", EXIT_PRECONDITION)
    print(_fmt(fiedler_value(G, args.tol)))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    G, _ = load_input(args.input)
    if G.n < 1:
        raise CliError("empty graph has no spectrum", EXIT_PRECONDITION)
    for lam in laplacian_spectrum(G, tol=args.tol).eigenvalues:
        print(_fmt(lam))
    return EXIT_OK


def _parse_x(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"--x expects comma-separated vertex ids, got {text!r}", EXIT_PARSE) from None


def cmd_certify(args) -> int:
    G, P = load_input(args.input)
    notes = []
    try:
        if args.x is not None:
            X = _parse_x(args.x)
        elif args.auto_outerplanar:
            if P is None:
                raise CliError("--auto-outerplanar needs a triangulation file or a fan:k spec", EXIT_PRECONDITION)
            sep = outerplanar_separator(P)
            X = list(sep.separator)
            notes.append(f"outerplanar {sep.note}, centroid face {sep.centroid_face}")
        elif args.auto_tree:
            X = list(refine_balanced(G, (), tree_centroid_finder))
            notes.append("tree centroid refinement")
        else:
            X = list(auto_separator(G, args.high_degree))
            notes.append("high-degree set refined by BFS layers")
        lam = fiedler_value(G, args.tol) if G.n >= 2 else None
        cert = certify(G, X, lambda2=lam, notes=notes)
    except UnbalancedSeparatorError as exc:
        raise CliError(f"unbalanced separator: {exc}", EXIT_PRECONDITION) from None
    except (PlacementError, NotATreeError, TriangulationError, GraphError) as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from None
    text = format_certificate(G, cert)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    errs = cert.soundness_errors()
    for e in errs:
        print(f"certificate check failed: {e}", file=sys.stderr)
    return EXIT_FAILED if errs else EXIT_OK


def cmd_check(args) -> int:
    try:
        rows = checks.run_checks(args.corpus, args.tol)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    failed = [r for r in rows if not r.passed]
    if not args.quiet:
        for r in rows:
            print(r.format())
    eq = checks.planar_equality_rows(rows)
    if eq:
        print(f"# planar<=4 equality rows: {', '.join(eq)}")
    print(f"# {len(rows)} rows, {len(failed)} failed")
    for r in failed:
        print(r.format(), file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_sweep(args) -> int:
    ns = range(args.n_min, args.n_max + 1, args.step)
    try:
        rows = checks.sweep(args.family, ns, args.tol, args.jobs)
    except FamilyError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    for r in rows:
        if r.closed_form is None:
            print(f"warning: {r.family} n={r.n} is outside the closed form's range; row kept without it", file=sys.stderr)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            checks.write_sweep_csv(rows, fh)
    else:
        checks.write_sweep_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_generate(args) -> int:
    G, _ = load_input(args.family)
    text = format_edge_list(G)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fiedlerkit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_tol(sp):
        sp.add_argument("--tol", type=float, default=None, help="eigensolver tolerance (default 1e-10, env FF_TOL)")
        return sp

    sp = with_tol(sub.add_parser("fiedler", help="print the Fiedler value"))
    sp.add_argument("input", help="edge-list file, triangulation file, or family spec like doublewheel:10")
    sp.set_defaults(func=cmd_fiedler)

    sp = with_tol(sub.add_parser("spectrum", help="print all Laplacian eigenvalues, ascending"))
    sp.add_argument("input")
    sp.set_defaults(func=cmd_spectrum)

    sp = with_tol(sub.add_parser("certify", help="emit a separator certificate"))
    sp.add_argument("input")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--x", help="separator vertices, e.g. 0,2")
    mode.add_argument("--auto-outerplanar", action="store_true", help="dual-tree separator of a triangulated polygon")
    mode.add_argument("--auto-tree", action="store_true", help="refined tree centroid")
    mode.add_argument("--auto", action="store_true", help="high-degree vertices plus BFS-layer refinement (default)")
    sp.add_argument("--high-degree", type=int, default=None, help="degree threshold for --auto")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_certify)

    sp = with_tol(sub.add_parser("check", help="run the inequality checks"))
    sp.add_argument("--corpus", default="all", help=f"'all' or comma list of: {', '.join(checks.CHECKS)}")
    sp.add_argument("-q", "--quiet", action="store_true", help="print only the summary and failures")
    sp.set_defaults(func=cmd_check)

    sp = with_tol(sub.add_parser("sweep", help="closed form vs numeric Fiedler value, as CSV"))
    sp.add_argument("family", help="doublewheel, quadrangulation, fan, or kh:<h>")
    sp.add_argument("--n-min", type=int, default=4)
    sp.add_argument("--n-max", type=int, default=200)
    sp.add_argument("--step", type=int, default=1)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("generate", help="write a family instance as an edge list")
    sp.add_argument("family")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "tol", "absent") is None:
            args.tol = _default_tol()
        return args.func(args)
    except CliError as exc:
        print(f"fiedlerkit: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
