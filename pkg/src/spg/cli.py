"""Command-line interface.

Subcommands:
  build     construct a strong power graph (DOT, JSON edge list, or CSV matrix)
  charpoly  exact characteristic polynomial, compared to its closed form
  spectrum  closed-form spectrum, Jacobi eigenvalues, and their comparison
  verify    run every applicable check over a range of cyclic orders

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 inapplicable input (disconnected graph).  The SPG_LOG environment variable
sets log verbosity (debug, info, warning, error).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from .exactalg import (
    IntPolynomial,
    PrimeOrTrivialN,
    UnsupportedN,
    adjacency_charpoly_formula,
    charpoly,
    distance_charpoly_formula,
)
from .graphs import (
    DisconnectedGraph,
    adjacency_matrix,
    distance_matrix,
    matrix_to_csv,
    strong_power_graph,
    to_dot,
)
from .groups import (
    CayleyTableError,
    CyclicGroup,
    DihedralGroup,
    DirectProductGroup,
    GroupSpec,
    load_cayley_table,
)
from .spectra import (
    PrimeOrder,
    adjacency_spectrum_closed,
    compare_spectra,
    distance_spectrum_closed,
    spectrum_document,
    symmetric_eigenvalues,
)
from .verify import verify_range

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INAPPLICABLE = 3

log = logging.getLogger("spg.cli")


class GroupSpecParseError(ValueError):
    """A --group string did not match the grammar."""


def parse_group_spec(text: str) -> GroupSpec:
    """Parse "cyclic:N" | "product:A,B[,C...]" | "dihedral:M" | "cayley:PATH"."""
    head, sep, tail = text.partition(":")
    if not sep or not tail:
        raise GroupSpecParseError(f"malformed group spec {text!r}")
    try:
        if head == "cyclic":
            return CyclicGroup(_positive_int(tail))
        if head == "product":
            return DirectProductGroup([_positive_int(part) for part in tail.split(",")])
        if head == "dihedral":
            return DihedralGroup(_positive_int(tail))
        if head == "cayley":
            try:
                with open(tail, "r", encoding="utf-8") as handle:
                    document = json.load(handle)
            except OSError as exc:
                raise GroupSpecParseError(f"cannot read Cayley table {tail!r}: {exc}")
            except json.JSONDecodeError as exc:
                raise GroupSpecParseError(f"invalid JSON in {tail!r}: {exc}")
            return load_cayley_table(document)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, GroupSpecParseError):
            raise
        raise GroupSpecParseError(f"bad group spec {text!r}: {exc}") from exc
    raise GroupSpecParseError(f"unknown group kind {head!r} in {text!r}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {value}")
    return value


def _poly_document(poly: IntPolynomial) -> list[str]:
    return poly.to_coeff_strings()


def cmd_build(args: argparse.Namespace) -> tuple[int, str]:
    group = parse_group_spec(args.group)
    graph = strong_power_graph(group)
    if args.format == "dot":
        labels = [group.label(v) for v in range(graph.n)]
        return EXIT_OK, to_dot(graph, labels)
    if args.format == "csv":
        return EXIT_OK, matrix_to_csv(adjacency_matrix(graph))
    document = {
        "group": args.group,
        "n": graph.n,
        "edges": [[u, v] for u, v in graph.edges()],
    }
    return EXIT_OK, json.dumps(document, indent=2, sort_keys=True) + "\n"


def _closed_form_poly(matrix_kind: str, n: int) -> Optional[IntPolynomial]:
    try:
        if matrix_kind == "distance":
            return distance_charpoly_formula(n)
        return adjacency_charpoly_formula(n)
    except (PrimeOrTrivialN, UnsupportedN):
        return None


def cmd_charpoly(args: argparse.Namespace) -> tuple[int, str]:
    group = parse_group_spec(args.group)
    graph = strong_power_graph(group)
    matrix = distance_matrix(graph) if args.matrix == "distance" else adjacency_matrix(graph)
    computed = charpoly(matrix)
    closed: Optional[IntPolynomial] = None
    if group.is_cyclic():
        closed = _closed_form_poly(args.matrix, group.order)
    document = {
        "group": args.group,
        "n": graph.n,
        "matrix": args.matrix,
        "charpoly": _poly_document(computed),
        "closed_form": _poly_document(closed) if closed is not None else None,
        "match": (computed == closed) if closed is not None else None,
    }
    return EXIT_OK, json.dumps(document, indent=2, sort_keys=True) + "\n"


def cmd_spectrum(args: argparse.Namespace) -> tuple[int, str]:
    group = parse_group_spec(args.group)
    graph = strong_power_graph(group)
    if args.matrix == "distance":
        matrix = distance_matrix(graph)
        closed = distance_spectrum_closed(group)
    else:
        matrix = adjacency_matrix(graph)
        closed = adjacency_spectrum_closed(group)
    numeric = symmetric_eigenvalues(matrix)
    comparison = compare_spectra(closed, numeric)
    document = spectrum_document(closed, graph.n, args.matrix)
    document["numeric_eigenvalues"] = numeric
    document["comparison"] = {
        "max_abs_deviation": comparison.max_abs_deviation,
        "multiplicity_match": comparison.multiplicity_match,
        "theta_in_range": comparison.theta_in_range,
        "within_tol": comparison.max_abs_deviation <= args.tol,
    }
    return EXIT_OK, json.dumps(document, indent=2, sort_keys=True) + "\n"


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise GroupSpecParseError(f"range must look like A..B, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError as exc:
        raise GroupSpecParseError(f"bad range {text!r}: {exc}") from exc


def cmd_verify(args: argparse.Namespace) -> tuple[int, str]:
    n_min, n_max = _parse_range(args.range)
    try:
        report = verify_range(n_min, n_max, tol=args.tol, workers=args.workers)
    except ValueError as exc:
        raise GroupSpecParseError(str(exc)) from exc
    code = EXIT_OK if not report.failures else EXIT_VERIFY_FAILED
    return code, report.to_json() + "\n"


def _configure_logging() -> None:
    level_name = os.environ.get("SPG_LOG", "warning").upper()
    level = getattr(logging, level_name, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spg", description="Strong power graph construction and verification."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="construct a strong power graph")
    build.add_argument("--group", required=True, help="cyclic:N | product:A,B | dihedral:M | cayley:PATH")
    build.add_argument("--format", choices=("dot", "json", "csv"), default="json")
    build.add_argument("--out", help="write the document to this path")
    build.set_defaults(handler=cmd_build)

    poly = sub.add_parser("charpoly", help="exact characteristic polynomial")
    poly.add_argument("--group", required=True)
    poly.add_argument("--matrix", choices=("adjacency", "distance"), default="adjacency")
    poly.add_argument("--out")
    poly.set_defaults(handler=cmd_charpoly)

    spectrum = sub.add_parser("spectrum", help="closed-form vs numeric spectrum")
    spectrum.add_argument("--group", required=True)
    spectrum.add_argument("--matrix", choices=("adjacency", "distance"), default="adjacency")
    spectrum.add_argument("--tol", type=float, default=1e-8)
    spectrum.add_argument("--out")
    spectrum.set_defaults(handler=cmd_spectrum)

    verify = sub.add_parser("verify", help="verify closed forms over a range of orders")
    verify.add_argument("--range", required=True, help="A..B with 2 <= A <= B")
    verify.add_argument("--tol", type=float, default=1e-8)
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--out")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    _configure_logging()
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, document = args.handler(args)
    except (GroupSpecParseError, CayleyTableError) as exc:
        print(f"spg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DisconnectedGraph, PrimeOrder, PrimeOrTrivialN, UnsupportedN) as exc:
        print(f"spg: inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document)
    return code


if __name__ == "__main__":
    sys.exit(main())
