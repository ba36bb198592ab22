"""Command-line front end.

Subcommands mirror the pipeline stages: ``faces`` and ``volumes`` describe
the face poset, ``euler`` shows the resolved obstruction table with
provenance, ``classes`` prints a cycle and its degree sequence, ``polar`` and
``dual-degree`` print the projective invariants, and ``check`` runs every
internal consistency check.  JSON output is the stable machine contract;
table output is for reading.  Exit codes: 0 ok, 2 input error, 3 math or
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Any

from . import __version__
from .configuration import normalize_dimension, read_input_file, validate
from .cycles import (
    CycleVector,
    csm_cycle,
    degree_sequence,
    euler_characteristic,
    indicator_coefficients,
    mather_cycle,
    mather_cycle_recursive,
    obstruction_matrix,
)
from .errors import ConsistencyError, InputError, ToricMatherError
from .euler import check_coherence, parse_euler_block, resolve_euler
from .polar import dual_variety_degree, polar_degrees, polar_from_mather_degrees
from .polytope import build_face_poset

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MATH = 3


def _align(rows: list[list[str]]) -> list[str]:
    """Pad cells so columns line up; rows may have trailing extra cells."""
    if not rows:
        return []
    widths: list[int] = []
    for row in rows:
        for k, cell in enumerate(row):
            if k >= len(widths):
                widths.append(len(cell))
            else:
                widths[k] = max(widths[k], len(cell))
    return [
        "  ".join(cell.ljust(widths[k]) for k, cell in enumerate(row)).rstrip()
        for row in rows
    ]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricmather",
        description=(
            "Exact characteristic-class invariants of projective toric"
            " varieties given by lattice point configurations."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="input JSON file")
        p.add_argument(
            "--format", choices=("json", "table"), default="table",
            help="output format (default: table)",
        )
        p.add_argument(
            "--normalize", action="store_true",
            help="re-express the points in their generated affine lattice first",
        )
        p.add_argument(
            "--euler-strategy", choices=("table", "smooth", "curve"),
            default=None, help="override the euler strategy of the input file",
        )
        p.add_argument("--output", default=None, help="write output to a file")

    for name, help_text in (
        ("faces", "list the face poset"),
        ("volumes", "list the face poset with normalized lattice volumes"),
        ("euler", "print the resolved Euler obstruction table with provenance"),
        ("classes", "print a characteristic cycle and its degree sequence"),
        ("polar", "print the polar degrees"),
        ("dual-degree", "print the dual-variety degree formula evaluation"),
        ("check", "run all coherence and cross-path consistency checks"),
    ):
        p = sub.add_parser(name, help=help_text)
        add_common(p)
        if name == "classes":
            p.add_argument(
                "--kind", choices=("cm", "csm"), default="cm",
                help="which cycle to print (default: cm)",
            )
    return parser


def _load(args) -> tuple:
    document = read_input_file(args.input)
    config = document.configuration
    if args.normalize:
        config = normalize_dimension(config)
    validated = validate(config)
    poset = build_face_poset(validated)
    spec = parse_euler_block(document.euler_block)
    return validated, poset, spec


def _euler_data(poset, spec, args, capture_warnings: list[str] | None = None):
    if capture_warnings is None:
        # let assumption warnings reach stderr as usual
        return resolve_euler(poset, spec, strategy_override=args.euler_strategy)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        data = resolve_euler(poset, spec, strategy_override=args.euler_strategy)
    capture_warnings.extend(str(w.message) for w in caught)
    return data


def _face_rows(poset, with_volume: bool) -> list[dict[str, Any]]:
    rows = []
    for face in poset.faces:
        row: dict[str, Any] = {
            "id": face.id,
            "dim": face.dim,
            "members": list(face.indices),
            "is_top": face.is_top,
        }
        if with_volume:
            row["volume"] = poset.volume(face)
        rows.append(row)
    return rows


def _render_faces(validated, poset, with_volume: bool, as_json: bool) -> Any:
    if as_json:
        return {
            "name": validated.name,
            "ambient_dimension": poset.ambient_dim,
            "point_count": validated.count,
            "faces": _face_rows(poset, with_volume),
        }
    lines = [
        f"configuration: {validated.name or '(unnamed)'}"
        f" ({validated.count} points, ambient dimension {poset.ambient_dim})"
    ]
    rows = [["id", "dim", "members"] + (["volume"] if with_volume else [])]
    for face in poset.faces:
        members = " ".join(str(poset.config.points[i]) for i in face.indices)
        cells = [face.id, str(face.dim), members]
        if with_volume:
            cells.append(str(poset.volume(face)))
        if face.is_top:
            cells.append("[P]")
        rows.append(cells)
    lines.extend(_align(rows))
    return "\n".join(lines)


def _cmd_faces(args) -> tuple[Any, int]:
    validated, poset, _ = _load(args)
    return _render_faces(validated, poset, False, args.format == "json"), EXIT_OK


def _cmd_volumes(args) -> tuple[Any, int]:
    validated, poset, _ = _load(args)
    return _render_faces(validated, poset, True, args.format == "json"), EXIT_OK


def _cmd_euler(args) -> tuple[Any, int]:
    _, poset, spec = _load(args)
    captured: list[str] = []
    data = _euler_data(poset, spec, args, captured)
    tables = data.as_tables()
    provenance: dict[str, dict[str, str]] = {}
    for (cid, fid), src in sorted(data.provenance.items()):
        provenance.setdefault(cid, {})[fid] = src
    if args.format == "json":
        return {
            "strategy": "table",
            "tables": tables,
            "provenance": provenance,
            "warnings": captured,
        }, EXIT_OK
    rows = [["closure", "face", "value", "source"]]
    for cid, row in tables.items():
        for fid, value in row.items():
            rows.append([cid, fid, str(value), provenance[cid][fid]])
    lines = _align(rows)
    for message in captured:
        lines.append(f"warning: {message}")
    return "\n".join(lines), EXIT_OK


def _cmd_classes(args) -> tuple[Any, int]:
    _, poset, spec = _load(args)
    if args.kind == "csm":
        cycle = csm_cycle(poset)
    else:
        data = _euler_data(poset, spec, args)
        cycle = mather_cycle(data, poset)
    degrees = degree_sequence(cycle, poset)
    if args.format == "json":
        return {
            "kind": args.kind,
            "coefficients": {f.id: cycle[f.id] for f in poset.faces},
            "degrees": list(degrees),
        }, EXIT_OK
    rows = [["face", "dim", "coefficient"]]
    for face in poset.faces:
        rows.append([face.id, str(face.dim), str(cycle[face.id])])
    lines = [f"cycle: {args.kind}"] + _align(rows)
    lines.append("degrees by codimension: " + " ".join(str(d) for d in degrees))
    return "\n".join(lines), EXIT_OK


def _cmd_polar(args) -> tuple[Any, int]:
    _, poset, spec = _load(args)
    data = _euler_data(poset, spec, args)
    mu = polar_degrees(poset, data)
    dual = dual_variety_degree(poset, data)
    if args.format == "json":
        return {
            "polar_degrees": list(mu),
            "dual": {"degree": dual.degree, "is_hypersurface": dual.is_hypersurface},
        }, EXIT_OK
    return "polar degrees: " + " ".join(str(m) for m in mu), EXIT_OK


def _cmd_dual_degree(args) -> tuple[Any, int]:
    _, poset, spec = _load(args)
    data = _euler_data(poset, spec, args)
    dual = dual_variety_degree(poset, data)
    if args.format == "json":
        return {
            "dual": {"degree": dual.degree, "is_hypersurface": dual.is_hypersurface}
        }, EXIT_OK
    lines = [f"dual degree: {dual.degree}"]
    if not dual.is_hypersurface:
        lines.append(
            "hypersurface: no (dual variety is defective; the value above is"
            " the formula evaluation, not a dual degree)"
        )
    else:
        lines.append("hypersurface: yes")
    return "\n".join(lines), EXIT_OK


def _cmd_check(args) -> tuple[Any, int]:
    _, poset, spec = _load(args)
    data = _euler_data(poset, spec, args)
    n = poset.ambient_dim
    results: list[tuple[str, bool, str]] = []

    def record(name: str, passed: bool, detail: str = "") -> None:
        results.append((name, passed, detail))

    boundary = sum(
        (-1) ** f.dim for f in poset.faces if not f.is_top
    )
    expected = 1 - (-1) ** n
    record(
        "face-poset-euler-relation",
        boundary == expected,
        f"boundary alternating sum {boundary}, expected {expected}",
    )

    closed = True
    members = [frozenset(f.indices) for f in poset.faces]
    member_set = set(members)
    for a in members:
        for b in members:
            meet = a & b
            if meet and meet not in member_set:
                closed = False
    record("face-intersection-closed", closed)

    violations = check_coherence(data, poset)
    record(
        "euler-coherence",
        not violations,
        "; ".join(str(v) for v in violations),
    )

    matrix = obstruction_matrix(data, poset)
    record("obstruction-matrix-unitriangular", matrix.is_unitriangular())

    coeffs = indicator_coefficients(data, poset)
    full = dict(coeffs)
    full[poset.top.id] = 1
    transformed = matrix.apply(CycleVector(full))
    record("indicator-solve-identity", transformed.is_constant_one())

    cm = mather_cycle(data, poset)
    cm_rec = mather_cycle_recursive(data, poset)
    record(
        "mather-cycle-paths-agree",
        cm.coefficients == cm_rec.coefficients,
        f"direct {cm.coefficients} vs recursive {cm_rec.coefficients}",
    )

    mu_direct = polar_degrees(poset, data)
    mu_via_transform = polar_from_mather_degrees(degree_sequence(cm, poset))
    record(
        "polar-degree-paths-agree",
        mu_direct == mu_via_transform,
        f"direct {mu_direct} vs transform {mu_via_transform}",
    )

    dual = dual_variety_degree(poset, data)
    record(
        "dual-degree-equals-last-polar",
        dual.degree == mu_direct[n],
        f"face sum {dual.degree} vs mu_n {mu_direct[n]}",
    )

    record(
        "csm-degree-is-euler-characteristic",
        degree_sequence(csm_cycle(poset), poset)[n] == euler_characteristic(poset),
    )

    all_passed = all(p for _, p, _ in results)
    if args.format == "json":
        return {
            "checks": [
                {"name": name, "passed": passed, "detail": detail}
                for name, passed, detail in results
            ],
            "passed": all_passed,
        }, EXIT_OK if all_passed else EXIT_MATH
    lines = []
    for name, passed, detail in results:
        if passed:
            lines.append(f"ok   {name}")
        else:
            lines.append(f"FAIL {name}: {detail}")
    lines.append("all checks passed" if all_passed else "CHECKS FAILED")
    return "\n".join(lines), EXIT_OK if all_passed else EXIT_MATH


_COMMANDS = {
    "faces": _cmd_faces,
    "volumes": _cmd_volumes,
    "euler": _cmd_euler,
    "classes": _cmd_classes,
    "polar": _cmd_polar,
    "dual-degree": _cmd_dual_degree,
    "check": _cmd_check,
}


def _emit(payload: Any, args) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error ({args.command}): {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"consistency failure ({args.command}): {exc}", file=sys.stderr)
        return EXIT_MATH
    except ToricMatherError as exc:
        print(f"error ({args.command}): {exc}", file=sys.stderr)
        return EXIT_MATH
    _emit(payload, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
