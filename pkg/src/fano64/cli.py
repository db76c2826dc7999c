"""Command-line front end.

Four subcommands: `bundle` (rank-2 Chern calculus on a base surface),
`wps` (weighted projective space invariants), `toric` (fan validation,
polytope degree, cone singularities), and `reproduce` (the full case
ledger and classification).  All numeric output is exact; rationals
print as p/q, never as decimals.

Exit codes: 0 on success, 1 on usage or parse errors, 2 when a value
requested for verification does not match the computed one.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bundles import (
    RankTwoBundle,
    chi_rank2,
    degree_p1_bundle,
    p1_bundle_anticanonical,
    solve_c2_for_degree,
)
from .elimination import (
    ArithmeticContradiction,
    CaseRecord,
    GeometricArgument,
    Survives,
    classification_summary,
    eliminate_p1_bundles,
    filter_quadric_bundle_degrees,
    record_to_payload,
    surviving_constructions,
    sweep_twisted_bundles,
    verify_record,
)
from .ledger import genus_of_degree
from .surfaces import BaseSurface, P2, SurfaceClass
from .toric import (
    anticanonical_polytope,
    classify_index2_cone,
    cone_lattice_index,
    fan_from_json,
    gorenstein_support,
    polytope_degree,
    validate_fan,
)
from .wps import (
    Weights,
    wps_anticanonical_index,
    wps_degree,
    wps_edge_singularity,
    wps_is_gorenstein,
    wps_vertex_singularity,
)

_BASES = {
    "P2": P2,
    "F0": BaseSurface.hirzebruch(0),
    "F1": BaseSurface.hirzebruch(1),
    "F2": BaseSurface.hirzebruch(2),
    "F3": BaseSurface.hirzebruch(3),
    "F4": BaseSurface.hirzebruch(4),
}

_EXPECTED_SURVIVORS = {"cone over P1 x P1", "cone over F1"}


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; this front end uses 1."""

    def error(self, message: str):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _parse_c1(base: BaseSurface, text: str) -> SurfaceClass:
    parts = text.split(",")
    try:
        coeffs = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"c1 coefficients must be integers, got {text!r}")
    if base.is_plane:
        if len(coeffs) != 1:
            raise ValueError("c1 on P2 takes a single coefficient")
        return SurfaceClass(base, coeffs[0])
    if len(coeffs) != 2:
        raise ValueError(f"c1 on {base} takes two coefficients a,b")
    return SurfaceClass(base, coeffs[0], coeffs[1])


def _emit(doc: dict, machine: bool, lines: list[str]) -> None:
    if machine:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_bundle(args) -> int:
    base = _BASES[args.base]
    c1 = _parse_c1(base, args.c1)
    lines = [f"base: {base}", f"c1: {c1}"]
    doc: dict = {"base": str(base), "c1": str(c1)}
    if args.solve_degree is not None:
        c2, integral = solve_c2_for_degree(base, c1, args.solve_degree)
        flag = "INTEGRAL" if integral else "NON-INTEGRAL"
        lines.append(f"c2 for degree {args.solve_degree}: {_fmt(c2)} ({flag})")
        doc.update(
            {
                "solve_degree": args.solve_degree,
                "c2": _fmt(c2),
                "integral": integral,
            }
        )
        if integral:
            data = RankTwoBundle(base, c1, int(c2))
            lines.append(f"-K: {p1_bundle_anticanonical(data)}")
            lines.append(f"chi: {_fmt(chi_rank2(data))}")
            doc["minus_k"] = str(p1_bundle_anticanonical(data))
            doc["chi"] = _fmt(chi_rank2(data))
    else:
        data = RankTwoBundle(base, c1, args.c2)
        lines.append(f"-K: {p1_bundle_anticanonical(data)}")
        lines.append(f"degree: {degree_p1_bundle(data)}")
        lines.append(f"chi: {_fmt(chi_rank2(data))}")
        doc.update(
            {
                "c2": args.c2,
                "minus_k": str(p1_bundle_anticanonical(data)),
                "degree": degree_p1_bundle(data),
                "chi": _fmt(chi_rank2(data)),
            }
        )
    _emit(doc, args.machine, lines)
    return 0


def _cmd_wps(args) -> int:
    w = Weights(*args.weights)
    degree = wps_degree(w)
    index = wps_anticanonical_index(w)
    gorenstein = wps_is_gorenstein(w)
    lines = [
        f"space: {w}",
        f"degree: {_fmt(degree)}",
        f"anticanonical index: {index}",
        f"gorenstein: {_fmt(gorenstein)}",
    ]
    doc: dict = {
        "weights": list(w.as_tuple()),
        "degree": _fmt(degree),
        "anticanonical_index": index,
        "gorenstein": gorenstein,
    }
    if degree.denominator == 1 and int(degree) % 2 == 0 and degree > 0:
        rec = genus_of_degree(int(degree))
        lines.append(f"genus: {rec.genus}")
        lines.append(f"ambient dimension: {rec.ambient_dim}")
        doc["genus"] = rec.genus
        doc["ambient_dim"] = rec.ambient_dim
    vertices = []
    for i in range(4):
        t = wps_vertex_singularity(w, i)
        lines.append(f"vertex {i} (weight {w.as_tuple()[i]}): {t}")
        vertices.append(str(t))
    doc["vertex_singularities"] = vertices
    edges = []
    for i in range(4):
        for j in range(i + 1, 4):
            t = wps_edge_singularity(w, i, j)
            if not t.is_smooth:
                lines.append(f"edge {i}-{j}: {t}")
                edges.append({"edge": [i, j], "type": str(t)})
    doc["edge_singularities"] = edges
    _emit(doc, args.machine, lines)
    return 0


def _cmd_toric(args) -> int:
    if args.expect is not None and args.action != "degree":
        raise ValueError("--expect only applies to the degree action")
    with open(args.fan_file, encoding="utf-8") as fh:
        fan = fan_from_json(fh.read())
    if args.action == "validate":
        report = validate_fan(fan)
        findings = report.findings()
        lines = [f"rays: {len(fan.rays)}", f"maximal cones: {len(fan.max_cones)}"]
        if findings:
            lines += [f"finding: {f}" for f in findings]
        else:
            lines.append("clean")
        doc = {
            "rays": len(fan.rays),
            "max_cones": len(fan.max_cones),
            "clean": report.is_clean,
            "findings": list(findings),
        }
        _emit(doc, args.machine, lines)
        return 0
    if args.action == "degree":
        polytope = anticanonical_polytope(fan)
        degree = polytope_degree(polytope)
        lines = [f"degree: {_fmt(degree)}"]
        doc = {"degree": _fmt(degree), "vertices": len(polytope.vertices)}
        if args.expect is not None:
            matches = degree == args.expect
            lines.append(f"expected: {args.expect} ({'match' if matches else 'MISMATCH'})")
            doc["expected"] = args.expect
            doc["match"] = matches
            _emit(doc, args.machine, lines)
            return 0 if matches else 2
        _emit(doc, args.machine, lines)
        return 0
    # singularities
    lines = []
    cones_doc = []
    for ci, cone in enumerate(fan.max_cones):
        rays = fan.cone_rays(ci)
        entry: dict = {"cone": list(cone)}
        prefix = f"cone {ci} {list(cone)}:"
        if len(rays) != 3:
            lines.append(f"{prefix} non-simplicial, index not computed")
            entry["index"] = None
        else:
            index = cone_lattice_index(rays)
            entry["index"] = index
            if index <= 2:
                sing = classify_index2_cone(rays)
                entry["type"] = sing.kind.value
                witness = ""
                if sing.witness is not None:
                    entry["witness"] = list(sing.witness.as_tuple())
                    witness = f", witness {sing.witness}"
                lines.append(f"{prefix} index {index}, {sing.kind.value}{witness}")
            else:
                lines.append(f"{prefix} index {index}, not classified")
        support = gorenstein_support(rays)
        entry["gorenstein_support"] = (
            None if support is None else list(support.as_tuple())
        )
        if support is None:
            lines.append(f"{prefix} no integral Gorenstein support")
        else:
            lines.append(f"{prefix} Gorenstein support {support}")
        cones_doc.append(entry)
    _emit({"cones": cones_doc}, args.machine, lines)
    return 0


_SWEEP_BASE_NAMES = ("P2", "F0", "F2", "F3", "F4")


def _reproduce_parts(part: str | None) -> dict:
    parts: dict = {}
    if part in (None, "p1-bundles"):
        parts["p1-bundles"] = eliminate_p1_bundles(64)
    if part in (None, "quadric-filter"):
        parts["quadric-filter"] = filter_quadric_bundle_degrees()
    if part in (None, "twisted-sweep"):
        parts["twisted-sweep"] = {
            name: sweep_twisted_bundles(_BASES[name]) for name in _SWEEP_BASE_NAMES
        }
    if part in (None, "classification"):
        parts["classification"] = classification_summary()
    return parts


def _iter_records(parts: dict):
    for name, content in parts.items():
        if isinstance(content, dict):
            for sub, records in content.items():
                for r in records:
                    yield f"{name}/{sub}", r
        else:
            for r in content:
                yield name, r


def _check_reproduction(parts: dict) -> list[str]:
    """All cross-cutting consistency checks; returns failure messages."""
    failures = []
    for where, record in _iter_records(parts):
        if not verify_record(record):
            failures.append(
                f"{where}: contradiction witness failed to verify in {record.context}"
            )
    if "p1-bundles" in parts:
        survivors = surviving_constructions(parts["p1-bundles"])
        if survivors != _EXPECTED_SURVIVORS:
            failures.append(
                f"p1-bundles: survivors {sorted(survivors)} != {sorted(_EXPECTED_SURVIVORS)}"
            )
    if "twisted-sweep" in parts:
        for name, records in parts["twisted-sweep"].items():
            for r in records:
                keys = dict(r.computed)
                if "c2_prime" in keys:
                    if keys["c2_prime"] >= 0:
                        failures.append(f"{r.context}: c2' not negative")
                    if "chi_prime" in keys and keys["chi_prime"] <= 0:
                        failures.append(f"{r.context}: chi' not positive")
    if "classification" in parts:
        records = parts["classification"]
        if len(records) != 7:
            failures.append(f"classification: {len(records)} records, expected 7")
        for r in records:
            if r.value("degree") != 64:
                failures.append(f"{r.context}: degree {r.value('degree')} != 64")
            if not isinstance(r.verdict, Survives):
                failures.append(f"{r.context}: unexpected verdict")
    return failures


def _describe_verdict(record: CaseRecord) -> str:
    v = record.verdict
    if isinstance(v, ArithmeticContradiction):
        return f"contradiction: {v.describe()}, got {_fmt(record.value(v.quantity))}"
    if isinstance(v, Survives):
        return f"survives: {v.construction}"
    assert isinstance(v, GeometricArgument)
    return f"geometric argument: {v.argument}"


def _cmd_reproduce(args) -> int:
    parts = _reproduce_parts(args.part)
    failures = _check_reproduction(parts)
    if args.machine:
        payload: dict = {"parts": {}, "failures": failures}
        for name, content in parts.items():
            if isinstance(content, dict):
                payload["parts"][name] = {
                    sub: [record_to_payload(r) for r in records]
                    for sub, records in content.items()
                }
            else:
                payload["parts"][name] = [record_to_payload(r) for r in content]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for name, record in _iter_records(parts):
            print(f"[{name}] {record.context}")
            for key, value in record.computed:
                print(f"    {key} = {_fmt(value)}")
            print(f"    {_describe_verdict(record)}")
        counts = {name: 0 for name in parts}
        for name, _ in _iter_records(parts):
            counts[name.split("/")[0]] += 1
        summary = ", ".join(f"{name}: {n}" for name, n in counts.items())
        print(f"records: {summary}")
        if "classification" in parts:
            print("classification:")
            for r in parts["classification"]:
                if isinstance(r.verdict, Survives):
                    print(f"    degree {r.value('degree')}: {r.verdict.construction}")
        for failure in failures:
            print(f"FAILED: {failure}")
        if not failures:
            print("all checks passed")
    return 2 if failures else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="fano64", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    bundle = sub.add_parser("bundle", help="rank-2 bundle calculus on a base surface")
    bundle.add_argument("--base", required=True, choices=sorted(_BASES))
    bundle.add_argument(
        "--c1", required=True, help="c1 coefficients: a (P2) or a,b (F_n)"
    )
    group = bundle.add_mutually_exclusive_group(required=True)
    group.add_argument("--c2", type=int, help="second Chern number")
    group.add_argument(
        "--solve-degree",
        type=int,
        metavar="N",
        help="solve for the c2 giving anticanonical degree N",
    )
    bundle.add_argument("--machine", action="store_true", help="JSON output")
    bundle.set_defaults(func=_cmd_bundle)

    wps = sub.add_parser("wps", help="weighted projective space invariants")
    wps.add_argument("weights", type=int, nargs=4, metavar="W")
    wps.add_argument("--machine", action="store_true", help="JSON output")
    wps.set_defaults(func=_cmd_wps)

    toric = sub.add_parser("toric", help="fan validation and invariants")
    toric.add_argument("fan_file", help="fan file (JSON rays/cones)")
    toric.add_argument("action", choices=("validate", "degree", "singularities"))
    toric.add_argument(
        "--expect",
        type=int,
        metavar="N",
        help="verify the computed degree equals N (exit 2 on mismatch)",
    )
    toric.add_argument("--machine", action="store_true", help="JSON output")
    toric.set_defaults(func=_cmd_toric)

    reproduce = sub.add_parser(
        "reproduce", help="run the full case ledger and classification"
    )
    reproduce.add_argument(
        "--part",
        choices=("p1-bundles", "quadric-filter", "twisted-sweep", "classification"),
        help="restrict to one part of the report",
    )
    reproduce.add_argument("--machine", action="store_true", help="JSON output")
    reproduce.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
