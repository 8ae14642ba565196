"""Command-line front end.

    arrangetop SUBCOMMAND (PATH | --builtin NAME) [--format text|json] [flags]

Arrangement files hold a `conductor N` line followed by one form per line,
written as three scalar literals separated by commas; `#` starts a comment.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .arrangement import (
    Arrangement,
    LinearForm,
    build_arrangement,
    builtin,
    euler_complement,
    intersection_lattice,
    is_central,
)
from .braid import braid_monodromy, decone, total_exponent_sum
from .cover import (
    DeckCharacter,
    boundary_loop,
    global_fiber_connectivity,
    local_fiber_connectivity,
)
from .cyclo import CycNumber, parse_scalar, render
from .errors import ArrangetopError, DuplicateLine, ParseError, ValidationError
from .formality import candidate_pencils, formality_report
from .milnorfiber import cover_b1, presentation_for, spectrum_from_presentation
from .pencil import base_locus, curve_mhs, lift_pencil, milnor_algebra, pencil_from_net, pullback_E
from .resonance import NetPartition, build_os, resonance_components

SUBCOMMANDS = ("lattice", "resonance", "pencil", "cover", "braid", "spectrum", "obstruct", "report")


# -- input ----------------------------------------------------------------------


def parse_arrangement_text(text: str, label: str | None = None) -> Arrangement:
    conductor = None
    forms = []
    where = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        stripped = body.strip()
        if stripped.split()[0] == "conductor":
            if conductor is not None or forms:
                raise ParseError("the conductor must be declared once, before the forms", lineno, 1)
            parts = stripped.split()
            if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ParseError("expected 'conductor N' with a positive integer N", lineno, body.index(stripped) + 1)
            conductor = int(parts[1])
            continue
        if conductor is None:
            conductor = 1
        pieces = body.split(",")
        if len(pieces) != 3:
            raise ParseError(f"expected three comma-separated coefficients, found {len(pieces)}", lineno, 1)
        coeffs = []
        col = 1
        for piece in pieces:
            coeffs.append(parse_scalar(piece, conductor, lineno, col))
            col += len(piece) + 1
        forms.append(LinearForm(*coeffs))
        where.append(lineno)
    if not forms:
        raise ParseError("no linear forms in input", max(1, len(text.splitlines())), 1)
    try:
        return build_arrangement(forms, label)
    except DuplicateLine as exc:
        raise DuplicateLine(where[exc.i - 1], where[exc.j - 1]) from None


def parse_input(source: str | None = None, builtin_name: str | None = None) -> Arrangement:
    if (source is None) == (builtin_name is None):
        raise ValidationError("give exactly one of an input file or --builtin NAME")
    if builtin_name is not None:
        return builtin(builtin_name)
    path = Path(source)
    if not path.is_file():
        raise ValidationError(f"no such file: {source}")
    return parse_arrangement_text(path.read_text(encoding="utf-8"), path.stem)


def emit_input(A: Arrangement) -> str:
    lines = [f"conductor {A.conductor}"]
    for form in A.lines:
        lines.append(", ".join(form.literals(A.conductor)))
    return "\n".join(lines) + "\n"


# -- serialization helpers --------------------------------------------------------


def lit(a: CycNumber, conductor: int | None = None) -> str:
    return render(a, conductor)


def point_lits(p, conductor: int) -> list[str]:
    return [lit(c, conductor) for c in p]


def lattice_doc(A: Arrangement) -> dict:
    if A.d == 1:
        return {"d": 1, "conductor": A.conductor, "points": [], "multiplicity_counts": {"2": 0},
                "euler_characteristic": euler_complement(A), "central": True}
    L = intersection_lattice(A)
    counts = L.multiplicity_counts()
    top = max([2, *counts])
    return {
        "d": A.d,
        "conductor": A.conductor,
        "points": [
            {"index": i + 1, "point": point_lits(p.point, A.conductor), "lines": list(p.incident),
             "multiplicity": p.multiplicity}
            for i, p in enumerate(L.points)
        ],
        "multiplicity_counts": {str(m): counts.get(m, 0) for m in range(2, top + 1)},
        "euler_characteristic": euler_complement(A, L),
        "central": is_central(A, L),
    }


def resonance_doc(A: Arrangement) -> dict:
    os_ = build_os(A)
    comps = resonance_components(A, os_) if A.d > 1 else []
    return {
        "b1": os_.b1,
        "b2": os_.b2,
        "components": [
            {
                "kind": c.kind,
                "support": list(c.support),
                "dimension": c.dimension,
                "blocks": [list(b) for b in c.net.blocks] if c.net else None,
                "basis": [[lit(x, A.conductor) for x in v] for v in c.basis],
            }
            for c in comps
        ],
    }


def pencil_doc(A: Arrangement, blocks, exponents=None) -> dict:
    P = pencil_from_net(A, NetPartition(tuple(tuple(b) for b in blocks)), exponents)
    n = A.conductor
    report = base_locus(P)
    doc = {
        "blocks": [list(b) for b in P.blocks.blocks],
        "exponents": list(P.exponents),
        "fibers": [str(q) for q in P.Q],
        "coordinates": [[lit(a, n), lit(b, n)] for a, b in P.coords],
        "punctures": [[lit(a, n), lit(b, n)] for a, b in P.punctures()],
        "base_points": [
            {"point": point_lits(bp.point, n), "multiplicities": list(bp.multiplicities)} for bp in report.points
        ],
        "simple_base_point": report.simple_point_exists,
    }
    lift = lift_pencil(P, report)
    alg = milnor_algebra(lift.g)
    curve = curve_mhs(lift)
    E = pullback_E(curve, lift)
    doc["lift"] = {"g": str(lift.g), "equation": lift.equation(), "certified": lift.certified}
    doc["milnor_algebra"] = {"ideal": [str(g) for g in alg.generators], "graded_dims": list(alg.graded_dims)}
    doc["curve"] = {"k": curve.k, "chi": curve.chi, "genus": curve.genus, "h11": curve.h11,
                    "h10": curve.h10, "h01": curve.h01, "extrapolated_rule": curve.extrapolated}
    doc["E"] = list(E.dims)
    return doc


def braid_doc(A: Arrangement, infinity: int) -> dict:
    aa = decone(A, infinity)
    md = braid_monodromy(aa)
    n = A.conductor
    return {
        "infinity": infinity,
        "strands": aa.n,
        "lines": list(aa.original_index),
        "parallel_classes": [[aa.original_index[i - 1] for i in c] for c in aa.parallel_classes],
        "basepoint": lit(md.basepoint),
        "direction": lit(md.direction),
        "strand_order": [aa.original_index[i - 1] for i in md.strand_order],
        "events": [
            {
                "x": lit(ev.x, n),
                "multiplicity": ev.multiplicity,
                "lines": [aa.original_index[i - 1] for i in ev.lines],
                "word": list(ev.braid.letters),
                "exponent_sum": ev.braid.exponent_sum(),
            }
            for ev in md.events
        ],
        "total_exponent_sum": total_exponent_sum(md),
    }


def spectrum_doc(A: Arrangement, infinity: int, crosscheck: bool = False) -> dict:
    p = presentation_for(A, infinity)
    s = spectrum_from_presentation(p, A.d)
    doc = {
        "d": s.d,
        "dims": {str(e): v for e, v in s.dims.items()},
        "b1F": s.b1F,
        "monodromy_order": s.monodromy_order,
        "presentation": {"generators": p.n, "relators": p.s},
    }
    if crosscheck:
        b1 = cover_b1(p, A.d)
        doc["crosscheck"] = {"cover_b1": b1, "agrees": b1 == s.b1F}
    return doc, s


def obstruction_doc(report) -> dict:
    doc = {
        "verdict": report.verdict,
        "witness": report.witness,
        "conditions": report.conditions,
        "assumptions": [{"rule": r, "citation": c} for r, c in report.assumptions],
        "notes": list(report.notes),
        "E": list(report.E.dims) if report.E else None,
        "pencil": [list(b) for b in report.E.source.blocks.blocks] if report.E and report.E.source else None,
    }
    fm = report.fiber
    if fm is not None:
        doc["fiber"] = {"h11F": fm.h11F, "w1F": fm.w1F, "w1_h10": fm.w1_h10}
    return doc


# -- text rendering ---------------------------------------------------------------


def to_text(value, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            v = value[key]
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{key}:")
                lines.append(to_text(v, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_inline(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, dict):
                lines.append(f"{pad}-")
                lines.append(to_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(value)}")
    return "\n".join(line for line in lines if line)


def _inline(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(v[k])}" for k in sorted(v)) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


# -- commands ---------------------------------------------------------------------


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"--{what}: invalid JSON ({exc.msg})") from None


def _blocks_arg(text: str, what: str):
    blocks = _json_arg(text, what)
    if not isinstance(blocks, list) or not all(
        isinstance(b, list) and all(isinstance(i, int) for i in b) for b in blocks
    ):
        raise ValidationError(f"--{what} must be a JSON list of lists of line indices")
    return blocks


def run_command(args) -> tuple[dict, str | None]:
    """Return the JSON document and, optionally, a pre-rendered text form."""
    A = parse_input(args.input, args.builtin)
    cmd = args.command
    if cmd == "lattice":
        doc = lattice_doc(A)
        if args.emit_input:
            return doc, emit_input(A)
        return doc, None
    if cmd == "resonance":
        return resonance_doc(A), None
    if cmd == "pencil":
        exponents = None
        if args.exponents:
            raw = _json_arg(args.exponents, "exponents")
            if not isinstance(raw, dict):
                raise ValidationError("--exponents must be a JSON object mapping line index to exponent")
            exponents = {int(k): int(v) for k, v in raw.items()}
        if args.blocks:
            return pencil_doc(A, _blocks_arg(args.blocks, "blocks"), exponents), None
        pencils = [pencil_doc(A, c.pencil.blocks.blocks) for c in candidate_pencils(A)]
        return {"pencils": pencils}, None
    if cmd == "cover":
        if (args.point is None) == (args.pencil is None):
            raise ValidationError("cover needs exactly one of --point i or --pencil JSON")
        if args.point is not None:
            L = intersection_lattice(A) if A.d > 1 else None
            if L is None or not 1 <= args.point <= len(L.points):
                raise ValidationError(f"no lattice point {args.point}")
            p = L.points[args.point - 1]
            verdict = local_fiber_connectivity(A, p)
            R = DeckCharacter(A.d)
            return {
                "point": args.point,
                "lines": list(p.incident),
                "R_boundary_loop": R(boundary_loop(A, p)),
                "components": verdict.components,
                "rationale": verdict.rationale,
            }, None
        P = pencil_from_net(A, NetPartition(tuple(tuple(b) for b in _blocks_arg(args.pencil, "pencil"))))
        verdict = global_fiber_connectivity(A, P)
        return {"pencil": [list(b) for b in P.blocks.blocks], "components": verdict.components,
                "rationale": verdict.rationale}, None
    if cmd == "braid":
        return braid_doc(A, args.infinity), None
    if cmd == "spectrum":
        doc, _ = spectrum_doc(A, args.infinity, args.crosscheck)
        return doc, None
    if cmd == "obstruct":
        _, s = spectrum_doc(A, args.infinity)
        return obstruction_doc(formality_report(A, s)), None
    if cmd == "report":
        spec, s = spectrum_doc(A, args.infinity)
        rep = formality_report(A, s)
        doc = {
            "lattice": lattice_doc(A),
            "resonance": resonance_doc(A),
            "pencils": [
                {"blocks": [list(b) for b in c.pencil.blocks.blocks], "lift": c.lift.equation(),
                 "E": list(c.E.dims), "chi": c.curve.chi, "genus": c.curve.genus}
                for c in rep.candidates
            ],
            "spectrum": spec,
            "fiber": {"h11F": rep.fiber.h11F, "w1F": rep.fiber.w1F, "w1_h10": rep.fiber.w1_h10},
            "verdict": obstruction_doc(rep),
        }
        return doc, report_text(A, doc)
    raise ValidationError(f"unknown subcommand {cmd}")  # pragma: no cover


def report_text(A: Arrangement, doc: dict) -> str:
    lat = doc["lattice"]
    spec = doc["spectrum"]
    verdict = doc["verdict"]
    counts = ", ".join(f"{v} of multiplicity {k}" for k, v in lat["multiplicity_counts"].items())
    dims = ", ".join(f"zeta^{e}: {v}" for e, v in spec["dims"].items() if v)
    lines = [
        f"arrangement: {A.label or 'input'} ({A.d} lines, conductor {A.conductor})",
        f"lattice: {counts}; chi(M) = {lat['euler_characteristic']}",
        f"resonance: b1 = {doc['resonance']['b1']}, {len(doc['resonance']['components'])} components",
        f"pencils: {len(doc['pencils'])} certified lift(s)",
    ]
    for p in doc["pencils"]:
        lines.append(f"  blocks {p['blocks']}: {p['lift']}, E = {tuple(p['E'])}, chi = {p['chi']}")
    lines.append(f"spectrum: {dims or 'zero'}; b1(F) = {spec['b1F']}")
    fib = doc["fiber"]
    lines.append(f"fiber: h11 = {fib['h11F']}, dim W1 = {fib['w1F']}, dim W1^(1,0) = {fib['w1_h10']}")
    if verdict["witness"].get("inequality"):
        lines.append(f"witness: dim W1^(1,0) vs dim E^(1,0): {verdict['witness']['inequality']}")
    for note in verdict["notes"]:
        lines.append(f"note: {note}")
    lines.append(f"verdict: {verdict['verdict']}")
    return "\n".join(lines)


# -- entry point -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arrangetop", description="Topology of line arrangements and their Milnor fibers.")
    parser.add_argument("--version", action="version", version=f"arrangetop {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", help="arrangement file")
        p.add_argument("--builtin", metavar="NAME", help="ceva3, triangle, line, central(k), generic(k)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if name == "lattice":
            p.add_argument("--emit-input", action="store_true", help="print the arrangement in file syntax")
        if name == "pencil":
            p.add_argument("--blocks", help="JSON list of blocks, e.g. [[1,2,3],[7,8,9],[4,5,6]]")
            p.add_argument("--exponents", help='JSON object of line exponents, e.g. {"1": 2}')
        if name == "cover":
            p.add_argument("--point", type=int, help="1-based index of a lattice point")
            p.add_argument("--pencil", help="JSON list of blocks")
        if name in ("braid", "spectrum", "obstruct", "report"):
            p.add_argument("--infinity", type=int, default=1, help="line sent to infinity (1-based)")
        if name == "spectrum":
            p.add_argument("--crosscheck", action="store_true", help="compare with the cyclic-cover oracle")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise ValidationError("missing subcommand; choose one of " + ", ".join(SUBCOMMANDS))
        doc, text = run_command(args)
    except ArrangetopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    if getattr(args, "emit_input", False):
        sys.stdout.write(text)
    elif args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(text if text is not None else to_text(doc))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
