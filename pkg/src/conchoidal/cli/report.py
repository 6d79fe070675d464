"""Structured (JSON) and text renderings of results, plus point sampling."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from ..conchoid import ConchoidReport, Verdict
from ..errors import DivisionByZero
from ..foci import FociReport, FocusCandidate
from ..gfield import FieldElem, Tower, _render_gauss, as_elem

SCHEMA_NAME = "report.schema.json"


def load_schema() -> dict:
    return json.loads(resources.files(__package__).joinpath(SCHEMA_NAME).read_text(encoding="utf-8"))


def validate(doc: dict) -> None:
    import jsonschema

    jsonschema.validate(doc, load_schema())


def _s(x):
    return None if x is None else str(x)


def _pair(p):
    return [str(p[0]), str(p[1])]


def _tower_gens(t: Tower):
    return [_render_gauss(*g) for g in t.gens]


def conchoid_json(report: ConchoidReport, command: str = "classify") -> dict:
    prob = report.problem
    doc = {
        "command": command,
        "status": "ok",
        "input": {
            "curve": [str(prob.curve.x), str(prob.curve.y)],
            "focus": [str(prob.focus.a), str(prob.focus.b)],
            "distance": str(prob.distance),
        },
        "verdict": report.verdict.value,
        "exclusion": None,
        "components": [_pair(c) for c in report.components],
        "phi": _pair(report.phi) if report.phi else None,
        "rdf_witness": _s(report.rdf_witness),
        "tower": _tower_gens(report.tower),
    }
    if report.exclusion is not None:
        doc["exclusion"] = {"kind": report.exclusion.name, "description": report.exclusion.description}
    if command == "classify":
        doc["reparametrizing_curve"] = _s(report.reparam.g) if report.reparam else None
        doc["genus"] = report.genus
        m = report.model
        doc["hyperelliptic_model"] = (
            {"delta": str(m.delta), "unit": str(m.unit), "s": str(m.s), "q": str(m.q), "genus": m.genus}
            if m is not None else None
        )
    return doc


def conchoid_text(report: ConchoidReport) -> str:
    lines = [f"verdict: {report.verdict.value}"]
    if report.exclusion is not None:
        lines.append(f"excluded: {report.exclusion.name} ({report.exclusion.description})")
    if report.reparam is not None:
        lines.append(f"reparametrizing curve: {report.reparam.g}")
    if report.model is not None:
        lines.append(f"genus: {report.model.genus}")
    if report.rdf_witness is not None:
        lines.append(f"m(t) = {report.rdf_witness}")
    if report.phi is not None:
        lines.append(f"phi(t) = ({report.phi[0]}, {report.phi[1]})")
    for k, (x, y) in enumerate(report.components):
        lines.append(f"component {k + 1}: ({x}, {y})")
    if report.tower.gens:
        lines.append(f"field: {report.tower}")
    return "\n".join(lines)


def _candidate_json(c: FocusCandidate) -> dict:
    return {
        "point": [str(c.point.a), str(c.point.b)],
        "line": c.line_index,
        "h": _s(c.h),
        "verdict": c.verdict.value,
        "exclusion": c.exclusion.name if c.exclusion else None,
        "on_curve": c.on_curve,
        "note": c.note,
    }


def foci_json(rep: FociReport) -> dict:
    loc = rep.locus
    return {
        "command": "find-foci",
        "status": "ok",
        "input": {"curve": [str(rep.curve.x), str(rep.curve.y)]},
        "R": str(loc.R),
        "D1": str(loc.D1),
        "D2": str(loc.D2),
        "lines": [
            {
                "orientation": sw.line.orientation,
                "constant": str(sw.line.constant),
                "condition": _s(sw.condition),
                "candidate_polynomial": _s(sw.candidate_poly),
                "generic": sw.generic,
                "candidates": [_s(c.h) for c in sw.candidates],
            }
            for sw in rep.sweeps
        ],
        "accepted": [_candidate_json(c) for c in rep.accepted],
        "rejected": [_candidate_json(c) for c in rep.rejected],
        "on_curve_note": rep.on_curve_note,
    }


def foci_text(rep: FociReport) -> str:
    acc = ", ".join(str(p) for p in rep.foci) or "none"
    lines = [f"double rational foci: {acc}", f"R(a, b) = {rep.locus.R}",
             f"D1(a, b) = {rep.locus.D1}", f"D2(a, b) = {rep.locus.D2}"]
    for k, sw in enumerate(rep.sweeps):
        cond = "generic line" if sw.generic else f"condition {sw.condition}"
        lines.append(f"line {k}: {sw.line}; {cond}")
    for c in rep.rejected:
        lines.append(f"rejected {c.point}: {c.verdict.value}")
    lines.append(f"on-curve: {rep.on_curve_note}")
    return "\n".join(lines)


def error_json(exc, command: str | None) -> dict:
    return {
        "command": command,
        "status": "error",
        "error": {"code": exc.code, "message": str(exc), "exit_status": exc.exit_status},
    }


# -- sampling ----------------------------------------------------------------


def sample_points(lo: Fraction, hi: Fraction, n: int):
    if n < 1:
        raise ValueError("the sample count must be positive")
    if n == 1:
        return [lo]
    step = (hi - lo) / (n - 1)
    return [lo + k * step for k in range(n)]


def _is_real_fn(f) -> bool:
    return all(c.is_real() for p in (f.num, f.den) for c in p.coeffs)


def sample_components(components, ts):
    """Exact samples ``(index, t, x, y)`` and the skipped ``(index, t)`` poles."""
    rows, skipped = [], []
    for j, (x, y) in enumerate(components):
        for t0 in ts:
            try:
                rows.append((j, t0, x(as_elem(t0)), y(as_elem(t0))))
            except DivisionByZero:
                skipped.append((j, t0))
    return rows, skipped


def _num(x: FieldElem):
    z = complex(x)
    return repr(z.real), repr(z.imag)


def samples_csv(components, rows) -> str:
    real = all(_is_real_fn(f) for comp in components for f in comp)
    if real:
        out = ["component,t,x,y"]
        for j, t0, x, y in rows:
            out.append(f"{j + 1},{float(t0)!r},{_num(x)[0]},{_num(y)[0]}")
    else:
        out = ["component,t,x_re,x_im,y_re,y_im"]
        for j, t0, x, y in rows:
            out.append(f"{j + 1},{float(t0)!r},{','.join(_num(x))},{','.join(_num(y))}")
    return "\n".join(out) + "\n"


def samples_json(report: ConchoidReport, rows, skipped) -> dict:
    doc = conchoid_json(report, command="sample")
    doc["samples"] = [
        {"component": j + 1, "t": str(t0), "x": str(x), "y": str(y)} for j, t0, x, y in rows
    ]
    doc["skipped"] = [{"component": j + 1, "t": str(t0)} for j, t0 in skipped]
    return doc
