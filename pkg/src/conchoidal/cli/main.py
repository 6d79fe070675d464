"""``conchoidal`` command line front end.

Option precedence: command-line flags, then the ``CONCHOIDAL_OPTS``
environment variable (shell-style tokens), then built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import shlex
import sys
from fractions import Fraction

from ..conchoid import classify, verify_component
from ..errors import ConchoidalError, NonConstantWhereConstantRequired
from ..foci import find_double_rational_foci
from ..geometry import ConchoidProblem, Focus, ParamCurve, is_proper
from . import report as rep
from .parser import parse_constant, parse_ratfn

ENV_VAR = "CONCHOIDAL_OPTS"
COMMANDS = ("classify", "parametrize", "find-foci", "implicit", "sample", "verify")
DEFAULTS = {
    "curve_x": None,
    "curve_y": None,
    "focus_a": "0",
    "focus_b": "0",
    "distance": "1",
    "json": False,
    "allow_extend": True,
    "samples": 201,
    "range": "-3:3",
    "tx": None,
    "ty": None,
    "phi": None,
}


def _add_options(p: argparse.ArgumentParser) -> None:
    S = argparse.SUPPRESS
    p.add_argument("--curve-x", dest="curve_x", default=S, help="x(t) of the base curve")
    p.add_argument("--curve-y", dest="curve_y", default=S, help="y(t) of the base curve")
    p.add_argument("--focus-a", dest="focus_a", default=S, help="first focus coordinate (default 0)")
    p.add_argument("--focus-b", dest="focus_b", default=S, help="second focus coordinate (default 0)")
    p.add_argument("--distance", dest="distance", default=S, help="conchoid distance d (default 1)")
    p.add_argument("--json", dest="json", action="store_true", default=S, help="emit a JSON report")
    p.add_argument("--text", dest="json", action="store_false", default=S, help="emit a text report")
    p.add_argument("--no-extend", dest="allow_extend", action="store_false", default=S,
                   help="never adjoin square roots")
    p.add_argument("--extend", dest="allow_extend", action="store_true", default=S,
                   help="allow adjoining square roots (default)")
    p.add_argument("--samples", dest="samples", type=int, default=S, help="sample count (default 201)")
    p.add_argument("--range", dest="range", default=S, help="sample range lo:hi (default -3:3)")
    p.add_argument("--tx", dest="tx", default=S, help="verify: x(t) of the component")
    p.add_argument("--ty", dest="ty", default=S, help="verify: y(t) of the component")
    p.add_argument("--phi", dest="phi", default=S, help="verify: reparametrization phi1(t) of the base curve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conchoidal",
        description="Exact rationality analysis and parametrization of conchoid curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "classify": "decide double rational / rational / not rational",
        "parametrize": "print rational parametrizations of the conchoid components",
        "find-foci": "locate all double rational foci of the base curve",
        "implicit": "implicit equation of the base curve",
        "sample": "CSV samples of the conchoid components",
        "verify": "check a proposed component exactly",
    }
    for name in COMMANDS:
        _add_options(sub.add_parser(name, help=helps[name]))
    return parser


def resolve_options(argv, environ=None):
    """Merge defaults, ``CONCHOIDAL_OPTS`` and flags (in increasing priority)."""
    environ = os.environ if environ is None else environ
    parser = build_parser()
    args = parser.parse_args(argv)
    opts = dict(DEFAULTS)
    env = environ.get(ENV_VAR, "").strip()
    if env:
        env_parser = argparse.ArgumentParser(prog=ENV_VAR, add_help=False)
        _add_options(env_parser)
        opts.update(vars(env_parser.parse_args(shlex.split(env))))
    opts.update(vars(args))
    return opts


def _curve(opts) -> ParamCurve:
    if opts["curve_x"] is None or opts["curve_y"] is None:
        raise NonConstantWhereConstantRequired("both --curve-x and --curve-y are required")
    ext = opts["allow_extend"]
    return ParamCurve(parse_ratfn(opts["curve_x"], allow_extend=ext), parse_ratfn(opts["curve_y"], allow_extend=ext))


def _problem(opts) -> ConchoidProblem:
    ext = opts["allow_extend"]
    focus = Focus(parse_constant(opts["focus_a"], ext), parse_constant(opts["focus_b"], ext))
    return ConchoidProblem(_curve(opts), focus, parse_constant(opts["distance"], ext))


def _range(text: str):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"--range expects lo:hi, got {text!r}")
    vals = []
    for s in (lo, hi):
        v = parse_constant(s)
        if not v.is_rational():
            raise ValueError(f"range bound {s!r} is not rational")
        vals.append(v.to_fraction())
    return vals


def run(opts, out=sys.stdout, err=sys.stderr) -> int:
    """Execute one command; returns the exit status."""
    command = opts["command"]
    as_json = opts["json"]

    def emit(doc, text):
        if as_json:
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write(text.rstrip("\n") + "\n")

    try:
        ext = opts["allow_extend"]
        if command in ("classify", "parametrize"):
            r = classify(_problem(opts), allow_extend=ext)
            if command == "classify":
                emit(rep.conchoid_json(r), rep.conchoid_text(r))
            else:
                doc = rep.conchoid_json(r, command="parametrize")
                text = "\n".join([f"verdict: {r.verdict.value}"] + [f"({x}, {y})" for x, y in r.components])
                emit(doc, text)
        elif command == "find-foci":
            fr = find_double_rational_foci(_curve(opts), allow_extend=ext)
            emit(rep.foci_json(fr), rep.foci_text(fr))
        elif command == "implicit":
            P = _curve(opts)
            doc = {
                "command": "implicit",
                "status": "ok",
                "input": {"curve": [str(P.x), str(P.y)]},
                "implicit": str(P.implicit),
                "variables": ["a", "b"],
                "proper": is_proper(P),
            }
            emit(doc, f"{P.implicit}\nproper: {str(doc['proper']).lower()}")
        elif command == "sample":
            r = classify(_problem(opts), allow_extend=ext)
            lo, hi = _range(opts["range"])
            rows, skipped = rep.sample_components(r.components, rep.sample_points(lo, hi, opts["samples"]))
            if as_json:
                emit(rep.samples_json(r, rows, skipped), "")
            else:
                out.write(rep.samples_csv(r.components, rows))
                for j, t0 in skipped:
                    err.write(f"skipped pole: component {j + 1} at t = {t0}\n")
                if not r.components:
                    err.write(f"no components: verdict {r.verdict.value}\n")
        elif command == "verify":
            prob = _problem(opts)
            if opts["tx"] is None or opts["ty"] is None:
                raise NonConstantWhereConstantRequired("verify needs --tx and --ty")
            T = (parse_ratfn(opts["tx"], allow_extend=ext), parse_ratfn(opts["ty"], allow_extend=ext))
            phi = parse_ratfn(opts["phi"], allow_extend=ext) if opts["phi"] else None
            Q = prob.curve if phi is None else prob.curve.compose(phi)
            d = prob.distance
            dist_ok = ((T[0] - Q.x) ** 2 + (T[1] - Q.y) ** 2 - d * d).is_zero()
            coll_ok = ((T[0] - prob.focus.a) * (Q.y - prob.focus.b)
                       - (T[1] - prob.focus.b) * (Q.x - prob.focus.a)).is_zero()
            valid = verify_component(T, prob, phi)
            doc = {
                "command": "verify",
                "status": "ok",
                "input": {"curve": [str(prob.curve.x), str(prob.curve.y)],
                          "focus": [str(prob.focus.a), str(prob.focus.b)], "distance": str(d)},
                "component": [str(T[0]), str(T[1])],
                "phi": str(phi) if phi is not None else None,
                "distance_identity": dist_ok,
                "collinearity": coll_ok,
                "valid": valid,
            }
            emit(doc, f"valid: {str(valid).lower()}\ndistance identity: {str(dist_ok).lower()}\n"
                      f"collinearity: {str(coll_ok).lower()}")
            return 0 if valid else 1
        return 0
    except ConchoidalError as exc:
        if as_json:
            out.write(json.dumps(rep.error_json(exc, command), indent=2) + "\n")
        else:
            err.write(f"error [{exc.code}]: {exc}\n")
        return exc.exit_status
    except ValueError as exc:
        if as_json:
            doc = {"command": command, "status": "error",
                   "error": {"code": "invalid_input", "message": str(exc), "exit_status": 2}}
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            err.write(f"error [invalid_input]: {exc}\n")
        return 2


def main(argv=None) -> int:
    opts = resolve_options(argv)
    return run(opts)


def entry() -> None:
    sys.exit(main())
