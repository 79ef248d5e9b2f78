"""Command-line front end.

    normcurves construct --field 0,2 --f "t^6+t^4+1"
    normcurves sample --field 0,2 --f "t^6+t^4+1" --count 5 --seed 7
    normcurves verify --from curve.json
    normcurves norm --field 0,2 --elem 1,1,1 --inv
    normcurves factor --c1 6 --c3 1

All rationals in JSON output are strings ("p/q" or "n").  Exit codes:
0 success, 2 domain error, 3 parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .constructions import METHODS, RationalCurve, construct, forced_family, reducible_factorization
from .cubicfield import FieldElem, field_check
from .errors import NormCurveError, PolySyntaxError
from .exactmath import RatFunc, UPoly, format_rational, parse_rational
from .normform import BackTransform, GenForm, KnownPoint, ProblemInstance
from .polyparse import format_poly, parse_poly
from .verify import sample_points, verify_curve_identity

INFINITY_TOKENS = ("inf", "infinity", "inf-normalized")
COMPONENTS = ("X1", "X2", "X3", "t")


class InputError(PolySyntaxError):
    """Malformed flag or file value (anything but a polynomial)."""


def _rationals(text: str, n: int, what: str) -> list:
    parts = [p for p in str(text).split(",")]
    if len(parts) != n:
        raise InputError(f"{what} needs {n} comma-separated rationals, got {len(parts)}", 0)
    out = []
    offset = 0
    for p in parts:
        try:
            out.append(parse_rational(p))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad rational {p.strip()!r} in {what}", offset, ["INT", "INT/INT"]) from None
        offset += len(p.encode()) + 1
    return out


def _point(value) -> KnownPoint:
    parts = value.split(",") if isinstance(value, str) else [str(v) for v in value]
    if len(parts) != 4:
        raise InputError(f"point needs 4 entries x,y,z,t, got {len(parts)}", 0)
    x, y, z = _rationals(",".join(parts[:3]), 3, "point")
    t = parts[3].strip().lower()
    if t in INFINITY_TOKENS:
        return KnownPoint(x, y, z, None)
    return KnownPoint(x, y, z, _rationals(t, 1, "point")[0])


# -- serialization --------------------------------------------------------------------

def upoly_json(p: UPoly) -> List[str]:
    return [format_rational(c) for c in p.coeffs] if not p.is_zero() else ["0"]


def ratfunc_json(r: RatFunc) -> dict:
    return {"num": upoly_json(r.num), "den": upoly_json(r.den)}


def ratfunc_from_json(d: dict) -> RatFunc:
    num = UPoly([parse_rational(c) for c in d["num"]], "u")
    den = UPoly([parse_rational(c) for c in d["den"]], "u")
    return RatFunc(num, den)


def instance_json(inst: ProblemInstance) -> dict:
    d = {"f": format_poly(inst.f)}
    if isinstance(inst.form, GenForm):
        d["form"] = inst.form.as_dict()
    else:
        d["field"] = inst.form.as_dict()
    d["point"] = inst.point.as_list() if inst.point is not None else None
    return d


def curve_json(curve: RationalCurve) -> dict:
    return {name: ratfunc_json(c) for name, c in zip(COMPONENTS, curve.original)}


def report_json(report) -> dict:
    out = {"method": report.method}
    if report.D is not None:
        out["D"] = upoly_json(report.D)
    if report.residual:
        out["residual"] = {k: upoly_json(v) for k, v in sorted(report.residual.items())}
    if report.ansatz is not None:
        out["ansatz"] = {k: _json_value(getattr(report.ansatz, k)) for k in ("p", "q", "r", "s")
                         if getattr(report.ansatz, k) is not None}
    if report.conic:
        out["conic"] = {k: _json_value(v) for k, v in report.conic.items()}
    if report.extra:
        out["extra"] = {k: _json_value(v) for k, v in report.extra.items()}
    return out


def _json_value(v):
    if isinstance(v, RatFunc):
        return ratfunc_json(v)
    if isinstance(v, UPoly):
        return upoly_json(v)
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {k: _json_value(x) for k, x in v.items()}
    try:
        return format_rational(v)
    except (TypeError, ValueError):
        return str(v)


def record_json(rec) -> dict:
    return {"u": format_rational(rec.u),
            "point": [format_rational(v) for v in rec.point],
            "norm_value": format_rational(rec.norm_value)}


# -- instance assembly --------------------------------------------------------------------

def load_instance(args) -> ProblemInstance:
    """Instance from --instance / --from file, overridden by inline flags."""
    doc = {}
    path = getattr(args, "instance", None)
    src = getattr(args, "from_file", None)
    if src:
        doc.update(_read_json(src).get("instance", {}))
    if path:
        doc.update(_read_json(path))
    if args.field:
        a, b = _rationals(args.field, 2, "--field")
        doc["field"] = {"a": a, "b": b}
        doc.pop("form", None)
    if getattr(args, "form", None):
        doc["form"] = dict(zip("abcde", _rationals(args.form, 5, "--form")))
        doc.pop("field", None)
    if args.f:
        doc["f"] = args.f
    if args.point:
        doc["point"] = args.point
    if "f" not in doc:
        raise InputError("no polynomial f given (use --f or --instance)", 0, ["--f"])
    f = parse_poly(doc["f"])
    if "form" in doc:
        vals = doc["form"]
        form = GenForm(*[_rat(vals[k]) for k in "abcde"])
    elif "field" in doc:
        form = field_check(_rat(doc["field"]["a"]), _rat(doc["field"]["b"]))
    else:
        raise InputError("no field given (use --field a,b or --form a,b,c,d,e)", 0, ["--field", "--form"])
    point = doc.get("point")
    return ProblemInstance(form, f, _point(point) if point is not None else None)


def _rat(v):
    return _rationals(v, 1, "value")[0] if isinstance(v, str) else v


def _read_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc.msg}", exc.pos) from None


def stored_curve(path: str) -> RationalCurve:
    doc = _read_json(path)
    comps = [ratfunc_from_json(doc["curve"][k]) for k in COMPONENTS]
    return RationalCurve(*comps, back=BackTransform(), method=doc.get("method", ""))


def _build(args, inst):
    if getattr(args, "from_file", None):
        curve = stored_curve(args.from_file)
        return curve, None
    return construct(inst, args.method, args.m, args.a2)


# -- commands -------------------------------------------------------------------------

def cmd_construct(args) -> dict:
    inst = load_instance(args)
    curve, report = construct(inst, args.method, args.m, args.a2)
    cert = verify_curve_identity(curve, inst, seed=args.seed)
    return {
        "method": curve.method,
        "instance": instance_json(inst),
        "curve": curve_json(curve),
        "model_curve": {name: ratfunc_json(c) for name, c in zip(COMPONENTS, curve.components)},
        "back_transform": curve.back.as_list(),
        "poles": [format_rational(p) for p in curve.poles],
        "report": report_json(report),
        "certificate": {"status": "ok", "digest": cert.digest(),
                        "denominator": upoly_json(cert.denominator),
                        "checked_at": [format_rational(u) for u in cert.checked_at]},
    }


def cmd_sample(args) -> list:
    inst = load_instance(args)
    curve, _ = _build(args, inst)
    verify_curve_identity(curve, inst, seed=args.seed)
    records = sample_points(curve, inst, args.count, args.seed)
    for rec in records:
        # re-check against the original equation before emitting
        X1, X2, X3, t = rec.point
        assert inst.contains(X1, X2, X3, t) and rec.norm_value != 0
    return [record_json(r) for r in records]


def cmd_verify(args) -> dict:
    inst = load_instance(args)
    curve, _ = _build(args, inst)
    cert = verify_curve_identity(curve, inst, spot_checks=args.count, seed=args.seed)
    return {"status": "ok", "method": cert.method, "digest": cert.digest(),
            "denominator": upoly_json(cert.denominator),
            "checked_at": [format_rational(u) for u in cert.checked_at]}


def cmd_norm(args):
    a, b = _rationals(args.field, 2, "--field")
    F = field_check(a, b)
    e = FieldElem(*_rationals(args.elem, 3, "--elem"))
    if args.inv:
        return [format_rational(v) for v in F.inv(e)]
    return format_rational(F.norm(e))


def cmd_factor(args) -> dict:
    c1 = _rationals(args.c1, 1, "--c1")[0]
    c3 = _rationals(args.c3, 1, "--c3")[0]
    quad, cubic = reducible_factorization(c1, c3)
    c2, c4, c5 = forced_family(c1, c3)
    g = -(quad * cubic) / 144
    return {"quadratic": format_poly(quad), "cubic": format_poly(cubic), "scale": "-1/144", "g": format_poly(g),
            "forced": {"c2": format_rational(c2), "c4": format_rational(c4), "c5": format_rational(c5)}}


# -- text rendering ---------------------------------------------------------------------

def _text(result) -> str:
    if isinstance(result, str):
        return result
    if isinstance(result, list) and all(isinstance(r, str) for r in result):
        return ",".join(result)
    if isinstance(result, list):
        lines = [f"{'u':>12}  {'X1':>14} {'X2':>14} {'X3':>14} {'t':>14}  norm"]
        for r in result:
            lines.append(f"{r['u']:>12}  " + " ".join(f"{v:>14}" for v in r["point"]) + f"  {r['norm_value']}")
        return "\n".join(lines)
    lines = []
    for k, v in result.items():
        if k == "curve":
            for name, rf in v.items():
                num = format_poly(UPoly([parse_rational(c) for c in rf["num"]], "u"))
                den = format_poly(UPoly([parse_rational(c) for c in rf["den"]], "u"))
                lines.append(f"{name}(u) = ({num}) / ({den})")
        elif isinstance(v, (dict, list)):
            lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


# -- argument parsing ---------------------------------------------------------------------

def _instance_flags(p: argparse.ArgumentParser):
    p.add_argument("--instance", help="JSON instance file {field, f, point}")
    p.add_argument("--field", help="a,b for x^3 + a x + b")
    p.add_argument("--form", help="a,b,c,d,e for X1^3 + aX2^3 + bX3^3 + (cX1+dX2+eX3)X2X3")
    p.add_argument("--f", help="polynomial in t, e.g. \"t^6 + 2t^4 - 1/2*t + 5\"")
    p.add_argument("--point", help="known point x,y,z,t (t = inf for the point at infinity)")


def _construct_flags(p: argparse.ArgumentParser):
    p.add_argument("--method", default="auto", choices=METHODS)
    p.add_argument("--m", type=int, default=None, help="trinomial exponent m")
    p.add_argument("--a2", default=None, help="trinomial a2 when m = 1 (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="normcurves",
                                     description="Rational curves and points on N(X1,X2,X3) = f(t).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build and certify a rational curve")
    _instance_flags(p)
    _construct_flags(p)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_construct)

    for name, func, count, helptext in (
            ("sample", cmd_sample, 10, "emit exact rational points"),
            ("verify", cmd_verify, 10, "re-certify a curve")):
        p = sub.add_parser(name, help=helptext)
        _instance_flags(p)
        _construct_flags(p)
        p.add_argument("--from", dest="from_file", help="JSON written by `construct`")
        p.add_argument("--count", type=int, default=count)
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(func=func)

    p = sub.add_parser("norm", help="norm or inverse of a field element")
    p.add_argument("--field", required=True)
    p.add_argument("--elem", required=True)
    p.add_argument("--inv", action="store_true")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("factor", help="factorization of the condition-failing family")
    p.add_argument("--c1", required=True)
    p.add_argument("--c3", required=True)
    p.set_defaults(func=cmd_factor)

    for p in sub.choices.values():
        p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "a2", None) is not None:
            args.a2 = _rationals(args.a2, 1, "--a2")[0]
        result = args.func(args)
    except NormCurveError as exc:
        print(json.dumps(exc.to_dict(), sort_keys=True), file=sys.stderr)
        return exc.exit_code
    except (ValueError, ZeroDivisionError, KeyError, OSError) as exc:
        print(json.dumps({"error": "DomainError", "message": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2
    if args.format == "text":
        print(_text(result))
    else:
        print(json.dumps(result, indent=2, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
