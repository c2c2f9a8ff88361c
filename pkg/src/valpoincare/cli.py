"""Command line front-end.

    valpoincare series   --input inst.json [--box -3..5,-3..5] [--output out.json]
    valpoincare embedded --input inst.json [--mode product|oracle] [--schedule 6,8,10]
    valpoincare verify   --input inst.json
    valpoincare newton   --input poly.json

Exit codes: 0 ok, 2 validation, 3 infinite dimension, 4 non-stabilization,
5 cross-check disagreement.  Errors are written to stderr as a JSON object.
"""

import argparse
import json
import sys
import warnings
from fractions import Fraction

import jsonschema

from .errors import CrossCheckDisagreement, PoincareError, ValidationError
from .lattice import AmbientSpace, MonomialPoly, ValuationSet
from .newton import cancellation_check, newton_report, q_vector
from .poincare import DEFAULT_SCHEDULE, Instance, ambient_series, cross_check, embedded_coefficient, embedded_series
from .series import Box

_INT_STR = {"oneOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?[0-9]+$"}]}
_VEC = {"type": "array", "items": {"type": "integer"}, "minItems": 1}

POLY_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["num", "exponent"],
        "properties": {"num": _INT_STR, "den": _INT_STR, "exponent": {"type": "array", "items": {"type": "integer"}}},
        "additionalProperties": False,
    },
}

INSTANCE_SCHEMA = {
    "type": "object",
    "properties": {
        "ambient": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["kind", "dim"],
                    "properties": {"kind": {"const": "affine"}, "dim": {"type": "integer", "minimum": 1}},
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["kind", "generators"],
                    "properties": {
                        "kind": {"const": "semigroup"},
                        "generators": {"type": "array", "items": _VEC, "minItems": 1},
                    },
                    "additionalProperties": False,
                },
            ]
        },
        "valuations": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}, "minItems": 1},
        "h": POLY_SCHEMA,
        "box": {
            "type": "object",
            "required": ["min", "max"],
            "properties": {"min": {"type": "array", "items": {"type": "integer"}},
                           "max": {"type": "array", "items": {"type": "integer"}}},
        },
        "options": {
            "type": "object",
            "properties": {
                "mode": {"enum": ["product", "oracle"]},
                "schedule": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                "format": {"enum": ["json", "text"]},
                "rank_path": {"type": "boolean"},
                "inject_fault": {
                    "type": "object",
                    "required": ["definition", "v"],
                    "properties": {"definition": {"type": "string"}, "v": {"type": "array"},
                                   "delta": {"type": "integer"}},
                },
            },
        },
    },
}


def _validate(doc, schema):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise ValidationError(f"schema error at '{path}': {exc.message}") from None


def parse_poly(terms):
    _validate(terms, POLY_SCHEMA)
    out = []
    for t in terms:
        den = int(t.get("den", 1))
        if den == 0:
            raise ValidationError("zero denominator")
        out.append((Fraction(int(t["num"]), den), t["exponent"]))
    h = MonomialPoly.from_terms(out)
    if h.is_zero():
        raise ValidationError("h is the zero polynomial")
    return h


def load_instance(doc):
    _validate(doc, INSTANCE_SCHEMA)
    for key in ("ambient", "valuations"):
        if key not in doc:
            raise ValidationError(f"missing '{key}'")
    a = doc["ambient"]
    amb = AmbientSpace.affine(a["dim"]) if a["kind"] == "affine" else AmbientSpace.semigroup(a["generators"])
    h = parse_poly(doc["h"]) if "h" in doc else None
    return Instance(amb, ValuationSet(doc["valuations"]), h)


def parse_box(text, r):
    """'-3..5' (every axis) or '-3..5,0..2' (one range per axis)."""
    try:
        parts = [p.split("..") for p in text.split(",")]
        ranges = [(int(a), int(b)) for a, b in parts]
    except ValueError:
        raise ValidationError(f"bad box {text!r}; expected vmin..vmax per axis") from None
    if len(ranges) == 1:
        ranges = ranges * r
    if len(ranges) != r:
        raise ValidationError(f"box has {len(ranges)} axes, expected {r}")
    if any(a > b for a, b in ranges):
        raise ValidationError("box has min > max")
    return Box(tuple(a for a, _ in ranges), tuple(b for _, b in ranges))


def _box(args, doc, inst):
    if args.box:
        return parse_box(args.box, inst.r)
    if "box" in doc:
        box = Box(tuple(doc["box"]["min"]), tuple(doc["box"]["max"]))
        if box.r != inst.r or box.is_empty():
            raise ValidationError("box must have one nonempty range per valuation")
        return box
    raise ValidationError("no box given (use --box or a 'box' entry)")


def _schedule(args, opts):
    if args.schedule:
        try:
            return tuple(int(x) for x in args.schedule.split(","))
        except ValueError:
            raise ValidationError(f"bad schedule {args.schedule!r}") from None
    return tuple(opts.get("schedule", DEFAULT_SCHEDULE))


def _series_text(records):
    return "\n".join(" ".join(map(str, r["v"])) + f"\t{r['c']}" for r in records)


def cmd_series(args, doc):
    inst = load_instance(doc)
    box = _box(args, doc, inst)
    s = ambient_series(inst, box)
    out = {
        "command": "series",
        "ambient": inst.ambient.describe(),
        "valuations": [list(nu.weights) for nu in inst.valuations],
        "box": {"min": list(box.lo), "max": list(box.hi)},
        "series": s.to_records(),
    }
    return out, 0, _series_text(out["series"])


def cmd_embedded(args, doc):
    inst = load_instance(doc)
    if inst.h is None:
        raise ValidationError("embedded needs a polynomial 'h'")
    opts = doc.get("options", {})
    mode = args.mode or opts.get("mode", "product")
    box = _box(args, doc, inst)
    q = q_vector(inst.h, inst.valuations)
    warns = []
    if not any(q):
        warns.append("q = 0, so (1 - t^q) = 0 and the embedded series vanishes")
    out = {
        "command": "embedded",
        "mode": mode,
        "q": list(q),
        "valuations": [list(nu.weights) for nu in inst.valuations],
        "box": {"min": list(box.lo), "max": list(box.hi)},
        "warnings": warns,
    }
    if mode == "oracle":
        schedule = _schedule(args, opts)
        records, traces = [], []
        for v in box.points():
            c, trace = embedded_coefficient(inst, v, schedule, return_trace=True)
            records.append({"v": list(v), "c": c})
            traces.append({"v": list(v), "trace": [{"bound": t, "h": list(h)} for t, h in trace]})
        out["schedule"] = list(schedule)
        out["series"] = records
        out["stabilization"] = traces
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            out["series"] = embedded_series(inst, box, "product").to_records()
    text = f"q = {tuple(q)}  mode = {mode}\n" + "".join(w + "\n" for w in warns) + _series_text(out["series"])
    return out, 0, text


def cmd_verify(args, doc):
    inst = load_instance(doc)
    opts = doc.get("options", {})
    box = _box(args, doc, inst)
    fault = None
    if "inject_fault" in opts:
        f = opts["inject_fault"]
        fault = (f["definition"], tuple(f["v"]), f.get("delta", 1))
    report = cross_check(inst, box, rank_path=opts.get("rank_path", False), fault=fault)
    out = {"command": "verify", "box": {"min": list(box.lo), "max": list(box.hi)}, **report.to_dict()}
    lines = [f"{k}: {'applicable' if v else 'not applicable'} ({report.reasons[k]})"
             for k, v in report.applicable.items()]
    lines.append(f"points checked: {len(report.table)}, disagreements: {len(report.disagreements)}")
    lines += [f"  {v}: {vals}" for v, vals in report.disagreements]
    return out, 0 if report.ok else CrossCheckDisagreement.exit_code, "\n".join(lines)


def cmd_newton(args, doc):
    if not isinstance(doc, dict) or "h" not in doc:
        raise ValidationError("newton needs a polynomial 'h'")
    h = parse_poly(doc["h"])
    rep = newton_report(h)
    out = {"command": "newton", **rep}
    lines = [f"facet normal {f['normal']} offset {f['offset']}{' (compact)' if f['compact'] else ''}"
             for f in rep["facets"]]
    lines += [
        f"valuations: {rep['valuations']}",
        f"q: {rep['q']}",
        f"hypothesis: {'ok' if rep['hypothesis_check']['ok'] else '; '.join(rep['hypothesis_check']['messages'])}",
        f"cancellation: {'none' if rep['cancellation_check']['ok'] else '; '.join(rep['cancellation_check']['messages'])}",
        f"round trip equal: {rep['roundtrip_equal']}",
        *rep["notes"],
    ]
    return out, 0, "\n".join(lines)


COMMANDS = {"series": cmd_series, "embedded": cmd_embedded, "verify": cmd_verify, "newton": cmd_newton}


def build_parser():
    parser = argparse.ArgumentParser(prog="valpoincare", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="instance JSON file ('-' for stdin)")
        p.add_argument("--output", help="write the result here instead of stdout")
        p.add_argument("--format", choices=["json", "text"])
        if name != "newton":
            p.add_argument("--box", help="vmin..vmax, or one range per axis separated by commas")
        if name == "embedded":
            p.add_argument("--mode", choices=["product", "oracle"])
            p.add_argument("--schedule", help="increasing degree bounds, e.g. 6,8,10")
    return parser


def _read(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        doc = _read(args.input)
        out, code, text = COMMANDS[args.command](args, doc)
        opts = doc.get("options", {}) if isinstance(doc, dict) else {}
        fmt = args.format or opts.get("format", "json")
    except PoincareError as exc:
        sys.stderr.write(json.dumps({"error": exc.to_dict()}, sort_keys=True) + "\n")
        return exc.exit_code
    payload = json.dumps(out, sort_keys=True, indent=2) if fmt == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        sys.stdout.write(payload + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
