"""JSON schemas and (de)serialization for equations and reports.

Rationals are written as strings ("3/4", "-2", "0.125"); numbers are also
accepted on input.  Coefficient lists are in ascending degree.
"""
from __future__ import annotations

import json
from fractions import Fraction

import jsonschema

from .errors import InputError
from .fdeq import DifferenceEquation, HypergeometricData, lambda_n
from .ratpoly import Poly, as_rational

RATIONAL = {
    "anyOf": [
        {"type": "string", "pattern": r"^\s*[-+]?(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?(\s*/\s*[-+]?\d+)?\s*$"},
        {"type": "integer"},
        {"type": "number"},
    ]
}
POLY = {"type": "array", "items": RATIONAL}
DECIMAL = {"type": "string"}

EQUATION_SCHEMA = {
    "$id": "hspoly/equation",
    "type": "object",
    "oneOf": [
        {
            "required": ["g", "r", "u"],
            "properties": {"g": POLY, "r": POLY, "u": POLY, "h": RATIONAL},
        },
        {
            "required": ["a", "b", "c", "d", "f"],
            "properties": {
                "a": RATIONAL, "b": RATIONAL, "c": RATIONAL, "d": RATIONAL, "f": RATIONAL,
                "lambda": RATIONAL, "n": {"type": "integer", "minimum": 0}, "h": RATIONAL,
            },
            "oneOf": [{"required": ["lambda"]}, {"required": ["n"]}],
        },
    ],
}

KERNEL_SCHEMA = {
    "$id": "hspoly/kernel",
    "type": "object",
    "required": ["degree_bound", "dimension", "basis"],
    "properties": {
        "degree_bound": {"type": "integer", "minimum": 0},
        "dimension": {"type": "integer", "minimum": 0},
        "basis": {"type": "array", "items": POLY},
        "equation": {"type": "object"},
    },
}

ROOT = {
    "type": "object",
    "required": ["multiplicity", "approx"],
    "properties": {
        "multiplicity": {"type": "integer", "minimum": 1},
        "exact": {"type": "string"},
        "interval": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        "approx": DECIMAL,
    },
}
LATTICE_CLASS = {
    "type": "object",
    "required": ["anchor", "members"],
    "properties": {
        "anchor": ROOT,
        "members": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["source", "index", "offset", "root"],
                "properties": {
                    "source": {"enum": ["G", "G_MINUS_HR"]},
                    "index": {"type": "integer", "minimum": 0},
                    "offset": {"type": "integer", "minimum": 0},
                    "root": ROOT,
                },
            },
        },
    },
}

CERTIFICATE_SCHEMA = {
    "$id": "hspoly/certificate",
    "type": "object",
    "required": ["verdict", "witness", "collisions", "kappa", "roots_g", "roots_g_minus_hr"],
    "properties": {
        "verdict": {"enum": ["T1", "T1_REMARK", "T2", "INCONCLUSIVE"]},
        "kappa": {"type": "string"},
        "witness": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["direction", "root", "class"],
                    "properties": {"direction": {"enum": ["up", "down"]}, "class": LATTICE_CLASS},
                },
            ]
        },
        "roots_g": {"type": "array", "items": ROOT},
        "roots_g_minus_hr": {"type": "array", "items": ROOT},
        "collisions": {"type": "array", "items": LATTICE_CLASS},
    },
}

NUMBER_REPORT = {
    "oneOf": [
        {"type": "null"},
        {"type": "object", "required": ["decimal"],
         "properties": {"exact": {"type": "string"}, "decimal": DECIMAL}},
    ]
}

CASORATIAN_SCHEMA = {
    "$id": "hspoly/casoratian",
    "type": "object",
    "required": ["recurrence_exact", "identically_zero", "ratio_mean", "ratio_rel_stddev", "precision"],
    "properties": {
        "recurrence_exact": {"type": "boolean"},
        "identically_zero": {"type": "boolean"},
        "ratio_mean": NUMBER_REPORT,
        "ratio_rel_stddev": {"type": ["number", "null"]},
        "constant": {"type": ["boolean", "null"]},
        "precision": {"type": "integer"},
        "x0": {"type": "string"},
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}

BAE_SCHEMA = {
    "$id": "hspoly/bae",
    "type": "object",
    "required": ["passed", "bae_passed", "equation_passed", "consistent", "max_residual", "residuals"],
    "properties": {
        "passed": {"type": "boolean"},
        "bae_passed": {"type": "boolean"},
        "equation_passed": {"type": "boolean"},
        "consistent": {"type": "boolean"},
        "tolerance": {"type": "number"},
        "max_residual": DECIMAL,
        "equation_residual": DECIMAL,
        "residuals": {"type": "array", "items": DECIMAL},
        "precision": {"type": "integer"},
    },
}

NORLUND_SCHEMA = {
    "$id": "hspoly/norlund",
    "type": "object",
    "required": ["phi", "closed_form", "numeric", "error", "converged"],
    "properties": {
        "phi": {"type": "object"},
        "closed_form": DECIMAL,
        "numeric": DECIMAL,
        "error": {"type": "number"},
        "converged": {"type": "boolean"},
        "config": {"type": "object"},
        "diagnostics": {"type": "array", "items": {"type": "string"}},
    },
}

GAMMAH_SCHEMA = {
    "$id": "hspoly/gamma-h",
    "type": "object",
    "required": ["x", "h", "pole", "value", "precision"],
    "properties": {
        "x": {"type": "string"},
        "h": {"type": "string"},
        "pole": {"type": "boolean"},
        "pole_index": {"type": ["integer", "null"]},
        "value": {"type": ["string", "null"]},
        "exact": {"type": ["string", "null"]},
        "precision": {"type": "integer"},
    },
}

CORPUS_SCHEMA = {
    "$id": "hspoly/corpus",
    "type": "object",
    "required": ["entries"],
    "properties": {
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "parameters", "derivation", "degrees"],
                "properties": {
                    "degrees": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["n", "dimension", "verdict", "bae"],
                            "properties": {
                                "n": {"type": "integer"},
                                "dimension": {"type": "integer"},
                                "verdict": {"enum": ["T1", "T1_REMARK", "T2", "INCONCLUSIVE"]},
                                "bae": {"type": ["object", "string"]},
                            },
                        },
                    }
                },
            },
        }
    },
}

SCHEMAS = {
    "equation": EQUATION_SCHEMA,
    "kernel": KERNEL_SCHEMA,
    "certificate": CERTIFICATE_SCHEMA,
    "casoratian": CASORATIAN_SCHEMA,
    "bae": BAE_SCHEMA,
    "norlund": NORLUND_SCHEMA,
    "gamma-h": GAMMAH_SCHEMA,
    "corpus": CORPUS_SCHEMA,
}


def _is_rational_schema(schema) -> bool:
    return schema is RATIONAL or any(schema is s for s in RATIONAL["anyOf"])


def validate(doc, schema_name: str) -> None:
    try:
        jsonschema.validate(doc, SCHEMAS[schema_name])
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        msg = f"{exc.instance!r} is not a rational number" if _is_rational_schema(exc.schema) else exc.message
        raise InputError(msg, field=path) from None


def loads(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                         field=source) from None


def load_file(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc), field=path) from None
    return loads(text, path)


def _poly(v, field) -> Poly:
    try:
        return Poly(as_rational(c) for c in v)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(str(exc), field=field) from None


def _rat(v, field) -> Fraction:
    try:
        return as_rational(v)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(str(exc), field=field) from None


def equation_from_json(doc) -> DifferenceEquation:
    validate(doc, "equation")
    h = _rat(doc.get("h", 1), "h")
    if "a" in doc:
        vals = {k: _rat(doc[k], k) for k in "abcdf"}
        hyp = HypergeometricData(**vals, h=h)
        lam = _rat(doc["lambda"], "lambda") if "lambda" in doc else lambda_n(hyp, doc["n"])
        return hyp.equation(lam)
    return DifferenceEquation(_poly(doc["g"], "g"), _poly(doc["r"], "r"), _poly(doc["u"], "u"), h)


def equation_to_json(eq: DifferenceEquation) -> dict:
    return {
        "g": [str(c) for c in eq.g.coeffs],
        "r": [str(c) for c in eq.r.coeffs],
        "u": [str(c) for c in eq.u.coeffs],
        "h": str(eq.h),
    }


def roots_from_json(doc) -> list:
    if not isinstance(doc, list):
        raise InputError("expected a JSON array of roots", field="<root>")
    out = []
    for i, v in enumerate(doc):
        if isinstance(v, bool) or not isinstance(v, (str, int, float)):
            raise InputError("root must be a decimal string or rational", field=f"[{i}]")
        out.append(v)
    return out


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)
