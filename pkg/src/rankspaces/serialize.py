"""JSON encodings of spaces, algebras, verdicts and certificates, and
instance-file parsing with JSON-pointer diagnostics.

Scalars are strings: ``"a/b"`` or ``"a"`` over Q, ``"k mod p"`` over F_p.
Matrices are row-major nested arrays of scalar strings. Lie-algebra bracket
indices are 1-based in JSON (e_1, ..., e_n) and 0-based in Python.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path
from typing import Any, IO

import jsonschema

from .bridge import ClassificationReport
from .errors import DimensionMismatch, InstanceError, ScalarParseError
from .fields import Field, field_from_tag
from .lie import LieAlgebra, Representation
from .linalg import Mat, Subspace
from .matrix_space import CompressionCertificate, MatrixSpace, RankVerdict
from .pencil import PencilInvariants

KINDS = ("matrix-space", "lie-algebra", "representation", "pencil")

_SCALAR = {"type": ["string", "integer"]}
_MATRIX = {
    "type": "array",
    "minItems": 1,
    "items": {"anyOf": [_SCALAR, {"type": "array", "minItems": 1, "items": _SCALAR}]},
}
_FIELD = {"type": "string", "pattern": "^(Q|Fp:[0-9]+)$"}

SPACE_SCHEMA = {
    "type": "object",
    "required": ["field", "rows", "cols", "basis"],
    "properties": {
        "field": _FIELD,
        "rows": {"type": "integer", "minimum": 1},
        "cols": {"type": "integer", "minimum": 1},
        "basis": {"type": "array", "minItems": 1, "items": _MATRIX},
    },
}

PENCIL_SCHEMA = {
    **SPACE_SCHEMA,
    "properties": {**SPACE_SCHEMA["properties"],
                   "basis": {"type": "array", "minItems": 2, "maxItems": 2, "items": _MATRIX}},
}

ALGEBRA_SCHEMA = {
    "type": "object",
    "required": ["dim"],
    "properties": {
        "field": _FIELD,
        "dim": {"type": "integer", "minimum": 1},
        "brackets": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["i", "j", "coeffs"],
                "properties": {
                    "i": {"type": "integer", "minimum": 1},
                    "j": {"type": "integer", "minimum": 1},
                    "coeffs": {"type": "array", "items": _SCALAR},
                },
            },
        },
    },
}

REPRESENTATION_SCHEMA = {
    "type": "object",
    "required": ["algebra", "dimV", "rho"],
    "properties": {
        "algebra": {"anyOf": [{"type": "string"}, ALGEBRA_SCHEMA]},
        "dimV": {"type": "integer", "minimum": 1},
        "rho": {"type": "array", "items": _MATRIX},
    },
}

INSTANCE_SCHEMA = {
    "type": "object",
    "required": ["kind"],
    "properties": {
        "kind": {"enum": list(KINDS)},
        "name": {"type": "string"},
        "metadata": {"type": "object"},
    },
}

_SCHEMAS = {
    "matrix-space": SPACE_SCHEMA,
    "pencil": PENCIL_SCHEMA,
    "lie-algebra": ALGEBRA_SCHEMA,
    "representation": REPRESENTATION_SCHEMA,
}


def _ptr(*parts) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in parts)


def _validate(doc: Any, schema: dict, base: tuple = ()):
    err = jsonschema.exceptions.best_match(jsonschema.Draft202012Validator(schema).iter_errors(doc))
    if err is not None:
        raise InstanceError(err.message, _ptr(*base, *err.absolute_path))


def _field(tag: str, base: tuple) -> Field:
    try:
        return field_from_tag(tag)
    except ValueError as exc:
        raise InstanceError(str(exc), _ptr(*base, "field")) from None


def _scalar(F: Field, raw, where: tuple):
    try:
        return F.parse(raw)
    except ScalarParseError as exc:
        raise InstanceError(str(exc), _ptr(*where)) from None


def _matrix(F: Field, raw: list, where: tuple, shape: tuple[int, int] | None = None) -> Mat:
    nested = [isinstance(x, list) for x in raw]
    if all(nested):
        rows = [[_scalar(F, x, (*where, i, j)) for j, x in enumerate(r)] for i, r in enumerate(raw)]
    elif not any(nested) and shape is not None:
        m, n = shape
        if len(raw) != m * n:
            raise InstanceError(f"flat matrix has {len(raw)} entries, expected {m * n}", _ptr(*where))
        flat = [_scalar(F, x, (*where, k)) for k, x in enumerate(raw)]
        rows = [flat[i * n:(i + 1) * n] for i in range(m)]
    else:
        raise InstanceError("matrix must be an array of row arrays", _ptr(*where))
    if len({len(r) for r in rows}) != 1:
        raise InstanceError("ragged matrix rows", _ptr(*where))
    M = Mat(F, tuple(tuple(r) for r in rows))
    if shape is not None and M.shape != tuple(shape):
        raise InstanceError(f"matrix has shape {M.shape}, expected {tuple(shape)}", _ptr(*where))
    return M


def space_from_json(doc: dict, base: tuple = ()) -> MatrixSpace:
    _validate(doc, SPACE_SCHEMA, base)
    F = _field(doc["field"], base)
    shape = (doc["rows"], doc["cols"])
    mats = tuple(_matrix(F, A, (*base, "basis", k), shape) for k, A in enumerate(doc["basis"]))
    try:
        return MatrixSpace(F, shape[0], shape[1], mats)
    except DimensionMismatch as exc:
        raise InstanceError(str(exc), _ptr(*base, "basis")) from None


def algebra_from_json(doc: dict, base: tuple = ()) -> LieAlgebra:
    _validate(doc, ALGEBRA_SCHEMA, base)
    F = _field(doc.get("field", "Q"), base)
    n = doc["dim"]
    brackets = {}
    for k, b in enumerate(doc.get("brackets", [])):
        i, j = b["i"] - 1, b["j"] - 1
        where = (*base, "brackets", k)
        if i >= n or j >= n:
            raise InstanceError(f"index out of range for dim {n}", _ptr(*where))
        if i == j:
            raise InstanceError("bracket of a basis element with itself", _ptr(*where))
        if len(b["coeffs"]) != n:
            raise InstanceError(f"expected {n} coefficients", _ptr(*where, "coeffs"))
        key = (min(i, j), max(i, j))
        if key in {(min(a, c), max(a, c)) for a, c in brackets}:
            raise InstanceError("pair given twice", _ptr(*where))
        brackets[(i, j)] = [_scalar(F, c, (*where, "coeffs", q)) for q, c in enumerate(b["coeffs"])]
    return LieAlgebra.from_brackets(F, n, brackets, name=doc.get("name", ""))


def representation_from_json(doc: dict, base: tuple = (), origin: Path | None = None) -> Representation:
    _validate(doc, REPRESENTATION_SCHEMA, base)
    alg = doc["algebra"]
    if isinstance(alg, str):
        inst = load_instance(resolve_path(alg, origin))
        if inst.kind != "lie-algebra":
            raise InstanceError(f"{alg} is not a lie-algebra instance", _ptr(*base, "algebra"))
        g = inst.payload
    else:
        g = algebra_from_json(alg, (*base, "algebra"))
    v = doc["dimV"]
    if len(doc["rho"]) != g.dim:
        raise InstanceError(f"expected {g.dim} matrices", _ptr(*base, "rho"))
    mats = tuple(_matrix(g.field, M, (*base, "rho", k), (v, v)) for k, M in enumerate(doc["rho"]))
    return Representation(g, v, mats)


@dataclass
class InstanceFile:
    kind: str
    payload: Any
    name: str = ""
    metadata: dict = dc_field(default_factory=dict)
    path: Path | None = None


def corpus_dir():
    return resources.files("rankspaces") / "corpus"


def resolve_path(name: str, origin: Path | None = None) -> Path:
    """An existing file path, else a sibling of ``origin``, else a bundled corpus file."""
    p = Path(name)
    if p.exists():
        return p
    if origin is not None and (origin.parent / name).exists():
        return origin.parent / name
    for candidate in (name, f"{name}.json"):
        c = corpus_dir() / candidate
        if c.is_file():
            return Path(str(c))
    raise FileNotFoundError(name)


def parse_instance(doc_or_text: Any, origin: Path | None = None) -> InstanceFile:
    if isinstance(doc_or_text, (str, bytes)):
        try:
            doc = json.loads(doc_or_text)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"malformed JSON: {exc}") from None
    else:
        doc = doc_or_text
    _validate(doc, INSTANCE_SCHEMA)
    kind = doc["kind"]
    _validate(doc, _SCHEMAS[kind])
    if kind in ("matrix-space", "pencil"):
        payload = space_from_json(doc)
    elif kind == "lie-algebra":
        payload = algebra_from_json(doc)
    else:
        payload = representation_from_json(doc, origin=origin)
    return InstanceFile(kind, payload, doc.get("name", ""), doc.get("metadata", {}), origin)


def load_instance(path_or_stream: str | Path | IO) -> InstanceFile:
    if hasattr(path_or_stream, "read"):
        return parse_instance(path_or_stream.read())
    path = Path(path_or_stream)
    try:
        text = path.read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InstanceError(f"not UTF-8: {exc}") from None
    return parse_instance(text, origin=path)


# --- encoders ----------------------------------------------------------------

def scalar_to_json(F: Field, x) -> str:
    return F.format(x)


def mat_to_json(M: Mat) -> list:
    return [[M.field.format(x) for x in r] for r in M.rows]


def vector_to_json(F: Field, v) -> list:
    return [F.format(F(x)) for x in v]


def space_to_json(space: MatrixSpace, kind: str | None = None) -> dict:
    doc = {"field": space.field.tag, "rows": space.rows, "cols": space.cols,
           "basis": [mat_to_json(A) for A in space.basis]}
    if kind:
        doc = {"kind": kind, **doc}
    return doc


def subspace_to_json(U: Subspace) -> dict:
    return {"ambient": U.ambient, "dim": U.dim,
            "basis": [vector_to_json(U.field, v) for v in U.basis]}


def subspace_from_json(doc: dict, F: Field) -> Subspace:
    vecs = [[F.parse(x) for x in v] for v in doc["basis"]]
    return Subspace.span(F, doc["ambient"], vecs)


def certificate_to_json(cert: CompressionCertificate | None) -> dict | None:
    if cert is None:
        return None
    return {"field": cert.Vprime.field.tag, "k1": cert.k1, "k2": cert.k2, "rank": cert.rank,
            "split_rule": cert.split_rule,
            "Vprime": subspace_to_json(cert.Vprime), "Wprime": subspace_to_json(cert.Wprime)}


def certificate_from_json(doc: dict) -> CompressionCertificate:
    """Accepts a certificate object or any report carrying one under ``certificate``."""
    if "certificate" in doc and "k1" not in doc:
        doc = doc["certificate"]
        if doc is None:
            raise InstanceError("report carries no certificate", "/certificate")
    try:
        F = field_from_tag(doc["field"])
        return CompressionCertificate(doc["k1"], doc["k2"], subspace_from_json(doc["Vprime"], F),
                                      subspace_from_json(doc["Wprime"], F),
                                      doc.get("split_rule", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError(f"bad certificate: {exc}") from None


def verdict_to_json(v: RankVerdict, field: Field) -> dict:
    doc: dict = {"generic_rank": v.generic_rank, "witness": vector_to_json(field, v.witness),
                 "upper_bound": v.upper_bound.value, "minors_checked": v.minors_checked}
    c = v.constant_rank
    if c is not None:
        cr: dict = {"status": c.status.value}
        if c.prime is not None:
            cr["prime"] = c.prime
            cr["points_checked"] = c.points_checked
        if c.witness is not None:
            wf = field_from_tag(c.witness_field)
            cr["witness"] = vector_to_json(wf, c.witness)
            cr["witness_rank"] = c.witness_rank
            cr["witness_field"] = c.witness_field
        if c.gcd is not None:
            cr["gcd"] = c.gcd.format(["s", "t"])
            cr["gcd_degree"] = c.gcd.degree()
        doc["constant_rank"] = cr
    return doc


def pencil_to_json(inv: PencilInvariants) -> dict:
    return {"normal_rank": inv.normal_rank,
            "right_minimal_indices": list(inv.right_minimal_indices),
            "left_minimal_indices": list(inv.left_minimal_indices),
            "minor_gcd_degree": inv.minor_gcd_degree,
            "gcd": inv.gcd.format(["s", "t"])}


def algebra_to_json(g: LieAlgebra) -> dict:
    F = g.field
    return {"field": F.tag, "dim": g.dim, "name": g.name,
            "brackets": [{"i": i + 1, "j": j + 1, "coeffs": vector_to_json(F, v)}
                         for (i, j), v in sorted(g.brackets().items())]}


def representation_to_json(pi: Representation) -> dict:
    return {"algebra": algebra_to_json(pi.algebra), "dimV": pi.dimV,
            "rho": [mat_to_json(M) for M in pi.matrices]}


def report_to_json(r: ClassificationReport) -> dict:
    return {
        "primitive": r.primitive,
        "split": list(r.split) if r.split else None,
        "certificate": certificate_to_json(r.compression),
        "bundle_view": dict(r.bundle_view),
        "rep_view": [{"side": e.side, "algebra_dim": e.algebra.dim, "algebra": e.algebra.name,
                      "representation": representation_to_json(e.representation),
                      "irreducible": e.irreducible, "enveloping_dim": e.enveloping_dim}
                     for e in r.rep_view],
        "metadata": dict(r.metadata),
    }


def _encode(doc: Any, indent: int) -> str:
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(doc, dict):
        if not doc:
            return "{}"
        items = [f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {_encode(doc[k], indent + 1)}"
                 for k in sorted(doc)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(doc, (list, tuple)):
        if all(not isinstance(x, (dict, list, tuple)) for x in doc):
            return "[" + ", ".join(json.dumps(x, ensure_ascii=False) for x in doc) + "]"
        return "[\n" + ",\n".join(inner + _encode(x, indent + 1) for x in doc) + "\n" + pad + "]"
    return json.dumps(doc, ensure_ascii=False)


def dumps(doc: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, arrays of scalars
    kept on one line, trailing newline."""
    return _encode(doc, 0) + "\n"
