"""JSON interchange for structure-constant data.

Document layout::

    {"field": "q" | "fp:p",
     "objects": {name: object, ...},
     "characters": {name: {"hopf": name, "coords": [scalar, ...]}, ...}}

A Hopf object has ``kind: "hopf"`` with ``basis``, ``mult[i][j][k]``,
``unit[k]``, ``comult[i][j][k]``, ``counit[i]`` and ``antipode[i][j]``
(coefficient of e_j in S(e_i)).  A comodule algebra has
``kind: "comodule_algebra"``, ``basis``, ``mult``, ``unit``, ``hopf`` (name
of a Hopf object earlier in the file) and either ``coaction[i][j][k]`` or the
shorthand ``grading: {"group": name, "degrees": [label, ...]}`` for a
group-graded algebra.  Scalars are strings ``"n"`` or ``"n/d"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from .constructions import GradedAlgebraSpec, graded_to_comodule
from .corep import ComoduleAlgebraSC, require_comodule_algebra
from .exactlin import MAX_DIM, DimensionError, Field, FieldError
from .hopfcore import AlgebraSC, HopfSC, ValidationError, validate_hopf


class MalformedInput(ValueError):
    """The document cannot be parsed into structure constants."""


@dataclass
class Document:
    field: Field
    hopfs: dict = dc_field(default_factory=dict)
    comodules: dict = dc_field(default_factory=dict)
    gradings: dict = dc_field(default_factory=dict)  # comodule name -> (group name, degree labels)
    characters: dict = dc_field(default_factory=dict)  # name -> (hopf name, coords)
    order: list = dc_field(default_factory=list)

    def hopf_name(self, H: HopfSC) -> str:
        for k, v in self.hopfs.items():
            if v is H:
                return k
        raise KeyError("Hopf algebra not in document")

    def add_hopf(self, name: str, H: HopfSC) -> None:
        if name not in self.hopfs:
            self.order.append(name)
        self.hopfs[name] = H

    def add_comodule(self, name: str, A: ComoduleAlgebraSC, grading=None) -> None:
        if not any(v is A.hopf for v in self.hopfs.values()):
            self.add_hopf(A.hopf.name or f"{name}_hopf", A.hopf)
        if name not in self.comodules:
            self.order.append(name)
        self.comodules[name] = A
        if grading is not None:
            self.gradings[name] = grading


# -- parsing ------------------------------------------------------------------


def _need(obj: dict, key: str, where: str):
    if key not in obj:
        raise MalformedInput(f"{where}: missing key {key!r}")
    return obj[key]


def _tensor(F: Field, data, shape: tuple, where: str) -> np.ndarray:
    try:
        arr = np.array(data, dtype=object)
    except Exception as exc:  # ragged nesting
        raise MalformedInput(f"{where}: {exc}") from None
    if arr.shape != shape:
        raise MalformedInput(f"{where}: shape {arr.shape}, expected {shape}")
    try:
        return F.array(arr)
    except FieldError as exc:
        raise MalformedInput(f"{where}: {exc}") from None


def _labels(obj, where) -> tuple:
    basis = _need(obj, "basis", where)
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        raise MalformedInput(f"{where}: basis must be a non-empty list of strings")
    if len(set(basis)) != len(basis):
        raise MalformedInput(f"{where}: duplicate basis labels")
    if len(basis) > MAX_DIM:
        raise DimensionError(f"{where}: dimension {len(basis)} exceeds cap {MAX_DIM}")
    return tuple(basis)


def parse_document(data: dict, field: Field | None = None) -> Document:
    """Build (and validate) every object in the document."""
    if not isinstance(data, dict):
        raise MalformedInput("document must be a JSON object")
    try:
        F = field if field is not None else Field.parse(str(data.get("field", "q")))
    except FieldError as exc:
        raise MalformedInput(str(exc)) from None
    doc = Document(F)
    objects = data.get("objects", {})
    if not isinstance(objects, dict):
        raise MalformedInput("'objects' must be a mapping")
    for name, obj in objects.items():
        where = f"object {name!r}"
        if not isinstance(obj, dict):
            raise MalformedInput(f"{where}: must be a JSON object")
        kind = _need(obj, "kind", where)
        labels = _labels(obj, where)
        n = len(labels)
        mult = _tensor(F, _need(obj, "mult", where), (n, n, n), f"{where} mult")
        unit = _tensor(F, _need(obj, "unit", where), (n,), f"{where} unit")
        if kind == "hopf":
            comult = _tensor(F, _need(obj, "comult", where), (n, n, n), f"{where} comult")
            counit = _tensor(F, _need(obj, "counit", where), (n,), f"{where} counit")
            S = _tensor(F, _need(obj, "antipode", where), (n, n), f"{where} antipode")
            H = HopfSC.build(F, labels, mult, unit, comult, counit, S.T.copy(), name=name)
            problems = validate_hopf(H)
            if problems:
                raise ValidationError([f"{name}: {p}" for p in problems])
            doc.add_hopf(name, H)
        elif kind == "comodule_algebra":
            hname = _need(obj, "hopf", where)
            if hname not in doc.hopfs:
                raise MalformedInput(f"{where}: unknown Hopf algebra {hname!r}")
            H = doc.hopfs[hname]
            alg = AlgebraSC(F, labels, mult, unit)
            if "grading" in obj:
                g = obj["grading"]
                group = doc.hopfs.get(_need(g, "group", where))
                if group is None or group is not H:
                    raise MalformedInput(f"{where}: grading group must be the object's Hopf algebra")
                degs = _need(g, "degrees", where)
                if not isinstance(degs, list) or len(degs) != n or any(d not in H.labels for d in degs):
                    raise MalformedInput(f"{where}: degrees must list one group label per basis element")
                spec = GradedAlgebraSpec(alg, H, tuple(H.labels.index(d) for d in degs))
                problems = spec.validate()
                if problems:
                    raise ValidationError([f"{name}: {p}" for p in problems])
                A = graded_to_comodule(spec, name)
                doc.add_comodule(name, A, (g["group"], list(degs)))
            else:
                r = _tensor(F, _need(obj, "coaction", where), (n, n, H.dim), f"{where} coaction")
                A = ComoduleAlgebraSC(alg, H, r, name)
                try:
                    require_comodule_algebra(A)
                except ValidationError as exc:
                    raise ValidationError([f"{name}: {p}" for p in exc.violations]) from None
                doc.add_comodule(name, A)
        else:
            raise MalformedInput(f"{where}: unknown kind {kind!r}")
    chars = data.get("characters", {})
    if not isinstance(chars, dict):
        raise MalformedInput("'characters' must be a mapping")
    for name, ch in chars.items():
        hname = _need(ch, "hopf", f"character {name!r}")
        if hname not in doc.hopfs:
            raise MalformedInput(f"character {name!r}: unknown Hopf algebra {hname!r}")
        coords = _tensor(F, _need(ch, "coords", f"character {name!r}"), (doc.hopfs[hname].dim,), f"character {name!r}")
        doc.characters[name] = (hname, coords)
    return doc


def load(path: str, field: Field | None = None) -> Document:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: not valid JSON ({exc})") from None
    except OSError as exc:
        raise MalformedInput(f"{path}: {exc.strerror}") from None
    return parse_document(data, field)


# -- serialization ---------------------------------------------------------------


def _s(F: Field, arr) -> list:
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return F.fmt(arr.item())
    return [_s(F, x) for x in arr]


def hopf_to_json(H: HopfSC) -> dict:
    F = H.field
    return {
        "kind": "hopf",
        "basis": list(H.labels),
        "mult": _s(F, H.mult),
        "unit": _s(F, H.unit),
        "comult": _s(F, H.comult),
        "counit": _s(F, H.counit),
        "antipode": _s(F, H.antipode.T),
    }


def comodule_to_json(A: ComoduleAlgebraSC, hopf_name: str, grading=None) -> dict:
    F = A.field
    out = {
        "kind": "comodule_algebra",
        "basis": list(A.labels),
        "mult": _s(F, A.alg.mult),
        "unit": _s(F, A.alg.unit),
        "hopf": hopf_name,
    }
    if grading is not None:
        out["grading"] = {"group": grading[0], "degrees": list(grading[1])}
    else:
        out["coaction"] = _s(F, A.coaction)
    return out


def serialize(doc: Document) -> dict:
    F = doc.field
    objects = {}
    for name in doc.order:
        if name in doc.hopfs:
            objects[name] = hopf_to_json(doc.hopfs[name])
        else:
            A = doc.comodules[name]
            objects[name] = comodule_to_json(A, doc.hopf_name(A.hopf), doc.gradings.get(name))
    out = {"field": str(F), "objects": objects}
    if doc.characters:
        out["characters"] = {
            k: {"hopf": h, "coords": _s(F, c)} for k, (h, c) in doc.characters.items()
        }
    return out


def _pretty(x, indent: int) -> str:
    pad, inner = " " * indent, " " * (indent + 1)
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_pretty(v, indent + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(x, list) and any(isinstance(v, (list, dict)) for v in x):
        items = [inner + _pretty(v, indent + 1) for v in x]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(x)


def dumps(data) -> str:
    """Deterministic JSON text; rows of scalars stay on one line."""
    return _pretty(data, 0) + "\n"
