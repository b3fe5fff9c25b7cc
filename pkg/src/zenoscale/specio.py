"""JSON documents describing spectral measures.

The on-disk format is a small tagged union:

  {"type": "pp", "atoms": [[energy, weight], ...]}
  {"type": "ac", "family": "gaussian", "mean": 0.0, "sigma": 1.0}
  {"type": "ac", "family": "lorentzian", "center": 0.0, "gamma": 1.0}
  {"type": "ac", "family": "uniform", "a": 0.0, "b": 1.0}
  {"type": "ac", "family": "tabulated", "grid": [...], "density": [...]}
  {"type": "cantor", "offset": 0.0, "scale": 1.0, "depth": 40}
  {"type": "mixture", "components": [{"weight": 0.5, "measure": {...}}, ...]}

Parsing is strict: unknown or missing fields raise SchemaError naming the
offending field path, and malformed JSON raises SchemaError with the line
number.  Cantor fields are optional with the defaults shown.  Emitting and
re-parsing a validated measure reproduces it exactly (floats survive the
JSON round trip bit for bit).
"""
from __future__ import annotations

import json
from typing import Any

from .errors import SchemaError
from .measures import (
    CantorMeasure,
    CANTOR_DEFAULT_DEPTH,
    EnergyAtom,
    GaussianMeasure,
    LorentzianMeasure,
    Mixture,
    PurePointMeasure,
    SpectralMeasure,
    TabulatedMeasure,
    UniformMeasure,
    validate,
)


def _child(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def _require_object(obj: Any, path: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"expected an object, got {type(obj).__name__}",
                          field=path or "<document>")
    return obj


def _check_keys(obj: dict, required: set, optional: set, path: str) -> None:
    for key in obj:
        if key not in required and key not in optional:
            raise SchemaError("unknown field", field=_child(path, key))
    for key in required:
        if key not in obj:
            raise SchemaError("missing required field", field=_child(path, key))


def _number(obj: dict, key: str, path: str) -> float:
    value = obj[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(f"expected a number, got {type(value).__name__}",
                          field=_child(path, key))
    return float(value)


def _number_array(obj: dict, key: str, path: str) -> tuple:
    value = obj[key]
    if not isinstance(value, list):
        raise SchemaError(f"expected an array, got {type(value).__name__}",
                          field=_child(path, key))
    out = []
    for i, item in enumerate(value):
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise SchemaError(f"expected a number, got {type(item).__name__}",
                              field=f"{_child(path, key)}[{i}]")
        out.append(float(item))
    return tuple(out)


def _parse_atoms(obj: dict, path: str) -> tuple:
    value = obj["atoms"]
    if not isinstance(value, list):
        raise SchemaError(f"expected an array, got {type(value).__name__}",
                          field=_child(path, "atoms"))
    atoms = []
    for i, pair in enumerate(value):
        item_path = f"{_child(path, 'atoms')}[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError("expected an [energy, weight] pair", field=item_path)
        for v in pair:
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise SchemaError(f"expected a number, got {type(v).__name__}",
                                  field=item_path)
        atoms.append(EnergyAtom(float(pair[0]), float(pair[1])))
    return tuple(atoms)


_AC_FIELDS = {
    "gaussian": {"mean", "sigma"},
    "lorentzian": {"center", "gamma"},
    "uniform": {"a", "b"},
    "tabulated": {"grid", "density"},
}


def _parse_raw(obj: Any, path: str) -> SpectralMeasure:
    obj = _require_object(obj, path)
    if "type" not in obj:
        raise SchemaError("missing required field", field=_child(path, "type"))
    kind = obj["type"]
    if kind == "pp":
        _check_keys(obj, {"type", "atoms"}, set(), path)
        return PurePointMeasure(_parse_atoms(obj, path))
    if kind == "ac":
        if "family" not in obj:
            raise SchemaError("missing required field", field=_child(path, "family"))
        family = obj["family"]
        if family not in _AC_FIELDS:
            raise SchemaError(
                f"unknown family {family!r}; expected one of {sorted(_AC_FIELDS)}",
                field=_child(path, "family"))
        _check_keys(obj, {"type", "family"} | _AC_FIELDS[family], set(), path)
        if family == "gaussian":
            return GaussianMeasure(_number(obj, "mean", path), _number(obj, "sigma", path))
        if family == "lorentzian":
            return LorentzianMeasure(_number(obj, "center", path), _number(obj, "gamma", path))
        if family == "uniform":
            return UniformMeasure(_number(obj, "a", path), _number(obj, "b", path))
        return TabulatedMeasure(_number_array(obj, "grid", path),
                                _number_array(obj, "density", path))
    if kind == "cantor":
        _check_keys(obj, {"type"}, {"offset", "scale", "depth"}, path)
        offset = _number(obj, "offset", path) if "offset" in obj else 0.0
        scale = _number(obj, "scale", path) if "scale" in obj else 1.0
        depth = CANTOR_DEFAULT_DEPTH
        if "depth" in obj:
            raw = obj["depth"]
            if isinstance(raw, bool) or not isinstance(raw, int):
                raise SchemaError(f"expected an integer, got {type(raw).__name__}",
                                  field=_child(path, "depth"))
            depth = raw
        return CantorMeasure(offset, scale, depth)
    if kind == "mixture":
        _check_keys(obj, {"type", "components"}, set(), path)
        raw = obj["components"]
        if not isinstance(raw, list):
            raise SchemaError(f"expected an array, got {type(raw).__name__}",
                              field=_child(path, "components"))
        components = []
        for i, entry in enumerate(raw):
            entry_path = f"{_child(path, 'components')}[{i}]"
            entry = _require_object(entry, entry_path)
            _check_keys(entry, {"weight", "measure"}, set(), entry_path)
            weight = _number(entry, "weight", entry_path)
            sub = _parse_raw(entry["measure"], _child(entry_path, "measure"))
            components.append((weight, sub))
        return Mixture(tuple(components))
    raise SchemaError(
        f"unknown type {kind!r}; expected one of ['ac', 'cantor', 'mixture', 'pp']",
        field=_child(path, "type"))


def parse_measure_dict(obj: Any) -> SpectralMeasure:
    """Parse an already-decoded JSON object into a validated measure."""
    return validate(_parse_raw(obj, ""))


def parse_measure_spec(text: str) -> SpectralMeasure:
    """Parse JSON text into a validated measure.

    Raises SchemaError for malformed JSON or schema violations and the
    MeasureError family for documents that parse but describe an invalid
    measure (negative weights, mass away from 1, ...).
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(exc.msg, line=exc.lineno) from None
    return parse_measure_dict(obj)


def emit_measure_dict(measure: SpectralMeasure) -> dict:
    """The JSON-ready dict for a measure; parse_measure_dict inverts it exactly
    on validated input."""
    if isinstance(measure, PurePointMeasure):
        return {"type": "pp", "atoms": [[a.energy, a.weight] for a in measure.atoms]}
    if isinstance(measure, GaussianMeasure):
        return {"type": "ac", "family": "gaussian",
                "mean": measure.mean, "sigma": measure.sigma}
    if isinstance(measure, LorentzianMeasure):
        return {"type": "ac", "family": "lorentzian",
                "center": measure.center, "gamma": measure.gamma}
    if isinstance(measure, UniformMeasure):
        return {"type": "ac", "family": "uniform", "a": measure.a, "b": measure.b}
    if isinstance(measure, TabulatedMeasure):
        return {"type": "ac", "family": "tabulated",
                "grid": list(measure.grid), "density": list(measure.density)}
    if isinstance(measure, CantorMeasure):
        return {"type": "cantor", "offset": measure.offset,
                "scale": measure.scale, "depth": measure.depth}
    if isinstance(measure, Mixture):
        return {"type": "mixture",
                "components": [{"weight": w, "measure": emit_measure_dict(m)}
                               for w, m in measure.components]}
    raise TypeError(f"not a spectral measure: {measure!r}")


def emit_measure_spec(measure: SpectralMeasure) -> str:
    """Serialize a measure to JSON text (two-space indent, trailing newline)."""
    return json.dumps(emit_measure_dict(measure), indent=2) + "\n"
