"""JSON wire formats.

Schemas:

* radial function  {"rank": 2 | "infinity", "role": "phi"|"psi", "values": [...]}
* atomic measure   {"atoms": [{"s": 0.5, "w": 1.0}, ...]}
* moment sequence  {"moments": [...]}

Numbers are plain JSON numbers in the float backend and "p/q" strings in
the exact backend.  Serialization is canonical: parse(serialize(x))
returns x and re-serializes to the identical byte string.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .classify import LinearBoundReport, Verdict
from .errors import SchemaError
from .moments import AtomicMeasure, MomentVerdict, RadialFunction
from .oracle import GramReport, NonradialReport
from .scalars import Scalar
from .words import Rank


def scalar_to_json(x: Scalar):
    if isinstance(x, Fraction):
        return str(x)  # "p/q", or "p" when integral
    return x


def _parse_scalar(value, exact: bool, pointer: str) -> Scalar:
    if isinstance(value, bool):
        raise SchemaError("expected a number", pointer)
    if isinstance(value, str):
        try:
            frac = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"bad rational literal {value!r}", pointer) from None
        return frac if exact else float(frac)
    if isinstance(value, int):
        return Fraction(value) if exact else float(value)
    if isinstance(value, float):
        if exact:
            raise SchemaError(
                "float literal not allowed in exact mode; use a 'p/q' string", pointer
            )
        return value
    raise SchemaError(f"expected a number, got {type(value).__name__}", pointer)


def _parse_rank(value, pointer: str) -> Rank:
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity"):
        return Rank.infinite()
    if isinstance(value, int) and not isinstance(value, bool) and value >= 1:
        return Rank.finite(value)
    raise SchemaError(f"rank must be an integer >= 1 or 'infinity', got {value!r}", pointer)


def parse_radial_function(data: Any, exact: bool = False) -> RadialFunction:
    if not isinstance(data, dict):
        raise SchemaError("expected an object")
    for key in ("rank", "values"):
        if key not in data:
            raise SchemaError(f"missing key {key!r}")
    rank = _parse_rank(data["rank"], "/rank")
    role = data.get("role", "phi")
    if role not in ("phi", "psi"):
        raise SchemaError(f"role must be 'phi' or 'psi', got {role!r}", "/role")
    values = data["values"]
    if not isinstance(values, list) or not values:
        raise SchemaError("values must be a non-empty array", "/values")
    parsed = [
        _parse_scalar(v, exact, f"/values/{i}") for i, v in enumerate(values)
    ]
    return RadialFunction(rank, tuple(parsed), role=role)


def parse_atomic_measure(data: Any, exact: bool = False) -> AtomicMeasure:
    if not isinstance(data, dict) or "atoms" not in data:
        raise SchemaError("expected an object with an 'atoms' array")
    atoms = data["atoms"]
    if not isinstance(atoms, list):
        raise SchemaError("atoms must be an array", "/atoms")
    parsed = []
    for i, atom in enumerate(atoms):
        if not isinstance(atom, dict) or "s" not in atom or "w" not in atom:
            raise SchemaError("atom must be an object with 's' and 'w'", f"/atoms/{i}")
        parsed.append(
            (
                _parse_scalar(atom["s"], exact, f"/atoms/{i}/s"),
                _parse_scalar(atom["w"], exact, f"/atoms/{i}/w"),
            )
        )
    return AtomicMeasure(tuple(parsed))


def parse_moments(data: Any, exact: bool = False) -> list[Scalar]:
    if not isinstance(data, dict) or "moments" not in data:
        raise SchemaError("expected an object with a 'moments' array")
    moments = data["moments"]
    if not isinstance(moments, list) or not moments:
        raise SchemaError("moments must be a non-empty array", "/moments")
    return [_parse_scalar(v, exact, f"/moments/{i}") for i, v in enumerate(moments)]


def parse_payload(data: Any, exact: bool = False):
    """Dispatch on the schema: radial function, atomic measure, or moments."""
    if isinstance(data, dict):
        if "values" in data:
            return parse_radial_function(data, exact)
        if "atoms" in data:
            return parse_atomic_measure(data, exact)
        if "moments" in data:
            return parse_moments(data, exact)
    raise SchemaError("payload matches no known schema (values / atoms / moments)")


def to_jsonable(obj) -> Any:
    """Convert a package value to plain JSON-compatible data."""
    if isinstance(obj, RadialFunction):
        return {
            "rank": obj.rank.json_value(),
            "role": obj.role,
            "values": [scalar_to_json(v) for v in obj.values],
        }
    if isinstance(obj, AtomicMeasure):
        return {
            "atoms": [
                {"s": scalar_to_json(s), "w": scalar_to_json(w)} for s, w in obj.atoms
            ]
        }
    if isinstance(obj, MomentVerdict):
        witness = None
        if obj.witness is not None:
            witness = {"matrix": obj.witness[0], "min_eig": obj.witness[1]}
        return {"status": obj.status, "witness": witness, "floors": dict(obj.floors)}
    if isinstance(obj, Verdict):
        return {
            "status": obj.status,
            "depth": obj.depth,
            "moments": [scalar_to_json(v) for v in obj.moments],
            "moment_verdict": to_jsonable(obj.moment_verdict),
        }
    if isinstance(obj, GramReport):
        return {
            "radius": obj.radius,
            "dim": obj.dim,
            "min_eig": obj.min_eig,
            "verdict": obj.verdict,
            "witness": list(obj.witness) if obj.witness is not None else None,
        }
    if isinstance(obj, NonradialReport):
        return {
            "kernel": to_jsonable(obj.kernel),
            "bound_violations": [
                {"n": n, "value": v, "length": l} for n, v, l in obj.bound_violations
            ],
        }
    if isinstance(obj, LinearBoundReport):
        return {
            "constant": scalar_to_json(obj.constant),
            "rank_factor": scalar_to_json(obj.rank_factor),
            "margins": [scalar_to_json(v) for v in obj.margins],
            "holds": obj.holds,
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True)


def loads_payload(text: str, exact: bool = False):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return parse_payload(data, exact)
