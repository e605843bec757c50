"""JSON encoding of exact objects.

Polynomials use ``{"var": ..., "lowest": ..., "coeffs": [...]}`` with
ascending exact-string coefficients; NFScalar coefficients become 4-arrays.
"""

from __future__ import annotations

import json

from .rings import GaugedFunction, LaurentPoly, Poly, RationalFunction
from .scalars import rational_to_str, scalar_from_json, scalar_to_json


def to_jsonable(obj):
    if isinstance(obj, Poly):
        return {"var": obj.var, "lowest": 0, "coeffs": [scalar_to_json(c) for c in obj.coeffs]}
    if isinstance(obj, LaurentPoly):
        return {"var": "zeta", "lowest": obj.lowest, "coeffs": [scalar_to_json(c) for c in obj.coeffs]}
    if isinstance(obj, RationalFunction):
        return {"num": to_jsonable(obj.num), "den": to_jsonable(obj.den)}
    if isinstance(obj, GaugedFunction):
        return {
            "body": to_jsonable(obj.body),
            "power": rational_to_str(obj.power),
            "e2": scalar_to_json(obj.e2),
            "e4": scalar_to_json(obj.e4),
        }
    return scalar_to_json(obj)


def from_jsonable(data):
    if isinstance(data, dict):
        if "num" in data:
            return RationalFunction(from_jsonable(data["num"]), from_jsonable(data["den"]))
        if "body" in data:
            return GaugedFunction(
                from_jsonable(data["body"]),
                scalar_from_json(data["power"]),
                scalar_from_json(data["e2"]),
                scalar_from_json(data["e4"]),
            )
        coeffs = [scalar_from_json(c) for c in data["coeffs"]]
        if data["var"] == "zeta" and data.get("lowest", 0) != 0:
            return LaurentPoly(data["lowest"], coeffs)
        if data.get("lowest", 0) != 0:
            raise ValueError("only zeta polynomials may have a non-zero lowest exponent")
        return Poly(data["var"], coeffs)
    return scalar_from_json(data)


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), separators=(",", ":"))


def loads(text: str):
    return from_jsonable(json.loads(text))
