"""JSON encodings for instances, points, and results.

Rationals travel as strings ("3/4", "2"); integers may also appear as bare
JSON numbers on input. Floats are rejected everywhere, since the whole
library promises exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadParameters
from .matrices import Instance, circular_matrix
from .rationals import format_rational, parse_rational


def load_instance(data) -> Instance:
    if not isinstance(data, dict):
        raise BadParameters("instance must be a JSON object")
    try:
        n = data["n"]
        raw_rows = data["rows"]
    except KeyError as exc:
        raise BadParameters(f"instance is missing {exc.args[0]!r}") from None
    if not isinstance(raw_rows, list) or not raw_rows:
        raise BadParameters("rows must be a non-empty array")
    rows = []
    for entry in raw_rows:
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)):
            raise BadParameters(f"each row must be [start, length], got {entry!r}")
        rows.append((entry[0], entry[1]))
    matrix = circular_matrix(n, rows)
    demands = data.get("b")
    if demands is None:
        demands = [1] * matrix.m
    if not isinstance(demands, list) or len(demands) != matrix.m:
        raise BadParameters(f"b must list one demand per row ({matrix.m})")
    for b in demands:
        if not isinstance(b, int) or isinstance(b, bool) or b < 0:
            raise BadParameters(f"demands must be non-negative ints, got {b!r}")
    weights = data.get("w")
    if weights is None:
        weights = [1] * matrix.n
    if not isinstance(weights, list) or len(weights) != matrix.n:
        raise BadParameters(f"w must list one weight per column ({matrix.n})")
    weights = [parse_rational(v) for v in weights]
    return Instance(matrix, tuple(demands), tuple(weights))


def load_point(data, n: int):
    if not isinstance(data, list) or len(data) != n:
        raise BadParameters(f"point must be an array of {n} rationals")
    return tuple(parse_rational(v) for v in data)


def point_json(point):
    return [format_rational(v) for v in point]


def inequality_json(ineq, facet=None) -> dict:
    out = {
        "coeffs": [int(c) for c in ineq.coeffs],
        "rhs": int(ineq.rhs),
        "kind": ineq.kind,
    }
    if facet is not None:
        out["facet"] = facet
    if ineq.witness:
        out["witness"] = _jsonable(ineq.witness)
    return out


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(value)
    return value


def separation_json(result) -> dict:
    out = {"verdict": result.verdict}
    if result.verdict == "violated":
        out["inequality"] = inequality_json(result.inequality)
        out["circuit"] = result.circuit.descriptor()
        out["certificate"] = format_rational(result.certificate)
    return out


def optimization_json(result) -> dict:
    return {
        "value": format_rational(result.value),
        "x": list(result.point),
        "beta": result.beta,
        "slices": [
            {"beta": b, "value": "infeasible" if v is None else format_rational(v)}
            for b, v in result.slices
        ],
    }
