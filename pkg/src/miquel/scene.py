"""Strict JSON scene documents for the command-line tools.

A scene is a single object with vertex keys "A", "B", "C" and optional
"P", "triad", "theta" and "options"; anything else is rejected. Emission is
canonical (fixed key order, full-precision floats) so parse -> emit -> parse
is a fixed point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import SceneError
from .kernel import Point, Triangle

_TOP_KEYS = ("A", "B", "C", "P", "triad", "theta", "options")
_OPTION_KEYS = ("width", "labels", "vertex")


@dataclass(frozen=True)
class SceneSpec:
    triangle: Triangle
    point: Point | None = None
    triad_params: tuple[float, float, float] | None = None
    theta: float | None = None
    options: dict = field(default_factory=dict)


def _pair(value, key: str) -> tuple[float, float]:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        raise SceneError(f"{key!r} must be a pair of numbers")
    return (float(value[0]), float(value[1]))


def parse_scene(text: str) -> SceneSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SceneError("scene must be a JSON object")
    unknown = set(doc) - set(_TOP_KEYS)
    if unknown:
        raise SceneError(f"unknown scene fields: {sorted(unknown)}")
    for key in ("A", "B", "C"):
        if key not in doc:
            raise SceneError(f"missing vertex {key!r}")
    a = Point(*_pair(doc["A"], "A"))
    b = Point(*_pair(doc["B"], "B"))
    c = Point(*_pair(doc["C"], "C"))
    triangle = Triangle(a, b, c)  # degenerate input raises the geometric error

    point = Point(*_pair(doc["P"], "P")) if "P" in doc else None

    triad = None
    if "triad" in doc:
        raw = doc["triad"]
        if (
            not isinstance(raw, (list, tuple))
            or len(raw) != 3
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw)
        ):
            raise SceneError("'triad' must be a triple of numbers")
        triad = (float(raw[0]), float(raw[1]), float(raw[2]))

    theta = None
    if "theta" in doc:
        if not isinstance(doc["theta"], (int, float)) or isinstance(doc["theta"], bool):
            raise SceneError("'theta' must be a number")
        theta = float(doc["theta"])

    options: dict = {}
    if "options" in doc:
        raw = doc["options"]
        if not isinstance(raw, dict):
            raise SceneError("'options' must be an object")
        bad = set(raw) - set(_OPTION_KEYS)
        if bad:
            raise SceneError(f"unknown option keys: {sorted(bad)}")
        if "width" in raw:
            if not isinstance(raw["width"], int) or isinstance(raw["width"], bool) or raw["width"] <= 0:
                raise SceneError("'width' must be a positive integer")
            options["width"] = raw["width"]
        if "labels" in raw:
            if not isinstance(raw["labels"], bool):
                raise SceneError("'labels' must be a boolean")
            options["labels"] = raw["labels"]
        if "vertex" in raw:
            if raw["vertex"] not in ("A", "B", "C"):
                raise SceneError("'vertex' must be A, B or C")
            options["vertex"] = raw["vertex"]

    return SceneSpec(triangle, point, triad, theta, options)


def emit_scene(spec: SceneSpec) -> str:
    doc: dict = {
        "A": [spec.triangle.a.x, spec.triangle.a.y],
        "B": [spec.triangle.b.x, spec.triangle.b.y],
        "C": [spec.triangle.c.x, spec.triangle.c.y],
    }
    if spec.point is not None:
        doc["P"] = [spec.point.x, spec.point.y]
    if spec.triad_params is not None:
        doc["triad"] = list(spec.triad_params)
    if spec.theta is not None:
        doc["theta"] = spec.theta
    if spec.options:
        doc["options"] = {k: spec.options[k] for k in _OPTION_KEYS if k in spec.options}
    return json.dumps(doc)
