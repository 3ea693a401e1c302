"""Labeled point configurations with exact rational coordinates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .linalg import norm_sq, vsub
from .rationals import format_rational, format_vector, parse_rational, parse_vector


@dataclass(frozen=True)
class SphereRef:
    center: tuple[Fraction, ...]
    radius_squared: Fraction

    def __post_init__(self):
        if self.radius_squared <= 0:
            raise ParseError("radius_squared must be positive")


@dataclass(frozen=True)
class PointConfiguration:
    dimension: int
    points: tuple[tuple[Fraction, ...], ...]
    sphere: SphereRef | None = None
    claimed_faces: tuple[frozenset[int], ...] | None = None

    def __post_init__(self):
        for p in self.points:
            if len(p) != self.dimension:
                raise ParseError(f"point {p} does not have dimension {self.dimension}")
        if len(set(self.points)) != len(self.points):
            raise ParseError("points must be distinct")
        if self.sphere is not None and len(self.sphere.center) != self.dimension:
            raise ParseError("sphere center dimension mismatch")
        if self.claimed_faces is not None:
            n = len(self.points)
            for f in self.claimed_faces:
                if any(not 0 <= i < n for i in f):
                    raise ParseError(f"claimed face {sorted(f)} has an index out of range")

    @property
    def n_points(self) -> int:
        return len(self.points)

    def dist_sq_to_center(self, i: int) -> Fraction:
        c = self.sphere.center if self.sphere else (Fraction(0),) * self.dimension
        return norm_sq(vsub(self.points[i], c))


def parse_points_json(text: str) -> PointConfiguration:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(raw, dict) or "dimension" not in raw or "coordinates" not in raw:
        raise ParseError("point file must contain 'dimension' and 'coordinates'")
    d = raw["dimension"]
    pts = tuple(parse_vector(row) for row in raw["coordinates"])
    sphere = None
    if raw.get("sphere") is not None:
        s = raw["sphere"]
        sphere = SphereRef(parse_vector(s["center"]), parse_rational(s["radius_squared"]))
    claimed = None
    if raw.get("faces") is not None:
        claimed = tuple(frozenset(map(int, f)) for f in raw["faces"])
    return PointConfiguration(d, pts, sphere, claimed)


def serialize_points_json(pc: PointConfiguration) -> str:
    data = {
        "dimension": pc.dimension,
        "coordinates": [format_vector(p) for p in pc.points],
    }
    if pc.sphere is not None:
        data["sphere"] = {
            "center": format_vector(pc.sphere.center),
            "radius_squared": format_rational(pc.sphere.radius_squared),
        }
    if pc.claimed_faces is not None:
        data["faces"] = [sorted(f) for f in pc.claimed_faces]
    return json.dumps(data, indent=1) + "\n"
