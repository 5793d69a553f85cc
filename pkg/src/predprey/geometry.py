"""2D vector algebra and wrap-around (toroidal) world geometry.

Positions live on a torus: the world wraps at its width and height, so
distances and directions follow the shortest wrapped path. Every other
module builds on these primitives, and they are all pure functions safe
to call concurrently.

Coordinate and angle conventions used across the whole package:

- x grows to the right (east), y grows downward (south), matching screen
  space. "North" is the -y direction.
- Bearings are measured in degrees in [0, 360), 0 = north, increasing
  clockwise (so 90 = east, 180 = south, 270 = west).
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class Vec2:
    """Immutable 2D vector in world units."""

    x: float
    y: float

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, scalar: float) -> "Vec2":
        return Vec2(self.x * scalar, self.y * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def norm_sq(self) -> float:
        return self.x * self.x + self.y * self.y

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y)

    def normalized(self) -> "Vec2":
        """Unit vector in this direction; the zero vector maps to itself."""
        n = self.norm()
        if n == 0.0:
            return ZERO
        return Vec2(self.x / n, self.y / n)

    def is_zero(self) -> bool:
        return self.x == 0.0 and self.y == 0.0

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


ZERO = Vec2(0.0, 0.0)
NORTH = Vec2(0.0, -1.0)


@dataclass(frozen=True, slots=True)
class TorusSpec:
    """Wrapping world geometry: a width x height plane with identified edges."""

    width: float
    height: float

    def __post_init__(self) -> None:
        if not (self.width > 0.0 and self.height > 0.0):
            raise ValueError(f"torus dimensions must be positive, got {self.width} x {self.height}")

    def max_distance(self) -> float:
        """Largest possible shortest-path distance between two points."""
        return math.hypot(self.width / 2.0, self.height / 2.0)


def wrap_position(p: Vec2, torus: TorusSpec) -> Vec2:
    """Map a point into the canonical [0, W) x [0, H) cell."""
    return Vec2(p.x % torus.width, p.y % torus.height)


def torus_distance(a: Vec2, b: Vec2, torus: TorusSpec) -> float:
    """Shortest-path distance between two wrapped points.

    Per axis the separation is the smaller of the direct gap and the gap
    through the wrapped edge.
    """
    dx = abs(a.x - b.x)
    if torus.width - dx < dx:
        dx = torus.width - dx
    dy = abs(a.y - b.y)
    if torus.height - dy < dy:
        dy = torus.height - dy
    return math.sqrt(dx * dx + dy * dy)


def _shortest_delta(delta: float, span: float) -> float:
    # Signed per-axis displacement along the shorter way around. Exact
    # half-span ties stay on the direct (non-wrapping) branch.
    if delta > span / 2.0:
        return delta - span
    if delta < -span / 2.0:
        return delta + span
    return delta


def torus_direction(a: Vec2, b: Vec2, torus: TorusSpec) -> Vec2:
    """Shortest-path displacement from ``a`` to ``b``.

    Adding the result to ``a`` and wrapping lands on ``b``; its magnitude
    equals ``torus_distance(a, b)``.
    """
    return Vec2(
        _shortest_delta(b.x - a.x, torus.width),
        _shortest_delta(b.y - a.y, torus.height),
    )


def limit(v: Vec2, max_mag: float) -> Vec2:
    """Clamp a vector's magnitude to ``max_mag``, preserving direction."""
    n = v.norm()
    if n <= max_mag:
        return v
    return Vec2(v.x * (max_mag / n), v.y * (max_mag / n))


def bearing_deg(v: Vec2) -> float:
    """Bearing of a vector in degrees: 0 = north (-y), clockwise, [0, 360).

    The zero vector maps to 0 (north) by convention.
    """
    if v.is_zero():
        return 0.0
    return math.degrees(math.atan2(v.x, -v.y)) % 360.0


def unit_from_bearing(deg: float) -> Vec2:
    """Unit vector at the given bearing (inverse of :func:`bearing_deg`).

    Cardinal bearings are returned exactly so discrete action directions
    are bit-stable across platforms.
    """
    r = deg % 360.0
    if r == 0.0:
        return Vec2(0.0, -1.0)
    if r == 90.0:
        return Vec2(1.0, 0.0)
    if r == 180.0:
        return Vec2(0.0, 1.0)
    if r == 270.0:
        return Vec2(-1.0, 0.0)
    rad = math.radians(r)
    return Vec2(math.sin(rad), -math.cos(rad))
