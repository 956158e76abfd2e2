"""Lower convex envelopes of valuation points: sides, slopes, and degrees.

All geometry is exact: points are lattice points (index, valuation), hull
comparisons are integer cross products, and slopes are `Fraction`s.  Points
at INFINITY are carried along for residual lookups but never become
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .valuation import INFINITY, ExtInt, reduce_rational


class PolygonPoint(NamedTuple):
    index: int
    height: ExtInt


@dataclass(frozen=True)
class Side:
    """One edge of a Newton polygon.

    For a side of slope -h/e in lowest terms (h >= 0, e >= 1), the degree is
    d = length/e; the endpoints are lattice points so e always divides the
    length.  Ascending sides store the same data with a positive slope and h
    equal to the absolute numerator.
    """

    start: tuple[int, int]
    end: tuple[int, int]
    length: int
    slope: Fraction
    h: int
    e: int
    degree: int

    @classmethod
    def from_endpoints(cls, start, end) -> "Side":
        start = (int(start[0]), int(start[1]))
        end = (int(end[0]), int(end[1]))
        length = end[0] - start[0]
        if length <= 0:
            raise ValueError("side endpoints must have increasing indices")
        slope = reduce_rational(end[1] - start[1], length)
        e = slope.denominator
        h = abs(slope.numerator)
        if length % e != 0:
            raise ValueError("side endpoints are not lattice points")
        return cls(start, end, length, slope, h, e, length // e)

    @property
    def height(self) -> int:
        """Total vertical drop (or rise) |u_end - u_start| = degree * h."""
        return abs(self.end[1] - self.start[1])

    def height_at(self, index: int) -> Fraction:
        """Exact height of the supporting line at the given abscissa."""
        return self.start[1] + self.slope * (index - self.start[0])


@dataclass(frozen=True, eq=False)
class NewtonPolygon:
    """Lower convex envelope: hull vertices, merged sides, and all raw points.

    Sides have strictly increasing slopes (collinear segments are merged);
    points interior to a side remain available in `all_points`.  Two polygons
    compare equal when their vertex chains coincide.
    """

    vertices: tuple
    sides: tuple
    all_points: tuple

    def __eq__(self, other):
        return isinstance(other, NewtonPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def slopes(self) -> list[Fraction]:
        return [s.slope for s in self.sides]

    @property
    def length(self) -> int:
        """Horizontal span of the hull."""
        if len(self.vertices) < 2:
            return 0
        return self.vertices[-1][0] - self.vertices[0][0]

    def principal_part(self) -> "NewtonPolygon":
        """The sub-polygon of sides with strictly negative slope."""
        kept = [s for s in self.sides if s.slope < 0]
        vertices = self.vertices[: len(kept) + 1]
        if not kept:
            vertices = self.vertices[:1]
        return NewtonPolygon(tuple(vertices), tuple(kept), self.all_points)

    def side_at_slope(self, slope: Fraction):
        for s in self.sides:
            if s.slope == slope:
                return s
        return None

    def __repr__(self):
        return f"NewtonPolygon(vertices={list(self.vertices)})"


def _normalize_points(points) -> list[PolygonPoint]:
    pts = [PolygonPoint(int(i), u if u is INFINITY else int(u)) for i, u in points]
    pts.sort(key=lambda q: q.index)
    for a, b in zip(pts, pts[1:]):
        if a.index == b.index:
            raise ValueError(f"duplicate abscissa {a.index}")
    return pts


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def build_polygon(points) -> NewtonPolygon:
    """Lower convex hull of the finite points, via Andrew's monotone chain.

    Consecutive collinear segments are merged into a single side, so slopes
    strictly increase.  Requires at least two finite points.
    """
    pts = _normalize_points(points)
    finite = [(q.index, q.height) for q in pts if q.height is not INFINITY]
    if len(finite) < 2:
        raise ValueError("degenerate input: need at least two finite points")
    hull: list[tuple[int, int]] = []
    for pt in finite:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    sides = tuple(
        Side.from_endpoints(hull[k], hull[k + 1]) for k in range(len(hull) - 1)
    )
    return NewtonPolygon(tuple(hull), sides, tuple(pts))


def single_vertex_polygon(index: int, height: int, all_points=()) -> NewtonPolygon:
    """A polygon with one vertex and no sides (Minkowski identity element)."""
    vertex = (int(index), int(height))
    pts = tuple(all_points) if all_points else (PolygonPoint(*vertex),)
    return NewtonPolygon((vertex,), (), pts)


def principal_part(np: NewtonPolygon) -> NewtonPolygon:
    return np.principal_part()


def minkowski_sum(a: NewtonPolygon, b: NewtonPolygon) -> NewtonPolygon:
    """Slope-ordered concatenation of the two polygons' sides.

    Sides with equal slope merge (lengths and drops add); the start vertex is
    the componentwise sum of the operands' start vertices.  This realizes the
    product rule N(f*g) = N(f) + N(g) and serves as its test oracle.
    """
    if not a.vertices or not b.vertices:
        raise ValueError("minkowski_sum requires nonempty polygons")
    segs = [[s.slope, s.length, s.end[1] - s.start[1]] for s in a.sides + b.sides]
    segs.sort(key=lambda t: t[0])
    merged: list[list] = []
    for slope, length, dy in segs:
        if merged and merged[-1][0] == slope:
            merged[-1][1] += length
            merged[-1][2] += dy
        else:
            merged.append([slope, length, dy])
    i = a.vertices[0][0] + b.vertices[0][0]
    u = a.vertices[0][1] + b.vertices[0][1]
    verts = [(i, u)]
    for _, length, dy in merged:
        i += length
        u += dy
        verts.append((i, u))
    sides = tuple(
        Side.from_endpoints(verts[k], verts[k + 1]) for k in range(len(verts) - 1)
    )
    return NewtonPolygon(tuple(verts), sides, tuple(PolygonPoint(*v) for v in verts))
