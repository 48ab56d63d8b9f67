"""Exact rational geometry kernel.

Points, intervals, axis-aligned boxes and convex polygons over
arbitrary-precision rationals (fractions.Fraction). Every predicate is
decided exactly; there is no floating point anywhere in a decision path.

Bodies are immutable after construction. Polygons are canonicalized on
construction: the stored vertex ring is the convex hull of the input in
counterclockwise order starting from the lexicographically smallest
vertex, with collinear vertices removed. Degenerate results are kept and
tagged by vertex count (2 = segment, 1 = single point) rather than
rejected, because intersections degenerate naturally and downstream code
must keep running.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import GeomError

Rational = Fraction

RationalLike = Union[Fraction, int, str, tuple]


def rat(x: RationalLike) -> Fraction:
    """Coerce an int, "n/d" string, (num, den) pair or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, tuple):
        num, den = x
        return Fraction(num, den)
    if isinstance(x, float):
        raise GeomError(f"refusing float {x!r}; pass an int, Fraction or 'n/d' string")
    return Fraction(x)


@dataclass(frozen=True)
class Point:
    """A point in R^d with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coords:
            raise GeomError("point needs at least one coordinate")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def x(self) -> Fraction:
        return self.coords[0]

    @property
    def y(self) -> Fraction:
        return self.coords[1]

    def __add__(self, other: "Point") -> "Point":
        return Point(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Point") -> "Point":
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, s: RationalLike) -> "Point":
        s = rat(s)
        return Point(tuple(s * a for a in self.coords))

    def __lt__(self, other: "Point") -> bool:
        return self.coords < other.coords

    def __le__(self, other: "Point") -> bool:
        return self.coords <= other.coords

    def __repr__(self) -> str:
        return "pt(" + ", ".join(str(c) for c in self.coords) + ")"


def pt(*coords: RationalLike) -> Point:
    return Point(tuple(rat(c) for c in coords))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """2-d cross product of (a - o) and (b - o); >0 means left turn."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


# ---------------------------------------------------------------------------
# Bodies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] on the line; lo == hi is a single point."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", rat(self.lo))
        object.__setattr__(self, "hi", rat(self.hi))
        if self.lo > self.hi:
            raise GeomError(f"interval bounds inverted: {self.lo} > {self.hi}")

    @property
    def dim(self) -> int:
        return 1

    def as_box(self) -> "Box":
        return Box(Point((self.lo,)), Point((self.hi,)))


@dataclass(frozen=True)
class Box:
    """Closed axis-aligned box in R^d, given by lower and upper corner."""

    lo: Point
    hi: Point

    def __post_init__(self):
        if self.lo.dim != self.hi.dim:
            raise GeomError("box corners have different dimensions")
        if any(a > b for a, b in zip(self.lo.coords, self.hi.coords)):
            raise GeomError("box bounds inverted in some coordinate")

    @property
    def dim(self) -> int:
        return self.lo.dim

    def corners(self) -> list[Point]:
        pts = [()]
        for a, b in zip(self.lo.coords, self.hi.coords):
            vals = (a,) if a == b else (a, b)
            pts = [p + (v,) for p in pts for v in vals]
        return [Point(p) for p in pts]


class Polygon:
    """Convex polygon in R^2, canonicalized on construction.

    The input may be any point soup describing the body; the stored ring
    is its convex hull. 2 vertices tag a segment, 1 a single point.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Point]):
        vs = list(vertices)
        if not vs:
            raise GeomError("polygon needs at least one vertex")
        if any(v.dim != 2 for v in vs):
            raise GeomError("polygon vertices must be 2-dimensional")
        object.__setattr__(self, "vertices", _hull_ring(vs))

    @property
    def dim(self) -> int:
        return 2

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        if len(v) == 1:
            return []
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Polygon({list(self.vertices)!r})"


ConvexBody = Union[Interval, Box, Polygon]


def polygon(*coord_pairs) -> Polygon:
    """Convenience constructor: polygon((0,0), (1,0), (0,1))."""
    return Polygon([pt(*p) for p in coord_pairs])


# ---------------------------------------------------------------------------
# Hull
# ---------------------------------------------------------------------------


def _hull_ring(points: Sequence[Point]) -> tuple[Point, ...]:
    """CCW hull ring, collinear points dropped, canonical start vertex."""
    uniq = sorted(set(points))
    if len(uniq) == 1:
        return (uniq[0],)
    lower: list[Point] = []
    for p in uniq:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(uniq):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]
    if len(ring) < 3:
        # all input points collinear: extremes only
        return (uniq[0], uniq[-1])
    # monotone chain starts at the lexicographic minimum already
    return tuple(ring)


def convex_hull(points: Iterable[Point]) -> ConvexBody:
    """Minimal convex body containing the points (R^1 or R^2).

    Duplicates are ignored. In R^1 the result is an Interval; in R^2 a
    Polygon, possibly degenerate.
    """
    pts = list(points)
    if not pts:
        raise GeomError("convex_hull of empty point set")
    dims = {p.dim for p in pts}
    if len(dims) != 1:
        raise GeomError(f"mixed dimensions in hull input: {sorted(dims)}")
    d = dims.pop()
    if d == 1:
        xs = [p.coords[0] for p in pts]
        return Interval(min(xs), max(xs))
    if d == 2:
        return Polygon(pts)
    raise GeomError(f"convex_hull supports d in {{1, 2}}, got d={d}")


# ---------------------------------------------------------------------------
# Containment
# ---------------------------------------------------------------------------


def contains(body: ConvexBody, p: Point) -> bool:
    """Exact closed-body membership test."""
    if isinstance(body, Interval):
        if p.dim != 1:
            raise GeomError(f"dimension mismatch: interval vs {p.dim}-d point")
        return body.lo <= p.coords[0] <= body.hi
    if isinstance(body, Box):
        if p.dim != body.dim:
            raise GeomError(f"dimension mismatch: {body.dim}-d box vs {p.dim}-d point")
        return all(a <= c <= b for a, c, b in zip(body.lo.coords, p.coords, body.hi.coords))
    if isinstance(body, Polygon):
        if p.dim != 2:
            raise GeomError(f"dimension mismatch: polygon vs {p.dim}-d point")
        v = body.vertices
        if len(v) == 1:
            return v[0] == p
        if len(v) == 2:
            return _on_segment(v[0], v[1], p)
        return all(cross(v[i], v[(i + 1) % len(v)], p) >= 0 for i in range(len(v)))
    raise GeomError(f"unknown body type {type(body).__name__}")


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    if cross(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


# ---------------------------------------------------------------------------
# Segment intersection
# ---------------------------------------------------------------------------


def _segment_pair_points(a1: Point, b1: Point, a2: Point, b2: Point) -> list[Point]:
    """Intersection points of two closed segments.

    Crossing segments contribute the crossing point. Collinear
    overlapping segments contribute the overlap's two endpoints only
    (the extreme points of the shared piece), never interior points.
    """
    d1 = b1 - a1
    d2 = b2 - a2
    denom = d1.x * d2.y - d1.y * d2.x
    if denom != 0:
        w = a2 - a1
        t = (w.x * d2.y - w.y * d2.x) / denom
        u = (w.x * d1.y - w.y * d1.x) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            return [a1 + d1.scale(t)]
        return []
    # parallel
    if cross(a1, b1, a2) != 0:
        return []
    # collinear: project onto the dominant axis of d1 (or handle a degenerate first segment)
    if d1.x == 0 and d1.y == 0:
        return [a1] if _on_segment(a2, b2, a1) else []
    if d2.x == 0 and d2.y == 0:
        return [a2] if _on_segment(a1, b1, a2) else []
    key = (lambda p: p.x) if d1.x != 0 else (lambda p: p.y)
    lo1, hi1 = sorted((a1, b1), key=key)
    lo2, hi2 = sorted((a2, b2), key=key)
    lo = max(lo1, lo2, key=key)
    hi = min(hi1, hi2, key=key)
    if key(lo) > key(hi):
        return []
    if lo == hi:
        return [lo]
    return [lo, hi]


def edge_intersections(a: ConvexBody, b: ConvexBody) -> list[Point]:
    """All exact boundary-edge crossings of two planar bodies, deduplicated."""
    if not isinstance(a, Polygon) or not isinstance(b, Polygon):
        raise GeomError("edge_intersections needs two planar polygon/segment bodies")
    out: set[Point] = set()
    for (p1, q1) in a.edges():
        for (p2, q2) in b.edges():
            out.update(_segment_pair_points(p1, q1, p2, q2))
    return sorted(out)


# ---------------------------------------------------------------------------
# Intersection of families
# ---------------------------------------------------------------------------


def _clip_ring(ring: list[Point], a: Point, b: Point) -> list[Point]:
    """Sutherland-Hodgman clip of a vertex ring by the half-plane left of a->b."""
    if not ring:
        return []
    out: list[Point] = []
    n = len(ring)
    for i in range(n):
        cur, nxt = ring[i], ring[(i + 1) % n]
        cur_in = cross(a, b, cur) >= 0
        nxt_in = cross(a, b, nxt) >= 0
        if cur_in:
            out.append(cur)
        if cur_in != nxt_in:
            d = nxt - cur
            e = b - a
            denom = e.x * d.y - e.y * d.x
            w = cur - a
            t = -(w.x * e.y - w.y * e.x) / denom
            out.append(cur + d.scale(t))
    return out


def _clip_segment(s: Polygon, clip: Polygon) -> ConvexBody | None:
    """Intersect a segment (or point) body with a proper polygon."""
    if s.is_point:
        return s if contains(clip, s.vertices[0]) else None
    a, b = s.vertices
    d = b - a
    t_lo, t_hi = Fraction(0), Fraction(1)
    for (u, v) in clip.edges():
        e = v - u
        # inside condition: cross(u, v, a + t d) >= 0, linear in t
        c0 = cross(u, v, a)
        c1 = e.x * d.y - e.y * d.x
        if c1 == 0:
            if c0 < 0:
                return None
            continue
        t_star = -c0 / c1
        if c1 > 0:
            t_lo = max(t_lo, t_star)
        else:
            t_hi = min(t_hi, t_star)
        if t_lo > t_hi:
            return None
    p = a + d.scale(t_lo)
    q = a + d.scale(t_hi)
    return Polygon([p, q])


def _intersect_pair_polygons(a: Polygon, b: Polygon) -> ConvexBody | None:
    if a.is_point:
        return a if contains(b, a.vertices[0]) else None
    if b.is_point:
        return b if contains(a, b.vertices[0]) else None
    if a.is_segment and b.is_segment:
        pts = _segment_pair_points(*a.vertices, *b.vertices)
        return Polygon(pts) if pts else None
    if a.is_segment:
        return _clip_segment(a, b)
    if b.is_segment:
        return _clip_segment(b, a)
    ring = list(a.vertices)
    for (u, v) in b.edges():
        ring = _clip_ring(ring, u, v)
        if not ring:
            return None
    return Polygon(ring)


def intersect_all(bodies: Sequence[ConvexBody]) -> ConvexBody | None:
    """Intersection of a nonempty uniform family, or None when empty.

    Intervals and boxes intersect coordinate-wise (a mixed
    interval/box family is promoted to boxes). Polygon families are
    folded by iterated exact half-plane clipping and may degenerate to
    a segment or a point.
    """
    if not bodies:
        raise GeomError("intersect_all of empty family")
    dims = {b.dim for b in bodies}
    if len(dims) != 1:
        raise GeomError(f"mixed dimensions: {sorted(dims)}")
    has_poly = any(isinstance(b, Polygon) for b in bodies)
    if has_poly:
        if not all(isinstance(b, Polygon) for b in bodies):
            raise GeomError("polygons cannot be mixed with intervals or boxes")
        cur: ConvexBody | None = bodies[0]
        for nxt in bodies[1:]:
            cur = _intersect_pair_polygons(cur, nxt)  # type: ignore[arg-type]
            if cur is None:
                return None
        return cur
    if all(isinstance(b, Interval) for b in bodies):
        lo = max(b.lo for b in bodies)  # type: ignore[union-attr]
        hi = min(b.hi for b in bodies)  # type: ignore[union-attr]
        return Interval(lo, hi) if lo <= hi else None
    boxes = [b.as_box() if isinstance(b, Interval) else b for b in bodies]
    d = boxes[0].dim
    los = [max(bx.lo.coords[j] for bx in boxes) for j in range(d)]
    his = [min(bx.hi.coords[j] for bx in boxes) for j in range(d)]
    if any(a > b for a, b in zip(los, his)):
        return None
    return Box(Point(tuple(los)), Point(tuple(his)))


def body_vertices(body: ConvexBody) -> list[Point]:
    """Extreme points of a body: interval endpoints, box corners, polygon ring."""
    if isinstance(body, Interval):
        return [Point((body.lo,)), Point((body.hi,))]
    if isinstance(body, Box):
        return body.corners()
    if isinstance(body, Polygon):
        return list(body.vertices)
    raise GeomError(f"unknown body type {type(body).__name__}")
