"""Exact rational plane geometry: points, orientation, segment predicates.

All coordinates are `fractions.Fraction`; every predicate here is decided by
exact integer arithmetic, never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Union[int, Fraction]


class RationalParseError(ValueError):
    """A coordinate string is not a canonical rational."""


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __iter__(self):
        return iter((self.x, self.y))


def point(x: Rational, y: Rational) -> Point:
    return Point(Fraction(x), Fraction(y))


def parse_rational(text: object) -> Fraction:
    """Parse a canonical rational: a bare integer or a reduced "p/q" with q > 0.

    "2/4" and "1/-2" are rejected; canonical form is the only accepted spelling
    so that parse(write(v)) round-trips bit-identically.
    """
    if isinstance(text, bool):
        raise RationalParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise RationalParseError(f"not a rational: {text!r}")
    s = text.strip()
    if s != text:
        raise RationalParseError(f"surrounding whitespace in rational: {text!r}")
    if "/" in s:
        num_s, _, den_s = s.partition("/")
        try:
            num, den = int(num_s), int(den_s)
        except ValueError:
            raise RationalParseError(f"malformed rational: {text!r}") from None
        if den <= 0:
            raise RationalParseError(f"denominator must be positive: {text!r}")
        f = Fraction(num, den)
        if f.numerator != num or f.denominator != den:
            raise RationalParseError(f"rational not in reduced form: {text!r}")
        return f
    try:
        return Fraction(int(s))
    except ValueError:
        raise RationalParseError(f"malformed rational: {text!r}") from None


def format_rational(f: Fraction) -> str:
    """Canonical form: bare integer, or "p/q" reduced with q > 0."""
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 ccw, -1 cw, 0 collinear."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def collinear_between_strict(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies strictly inside segment ab (collinear and between)."""
    if orient(a, b, p) != 0:
        return False
    if a.x != b.x:
        lo, hi = min(a.x, b.x), max(a.x, b.x)
        return lo < p.x < hi
    lo, hi = min(a.y, b.y), max(a.y, b.y)
    return lo < p.y < hi


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the closed segments ab and cd share a point that is not a
    shared endpoint.

    Intended for edges with all four endpoints distinct; any touching
    (proper crossing, endpoint-on-interior, collinear overlap) counts.
    """
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    # Degenerate contacts: an endpoint on the other segment (inclusive).
    for p, (u, v) in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
        if p == u or p == v:
            return True
        if collinear_between_strict(p, u, v):
            return True
    return False


def adjacent_segments_overlap(shared: Point, p: Point, q: Point) -> bool:
    """Two edges sharing endpoint `shared` (other ends p, q): True iff they
    overlap beyond the shared point (collinear with interiors intersecting)."""
    if orient(shared, p, q) != 0:
        return False
    # Same direction from the shared endpoint means overlap.
    dot = (p.x - shared.x) * (q.x - shared.x) + (p.y - shared.y) * (q.y - shared.y)
    return dot > 0


def point_segment_dist_sq(p: Point, a: Point, b: Point) -> Fraction:
    """Exact squared Euclidean distance from p to segment ab."""
    ax, ay = b.x - a.x, b.y - a.y
    px, py = p.x - a.x, p.y - a.y
    seg_len_sq = ax * ax + ay * ay
    if seg_len_sq == 0:
        return px * px + py * py
    t = (px * ax + py * ay) / seg_len_sq
    if t <= 0:
        return px * px + py * py
    if t >= 1:
        dx, dy = p.x - b.x, p.y - b.y
        return dx * dx + dy * dy
    cx, cy = px - t * ax, py - t * ay
    return cx * cx + cy * cy


def simplest_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator (then smallest |numerator|)
    strictly inside the open interval (lo, hi).

    Stern-Brocot descent; keeps constructed coordinates small.
    """
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_in_interval(-hi, -lo)
    # 0 <= lo < hi: find simplest p/q with lo < p/q < hi.
    result = _simplest_pos(lo, hi)
    assert lo < result < hi
    return result


def _simplest_pos(lo: Fraction, hi: Fraction) -> Fraction:
    # Invariant: 0 <= lo < hi. Continued-fraction descent.
    floor_lo = lo.numerator // lo.denominator
    if floor_lo + 1 < hi:
        return Fraction(floor_lo + 1)
    lo_frac = lo - floor_lo
    hi_frac = hi - floor_lo
    if lo_frac == 0:
        # Interval (0, hi_frac) with hi_frac <= 1: simplest is 1/q for the
        # smallest q with 1/q < hi_frac.
        q = hi_frac.denominator // hi_frac.numerator + 1
        return floor_lo + Fraction(1, q)
    inv = _simplest_pos(1 / hi_frac, 1 / lo_frac)
    return floor_lo + 1 / inv


def bounding_box(points: Iterable[Point]) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(min_x, min_y, max_x, max_y) over a nonempty iterable."""
    pts = list(points)
    if not pts:
        raise ValueError("no points")
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return min(xs), min(ys), max(xs), max(ys)
