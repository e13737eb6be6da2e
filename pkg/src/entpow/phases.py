"""Convex geometry of unit-modulus complex numbers.

A multiset of angles stands for the points e^{i theta_j} on the unit circle.
The minimum convex sum min_{c in simplex} |sum_j c_j e^{i theta_j}| equals the
distance from the origin to the convex hull of those points: zero when the
origin lies inside the hull, and otherwise the distance to the closing chord
of the arc spanned by the points.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi
from typing import Iterable, Sequence

import numpy as np

TWO_PI = 2.0 * pi
# Half-circle boundary comparisons; ties resolve toward the in-hull branch
# (both branches give zero there).
HULL_TOL = 1e-9


@dataclass(frozen=True)
class PhaseMultiset:
    """Angles in [0, 2*pi), sorted ascending, duplicates kept."""

    angles: tuple[float, ...]

    def __post_init__(self):
        a = tuple(float(x) for x in self.angles)
        if not a:
            raise ValueError("phase multiset must be nonempty")
        if any(not np.isfinite(x) for x in a):
            raise ValueError("phases must be finite")
        if any(x < 0.0 or x >= TWO_PI for x in a) or any(
                a[i] > a[i + 1] for i in range(len(a) - 1)):
            raise ValueError("angles must be sorted and within [0, 2*pi); "
                             "use normalize_phases to build a PhaseMultiset")
        object.__setattr__(self, "angles", a)

    def __len__(self) -> int:
        return len(self.angles)

    def __iter__(self):
        return iter(self.angles)


def normalize_phases(raw: Iterable[float]) -> PhaseMultiset:
    """Reduce angles mod 2*pi into [0, 2*pi) and sort ascending."""
    vals = np.asarray(list(raw), dtype=float)
    if vals.size == 0:
        raise ValueError("cannot normalize an empty angle list")
    if not np.all(np.isfinite(vals)):
        raise ValueError("phases must be finite")
    ang = np.mod(vals, TWO_PI)
    # float mod can land exactly on 2*pi for tiny negative inputs
    ang[ang >= TWO_PI] = 0.0
    ang.sort()
    return PhaseMultiset(tuple(ang.tolist()))


def _circular_gaps(phases: PhaseMultiset) -> np.ndarray:
    """Gaps between circularly adjacent sorted angles; they sum to 2*pi."""
    a = np.asarray(phases.angles)
    if a.size == 1:
        return np.array([TWO_PI])
    gaps = np.diff(a)
    wrap = TWO_PI - (a[-1] - a[0])
    return np.concatenate([gaps, [wrap]])


def origin_in_hull(phases: PhaseMultiset) -> bool:
    """True iff the origin lies in the convex hull of the phase points.

    Equivalent to: consecutive sorted gaps are all <= pi and the total span
    is >= pi, i.e. no open half-circle contains every point.
    """
    return bool(np.max(_circular_gaps(phases)) <= pi + HULL_TOL)


def min_convex_sum(phases: PhaseMultiset) -> float:
    """min over simplex weights c of |sum_j c_j e^{i theta_j}|.

    Zero when the origin is in the hull; otherwise the minimum over
    circularly adjacent pairs of |cos(gap/2)|, which is the distance from
    the origin to the chord closing the spanned arc.
    """
    if origin_in_hull(phases):
        return 0.0
    gaps = _circular_gaps(phases)
    return float(np.min(np.abs(np.cos(gaps / 2.0))))


def max_convex_sum(phases: PhaseMultiset) -> float:
    """max over simplex weights of |sum_j c_j e^{i theta_j}|.

    Always 1: every vertex of the hull lies on the unit circle.
    """
    if len(phases) == 0:
        raise ValueError("phase multiset must be nonempty")
    return 1.0


def binding_adjacent_pair(phases: PhaseMultiset) -> tuple[float, float]:
    """The circularly adjacent pair attaining the minimum convex sum.

    For an in-hull set this returns the pair spanning the largest gap (the
    chord through or past the origin).
    """
    a = phases.angles
    n = len(a)
    if n == 1:
        return (a[0], a[0])
    gaps = _circular_gaps(phases)
    if origin_in_hull(phases):
        j = int(np.argmax(gaps))
    else:
        j = int(np.argmin(np.abs(np.cos(gaps / 2.0))))
    return (a[j], a[(j + 1) % n])


# -- independent geometric oracle --------------------------------------------

def _hull_2d(points: np.ndarray) -> np.ndarray:
    """Convex hull of 2-D points (monotone chain), counter-clockwise."""
    pts = np.unique(points, axis=0)
    if len(pts) <= 2:
        return pts
    # lexicographic order
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return np.asarray(hull)


def _segment_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Distance from the origin to the segment [a, b]."""
    ab = b - a
    denom = float(ab @ ab)
    if denom == 0.0:
        return float(np.hypot(*a))
    t = float(-(a @ ab) / denom)
    t = min(max(t, 0.0), 1.0)
    closest = a + t * ab
    return float(np.hypot(*closest))


def min_convex_sum_oracle(phases: PhaseMultiset) -> float:
    """Exact hull-distance computation for sets of at most 8 phases.

    Builds the 2-D convex hull of the points (cos theta, sin theta) and
    returns the distance from the origin: zero inside the hull, otherwise the
    minimum point-to-edge distance.  Test-only ground truth for
    min_convex_sum.
    """
    if len(phases) > 8:
        raise ValueError("oracle is limited to 8 phases")
    a = np.asarray(phases.angles)
    pts = np.column_stack([np.cos(a), np.sin(a)])
    hull = _hull_2d(pts)
    h = len(hull)
    if h >= 3:
        crosses = np.array([
            hull[k][0] * hull[(k + 1) % h][1] - hull[k][1] * hull[(k + 1) % h][0]
            for k in range(h)
        ])
        if np.all(crosses >= 0.0):
            return 0.0
        return min(_segment_distance(hull[k], hull[(k + 1) % h]) for k in range(h))
    if h == 2:
        return _segment_distance(hull[0], hull[1])
    return float(np.hypot(*hull[0]))
