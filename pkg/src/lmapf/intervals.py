"""Sorted disjoint interval lists.

Intervals are (lo, hi) float pairs, kept sorted by lo and pairwise disjoint.
Unsafe intervals are half-open [lo, hi): a time t is blocked iff
lo <= t < hi for some stored interval, so t == hi is legal again.
"""

import bisect
import math

INF = math.inf


def insert_interval(intervals, lo, hi):
    """Insert (lo, hi) into a sorted disjoint list, merging overlaps.

    Returns a new list; the input is not modified. Touching intervals
    (hi1 == lo2) are merged, keeping the list canonical.
    """
    if hi < lo:
        raise ValueError(f"inverted interval ({lo}, {hi})")
    i = bisect.bisect_left(intervals, (lo, -INF))
    if i > 0 and intervals[i - 1][1] >= lo:
        i -= 1
    merged = list(intervals[:i])
    while i < len(intervals) and intervals[i][0] <= hi:
        lo = min(lo, intervals[i][0])
        hi = max(hi, intervals[i][1])
        i += 1
    merged.append((lo, hi))
    merged.extend(intervals[i:])
    return merged


def normalize(intervals):
    """Sort and merge an arbitrary iterable of (lo, hi) pairs."""
    out = []
    for lo, hi in sorted(intervals):
        if hi < lo:
            raise ValueError(f"inverted interval ({lo}, {hi})")
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return [(lo, hi) for lo, hi in out]


def merge_lists(*lists):
    """Union of several canonical interval lists."""
    pairs = [iv for lst in lists for iv in lst]
    return normalize(pairs)


def covers(intervals, t):
    """True iff t lies in some half-open [lo, hi)."""
    i = bisect.bisect_right(intervals, (t, INF)) - 1
    return i >= 0 and intervals[i][0] <= t < intervals[i][1]


def first_clear(intervals, t):
    """Earliest x >= t with x not covered by any [lo, hi)."""
    i = bisect.bisect_right(intervals, (t, INF)) - 1
    if i >= 0 and intervals[i][0] <= t < intervals[i][1]:
        return intervals[i][1]
    return t


def complement(intervals, lo=-INF):
    """Gaps of a canonical unsafe list over [lo, inf).

    Returns pieces (a, b); a is usable (it equals some unsafe hi or lo
    itself), b is the next unsafe lo and is not usable. The final piece
    extends to inf.
    """
    pieces = []
    cur = lo
    for ulo, uhi in intervals:
        if uhi <= cur:
            continue
        if ulo > cur:
            pieces.append((cur, ulo))
        cur = max(cur, uhi)
    if cur < INF:
        pieces.append((cur, INF))
    return pieces


def piece_index(pieces, t):
    """Index of the piece with a <= t < b, or None."""
    i = bisect.bisect_right(pieces, (t, INF)) - 1
    if i >= 0 and pieces[i][0] <= t < pieces[i][1]:
        return i
    return None


def negate(intervals):
    """Map each (lo, hi) to (-hi, -lo), reversing the list order."""
    return [(-hi, -lo) for lo, hi in reversed(intervals)]


def pad(intervals, eps):
    """Grow every interval outward by eps and re-merge."""
    return normalize((lo - eps, hi + eps) for lo, hi in intervals)


def clip(intervals, lo, hi):
    """Intersect a canonical list with [lo, hi]."""
    out = []
    for a, b in intervals:
        a2, b2 = max(a, lo), min(b, hi)
        if a2 < b2:
            out.append((a2, b2))
    return out
