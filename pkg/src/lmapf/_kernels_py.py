"""Pure-Python geometry kernels.

Scalar-argument functions shared by the collision-table precomputation and
the exact trajectory validator. `lmapf._kernels_cy` mirrors this module
function-for-function; `lmapf.kernels` picks one at import time.

Conventions: agents are disks of radius r moving at constant speed s along
straight segments. Collision means center distance strictly below 2r, so
exact tangency is collision-free. Returned intervals are open at both ends
mathematically; callers add their own safety padding before storage.
"""

import math

BACKEND = "python"

_EPS_PARALLEL = 1e-16
_EPS_DENOM = 1e-14
_GLUE = 1e-9


def point_segment_distance(px, py, ax, ay, bx, by):
    """Euclidean distance from point (px, py) to segment (a, b)."""
    ux, uy = bx - ax, by - ay
    wx, wy = px - ax, py - ay
    den = ux * ux + uy * uy
    if den <= 0.0:
        return math.hypot(wx, wy)
    t = (wx * ux + wy * uy) / den
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(wx - t * ux, wy - t * uy)


def _orient(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def segment_segment_distance(ax, ay, bx, by, cx, cy, dx, dy):
    """Minimum distance between segments (a, b) and (c, d)."""
    d1 = _orient(cx, cy, dx, dy, ax, ay)
    d2 = _orient(cx, cy, dx, dy, bx, by)
    d3 = _orient(ax, ay, bx, by, cx, cy)
    d4 = _orient(ax, ay, bx, by, dx, dy)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        return 0.0
    return min(
        point_segment_distance(ax, ay, cx, cy, dx, dy),
        point_segment_distance(bx, by, cx, cy, dx, dy),
        point_segment_distance(cx, cy, ax, ay, bx, by),
        point_segment_distance(dx, dy, ax, ay, bx, by),
    )


def unsafe_vertex_interval(ax, ay, bx, by, vx, vy, r, s):
    """Traversal offsets tau during which a mover on segment (a, b) is
    within 2r of the static point v.

    The mover occupies a + s*tau*unit(b-a) for tau in [0, dur]. Returns
    (lo, hi) clipped to [0, dur], or None when the segment keeps clear.
    """
    length = math.hypot(bx - ax, by - ay)
    dur = length / s
    ux, uy = s * (bx - ax) / length, s * (by - ay) / length
    wx, wy = ax - vx, ay - vy
    qa = s * s
    qb = 2.0 * (ux * wx + uy * wy)
    qc = wx * wx + wy * wy - 4.0 * r * r
    disc = qb * qb - 4.0 * qa * qc
    if disc <= 0.0:
        return None
    root = math.sqrt(disc)
    lo = (-qb - root) / (2.0 * qa)
    hi = (-qb + root) / (2.0 * qa)
    lo = max(lo, 0.0)
    hi = min(hi, dur)
    if hi <= lo:
        return None
    return (lo, hi)


def _quad_below_zero(qa, qb, qc, lo, hi):
    """Sub-intervals of [lo, hi] where qa*x^2 + qb*x + qc < 0."""
    if abs(qa) < _EPS_PARALLEL:
        if abs(qb) < _EPS_PARALLEL:
            return [(lo, hi)] if qc < 0.0 else []
        x = -qc / qb
        if qb > 0.0:
            a, b = lo, min(x, hi)
        else:
            a, b = max(x, lo), hi
        return [(a, b)] if a < b else []
    disc = qb * qb - 4.0 * qa * qc
    if disc <= 0.0:
        return []
    root = math.sqrt(disc)
    r1 = (-qb - root) / (2.0 * qa)
    r2 = (-qb + root) / (2.0 * qa)
    if r1 > r2:
        r1, r2 = r2, r1
    a, b = max(r1, lo), min(r2, hi)
    return [(a, b)] if a < b else []


def _glue_merge(pairs):
    pairs.sort()
    out = []
    for lo, hi in pairs:
        if out and lo <= out[-1][1] + _GLUE:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def unsafe_edge_intervals(ax, ay, bx, by, cx, cy, dx, dy, r, s):
    """Start-time offsets delta = t2 - t1 at which two movers collide
    while both are traversing.

    Mover 1 runs segment (a, b) starting at t1, mover 2 runs (c, d)
    starting at t2, both at speed s. Only the phase where both are
    mid-traversal is considered; endpoint dwell belongs to wait actions.
    Returns a tuple of disjoint (lo, hi) pairs.
    """
    len1 = math.hypot(bx - ax, by - ay)
    len2 = math.hypot(dx - cx, dy - cy)
    d1 = len1 / s
    d2 = len2 / s
    v1x, v1y = s * (bx - ax) / len1, s * (by - ay) / len1
    v2x, v2y = s * (dx - cx) / len2, s * (dy - cy) / len2
    rr = 4.0 * r * r
    lo_dom, hi_dom = -d2, d1

    px, py = ax - cx, ay - cy
    wx_, wy_ = v1x - v2x, v1y - v2y
    w2 = wx_ * wx_ + wy_ * wy_

    if w2 < _EPS_PARALLEL:
        # Relative position is fixed during co-traversal: |p + v2*delta|^2.
        qa = v2x * v2x + v2y * v2y
        qb = 2.0 * (px * v2x + py * v2y)
        qc = px * px + py * py - rr
        return tuple(_quad_below_zero(qa, qb, qc, lo_dom, hi_dom))

    # For fixed delta the squared distance is a convex quadratic in t with
    # unconstrained minimizer t*(delta) = A + B*delta, clamped to the
    # co-traversal window [max(0, delta), min(d1, delta + d2)].
    inv = 1.0 / w2
    A = -(px * wx_ + py * wy_) * inv
    B = -(v2x * wx_ + v2y * wy_) * inv

    cands = [lo_dom, hi_dom, 0.0, d1 - d2]
    for alpha, beta in ((0.0, 0.0), (0.0, 1.0), (d1, 0.0), (d2, 1.0)):
        den = B - beta
        if abs(den) > _EPS_DENOM:
            cands.append((alpha - A) / den)
    pts = sorted(x for x in cands if lo_dom <= x <= hi_dom)

    out = []
    prev = lo_dom
    for pt in pts + [hi_dom]:
        if pt - prev <= 1e-15:
            prev = max(prev, pt)
            continue
        pa, pb = prev, pt
        prev = pt
        mid = 0.5 * (pa + pb)
        t_lo = mid if mid > 0.0 else 0.0
        t_hi = mid + d2 if mid + d2 < d1 else d1
        tstar = A + B * mid
        if tstar < t_lo:
            alpha, beta = (0.0, 0.0) if mid <= 0.0 else (0.0, 1.0)
        elif tstar > t_hi:
            alpha, beta = (d2, 1.0) if mid + d2 < d1 else (d1, 0.0)
        else:
            alpha, beta = A, B
        # t = alpha + beta*delta gives |M + delta*N|^2 with:
        mx = px + wx_ * alpha
        my = py + wy_ * alpha
        nx = v2x + wx_ * beta
        ny = v2y + wy_ * beta
        qa = nx * nx + ny * ny
        qb = 2.0 * (mx * nx + my * ny)
        qc = mx * mx + my * my - rr
        out.extend(_quad_below_zero(qa, qb, qc, pa, pb))

    return tuple(_glue_merge(out))


def co_traversal_min_distance(ax, ay, bx, by, cx, cy, dx, dy, r, s, delta):
    """Exact minimum center distance over the co-traversal window for a
    fixed start offset delta, or inf when the windows do not overlap.

    Root-finding fallback companion to unsafe_edge_intervals.
    """
    len1 = math.hypot(bx - ax, by - ay)
    len2 = math.hypot(dx - cx, dy - cy)
    d1 = len1 / s
    d2 = len2 / s
    w0 = max(0.0, delta)
    w1 = min(d1, delta + d2)
    if w1 < w0:
        return math.inf
    v1x, v1y = s * (bx - ax) / len1, s * (by - ay) / len1
    v2x, v2y = s * (dx - cx) / len2, s * (dy - cy) / len2
    cx_ = (ax - cx) + v2x * delta
    cy_ = (ay - cy) + v2y * delta
    wx_, wy_ = v1x - v2x, v1y - v2y
    return _min_norm_affine(cx_, cy_, wx_, wy_, w0, w1)


def _min_norm_affine(cx_, cy_, wx_, wy_, w0, w1):
    """min over x in [w0, w1] of |c + w*x|."""
    w2 = wx_ * wx_ + wy_ * wy_
    if w2 < _EPS_PARALLEL:
        return math.hypot(cx_, cy_)
    x = -(cx_ * wx_ + cy_ * wy_) / w2
    if x < w0:
        x = w0
    elif x > w1:
        x = w1
    return math.hypot(cx_ + wx_ * x, cy_ + wy_ * x)


def min_moving_point_distance(ax, ay, vx, vy, t0, px, py, w0, w1):
    """min over t in [w0, w1] of |a + v*(t - t0) - p|."""
    cx_ = ax - vx * t0 - px
    cy_ = ay - vy * t0 - py
    return _min_norm_affine(cx_, cy_, vx, vy, w0, w1)


def min_moving_moving_distance(a1x, a1y, v1x, v1y, t1, a2x, a2y, v2x, v2y, t2, w0, w1):
    """min over t in [w0, w1] of the distance between two movers.

    Mover i is at a_i + v_i*(t - t_i); the caller intersects the two
    traversal windows into [w0, w1].
    """
    cx_ = (a1x - v1x * t1) - (a2x - v2x * t2)
    cy_ = (a1y - v1y * t1) - (a2y - v2y * t2)
    return _min_norm_affine(cx_, cy_, v1x - v2x, v1y - v2y, w0, w1)
