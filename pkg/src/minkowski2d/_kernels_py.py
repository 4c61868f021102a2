"""Pure numpy implementations of the hot geometric kernels.

These mirror :mod:`minkowski2d._ckernels` exactly (same candidate sets,
same arithmetic order) so both backends return bit-identical maxima.
"""

import numpy as np

TWO_PI = 2.0 * np.pi
GOLDEN = 0.5 * (np.sqrt(5.0) - 1.0)
COARSE_STEPS = 64
GOLDEN_ITERS = 64


def _locate(table, angles):
    # table is increasing with table[0] in (-pi, pi] and span < 2*pi
    t0 = table[0]
    rel = t0 + np.mod(angles - t0, TWO_PI)
    k = np.searchsorted(table, rel, side="right") - 1
    return np.clip(k, 0, len(table) - 1)


def polygon_gauge(vertex_angles, polar, pts):
    """Minkowski functional of a polygon, one edge functional per point.

    ``polar[k]`` is the polar vector of the edge from vertex k to k+1, so
    the gauge on the cone of that edge is ``polar[k] . v``.
    """
    pts = np.asarray(pts, dtype=float)
    x = pts[:, 0]
    y = pts[:, 1]
    k = _locate(vertex_angles, np.arctan2(y, x))
    m = polar.shape[0]
    best = np.full(x.shape, -np.inf)
    for off in (-1, 0, 1):
        idx = (k + off) % m
        best = np.maximum(best, polar[idx, 0] * x + polar[idx, 1] * y)
    return best


def polygon_support(normal_angles, vertices, dirs):
    """Euclidean support function ``max_k <V_k, z>`` by binary search."""
    dirs = np.asarray(dirs, dtype=float)
    x = dirs[:, 0]
    y = dirs[:, 1]
    k = _locate(normal_angles, np.arctan2(y, x))
    m = vertices.shape[0]
    best = np.full(x.shape, -np.inf)
    arg = np.zeros(x.shape, dtype=np.int64)
    for off in (0, 1, 2):
        idx = (k + off) % m
        val = vertices[idx, 0] * x + vertices[idx, 1] * y
        better = val > best
        best = np.where(better, val, best)
        arg = np.where(better, idx, arg)
    return best, arg


def lp_gauge(p, pts):
    """Unit-radius l_p norm, scaled by the largest coordinate for stability."""
    pts = np.asarray(pts, dtype=float)
    ax = np.abs(pts[:, 0])
    ay = np.abs(pts[:, 1])
    big = np.maximum(ax, ay)
    small = np.minimum(ax, ay)
    out = np.zeros(big.shape)
    nz = big > 0
    out[nz] = big[nz] * (1.0 + (small[nz] / big[nz]) ** p) ** (1.0 / p)
    return out


def _lp_boundary_dot(p, theta, zx, zy):
    c = np.cos(theta)
    s = np.sin(theta)
    ac = np.abs(c)
    as_ = np.abs(s)
    big = np.maximum(ac, as_)
    small = np.minimum(ac, as_)
    nrm = big * (1.0 + (small / big) ** p) ** (1.0 / p)
    return (c * zx + s * zy) / nrm


def lp_support(p, dirs):
    """``max_{||x||_p <= 1} <x, z>`` by coarse angular scan + golden section."""
    dirs = np.asarray(dirs, dtype=float)
    zx = dirs[:, 0][:, None]
    zy = dirs[:, 1][:, None]
    step = TWO_PI / COARSE_STEPS
    grid = np.arange(COARSE_STEPS) * step
    vals = _lp_boundary_dot(p, grid[None, :], zx, zy)
    k = np.argmax(vals, axis=1)
    coarse = vals[np.arange(len(k)), k]
    zx = zx[:, 0]
    zy = zy[:, 0]
    a = grid[k] - step
    b = grid[k] + step
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc = _lp_boundary_dot(p, c, zx, zy)
    fd = _lp_boundary_dot(p, d, zx, zy)
    for _ in range(GOLDEN_ITERS):
        left = fc > fd
        # keep [a, d] where f(c) wins, else [c, b]
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        nd = np.where(left, c, a + GOLDEN * (b - a))
        nc = np.where(left, b - GOLDEN * (b - a), d)
        fnd = np.where(left, fc, _lp_boundary_dot(p, nd, zx, zy))
        fnc = np.where(left, _lp_boundary_dot(p, nc, zx, zy), fd)
        c, d, fc, fd = nc, nd, fnc, fnd
    return np.maximum(np.maximum(fc, fd), coarse)


def max_pair_lp(p, pts):
    """All-pairs maximum of the unit l_p norm of differences; (value, i, j)."""
    pts = np.asarray(pts, dtype=float)
    m = len(pts)
    best, bi, bj = -1.0, 0, 0
    for i in range(m - 1):
        d = pts[i] - pts[i + 1:]
        vals = lp_gauge(p, d)
        j = int(np.argmax(vals))
        if vals[j] > best:
            best, bi, bj = float(vals[j]), i, i + 1 + j
    return best, bi, bj


def max_pair_polygon(vertex_angles, polar, pts):
    """All-pairs maximum of a polygonal gauge of differences; (value, i, j)."""
    pts = np.asarray(pts, dtype=float)
    m = len(pts)
    best, bi, bj = -1.0, 0, 0
    for i in range(m - 1):
        d = pts[i] - pts[i + 1:]
        vals = polygon_gauge(vertex_angles, polar, d)
        j = int(np.argmax(vals))
        if vals[j] > best:
            best, bi, bj = float(vals[j]), i, i + 1 + j
    return best, bi, bj
