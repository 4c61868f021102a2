"""Time the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from minkowski2d import _kernels_py as py
from minkowski2d.norm_core import BallGeometry, regular_polygon

try:
    from minkowski2d import _ckernels as cy
except ImportError:
    cy = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases():
    rng = np.random.default_rng(0)
    hexg = BallGeometry("polygon", vertices=regular_polygon(6))
    big = BallGeometry("polygon", vertices=regular_polygon(2048))
    pts = rng.normal(size=(200_000, 2))
    dirs = rng.normal(size=(20_000, 2))
    t = 2 * np.pi * np.arange(4096) / 4096
    curve = np.column_stack([np.cos(t), 0.5 * np.sin(t)])
    curve_small = curve[::4].copy()
    return [
        ("polygon_gauge hexagon 200k", lambda m: m.polygon_gauge(hexg.vertex_angles, hexg.polar, pts)),
        ("polygon_gauge 2048-gon 200k", lambda m: m.polygon_gauge(big.vertex_angles, big.polar, pts)),
        ("polygon_support 2048-gon 20k", lambda m: m.polygon_support(big.normal_angles, big.vertices, dirs)),
        ("lp_gauge p=4 200k", lambda m: m.lp_gauge(4.0, pts)),
        ("lp_support p=4 20k", lambda m: m.lp_support(4.0, dirs)),
        ("max_pair_lp p=4 n=1024", lambda m: m.max_pair_lp(4.0, curve_small)),
        ("max_pair_polygon hexagon n=1024", lambda m: m.max_pair_polygon(hexg.vertex_angles, hexg.polar, curve_small)),
        ("max_pair_lp p=4 n=4096", lambda m: m.max_pair_lp(4.0, curve)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':36s} {'python [s]':>11s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, fn in cases():
        tp = best_of(lambda: fn(py), args.repeat)
        if cy is None:
            print(f"{name:36s} {tp:11.4f} {'n/a':>11s} {'':>8s}")
            continue
        tc = best_of(lambda: fn(cy), args.repeat)
        print(f"{name:36s} {tp:11.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
