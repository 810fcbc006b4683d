"""Compare the compiled census kernel against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernel.py
"""

import time

from mapquot import _census_py

try:
    from mapquot import _census_c
except ImportError:
    _census_c = None

CASES = [
    ("rooted quadrangulations, 6 faces", (4, 4, 5), {}),
    ("simple quadrangulations, 7 faces", (4, 4, 6), {"require_simple": True, "require_outer_simple": True}),
    ("simple quadrangulations, 9 faces", (4, 4, 8), {"require_simple": True, "require_outer_simple": True}),
    ("sphere triangulations, 8 faces", (3, 3, 7), {}),
    ("simple triangulations, 10 faces", (3, 3, 9), {"require_simple": True, "require_outer_simple": True}),
    ("triangular 1-dissections, 9 inner", (1, 3, 9), {}),
]


def time_kernel(kernel, args, kwargs):
    t0 = time.perf_counter()
    out = kernel.run_census(*args, **kwargs)
    return len(out), time.perf_counter() - t0


def main():
    print(f"{'case':45} {'maps':>8} {'pure (s)':>10} {'compiled':>10} {'speedup':>8}")
    for name, args, kwargs in CASES:
        n_py, t_py = time_kernel(_census_py, args, kwargs)
        if _census_c is not None:
            n_c, t_c = time_kernel(_census_c, args, kwargs)
            assert n_py == n_c, "kernel disagreement"
            print(f"{name:45} {n_py:8d} {t_py:10.3f} {t_c:10.3f} {t_py / t_c:7.1f}x")
        else:
            print(f"{name:45} {n_py:8d} {t_py:10.3f} {'n/a':>10} {'n/a':>8}")
    if _census_c is None:
        print("\ncompiled kernel not built; showing pure-Python timings only")


if __name__ == "__main__":
    main()
