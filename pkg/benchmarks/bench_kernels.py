"""Time the compiled kernels against the pure-Python fallback on the order-lift workload.

    python benchmarks/bench_kernels.py [--qmax 7] [--xmax 400] [--repeat 3]

Both backends must return identical results; the script exits nonzero otherwise.
"""
import argparse
import sys
import time

from diophkit import _kernels_py
from diophkit._accel import modulus_for
from diophkit.cyclotomic import lift_parameters
from diophkit.exact_arith.integers import is_prime

try:
    from diophkit import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def workload(qmax, xmax):
    for q in (p for p in range(3, qmax + 1) if is_prime(p)):
        for x in range(2, xmax + 1):
            if x % q:
                n, r = lift_parameters(q, x)
                yield q, x, n, r, 3 * q**3, modulus_for(q)


def run(mod, jobs):
    out = []
    for q, x, n, r, smax, m in jobs:
        out.append(mod.order_lift_scan(q, x, n, r, smax, m, True))
    out.append(mod.power_residue_flags(list(range(2, 2000)), 1000003, 3))
    return out


def _normalize(v):
    if isinstance(v, (list, tuple)):
        return [_normalize(x) for x in v]
    return v


def best_of(mod, jobs, repeat):
    best, res = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = run(mod, jobs)
        best = min(best, time.perf_counter() - t0)
    return best, res


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--qmax", type=int, default=7)
    ap.add_argument("--xmax", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args(argv)
    jobs = list(workload(a.qmax, a.xmax))
    t_py, r_py = best_of(_kernels_py, jobs, a.repeat)
    print(f"python  {t_py:8.3f} s  ({len(jobs)} scans)")
    if _kernels_c is None:
        print("cython  not built (pip install -e . --no-build-isolation builds it)")
        return 0
    t_c, r_c = best_of(_kernels_c, jobs, a.repeat)
    same = _normalize(r_py) == _normalize(r_c)
    print(f"cython  {t_c:8.3f} s  speedup x{t_py / t_c:.1f}  results identical: {same}")
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())
