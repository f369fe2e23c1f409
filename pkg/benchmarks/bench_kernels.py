"""Compare the compiled and pure-Python enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each case runs both backends on the same input, checks the outputs agree
and prints the best wall time of ``--repeat`` runs plus the speedup.
"""

import argparse
import time

from asmkit import _fallback, asm
from asmkit.asm import ClassTag, structure

try:
    from asmkit import _core
except ImportError:  # extension not built
    _core = None


def _asm_case(n):
    def run(k):
        return [p for f in range(n) for p in k.asm_state_paths(n, f)]
    return f"ASM row walk n={n}", run


def _orbit_case(tag, order):
    st = structure(tag, order)
    fixed, _ = asm._search_tasks(st, 0)
    olines = asm._orbit_lines(st)

    def run(k):
        return k.orbit_search(st.orbits, list(fixed), olines, st.lines, st.line_req, st.ncells)
    return f"orbit search {tag.value} order {order}", run


CASES = [
    _asm_case(6), _asm_case(7),
    _orbit_case(ClassTag.VS, 9), _orbit_case(ClassTag.HTS, 7), _orbit_case(ClassTag.DS, 7),
    _orbit_case(ClassTag.OS, 8), _orbit_case(ClassTag.UASM, 8), _orbit_case(ClassTag.QTS, 12),
]


def best_time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _core is None:
        print("compiled extension not available; rebuild with `pip install --no-build-isolation -e .`")
        return
    print(f"{'case':36s} {'results':>9s} {'python s':>10s} {'compiled s':>11s} {'speedup':>8s}")
    for name, run in CASES:
        tp, outp = best_time(lambda: run(_fallback), args.repeat)
        tc, outc = best_time(lambda: run(_core), args.repeat)
        same = [list(v) for v in outp] == [list(v) for v in outc]
        flag = "" if same else "  MISMATCH"
        print(f"{name:36s} {len(outc):9d} {tp:10.3f} {tc:11.4f} {tp / tc:7.1f}x{flag}")


if __name__ == "__main__":
    main()
