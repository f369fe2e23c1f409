"""Pure-Python versions of the enumeration kernels.

Same signatures and results as the compiled ``_core`` module; selected at
import time when the extension is not built.
"""

from __future__ import annotations

from typing import Sequence

BACKEND = "python"


def asm_state_paths(n: int, first: int) -> list[tuple[int, ...]]:
    """All ASMs of order n whose first row is the unit vector at ``first``.

    Each ASM is returned as its sequence of column partial-sum bitmasks
    after rows 1..n (bit j set when column j has sum 1 so far).
    """
    trans = transitions(n)
    out: list[tuple[int, ...]] = []
    full = (1 << n) - 1
    path = [1 << first]

    def rec(state: int):
        if len(path) == n:
            if state == full:
                out.append(tuple(path))
            return
        for nxt in trans[state]:
            path.append(nxt)
            rec(nxt)
            path.pop()

    rec(1 << first)
    return out


_TRANS_CACHE: dict[int, list[list[int]]] = {}


def transitions(n: int) -> list[list[int]]:
    """Row transitions between column-sum states.

    s -> t is allowed when t has one more set bit and the bits that flip,
    read left to right, go +1, -1, +1, ..., +1.
    """
    if n in _TRANS_CACHE:
        return _TRANS_CACHE[n]
    by_pop: dict[int, list[int]] = {}
    for s in range(1 << n):
        by_pop.setdefault(bin(s).count("1"), []).append(s)
    trans: list[list[int]] = [[] for _ in range(1 << n)]
    for s in range(1 << n):
        k = bin(s).count("1")
        for t in by_pop.get(k + 1, []):
            diff = s ^ t
            expect_set = True
            ok = True
            j = 0
            while diff >> j:
                if (diff >> j) & 1:
                    is_set = bool((t >> j) & 1)
                    if is_set != expect_set:
                        ok = False
                        break
                    expect_set = not expect_set
                j += 1
            if ok and not expect_set:
                trans[s].append(t)
    _TRANS_CACHE[n] = trans
    return trans


def orbit_search(orbit_cells: Sequence[Sequence[int]], orbit_fixed: Sequence[int],
                 orbit_lines: Sequence[Sequence[int]], lines: Sequence[Sequence[int]],
                 line_req: Sequence[Sequence[int]], ncells: int,
                 limit: int = 0) -> list[list[int]]:
    """Backtracking over cell orbits; returns orbit value lists.

    Every line must read as an alternating sign vector (partial sums stay in
    {0, 1}, total 1).  ``line_req[l][p]`` is -1 or the required partial sum
    after position p.  ``orbit_fixed[o]`` is 2 for a free orbit, else the
    forced value.  Orbits are assigned in the given order.
    """
    UNKNOWN = 2
    vals = [UNKNOWN] * ncells
    norb = len(orbit_cells)
    cur = [0] * norb
    sols: list[list[int]] = []

    def line_ok(l: int) -> bool:
        reach = 1  # bit0: partial sum 0 reachable, bit1: partial sum 1
        req = line_req[l]
        for p, c in enumerate(lines[l]):
            v = vals[c]
            if v == UNKNOWN:
                reach = 3
            elif v == 1:
                reach = (reach & 1) << 1
            elif v == -1:
                reach = (reach & 2) >> 1
            if req[p] >= 0:
                reach &= 1 << req[p]
            if not reach:
                return False
        return bool(reach & 2)

    def rec(o: int) -> bool:
        if o == norb:
            sols.append(list(cur))
            return bool(limit) and len(sols) >= limit
        fixed = orbit_fixed[o]
        choices = (0, 1, -1) if fixed == UNKNOWN else (fixed,)
        cells = orbit_cells[o]
        for v in choices:
            for c in cells:
                vals[c] = v
            if all(line_ok(l) for l in orbit_lines[o]):
                cur[o] = v
                if rec(o + 1):
                    return True
        for c in cells:
            vals[c] = UNKNOWN
        return False

    rec(0)
    return sols
