# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels (row-state ASM walk, orbit backtracking).

Drop-in twins of the functions in ``_fallback``.
"""

from libc.stdlib cimport malloc, free

BACKEND = "compiled"

from ._fallback import transitions


cdef struct Walk:
    int n
    int full
    int *tstart
    int *tlist
    int *path
    int depth


cdef void _walk(Walk *w, int state, list out):
    cdef int k, t
    if w.depth == w.n:
        if state == w.full:
            out.append(tuple([w.path[k] for k in range(w.n)]))
        return
    for k in range(w.tstart[state], w.tstart[state + 1]):
        t = w.tlist[k]
        w.path[w.depth] = t
        w.depth += 1
        _walk(w, t, out)
        w.depth -= 1


def asm_state_paths(int n, int first):
    """All ASMs of order n with first row e_first, as row-state tuples."""
    trans = transitions(n)
    cdef int nstates = 1 << n
    cdef int total = sum(len(t) for t in trans)
    cdef Walk w
    cdef int s, k = 0
    w.n = n
    w.full = nstates - 1
    w.tstart = <int *> malloc((nstates + 1) * sizeof(int))
    w.tlist = <int *> malloc((total + 1) * sizeof(int))
    w.path = <int *> malloc((n + 1) * sizeof(int))
    out = []
    try:
        for s in range(nstates):
            w.tstart[s] = k
            for t in trans[s]:
                w.tlist[k] = t
                k += 1
        w.tstart[nstates] = k
        w.path[0] = 1 << first
        w.depth = 1
        _walk(&w, 1 << first, out)
    finally:
        free(w.tstart)
        free(w.tlist)
        free(w.path)
    return out


cdef struct Search:
    int norb
    int *vals          # per cell, 2 = unknown
    int *ocell_start
    int *ocells
    int *fixed
    int *oline_start
    int *olines
    int *line_start
    int *lcells
    int *lreq
    int *cur
    long limit
    long found


cdef inline bint _line_ok(Search *s, int l):
    cdef int reach = 1, p, v, r
    for p in range(s.line_start[l], s.line_start[l + 1]):
        v = s.vals[s.lcells[p]]
        if v == 2:
            reach = 3
        elif v == 1:
            reach = (reach & 1) << 1
        elif v == -1:
            reach = (reach & 2) >> 1
        r = s.lreq[p]
        if r >= 0:
            reach &= 1 << r
        if reach == 0:
            return False
    return (reach & 2) != 0


cdef bint _rec(Search *s, int o, list sols):
    cdef int k, q, v, c
    cdef int choices[3]
    cdef int nch
    cdef bint ok
    if o == s.norb:
        sols.append([s.cur[k] for k in range(s.norb)])
        s.found += 1
        return s.limit > 0 and s.found >= s.limit
    if s.fixed[o] == 2:
        choices[0] = 0; choices[1] = 1; choices[2] = -1
        nch = 3
    else:
        choices[0] = s.fixed[o]
        nch = 1
    for q in range(nch):
        v = choices[q]
        for k in range(s.ocell_start[o], s.ocell_start[o + 1]):
            s.vals[s.ocells[k]] = v
        ok = True
        for k in range(s.oline_start[o], s.oline_start[o + 1]):
            if not _line_ok(s, s.olines[k]):
                ok = False
                break
        if ok:
            s.cur[o] = v
            if _rec(s, o + 1, sols):
                return True
    for k in range(s.ocell_start[o], s.ocell_start[o + 1]):
        s.vals[s.ocells[k]] = 2
    return False


cdef int *_flatten(list groups, int **starts):
    cdef int total = sum(len(g) for g in groups)
    cdef int *flat = <int *> malloc((total + 1) * sizeof(int))
    cdef int *st = <int *> malloc((len(groups) + 1) * sizeof(int))
    cdef int i = 0, k = 0
    for g in groups:
        st[i] = k
        for v in g:
            flat[k] = v
            k += 1
        i += 1
    st[i] = k
    starts[0] = st
    return flat


def orbit_search(orbit_cells, orbit_fixed, orbit_lines, lines, line_req,
                 int ncells, long limit=0):
    """Backtracking over cell orbits; see ``_fallback.orbit_search``."""
    cdef Search s
    cdef int i, dummy_n
    cdef int *dummy
    s.norb = len(orbit_cells)
    s.limit = limit
    s.found = 0
    s.vals = <int *> malloc((ncells + 1) * sizeof(int))
    s.fixed = <int *> malloc((s.norb + 1) * sizeof(int))
    s.cur = <int *> malloc((s.norb + 1) * sizeof(int))
    s.ocells = _flatten([list(o) for o in orbit_cells], &s.ocell_start)
    s.olines = _flatten([list(o) for o in orbit_lines], &s.oline_start)
    s.lcells = _flatten([list(l) for l in lines], &s.line_start)
    s.lreq = _flatten([list(r) for r in line_req], &dummy)
    free(dummy)
    sols = []
    try:
        for i in range(ncells):
            s.vals[i] = 2
        for i in range(s.norb):
            s.fixed[i] = orbit_fixed[i]
            s.cur[i] = 0
        _rec(&s, 0, sols)
    finally:
        free(s.vals); free(s.fixed); free(s.cur)
        free(s.ocells); free(s.ocell_start)
        free(s.olines); free(s.oline_start)
        free(s.lcells); free(s.line_start)
        free(s.lreq)
    return sols
