"""Alternating sign matrices, their symmetry classes and U-turn variants.

Plain ASMs are walked through column partial-sum states (one bit per
column, equivalent to monotone triangles).  Every other class is a
constraint problem over cell orbits of its symmetry group, where each
row/column (or U-turn row pair / column pair) must read as an alternating
sign vector.  Both kernels live in ``_core`` (compiled) or ``_fallback``.
"""

from __future__ import annotations

import builtins
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

from .exact import IntPolynomial

if os.environ.get("ASMKIT_PURE_PYTHON") == "1":
    from . import _fallback as _kernels
else:
    try:  # compiled kernels when built, else the pure-Python twins
        from . import _core as _kernels
    except ImportError:  # pragma: no cover - depends on the build
        from . import _fallback as _kernels

BACKEND = _kernels.BACKEND


def use_backend(name: str) -> None:
    """Switch kernels at runtime ("compiled" or "python"); for benchmarks and tests."""
    global _kernels, BACKEND
    if name == "python":
        from . import _fallback as mod
    elif name == "compiled":
        from . import _core as mod
    else:
        raise ValueError(f"unknown backend {name!r}")
    _kernels = mod
    BACKEND = mod.BACKEND


class AdmissibilityError(ValueError):
    pass


class InvalidMatrixError(ValueError):
    pass


class ClassTag(str, Enum):
    ASM = "ASM"
    HTS = "HTS"
    QTS = "QTS"
    VS = "VS"
    VHS = "VHS"
    DS = "DS"
    DAS = "DAS"
    TS = "TS"
    OS = "OS"
    OOS = "OOS"
    VOS = "VOS"
    UASM = "UASM"
    UUASM = "UUASM"
    VHPASM = "VHPASM"
    UOSASM = "UOSASM"

    @classmethod
    def parse(cls, s) -> "ClassTag":
        if isinstance(s, ClassTag):
            return s
        key = str(s).upper()
        aliases = {"U": "UASM", "UU": "UUASM", "VHP": "VHPASM", "UOS": "UOSASM"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown class {s!r}; expected one of "
                             + ", ".join(t.value for t in cls)) from None


UTURN = {ClassTag.UASM, ClassTag.UUASM, ClassTag.VHPASM, ClassTag.UOSASM}

_ADMISSIBLE = {
    ClassTag.ASM: ((1, 0), "order >= 1"),
    ClassTag.HTS: ((1, 0), "order >= 1"),
    ClassTag.DS: ((1, 0), "order >= 1"),
    ClassTag.DAS: ((1, 0), "order >= 1"),
    ClassTag.TS: ((1, 0), "order >= 1"),
    ClassTag.QTS: ((4, 0), "order divisible by 4"),
    ClassTag.VS: ((2, 1), "odd order"),
    ClassTag.VHS: ((2, 1), "odd order"),
    ClassTag.OS: ((2, 0), "even order"),
    ClassTag.OOS: ((4, 0), "order divisible by 4"),
    ClassTag.UASM: ((2, 0), "even order"),
    ClassTag.UUASM: ((4, 0), "order divisible by 4"),
    ClassTag.VHPASM: ((4, 2), "order 2 mod 4"),
    ClassTag.UOSASM: ((8, 0), "order divisible by 8"),
}


def check_admissible(tag, order: int) -> ClassTag:
    tag = ClassTag.parse(tag)
    if not isinstance(order, int) or order < 1:
        raise AdmissibilityError(f"order must be a positive integer, got {order!r}")
    if tag is ClassTag.VOS:
        if order % 8 not in (1, 3):
            raise AdmissibilityError(
                f"VOS order {order}: there are no VOSASMs of order 8n+5 or 8n+7, "
                "and even orders are impossible; need order = 1 or 3 mod 8")
        return tag
    (mod, res), text = _ADMISSIBLE[tag]
    if order % mod != res:
        raise AdmissibilityError(f"{tag.value} needs {text}, got {order}")
    if tag is ClassTag.VHPASM and order < 6:
        raise AdmissibilityError("VHPASM needs order >= 6")
    return tag


def is_admissible(tag, order: int) -> bool:
    try:
        check_admissible(tag, order)
    except AdmissibilityError:
        return False
    return True


def shape_of(tag, order: int) -> tuple[int, int]:
    tag = check_admissible(tag, order)
    if tag is ClassTag.UASM:
        return order, order // 2
    if tag in (ClassTag.UUASM, ClassTag.UOSASM):
        return order // 2, order // 2
    if tag is ClassTag.VHPASM:
        return (order - 2) // 2, (order - 2) // 2
    return order, order


@dataclass(frozen=True)
class SignMatrix:
    rows: tuple[tuple[int, ...], ...]
    class_tag: ClassTag | None = None

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], class_tag=None) -> "SignMatrix":
        tag = ClassTag.parse(class_tag) if class_tag is not None else None
        return cls(tuple(tuple(int(v) for v in r) for r in rows), tag)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def minus_ones(self) -> int:
        return sum(v == -1 for r in self.rows for v in r)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "\n".join(" ".join(f"{v:2d}" for v in r) for r in self.rows)


# ---------------------------------------------------------------- structure


@dataclass
class ClassStructure:
    """Cells, lines and symmetry data of one (class, order)."""

    tag: ClassTag
    order: int
    rows: int
    cols: int
    lines: list[list[int]]
    line_req: list[list[int]]
    group: list[tuple[int, ...]]  # cell permutations, identity included
    forced_zero: frozenset[int]
    forced_minus: frozenset[int]
    orbits: list[list[int]] = field(default_factory=list)

    def cell(self, i: int, j: int) -> int:
        return i * self.cols + j

    @property
    def ncells(self) -> int:
        return self.rows * self.cols


def _square_maps(n: int) -> dict[str, callable]:
    return {
        "rot180": lambda i, j: (n - 1 - i, n - 1 - j),
        "rot90": lambda i, j: (j, n - 1 - i),
        "vflip": lambda i, j: (i, n - 1 - j),
        "hflip": lambda i, j: (n - 1 - i, j),
        "transpose": lambda i, j: (j, i),
        "antitranspose": lambda i, j: (n - 1 - j, n - 1 - i),
    }


_GENERATORS = {
    ClassTag.ASM: (),
    ClassTag.HTS: ("rot180",),
    ClassTag.QTS: ("rot90",),
    ClassTag.VS: ("vflip",),
    ClassTag.VHS: ("vflip", "hflip"),
    ClassTag.DS: ("transpose",),
    ClassTag.DAS: ("transpose", "antitranspose"),
    ClassTag.TS: ("rot90", "transpose"),
    ClassTag.OS: ("transpose",),
    ClassTag.OOS: ("transpose", "antitranspose"),
    ClassTag.VOS: ("vflip", "transpose"),
    ClassTag.UASM: (),
    ClassTag.UUASM: (),
    ClassTag.VHPASM: (),
    ClassTag.UOSASM: ("transpose",),
}


def _close_group(gens: list[tuple[int, ...]], ncells: int) -> list[tuple[int, ...]]:
    ident = tuple(range(ncells))
    group = {ident}
    frontier = [ident]
    while frontier:
        g = frontier.pop()
        for h in gens:
            gh = tuple(h[c] for c in g)
            if gh not in group:
                group.add(gh)
                frontier.append(gh)
    return sorted(group)


def _orbits(group: list[tuple[int, ...]], ncells: int) -> list[list[int]]:
    seen = [False] * ncells
    out = []
    for c in range(ncells):
        if seen[c]:
            continue
        orb = sorted({g[c] for g in group})
        for d in orb:
            seen[d] = True
        out.append(orb)
    return out


_STRUCT_CACHE: dict[tuple[ClassTag, int], ClassStructure] = {}


def structure(tag, order: int) -> ClassStructure:
    tag = check_admissible(tag, order)
    key = (tag, order)
    if key in _STRUCT_CACHE:
        return _STRUCT_CACHE[key]
    R, C = shape_of(tag, order)
    cell = lambda i, j: i * C + j  # noqa: E731
    lines: list[list[int]] = []
    req: list[list[int]] = []
    forced_zero: set[int] = set()
    forced_minus: set[int] = set()

    if tag in UTURN:
        if tag is ClassTag.UASM:
            for j in range(C):
                lines.append([cell(i, j) for i in range(R)])
            for k in range(R // 2):
                lines.append([cell(2 * k, j) for j in range(C)]
                             + [cell(2 * k + 1, j) for j in reversed(range(C))])
        else:
            for k in range(R // 2):
                lines.append([cell(2 * k, j) for j in range(C)]
                             + [cell(2 * k + 1, j) for j in reversed(range(C))])
            for k in range(C // 2):
                lines.append([cell(i, 2 * k) for i in range(R)]
                             + [cell(i, 2 * k + 1) for i in reversed(range(R))])
        req = [[-1] * len(l) for l in lines]
        if tag is ClassTag.VHPASM:
            # odd rows sum to 0, odd columns sum to 1 (1-indexed)
            half = R // 2
            for k in range(half):
                req[k][C - 1] = 0
                req[half + k][R - 1] = 1
        if tag is ClassTag.UOSASM:
            forced_zero = {cell(i, i) for i in range(R)}
        maps = {"transpose": lambda i, j: (j, i)}
    else:
        n = order
        for i in range(n):
            lines.append([cell(i, j) for j in range(n)])
        for j in range(n):
            lines.append([cell(i, j) for i in range(n)])
        req = [[-1] * n for _ in lines]
        maps = _square_maps(n)
        m = (n - 1) // 2
        if tag in (ClassTag.OS, ClassTag.OOS):
            forced_zero |= {cell(i, i) for i in range(n)}
        if tag is ClassTag.OOS:
            forced_zero |= {cell(i, n - 1 - i) for i in range(n)}
        if tag is ClassTag.VOS:
            forced_zero |= {cell(i, i) for i in range(n) if i != m}
        if tag in (ClassTag.VS, ClassTag.VHS, ClassTag.VOS):
            forced_minus |= {cell(i, m) for i in range(1, n, 2)}
        if tag in (ClassTag.VHS, ClassTag.VOS):
            forced_minus |= {cell(m, j) for j in range(1, n, 2)}

    gens = []
    for name in _GENERATORS[tag]:
        f = maps[name]
        gens.append(tuple(cell(*f(c // C, c % C)) for c in range(R * C)))
    group = _close_group(gens, R * C)
    st = ClassStructure(tag, order, R, C, lines, req, group,
                        frozenset(forced_zero), frozenset(forced_minus))
    st.orbits = _orbits(group, R * C)
    _STRUCT_CACHE[key] = st
    return st


# --------------------------------------------------------------- validation


@dataclass
class ValidationReport:
    valid: bool
    failures: list[str]

    def __bool__(self):
        return self.valid


def _asv_failure(vec: Sequence[int], req: Sequence[int] | None = None) -> str | None:
    s = 0
    for p, v in builtins.enumerate(vec):
        s += v
        if s not in (0, 1):
            return "partial sums leave {0, 1} (signs do not alternate or start with -1)"
        if req is not None and req[p] >= 0 and s != req[p]:
            return f"partial sum after position {p + 1} is {s}, required {req[p]}"
    if s != 1:
        return f"sum is {s}, not 1"
    return None


def validate(m, tag=ClassTag.ASM, order: int | None = None) -> ValidationReport:
    """Check the alternating-sign conditions and the class constraints."""
    if not isinstance(m, SignMatrix):
        m = SignMatrix.of(m)
    tag = ClassTag.parse(tag)
    failures: list[str] = []
    R, C = m.shape
    if any(len(r) != C for r in m.rows):
        return ValidationReport(False, ["ragged rows"])
    bad = [(i, j) for i in range(R) for j in range(C) if m.rows[i][j] not in (-1, 0, 1)]
    if bad:
        return ValidationReport(False, [f"entry outside {{-1,0,1}} at {bad[0]}"])
    if order is None:
        order = _infer_order(tag, R, C)
        if order is None:
            return ValidationReport(False, [f"shape {R}x{C} does not fit class {tag.value}"])
    try:
        st = structure(tag, order)
    except AdmissibilityError as e:
        return ValidationReport(False, [str(e)])
    if (st.rows, st.cols) != (R, C):
        return ValidationReport(False, [f"shape {R}x{C}, expected {st.rows}x{st.cols}"])
    flat = [v for r in m.rows for v in r]
    for li, (line, req) in builtins.enumerate(zip(st.lines, st.line_req)):
        msg = _asv_failure([flat[c] for c in line], req)
        if msg:
            failures.append(f"{_line_name(st, li)}: {msg}")
    for g in st.group:
        if any(flat[g[c]] != flat[c] for c in range(len(flat))):
            failures.append("not invariant under the class symmetry group")
            break
    zs = sorted(c for c in st.forced_zero if flat[c] != 0)
    if zs:
        failures.append(f"nonzero entry at forced-zero position {divmod(zs[0], C)}")
    return ValidationReport(not failures, failures)


def _infer_order(tag: ClassTag, R: int, C: int) -> int | None:
    if tag is ClassTag.UASM:
        return R if R == 2 * C and R > 0 else None
    if R != C:
        return None
    if tag in (ClassTag.UUASM, ClassTag.UOSASM):
        return 2 * R
    if tag is ClassTag.VHPASM:
        return 2 * R + 2
    return R


def _line_name(st: ClassStructure, li: int) -> str:
    if st.tag not in UTURN:
        return f"row {li + 1}" if li < st.rows else f"column {li - st.rows + 1}"
    if st.tag is ClassTag.UASM:
        if li < st.cols:
            return f"column {li + 1}"
        k = li - st.cols + 1
        return f"row pair ({2 * k - 1}, {2 * k})"
    half = st.rows // 2
    if li < half:
        return f"row pair ({2 * li + 1}, {2 * li + 2})"
    k = li - half
    return f"column pair ({2 * k + 1}, {2 * k + 2})"


# ------------------------------------------------------------- enumeration


def _states_to_rows(n: int, path: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    rows = []
    prev = 0
    for s in path:
        rows.append(tuple(((s >> j) & 1) - ((prev >> j) & 1) for j in range(n)))
        prev = s
    return tuple(rows)


def _asm_paths_job(args):
    n, first = args
    return _kernels.asm_state_paths(n, first)


def asm_state_paths(n: int, jobs: int = 1) -> Iterator[tuple[int, ...]]:
    """Row-state sequences of all ASMs of order n in canonical order."""
    tasks = [(n, f) for f in range(n)]
    for chunk in _map(_asm_paths_job, tasks, jobs):
        yield from chunk


def _search_tasks(st: ClassStructure, depth: int):
    """Split the orbit search by fixing the values of the first ``depth`` orbits."""
    orbits = st.orbits
    fixed = [0 if any(c in st.forced_zero for c in orb) else 2 for orb in orbits]
    depth = min(depth, len(orbits))
    prefixes = [()]
    for o in range(depth):
        choices = (0, 1, -1) if fixed[o] == 2 else (fixed[o],)
        prefixes = [p + (v,) for p in prefixes for v in choices]
    return fixed, prefixes


def _orbit_lines(st: ClassStructure) -> list[list[int]]:
    touch: dict[int, list[int]] = {}
    for li, line in builtins.enumerate(st.lines):
        for c in line:
            touch.setdefault(c, []).append(li)
    return [sorted({li for c in orb for li in touch.get(c, ())}) for orb in st.orbits]


def _orbit_job(args):
    tag, order, prefix = args
    st = structure(tag, order)
    fixed, _ = _search_tasks(st, 0)
    fixed = list(fixed)
    for o, v in builtins.enumerate(prefix):
        fixed[o] = v
    return _kernels.orbit_search(st.orbits, fixed, _orbit_lines(st), st.lines,
                                 st.line_req, st.ncells)


def _map(fn, tasks, jobs: int):
    jobs = resolve_jobs(jobs)
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield fn(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        # map preserves task order, so the stream is independent of jobs
        yield from ex.map(fn, tasks)


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None or jobs == 0:
        env = os.environ.get("ASMKIT_JOBS")
        jobs = int(env) if env else 1
    return max(1, int(jobs))


def orbit_solutions(tag, order: int, jobs: int = 1) -> Iterator[list[int]]:
    """Raw orbit-value vectors from the constrained backtracking."""
    st = structure(tag, order)
    depth = 0 if resolve_jobs(jobs) <= 1 else 3
    _, prefixes = _search_tasks(st, depth)
    tasks = [(st.tag, order, p) for p in prefixes]
    for sols in _map(_orbit_job, tasks, jobs):
        yield from sols


def _orbit_values_to_matrix(st: ClassStructure, vals: Sequence[int]) -> SignMatrix:
    flat = [0] * st.ncells
    for orb, v in zip(st.orbits, vals):
        for c in orb:
            flat[c] = v
    rows = tuple(tuple(flat[i * st.cols:(i + 1) * st.cols]) for i in range(st.rows))
    return SignMatrix(rows, st.tag)


def enumerate_class(tag, order: int, jobs: int = 1) -> Iterator[SignMatrix]:
    """Yield every matrix of the class exactly once, in canonical order."""
    tag = check_admissible(tag, order)
    if tag is ClassTag.ASM:
        for path in asm_state_paths(order, jobs):
            yield SignMatrix(_states_to_rows(order, path), tag)
        return
    st = structure(tag, order)
    for vals in orbit_solutions(tag, order, jobs):
        yield _orbit_values_to_matrix(st, vals)


enumerate = enumerate_class  # noqa: A001  (module-level name the API exposes)


def count(tag, order: int, jobs: int = 1) -> int:
    tag = check_admissible(tag, order)
    if tag is ClassTag.ASM:
        return asm_count_dp(order)
    return sum(1 for _ in orbit_solutions(tag, order, jobs))


def asm_count_dp(n: int) -> int:
    return asm_genfun_dp(n).eval_at_one()


def asm_genfun_dp(n: int) -> IntPolynomial:
    """Sum of x^(number of -1s) over ASMs of order n, by transfer over row states."""
    trans = _kernels.transitions(n)
    cur: dict[int, IntPolynomial] = {0: IntPolynomial.constant(1)}
    for _ in range(n):
        nxt: dict[int, IntPolynomial] = {}
        for s, poly in cur.items():
            for t in trans[s]:
                k = bin(s & ~t).count("1")
                term = poly.shift(k)
                nxt[t] = nxt[t] + term if t in nxt else term
        cur = nxt
    return cur.get((1 << n) - 1, IntPolynomial())


def enumerate_by_filtering(tag, order: int) -> list[SignMatrix]:
    """Oracle: filter a superset instead of searching.

    Square classes filter the plain ASMs of the same order; U-turn classes
    filter all {-1,0,1} fillings of the shape (so keep them tiny).
    """
    tag = check_admissible(tag, order)
    st = structure(tag, order)
    out = []
    if tag not in UTURN:
        for path in asm_state_paths(order):
            m = SignMatrix(_states_to_rows(order, path), tag)
            if validate(m, tag, order):
                out.append(m)
        return out
    if st.ncells > 14:
        raise ValueError("exhaustive U-turn filtering limited to 14 cells")
    for flat in itertools.product((0, 1, -1), repeat=st.ncells):
        rows = tuple(tuple(flat[i * st.cols:(i + 1) * st.cols]) for i in range(st.rows))
        m = SignMatrix(rows, tag)
        if validate(m, tag, order):
            out.append(m)
    return out


# --------------------------------------------------------------- statistic


def minus_one_statistic(m, tag=ClassTag.ASM, order: int | None = None,
                        check: bool = True) -> int:
    """Number of -1 orbits under the class symmetry, forced orbits excluded."""
    if not isinstance(m, SignMatrix):
        m = SignMatrix.of(m)
    tag = ClassTag.parse(tag)
    if order is None:
        order = _infer_order(tag, *m.shape)
        if order is None:
            raise InvalidMatrixError(f"shape {m.shape} does not fit class {tag.value}")
    if check:
        rep = validate(m, tag, order)
        if not rep:
            raise InvalidMatrixError("; ".join(rep.failures))
    st = structure(tag, order)
    return _statistic(st, [v for r in m.rows for v in r])


def _statistic(st: ClassStructure, flat: Sequence[int]) -> int:
    k = 0
    for orb in st.orbits:
        if flat[orb[0]] == -1 and not any(c in st.forced_minus for c in orb):
            k += 1
    return k


def x_enumeration(tag, order: int, jobs: int = 1) -> IntPolynomial:
    """Sum of x^statistic over the class, as an exact integer polynomial."""
    tag = check_admissible(tag, order)
    if tag is ClassTag.ASM:
        return asm_genfun_dp(order)
    st = structure(tag, order)
    counts: dict[int, int] = {}
    for vals in orbit_solutions(tag, order, jobs):
        k = 0
        for orb, v in zip(st.orbits, vals):
            if v == -1 and not any(c in st.forced_minus for c in orb):
                k += 1
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return IntPolynomial()
    top = builtins.max(counts)
    return IntPolynomial([counts.get(i, 0) for i in range(top + 1)])


def x_enumeration_by_matrices(tag, order: int) -> IntPolynomial:
    """Same polynomial computed matrix by matrix through minus_one_statistic."""
    counts: dict[int, int] = {}
    for m in enumerate_class(tag, order):
        k = minus_one_statistic(m, tag, order)
        counts[k] = counts.get(k, 0) + 1
    top = builtins.max(counts) if counts else 0
    return IntPolynomial([counts.get(i, 0) for i in range(top + 1)])
