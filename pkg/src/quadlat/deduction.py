"""Forward-chaining completion of block-form Cayley tables.

A partial table over the symbols {centre} + H1..Hn is seeded from the
block laws plus one choice for centre*a, then saturated under a fixed rule
set: latin elimination, bookend, strong elasticity, alterability, left and
right distributivity, and mediality.  Cheap rules run first; each pass
scans in a fixed order, so traces are deterministic.  Known cells never
change: a clashing deduction is a conflict, not an overwrite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import CayleyTable, is_quadratical
from .qn import canonical_index, canonical_labels


class Step(NamedTuple):
    rule: str
    cell: tuple[int, int]
    value: int
    premises: tuple
    binding: tuple


@dataclass(frozen=True)
class Conflict:
    kind: str
    rule: str
    cell: tuple[int, int]
    value: int
    existing: int
    premises: tuple
    binding: tuple


@dataclass(frozen=True)
class PartialTable:
    n: int
    entries: tuple[tuple, ...]  # int or None per cell
    trace: tuple[Step, ...]

    def known_count(self) -> int:
        return sum(1 for row in self.entries for v in row if v is not None)


@dataclass(frozen=True)
class Completed:
    table: CayleyTable
    trace: tuple[Step, ...]
    blocks: int
    choice: int


@dataclass(frozen=True)
class Contradiction:
    conflict: Conflict
    trace: tuple[Step, ...]
    blocks: int
    choice: int


@dataclass(frozen=True)
class Stuck:
    partial: PartialTable
    blocks: int
    choice: int


class _ConflictError(Exception):
    def __init__(self, record):
        self.record = record


class ReplayError(Exception):
    """A trace step or conflict is not justified by the rule set."""


# ---------------------------------------------------------------------------
# seeding
# ---------------------------------------------------------------------------

# Row and column of the centre for H1, and the wrap-around block products,
# indexed by the choice slot c with centre*a = (n, c).  Entries are slot
# numbers s meaning the element (n, s) (or (1, s) for "wrap").
_CHOICE_CENTRE_ROW = {1: (1, 2, 3, 4), 2: (2, 4, 1, 3), 3: (3, 1, 4, 2), 4: (4, 3, 2, 1)}
_CHOICE_CENTRE_COL = {1: (2, 4, 1, 3), 2: (4, 3, 2, 1), 3: (1, 2, 3, 4), 4: (3, 1, 4, 2)}
_CHOICE_WRAP = {1: (1, 2, 3, 4), 2: (3, 1, 4, 2), 3: (2, 4, 1, 3), 4: (4, 3, 2, 1)}
# Extra forced products for n >= 2: a*(3,4), (2,3)*b, (3,4)*b, b*(2,1), and
# the pair of cells pinned to a previous-block element.
_CHOICE_A_34 = {1: 3, 2: 1, 3: 4, 4: 2}
_CHOICE_23_B = {1: 2, 2: 4, 3: 1, 4: 3}
_CHOICE_PREV = {1: (1, 2, 2), 2: (2, 4, 4), 3: (3, 1, 1), 4: (4, 3, 3)}
# _CHOICE_PREV[c] = (s, t, u): a*(n,s) = (n-1, u) and (n,t)*a = (n-1, u)


def seed_assignments(blocks: int, choice: int) -> list[tuple[str, tuple[int, int], int]]:
    """The deterministic seed list for a block-form table: idempotency, the
    block recurrences and product laws, centre row/column translation, and
    the forced products for the given centre*a choice."""
    if blocks < 1:
        raise ValueError(f"blocks must be positive, got {blocks}")
    if choice not in (1, 2, 3, 4):
        raise ValueError(f"choice must be a slot 1..4, got {choice}")
    n = 4 * blocks + 1

    def i(t, k):
        return canonical_index(blocks, t, k)

    seeds = []
    for x in range(n):
        seeds.append(("seed:idempotent", (x, x), x))
    for t in range(1, blocks + 1):
        t1, t2, t3, t4 = (i(t, k) for k in (1, 2, 3, 4))
        seeds += [
            ("seed:block-cycle", (t1, t4), t2),
            ("seed:block-cycle", (t2, t3), t4),
            ("seed:block-cycle", (t3, t2), t1),
            ("seed:block-cycle", (t4, t1), t3),
            ("seed:centre-product", (t1, t3), 0),
            ("seed:centre-product", (t2, t1), 0),
            ("seed:centre-product", (t3, t4), 0),
            ("seed:centre-product", (t4, t2), 0),
        ]
    for t in range(2, blocks + 1):
        p1, p2, p3, p4 = (i(t - 1, k) for k in (1, 2, 3, 4))
        seeds += [
            ("seed:block-recurrence", (p1, p2), i(t, 1)),
            ("seed:block-recurrence", (p2, p4), i(t, 2)),
            ("seed:block-recurrence", (p3, p1), i(t, 3)),
            ("seed:block-recurrence", (p4, p3), i(t, 4)),
        ]
        for k in range(1, 5):
            seeds.append(("seed:centre-row", (0, i(t, k)), i(t - 1, k)))
        seeds += [
            ("seed:centre-col", (i(t, 1), 0), i(t - 1, 2)),
            ("seed:centre-col", (i(t, 2), 0), i(t - 1, 4)),
            ("seed:centre-col", (i(t, 3), 0), i(t - 1, 1)),
            ("seed:centre-col", (i(t, 4), 0), i(t - 1, 3)),
        ]
    seeds.append(("seed:choice", (0, i(1, 1)), i(blocks, choice)))
    if blocks >= 2:
        row = _CHOICE_CENTRE_ROW[choice]
        col = _CHOICE_CENTRE_COL[choice]
        wrap = _CHOICE_WRAP[choice]
        for j in range(1, 4):
            seeds.append(("seed:choice-row", (0, i(1, j + 1)), i(blocks, row[j])))
        for j in range(4):
            seeds.append(("seed:choice-col", (i(1, j + 1), 0), i(blocks, col[j])))
        nb = blocks
        seeds += [
            ("seed:choice-wrap", (i(nb, 1), i(nb, 2)), i(1, wrap[0])),
            ("seed:choice-wrap", (i(nb, 2), i(nb, 4)), i(1, wrap[1])),
            ("seed:choice-wrap", (i(nb, 3), i(nb, 1)), i(1, wrap[2])),
            ("seed:choice-wrap", (i(nb, 4), i(nb, 3)), i(1, wrap[3])),
            ("seed:choice-eq", (i(1, 4), i(2, 1)), i(nb, choice)),
            ("seed:choice-eq", (i(2, 3), i(1, 4)), i(nb, _CHOICE_23_B[choice])),
        ]
        if blocks >= 3:
            seeds += [
                ("seed:choice-eq", (i(1, 1), i(3, 4)), i(nb, _CHOICE_A_34[choice])),
                ("seed:choice-eq", (i(3, 4), i(1, 4)), i(nb, choice)),
            ]
        s, tt, u = _CHOICE_PREV[choice]
        seeds += [
            ("seed:choice-prev", (i(1, 1), i(nb, s)), i(nb - 1, u)),
            ("seed:choice-prev", (i(nb, tt), i(1, 1)), i(nb - 1, u)),
        ]
    return seeds


# ---------------------------------------------------------------------------
# engine state
# ---------------------------------------------------------------------------

class _State:
    __slots__ = (
        "n", "blocks", "choice", "val", "row_vals", "col_vals",
        "row_known", "col_known", "cells_by_value", "unknown", "trace",
        "conflict",
    )

    def __init__(self, blocks: int, choice: int):
        n = 4 * blocks + 1
        self.n = n
        self.blocks = blocks
        self.choice = choice
        self.val = [[-1] * n for _ in range(n)]
        self.row_vals = [0] * n
        self.col_vals = [0] * n
        self.row_known = [0] * n
        self.col_known = [0] * n
        self.cells_by_value = [[] for _ in range(n)]
        self.unknown = n * n
        self.trace = []
        self.conflict = None

    def clone(self) -> "_State":
        st = _State.__new__(_State)
        st.n = self.n
        st.blocks = self.blocks
        st.choice = self.choice
        st.val = [row[:] for row in self.val]
        st.row_vals = self.row_vals[:]
        st.col_vals = self.col_vals[:]
        st.row_known = self.row_known[:]
        st.col_known = self.col_known[:]
        st.cells_by_value = [lst[:] for lst in self.cells_by_value]
        st.unknown = self.unknown
        st.trace = self.trace[:]
        st.conflict = None
        return st

    # -- assignment ---------------------------------------------------------

    def _find_in_row(self, r: int, v: int) -> int:
        return self.val[r].index(v)

    def _find_in_col(self, c: int, v: int) -> int:
        for r in range(self.n):
            if self.val[r][c] == v:
                return r
        raise ValueError("value not present in column")

    def set_cell(self, r, c, v, rule, premises, binding) -> bool:
        cur = self.val[r][c]
        if cur == v:
            return False
        if cur != -1:
            raise _ConflictError(Conflict(
                "cell-mismatch", rule, (r, c), v, cur, premises, binding))
        bit = 1 << v
        if self.row_vals[r] & bit:
            j = self._find_in_row(r, v)
            raise _ConflictError(Conflict(
                "row-duplicate", rule, (r, c), v, -1,
                premises + ((((r, j)), v),), binding))
        if self.col_vals[c] & bit:
            i = self._find_in_col(c, v)
            raise _ConflictError(Conflict(
                "col-duplicate", rule, (r, c), v, -1,
                premises + ((((i, c)), v),), binding))
        self.val[r][c] = v
        self.row_vals[r] |= bit
        self.col_vals[c] |= bit
        self.row_known[r] |= 1 << c
        self.col_known[c] |= 1 << r
        self.cells_by_value[v].append((r, c))
        self.unknown -= 1
        self.trace.append(Step(rule, (r, c), v, premises, binding))
        return True

    def link(self, cell1, cell2, rule, binding, premise_cells) -> bool:
        """Require the two cells to hold equal values; propagate or clash."""
        v1 = self.val[cell1[0]][cell1[1]]
        v2 = self.val[cell2[0]][cell2[1]]
        if v1 == -1 and v2 == -1:
            return False
        if v1 != -1 and v2 != -1:
            if v1 != v2:
                prem = self._premises(premise_cells) + ((cell1, v1),)
                raise _ConflictError(Conflict(
                    "cell-mismatch", rule, cell2, v1, v2, prem, binding))
            return False
        if v1 != -1:
            prem = self._premises(premise_cells) + ((cell1, v1),)
            return self.set_cell(cell2[0], cell2[1], v1, rule, prem, binding)
        prem = self._premises(premise_cells) + ((cell2, v2),)
        return self.set_cell(cell1[0], cell1[1], v2, rule, prem, binding)

    def _premises(self, cells) -> tuple:
        return tuple((cell, self.val[cell[0]][cell[1]]) for cell in cells)

    # -- rule passes --------------------------------------------------------

    def latin_pass(self) -> bool:
        n = self.n
        full = (1 << n) - 1
        val = self.val
        changed = False
        for r in range(n):
            row_v = self.row_vals[r]
            for c in range(n):
                if val[r][c] != -1:
                    continue
                cand = ~(row_v | self.col_vals[c]) & full
                if cand == 0:
                    raise _ConflictError(Conflict(
                        "cell-no-candidate", "latin-cell", (r, c), -1, -1,
                        self._coverage_cell(r, c), (r, c)))
                if cand & (cand - 1) == 0:
                    v = cand.bit_length() - 1
                    changed |= self.set_cell(
                        r, c, v, "latin-cell-single", self._coverage_cell(r, c), (r, c))
                    row_v = self.row_vals[r]
        for r in range(n):
            missing = full & ~self.row_vals[r]
            while missing:
                bit = missing & -missing
                missing ^= bit
                v = bit.bit_length() - 1
                spot = -1
                count = 0
                for c in range(n):
                    if val[r][c] == -1 and not (self.col_vals[c] & bit):
                        spot = c
                        count += 1
                        if count > 1:
                            break
                if count == 0:
                    raise _ConflictError(Conflict(
                        "row-value-impossible", "latin-row", (r, -1), v, -1,
                        self._coverage_row(r, v), (r, v)))
                if count == 1:
                    changed |= self.set_cell(
                        r, spot, v, "latin-row-single", self._coverage_row(r, v), (r, v))
        for c in range(n):
            missing = full & ~self.col_vals[c]
            while missing:
                bit = missing & -missing
                missing ^= bit
                v = bit.bit_length() - 1
                spot = -1
                count = 0
                for r in range(n):
                    if val[r][c] == -1 and not (self.row_vals[r] & bit):
                        spot = r
                        count += 1
                        if count > 1:
                            break
                if count == 0:
                    raise _ConflictError(Conflict(
                        "col-value-impossible", "latin-col", (-1, c), v, -1,
                        self._coverage_col(c, v), (c, v)))
                if count == 1:
                    changed |= self.set_cell(
                        spot, c, v, "latin-col-single",
                        self._coverage_col(c, v), (c, v))
        return changed

    def _coverage_cell(self, r, c) -> tuple:
        out = []
        for v in range(self.n):
            if self.val[r][c] == v:
                continue
            if self.row_vals[r] >> v & 1:
                out.append((((r, self._find_in_row(r, v))), v))
            elif self.col_vals[c] >> v & 1:
                out.append((((self._find_in_col(c, v), c)), v))
        return tuple(out)

    def _coverage_row(self, r, v) -> tuple:
        out = []
        for c in range(self.n):
            if self.val[r][c] != -1:
                out.append((((r, c)), self.val[r][c]))
            elif self.col_vals[c] >> v & 1:
                out.append((((self._find_in_col(c, v), c)), v))
        return tuple(out)

    def _coverage_col(self, c, v) -> tuple:
        out = []
        for r in range(self.n):
            if self.val[r][c] != -1:
                out.append((((r, c)), self.val[r][c]))
            elif self.row_vals[r] >> v & 1:
                out.append((((r, self._find_in_row(r, v))), v))
        return tuple(out)

    def pairs_pass(self) -> bool:
        # bookend (y*x)(x*y) = x and the three-way strong elasticity chain
        # x(yx) = (xy)x = (yx)y
        n = self.n
        val = self.val
        changed = False
        for x in range(n):
            for y in range(n):
                if x == y:
                    continue
                u = val[y][x]
                v = val[x][y]
                if u != -1 and v != -1:
                    prem = (((y, x), u), ((x, y), v))
                    changed |= self._bookend_set(u, v, x, prem, (x, y))
                cells = []
                if u != -1:
                    cells.append((x, u))
                    cells.append((u, y))
                if v != -1:
                    cells.append((v, x))
                if len(cells) >= 2:
                    base = []
                    if u != -1:
                        base.append((y, x))
                    if v != -1:
                        base.append((x, y))
                    for a in range(len(cells) - 1):
                        for b in range(a + 1, len(cells)):
                            changed |= self.link(
                                cells[a], cells[b], "strong-elasticity", (x, y), base)
        return changed

    def _bookend_set(self, u, v, x, prem, binding) -> bool:
        cur = self.val[u][v]
        if cur == x:
            return False
        return self.set_cell(u, v, x, "bookend", prem, binding)

    def alter_pass(self) -> bool:
        # x*y = z*w implies y*z = w*x, over pairs of equal known cells; the
        # reversed pair yields the same cell equality, so one link suffices
        changed = False
        for v in range(self.n):
            lst = self.cells_by_value[v]
            m = len(lst)
            for a in range(m):
                x, y = lst[a]
                for b in range(a + 1, m):
                    z, w = lst[b]
                    changed |= self.link(
                        (y, z), (w, x), "alterability", (x, y, z, w),
                        ((x, y), (z, w)))
        return changed

    def _known_cols(self) -> list:
        out = []
        for r in range(self.n):
            mask = self.row_known[r]
            cols = []
            while mask:
                bit = mask & -mask
                mask ^= bit
                cols.append(bit.bit_length() - 1)
            out.append(cols)
        return out

    def distrib_pass(self) -> bool:
        # left: x(yz) = (xy)(xz); right: (xy)z = (xz)(yz)
        n = self.n
        val = self.val
        changed = False
        kc = self._known_cols()
        for x in range(n):
            vx = val[x]
            for y in kc[x]:
                b_xy = vx[y]
                both = self.row_known[x] & self.row_known[y]
                # left distributivity, premise cells (y,z),(x,y),(x,z)
                m2 = both
                while m2:
                    bit = m2 & -m2
                    m2 ^= bit
                    z = bit.bit_length() - 1
                    a_yz = val[y][z]
                    c_xz = vx[z]
                    changed |= self.link(
                        (x, a_yz), (b_xy, c_xz), "left-distributivity",
                        (x, y, z), ((y, z), (x, y), (x, z)))
                # right distributivity, premise cells (x,y),(x,z),(y,z)
                m2 = both
                while m2:
                    bit = m2 & -m2
                    m2 ^= bit
                    z = bit.bit_length() - 1
                    b_xz = vx[z]
                    c_yz = val[y][z]
                    changed |= self.link(
                        (b_xy, z), (b_xz, c_yz), "right-distributivity",
                        (x, y, z), ((x, y), (x, z), (y, z)))
        return changed

    def mediality_pass(self) -> bool:
        # (xy)(zw) = (xz)(yw); degenerate instances with x=y, x=z, z=w or
        # y=w reduce to distributivity and are skipped
        n = self.n
        val = self.val
        changed = False
        kc = self._known_cols()
        for x in range(n):
            vx = val[x]
            cols_x = kc[x]
            for y in cols_x:
                if y == x:
                    continue
                a_xy = vx[y]
                ky = self.row_known[y]
                for z in cols_x:
                    if z == x or z == y:
                        continue
                    c_xz = vx[z]
                    vz = val[z]
                    mask = self.row_known[z] & ky
                    while mask:
                        bit = mask & -mask
                        mask ^= bit
                        w = bit.bit_length() - 1
                        if w == z or w == y:
                            continue
                        changed |= self.link(
                            (a_xy, vz[w]), (c_xz, val[y][w]), "mediality",
                            (x, y, z, w), ((x, y), (z, w), (x, z), (y, w)))
        return changed


def _saturate(st: _State) -> None:
    if st.conflict is not None:
        return
    try:
        while True:
            while True:
                ch = st.latin_pass()
                ch = st.pairs_pass() or ch
                ch = st.alter_pass() or ch
                if not ch:
                    break
            if st.distrib_pass():
                continue
            if st.mediality_pass():
                continue
            return
    except _ConflictError as exc:
        st.conflict = exc.record


def _seed_state(blocks: int, choice: int) -> _State:
    st = _State(blocks, choice)
    try:
        for rule, cell, v in seed_assignments(blocks, choice):
            st.set_cell(cell[0], cell[1], v, rule, (), ())
    except _ConflictError as exc:
        st.conflict = exc.record
    return st


def _partial_view(st: _State) -> PartialTable:
    entries = tuple(
        tuple(v if v != -1 else None for v in row) for row in st.val
    )
    return PartialTable(st.n, entries, tuple(st.trace))


def _outcome(st: _State):
    if st.conflict is not None:
        return Contradiction(st.conflict, tuple(st.trace), st.blocks, st.choice)
    if st.unknown == 0:
        table = CayleyTable(
            st.n, tuple(tuple(row) for row in st.val), canonical_labels(st.blocks))
        if not is_quadratical(table):
            raise AssertionError("completed table failed the quadratical check")
        return Completed(table, tuple(st.trace), st.blocks, st.choice)
    return Stuck(_partial_view(st), st.blocks, st.choice)


def complete_qn(blocks: int, choice: int):
    """Deduce the full table of a block-form quadratical quasigroup from
    the centre*a choice (a slot 1..4 naming the element of the last block).
    Pure saturation, no search: the outcome is Completed, Contradiction, or
    an honest Stuck."""
    st = _seed_state(blocks, choice)
    _saturate(st)
    return _outcome(st)


def parse_choice(blocks: int, text: str) -> int:
    """Accept a slot 1..4 or the two-digit element name (e.g. 62 for the
    second slot of the last block of a six-block table)."""
    v = int(text)
    if 1 <= v <= 4:
        return v
    if blocks * 10 < v < blocks * 10 + 5:
        return v - blocks * 10
    raise ValueError(f"choice {text!r} is not a slot 1..4 of block {blocks}")


# ---------------------------------------------------------------------------
# refutation with bounded case splitting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RefutationCase:
    choice: int
    refuted: bool
    leaves: tuple[Contradiction, ...]
    splits: int
    max_depth_used: int
    completed: Completed | None
    stuck: Stuck | None


@dataclass(frozen=True)
class RefutationReport:
    blocks: int
    cases: tuple[RefutationCase, ...]

    @property
    def ok(self) -> bool:
        return all(c.refuted for c in self.cases)


def _least_unknown_cell(st: _State):
    """The unknown cell with the fewest latin candidates, ties by (r, c)."""
    n = st.n
    full = (1 << n) - 1
    best = None
    best_count = n + 1
    for r in range(n):
        row = st.val[r]
        for c in range(n):
            if row[c] != -1:
                continue
            cand = ~(st.row_vals[r] | st.col_vals[c]) & full
            cnt = cand.bit_count()
            if cnt < best_count:
                best = (r, c, cand)
                best_count = cnt
                if cnt <= 2:
                    return best
    return best


def _refute_search(st: _State, depth: int, max_depth: int, stats: dict):
    """DFS over assumptions on the least-unknown cell.  Returns
    ("refuted", leaves) or ("completed", outcome) or ("stuck", outcome)."""
    if st.conflict is not None:
        return "refuted", [Contradiction(st.conflict, tuple(st.trace), st.blocks, st.choice)]
    if st.unknown == 0:
        return "completed", _outcome(st)
    if depth >= max_depth:
        return "stuck", Stuck(_partial_view(st), st.blocks, st.choice)
    stats["splits"] += 1
    stats["max_depth"] = max(stats["max_depth"], depth + 1)
    r, c, cand = _least_unknown_cell(st)
    leaves = []
    while cand:
        bit = cand & -cand
        cand ^= bit
        v = bit.bit_length() - 1
        child = st.clone()
        try:
            child.set_cell(r, c, v, "assume", (), (depth + 1,))
        except _ConflictError as exc:  # pragma: no cover - candidates are latin-safe
            child.conflict = exc.record
        _saturate(child)
        verdict, payload = _refute_search(child, depth + 1, max_depth, stats)
        if verdict == "refuted":
            leaves.extend(payload)
        else:
            return verdict, payload
    return "refuted", leaves


def refute_case(blocks: int, choice: int, split_depth: int = 3) -> RefutationCase:
    """Saturate one centre*a choice and, if needed, case-split up to the
    given depth; every branch must end in a conflict for a refutation."""
    st = _seed_state(blocks, choice)
    _saturate(st)
    stats = {"splits": 0, "max_depth": 0}
    verdict, payload = _refute_search(st, 0, split_depth, stats)
    if verdict == "refuted":
        return RefutationCase(
            choice, True, tuple(payload), stats["splits"], stats["max_depth"],
            None, None)
    if verdict == "completed":
        return RefutationCase(
            choice, False, (), stats["splits"], stats["max_depth"], payload, None)
    return RefutationCase(
        choice, False, (), stats["splits"], stats["max_depth"], None, payload)


def _refute_case_q6(args) -> RefutationCase:
    choice, split_depth = args
    return refute_case(6, choice, split_depth)


def refute_q6(split_depth: int = 3, jobs: int | None = None) -> RefutationReport:
    """Run all four centre*a choices for a six-block table; a full report
    with four refuted cases is a machine check that no such quasigroup
    exists."""
    choices = (1, 2, 3, 4)
    if jobs is not None and jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(min(jobs, 4)) as pool:
            cases = tuple(pool.map(
                _refute_case_q6, [(c, split_depth) for c in choices]))
    else:
        cases = tuple(refute_case(6, c, split_depth) for c in choices)
    return RefutationReport(6, cases)


# ---------------------------------------------------------------------------
# trace text and replay
# ---------------------------------------------------------------------------

def _fmt_premises(premises) -> str:
    return ", ".join(f"cell({r},{c})={v}" for (r, c), v in premises)


def trace_text(trace, conflict: Conflict | None = None) -> str:
    """One deduction per line: ``cell(x,y) := v  by RULE from [premises]``."""
    lines = []
    for step in trace:
        lines.append(
            f"cell({step.cell[0]},{step.cell[1]}) := {step.value}"
            f"  by {step.rule} from [{_fmt_premises(step.premises)}]"
        )
    if conflict is not None:
        if conflict.kind == "cell-mismatch":
            what = (f"cell({conflict.cell[0]},{conflict.cell[1]}) := {conflict.value}"
                    f" clashes with existing {conflict.existing}")
        elif conflict.kind in ("row-duplicate", "col-duplicate"):
            what = (f"cell({conflict.cell[0]},{conflict.cell[1]}) := {conflict.value}"
                    f" duplicates a {conflict.kind.split('-')[0]} value")
        else:
            what = f"{conflict.kind} at ({conflict.cell[0]},{conflict.cell[1]}) value {conflict.value}"
        lines.append(
            f"conflict: {what}  by {conflict.rule} from [{_fmt_premises(conflict.premises)}]")
    return "\n".join(lines) + "\n"


class _Replay:
    """Re-derives each trace step from the rule schema against the running
    partial table; raises ReplayError on the first unjustified step."""

    def __init__(self, blocks: int, choice: int):
        self.n = 4 * blocks + 1
        self.val = [[-1] * self.n for _ in range(self.n)]
        self.seeds = {
            (cell, v): rule for rule, cell, v in seed_assignments(blocks, choice)
        }

    def get(self, r, c):
        if not (0 <= r < self.n and 0 <= c < self.n):
            raise ReplayError(f"cell ({r},{c}) out of range")
        return self.val[r][c]

    def known(self, r, c):
        v = self.get(r, c)
        if v == -1:
            raise ReplayError(f"premise cell ({r},{c}) not yet known")
        return v

    def derivation_sides(self, step):
        """The two cells forced equal by this step's rule, or None for
        rules handled specially."""
        rule, binding = step.rule, step.binding
        if rule == "strong-elasticity":
            x, y = binding
            u = self.get(y, x)
            v = self.get(x, y)
            cells = []
            if u != -1:
                cells += [(x, u), (u, y)]
            if v != -1:
                cells.append((v, x))
            if step.cell not in cells:
                raise ReplayError("strong-elasticity conclusion not addressable")
            others = [cl for cl in cells if cl != step.cell and self.get(*cl) == step.value]
            if not others:
                raise ReplayError("strong-elasticity source value missing")
            return None
        if rule == "left-distributivity":
            x, y, z = binding
            a = self.known(y, z)
            b = self.known(x, y)
            c = self.known(x, z)
            return (x, a), (b, c)
        if rule == "right-distributivity":
            x, y, z = binding
            a = self.known(x, y)
            b = self.known(x, z)
            c = self.known(y, z)
            return (a, z), (b, c)
        if rule == "mediality":
            x, y, z, w = binding
            a = self.known(x, y)
            b = self.known(z, w)
            c = self.known(x, z)
            d = self.known(y, w)
            return (a, b), (c, d)
        if rule == "alterability":
            x, y, z, w = binding
            if self.known(x, y) != self.known(z, w):
                raise ReplayError("alterability premises are not equal products")
            return (y, z), (w, x)
        raise ReplayError(f"unknown rule {rule!r}")

    def verify_step(self, step: Step):
        rule = step.rule
        r, c = step.cell
        v = step.value
        if rule.startswith("seed:"):
            if self.seeds.get((step.cell, v)) != rule:
                raise ReplayError(f"{rule} step not in the seed set: {step}")
            return
        if rule == "assume":
            if self.get(r, c) != -1:
                raise ReplayError("assumption over a known cell")
            return
        if rule == "bookend":
            x, y = step.binding
            u = self.known(y, x)
            vv = self.known(x, y)
            if (r, c) != (u, vv) or v != x:
                raise ReplayError(f"bookend step not justified: {step}")
            return
        if rule == "strong-elasticity":
            self.derivation_sides(step)
            return
        if rule in ("left-distributivity", "right-distributivity",
                    "mediality", "alterability"):
            s1, s2 = self.derivation_sides(step)
            for mine, other in ((s1, s2), (s2, s1)):
                if step.cell == mine and self.get(*other) == v:
                    return
            raise ReplayError(f"{rule} step not justified: {step}")
        if rule == "latin-cell-single":
            if self.get(r, c) != -1:
                raise ReplayError("latin-cell-single over a known cell")
            for w in range(self.n):
                if w == v:
                    continue
                if not (self._value_in_row(r, w) or self._value_in_col(c, w)):
                    raise ReplayError(f"value {w} not excluded at ({r},{c})")
            return
        if rule == "latin-row-single":
            if self._value_in_row(r, v):
                raise ReplayError("latin-row-single for a present value")
            for cc in range(self.n):
                if cc == c:
                    continue
                if self.get(r, cc) == -1 and not self._value_in_col(cc, v):
                    raise ReplayError(f"column {cc} not excluded for value {v}")
            return
        if rule == "latin-col-single":
            if self._value_in_col(c, v):
                raise ReplayError("latin-col-single for a present value")
            for rr in range(self.n):
                if rr == r:
                    continue
                if self.get(rr, c) == -1 and not self._value_in_row(rr, v):
                    raise ReplayError(f"row {rr} not excluded for value {v}")
            return
        raise ReplayError(f"unknown rule {rule!r}")

    def _value_in_row(self, r, v):
        return v in self.val[r]

    def _value_in_col(self, c, v):
        return any(self.val[r][c] == v for r in range(self.n))

    def apply_step(self, step: Step):
        r, c = step.cell
        if self.val[r][c] != -1:
            raise ReplayError(f"cell ({r},{c}) assigned twice")
        if self._value_in_row(r, step.value) or self._value_in_col(c, step.value):
            raise ReplayError(f"step duplicates value {step.value} at ({r},{c})")
        self.val[r][c] = step.value

    def verify_conflict(self, conflict: Conflict):
        kind = conflict.kind
        r, c = conflict.cell
        if kind in ("cell-mismatch", "row-duplicate", "col-duplicate"):
            pseudo = Step(conflict.rule, conflict.cell, conflict.value,
                          conflict.premises, conflict.binding)
            if conflict.rule.startswith("seed:"):
                if self.seeds.get((conflict.cell, conflict.value)) != conflict.rule:
                    raise ReplayError("conflicting seed not in the seed set")
            else:
                self.verify_step(pseudo)
            if kind == "cell-mismatch":
                if self.get(r, c) == -1 or self.get(r, c) == conflict.value:
                    raise ReplayError("cell-mismatch conflict does not clash")
            elif kind == "row-duplicate":
                if self.get(r, c) != -1 or not self._value_in_row(r, conflict.value):
                    raise ReplayError("row-duplicate conflict does not clash")
            else:
                if self.get(r, c) != -1 or not self._value_in_col(c, conflict.value):
                    raise ReplayError("col-duplicate conflict does not clash")
            return
        if kind == "cell-no-candidate":
            for w in range(self.n):
                if not (self._value_in_row(r, w) or self._value_in_col(c, w)):
                    raise ReplayError(f"value {w} still possible at ({r},{c})")
            return
        if kind == "row-value-impossible":
            v = conflict.value
            if self._value_in_row(r, v):
                raise ReplayError("value already present in row")
            for cc in range(self.n):
                if self.get(r, cc) == -1 and not self._value_in_col(cc, v):
                    raise ReplayError(f"column {cc} still open for value {v}")
            return
        if kind == "col-value-impossible":
            v = conflict.value
            if self._value_in_col(c, v):
                raise ReplayError("value already present in column")
            for rr in range(self.n):
                if self.get(rr, c) == -1 and not self._value_in_row(rr, v):
                    raise ReplayError(f"row {rr} still open for value {v}")
            return
        raise ReplayError(f"unknown conflict kind {kind!r}")


def replay_trace(blocks: int, choice: int, trace, conflict: Conflict | None = None) -> None:
    """Verify every step of a trace against the rule set, then verify the
    final conflict when given; raises ReplayError otherwise."""
    rp = _Replay(blocks, choice)
    for step in trace:
        rp.verify_step(step)
        rp.apply_step(step)
    if conflict is not None:
        rp.verify_conflict(conflict)
