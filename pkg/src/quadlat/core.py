"""Finite groupoids as Cayley tables.

Elements are always the indices 0..n-1; any symbolic names live in the
optional ``labels`` field.  All operations here are pure functions over
immutable tables, so tables can be shared freely between threads or
processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

# An identity verdict is None when it holds, otherwise the lexicographically
# least tuple of element indices violating it (variables in the order they
# appear in the defining equation).


@dataclass(frozen=True)
class CayleyTable:
    """An n by n operation table: entries[x][y] is the product x*y."""

    n: int
    entries: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")
        if len(self.entries) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.entries)}")
        for x, row in enumerate(self.entries):
            if len(row) != self.n:
                raise ValueError(f"row {x} has {len(row)} entries, expected {self.n}")
            for y, v in enumerate(row):
                if not (0 <= v < self.n):
                    raise ValueError(f"entry [{x}][{y}] = {v} out of range 0..{self.n - 1}")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be distinct")

    @classmethod
    def from_rows(cls, rows, labels=None) -> "CayleyTable":
        entries = tuple(tuple(int(v) for v in row) for row in rows)
        return cls(len(entries), entries, tuple(labels) if labels is not None else None)

    @classmethod
    def from_function(cls, n: int, op, labels=None) -> "CayleyTable":
        return cls.from_rows([[op(x, y) for y in range(n)] for x in range(n)], labels)

    def mul(self, x: int, y: int) -> int:
        return self.entries[x][y]

    def __repr__(self):
        return f"CayleyTable(n={self.n})"


# ---------------------------------------------------------------------------
# identity checking
# ---------------------------------------------------------------------------

def _check_idempotency(t):
    e = t.entries
    for x in range(t.n):
        if e[x][x] != x:
            return (x,)
    return None


def _check_elasticity(t):
    # x * (y*x) = (x*y) * x
    e = t.entries
    for x in range(t.n):
        for y in range(t.n):
            if e[x][e[y][x]] != e[e[x][y]][x]:
                return (x, y)
    return None


def _check_strong_elasticity(t):
    # x * (y*x) = (x*y) * x = (y*x) * y
    e = t.entries
    for x in range(t.n):
        for y in range(t.n):
            yx = e[y][x]
            m = e[x][yx]
            if m != e[e[x][y]][x] or m != e[yx][y]:
                return (x, y)
    return None


def _check_bookend(t):
    # (y*x) * (x*y) = x
    e = t.entries
    for x in range(t.n):
        for y in range(t.n):
            if e[e[y][x]][e[x][y]] != x:
                return (x, y)
    return None


def _check_left_distributivity(t):
    # x * (y*z) = (x*y) * (x*z)
    e = t.entries
    for x in range(t.n):
        ex = e[x]
        for y in range(t.n):
            for z in range(t.n):
                if ex[e[y][z]] != e[ex[y]][ex[z]]:
                    return (x, y, z)
    return None


def _check_right_distributivity(t):
    # (x*y) * z = (x*z) * (y*z)
    e = t.entries
    for x in range(t.n):
        for y in range(t.n):
            xy = e[x][y]
            for z in range(t.n):
                if e[xy][z] != e[e[x][z]][e[y][z]]:
                    return (x, y, z)
    return None


def _check_mediality(t):
    # (x*y) * (z*w) = (x*z) * (y*w)
    e = t.entries
    n = t.n
    for x in range(n):
        ex = e[x]
        for y in range(n):
            exy = e[ex[y]]
            ey = e[y]
            for z in range(n):
                ez = e[z]
                exz = e[ex[z]]
                for w in range(n):
                    if exy[ez[w]] != exz[ey[w]]:
                        return (x, y, z, w)
    return None


def _check_weave_left(t):
    # x * (y * (y*x)) = ((x*y) * x) * y
    e = t.entries
    for x in range(t.n):
        for y in range(t.n):
            if e[x][e[y][e[y][x]]] != e[e[e[x][y]][x]][y]:
                return (x, y)
    return None


def _check_weave_right(t):
    # ((x*y) * y) * x = y * (x * (y*x))
    e = t.entries
    for x in range(t.n):
        for y in range(t.n):
            if e[e[e[x][y]][y]][x] != e[y][e[x][e[y][x]]]:
                return (x, y)
    return None


def _check_alterability(t):
    # x*y = z*w  if and only if  y*z = w*x
    e = t.entries
    n = t.n
    for x in range(n):
        ex = e[x]
        for y in range(n):
            ey = e[y]
            for z in range(n):
                eyz = ey[z]
                ez = e[z]
                for w in range(n):
                    if (ex[y] == ez[w]) != (eyz == e[w][x]):
                        return (x, y, z, w)
    return None


def _check_quadratical_law(t):
    # (x*y) * x = (z*x) * (y*z)
    e = t.entries
    for x in range(t.n):
        for y in range(t.n):
            m = e[e[x][y]][x]
            for z in range(t.n):
                if m != e[e[z][x]][e[y][z]]:
                    return (x, y, z)
    return None


def _check_left_cancellation(t):
    # x*y = x*z implies y = z; counterexample (x, y, z) with y < z
    e = t.entries
    for x in range(t.n):
        seen = {}
        for y in range(t.n):
            v = e[x][y]
            if v in seen:
                return (x, seen[v], y)
            seen[v] = y
    return None


def _check_right_cancellation(t):
    # y*x = z*x implies y = z; counterexample (x, y, z) with y < z
    e = t.entries
    for x in range(t.n):
        seen = {}
        for y in range(t.n):
            v = e[y][x]
            if v in seen:
                return (x, seen[v], y)
            seen[v] = y
    return None


def _check_right_solvability(t):
    # for all a, b there is y with a*y = b; counterexample (a, b)
    for a in range(t.n):
        have = set(t.entries[a])
        for b in range(t.n):
            if b not in have:
                return (a, b)
    return None


def _check_latin_square(t):
    # every row and column is a permutation; counterexample is a row
    # duplicate (x, y1, y2) with t[x][y1] = t[x][y2], scanned first, else a
    # column duplicate (y, x1, x2) with t[x1][y] = t[x2][y]
    row = _check_left_cancellation(t)
    if row is not None:
        return row
    return _check_right_cancellation(t)


IDENTITY_CHECKS = {
    "quadratical-law": _check_quadratical_law,
    "idempotency": _check_idempotency,
    "elasticity": _check_elasticity,
    "strong-elasticity": _check_strong_elasticity,
    "bookend": _check_bookend,
    "left-distributivity": _check_left_distributivity,
    "right-distributivity": _check_right_distributivity,
    "mediality": _check_mediality,
    "weave-left": _check_weave_left,
    "weave-right": _check_weave_right,
    "alterability": _check_alterability,
    "left-cancellation": _check_left_cancellation,
    "right-cancellation": _check_right_cancellation,
    "right-solvability": _check_right_solvability,
    "latin-square": _check_latin_square,
}

IDENTITY_IDS = tuple(IDENTITY_CHECKS)

# The ten equational laws every quadratical quasigroup satisfies.
BASIC_IDENTITY_IDS = (
    "idempotency",
    "elasticity",
    "strong-elasticity",
    "bookend",
    "left-distributivity",
    "right-distributivity",
    "mediality",
    "weave-left",
    "weave-right",
    "alterability",
)


def check_identity(t: CayleyTable, ident: str) -> tuple | None:
    """Exhaustively check one identity; None means it holds, otherwise the
    lexicographically least violating variable tuple is returned."""
    try:
        fn = IDENTITY_CHECKS[ident]
    except KeyError:
        raise ValueError(f"unknown identity {ident!r}") from None
    return fn(t)


def identity_report(t: CayleyTable, idents=IDENTITY_IDS) -> dict:
    """Verdict for each requested identity, keyed by identity id."""
    return {ident: check_identity(t, ident) for ident in idents}


def quadratical_report(t: CayleyTable) -> dict:
    """The four checks characterizing quadratical quasigroups."""
    return identity_report(t, ("latin-square", "idempotency", "bookend", "mediality"))


@lru_cache(maxsize=None)
def is_quadratical(t: CayleyTable) -> bool:
    """True iff t is an idempotent, bookend, medial quasigroup."""
    return (
        _check_latin_square(t) is None
        and _check_idempotency(t) is None
        and _check_bookend(t) is None
        and _check_mediality(t) is None
    )


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def dual(t: CayleyTable) -> CayleyTable:
    """Reverse the product: result[x][y] = t[y][x]."""
    entries = tuple(tuple(t.entries[y][x] for y in range(t.n)) for x in range(t.n))
    return CayleyTable(t.n, entries, t.labels)


def direct_product(t1: CayleyTable, t2: CayleyTable) -> CayleyTable:
    """Componentwise product on pairs, indexed lexicographically:
    pair (x1, x2) gets index x1*t2.n + x2."""
    n2 = t2.n
    e1, e2 = t1.entries, t2.entries
    rows = []
    for x1 in range(t1.n):
        for x2 in range(n2):
            row = []
            for y1 in range(t1.n):
                r1 = e1[x1][y1] * n2
                row.extend(r1 + e2[x2][y2] for y2 in range(n2))
            rows.append(tuple(row))
    return CayleyTable(t1.n * n2, tuple(rows))


def relabel(t: CayleyTable, order) -> CayleyTable:
    """Present t with its elements listed in the given order: order[i] is the
    old index of the element renamed to i.  The result is the same groupoid
    up to isomorphism (the relabeling map itself)."""
    order = tuple(order)
    if sorted(order) != list(range(t.n)):
        raise ValueError("order must be a permutation of 0..n-1")
    inv = [0] * t.n
    for new, old in enumerate(order):
        inv[old] = new
    entries = tuple(
        tuple(inv[t.entries[order[i]][order[j]]] for j in range(t.n)) for i in range(t.n)
    )
    labels = tuple(t.labels[o] for o in order) if t.labels is not None else None
    return CayleyTable(t.n, entries, labels)


def generated_subgroupoid(t: CayleyTable, seeds) -> frozenset:
    """Least subset containing seeds and closed under the product."""
    seeds = set(seeds)
    if not seeds:
        raise ValueError("seeds must be non-empty")
    for s in seeds:
        if not (0 <= s < t.n):
            raise ValueError(f"seed {s} out of range")
    e = t.entries
    closed = set(seeds)
    frontier = list(seeds)
    members = list(seeds)
    while frontier:
        new = []
        for x in frontier:
            for y in members:
                for v in (e[x][y], e[y][x]):
                    if v not in closed:
                        closed.add(v)
                        new.append(v)
        members.extend(new)
        frontier = new
    return frozenset(closed)


@dataclass(frozen=True)
class TwoGenerationReport:
    """Which pairs of elements generate the whole groupoid."""

    matrix: tuple[tuple[bool, ...], ...]
    all_pairs_generate: bool
    some_pair_generates: bool


def two_generation_report(t: CayleyTable) -> TwoGenerationReport:
    """Entry (x, y) is True iff {x, y} generates t.  The summary flags range
    over distinct pairs only."""
    full = frozenset(range(t.n))
    matrix = tuple(
        tuple(generated_subgroupoid(t, {x, y}) == full for y in range(t.n))
        for x in range(t.n)
    )
    distinct = [matrix[x][y] for x in range(t.n) for y in range(t.n) if x != y]
    return TwoGenerationReport(
        matrix=matrix,
        all_pairs_generate=all(distinct),
        some_pair_generates=any(distinct),
    )


def four_cycles(t: CayleyTable, a: int, b: int) -> list[tuple[int, int, int, int]]:
    """Partition the complement of the centre (a*b)*a into 4-cycles: ordered
    quadruples with every consecutive product (cyclically) equal to the
    centre.  Cycles are rotated to start at their least element and reported
    sorted by that element."""
    if a == b:
        raise ValueError("base elements must be distinct")
    if not is_quadratical(t):
        raise ValueError("table is not quadratical")
    e = t.entries
    centre = e[e[a][b]][a]
    # successor of x is the unique y with x*y = centre
    succ = [t.entries[x].index(centre) for x in range(t.n)]
    cycles = []
    seen = {centre}
    for start in range(t.n):
        if start in seen:
            continue
        cyc = [start]
        x = succ[start]
        while x != start:
            if x in seen or len(cyc) > 4:
                raise ValueError(f"cycle through {start} does not close in 4 steps")
            cyc.append(x)
            x = succ[x]
        if len(cyc) != 4:
            raise ValueError(f"cycle through {start} has length {len(cyc)}, not 4")
        seen.update(cyc)
        k = cyc.index(min(cyc))
        cycles.append(tuple(cyc[k:] + cyc[:k]))
    cycles.sort(key=lambda c: c[0])
    return cycles


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def _generating_sequence(t: CayleyTable) -> list[int]:
    """A small generating sequence: the lex-least generating pair when one
    exists, otherwise a greedily grown generating set."""
    full = frozenset(range(t.n))
    if t.n == 1:
        return [0]
    for x in range(t.n):
        for y in range(t.n):
            if x != y and generated_subgroupoid(t, {x, y}) == full:
                return [x, y]
    gens = [0]
    closed = generated_subgroupoid(t, {0})
    while closed != full:
        nxt = min(full - closed)
        gens.append(nxt)
        closed = generated_subgroupoid(t, gens)
    return gens


def _extend_map(t1: CayleyTable, t2: CayleyTable, gens, images):
    """Extend gens -> images to a full isomorphism by closure, or None."""
    n = t1.n
    e1, e2 = t1.entries, t2.entries
    phi = [-1] * n
    used = [False] * n
    order = []
    for g, im in zip(gens, images):
        if phi[g] == -1:
            if used[im]:
                return None
            phi[g] = im
            used[im] = True
            order.append(g)
        elif phi[g] != im:
            return None
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in order[:i]:
            for p, q in ((x, y), (y, x)):
                r = e1[p][q]
                img = e2[phi[p]][phi[q]]
                if phi[r] == -1:
                    if used[img]:
                        return None
                    phi[r] = img
                    used[img] = True
                    order.append(r)
                elif phi[r] != img:
                    return None
    if len(order) != n:
        return None
    return tuple(phi)


def find_isomorphism(t1: CayleyTable, t2: CayleyTable):
    """A bijection phi with phi(x*y) = phi(x)*phi(y), or None after an
    exhaustive generator-image search.  Supported regime is order <= 30."""
    if t1.n != t2.n:
        raise ValueError(f"orders differ: {t1.n} vs {t2.n}")
    if t1.entries == t2.entries:
        return tuple(range(t1.n))
    gens = _generating_sequence(t1)
    n = t1.n
    for images in itertools.product(range(n), repeat=len(gens)):
        phi = _extend_map(t1, t2, gens, images)
        if phi is not None:
            return phi
    return None
