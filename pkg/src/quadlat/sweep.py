"""Sweeps over moduli regenerating the classification tables.

Work is sharded by m (each m independent), merged by sorting on the output
key, so results are a pure function of the bounds regardless of worker
count.  The checkpoint format is a single line ``last_m=<int>``; anything
else is refused as corrupt.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from . import refdata
from .zm import solve_quadratic_congruence, translatability_k_quadratical

SCAN_COLUMNS = ("k", "m", "a", "b")
CLASSIFY_COLUMNS = ("m", "a", "b", "k")


class InvariantViolation(RuntimeError):
    """A computed row failed its own defining congruences."""


@dataclass(frozen=True, order=True)
class ClassificationRow:
    m: int
    a: int
    b: int
    k: int

    def validate(self) -> None:
        if (2 * self.a * self.a - 2 * self.a + 1) % self.m != 0:
            raise InvariantViolation(f"{self}: a fails the quadratic congruence")
        if (self.a + self.b) % self.m != 1 % self.m:
            raise InvariantViolation(f"{self}: a + b != 1 (mod m)")
        if ((self.a - 1) * self.k - self.a) % self.m != 0:
            raise InvariantViolation(f"{self}: k fails (a-1)k = a (mod m)")
        dual_k = translatability_k_quadratical(self.m, self.b)
        if self.k + dual_k != self.m:
            raise InvariantViolation(f"{self}: dual shift {dual_k} does not pair")

    def as_dict(self, columns) -> dict:
        return {c: getattr(self, c) for c in columns}


def rows_for_modulus(m: int) -> list[ClassificationRow]:
    """One row per solution a of the quadratic congruence mod m, with its
    shift; empty below the smallest admissible order 5."""
    if m < 5:
        return []
    out = []
    for a in solve_quadratic_congruence(m):
        b = (1 - a) % m
        k = translatability_k_quadratical(m, a)
        row = ClassificationRow(m, a, b, k)
        row.validate()
        out.append(row)
    return out


def scan_k_table(max_m: int, max_k: int, jobs: int | None = None) -> list[ClassificationRow]:
    """All rows with m <= max_m and k < max_k, sorted by (k, m, a)."""
    if max_m < 1 or max_k < 1:
        raise ValueError("bounds must be positive")
    rows = []
    for chunk in _map_moduli(range(2, max_m + 1), jobs):
        rows.extend(r for r in chunk if r.k < max_k)
    rows.sort(key=lambda r: (r.k, r.m, r.a))
    return rows


def classify(max_m: int, jobs: int | None = None) -> list[ClassificationRow]:
    """One row per dual pair with m <= max_m, keeping the a < b
    representative, sorted by (m, a)."""
    if max_m < 1:
        raise ValueError("bound must be positive")
    rows = []
    for chunk in _map_moduli(range(2, max_m + 1), jobs):
        rows.extend(r for r in chunk if r.a < r.b)
    rows.sort(key=lambda r: (r.m, r.a))
    return rows


def _map_moduli(moduli, jobs):
    workers = min(jobs or 1, max(1, len(moduli) // 64))
    if workers > 1:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            yield from pool.map(rows_for_modulus, moduli, chunksize=64)
    else:
        for m in moduli:
            yield rows_for_modulus(m)


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def emit_text(rows, fmt: str, columns=SCAN_COLUMNS) -> str:
    """CSV (header = columns) or JSON (array of row objects); byte
    deterministic for fixed input."""
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(str(getattr(r, c)) for c in columns) for r in rows)
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([r.as_dict(columns) for r in rows], indent=0) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit(rows, fmt: str, path, columns=SCAN_COLUMNS) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(emit_text(rows, fmt, columns))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# checkpointed scans
# ---------------------------------------------------------------------------

def _rows_path(checkpoint_path) -> str:
    return str(checkpoint_path) + ".rows"


def _load_checkpoint(checkpoint_path):
    if not os.path.exists(checkpoint_path):
        return 1, []
    with open(checkpoint_path, "r", encoding="utf-8") as fh:
        text = fh.read().strip()
    if not text.startswith("last_m=") or not text[len("last_m="):].isdigit():
        raise ValueError(f"corrupt checkpoint {checkpoint_path}: {text!r}")
    last_m = int(text[len("last_m="):])
    saved = []
    rows_path = _rows_path(checkpoint_path)
    if os.path.exists(rows_path):
        with open(rows_path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    k, m, a, b = (int(p) for p in line.split(","))
                except ValueError:
                    raise ValueError(
                        f"corrupt row archive {rows_path}: {line!r}") from None
                if m <= last_m:
                    saved.append(ClassificationRow(m, a, b, k))
    return last_m, saved


def scan_with_checkpoint(max_m: int, max_k: int, checkpoint_path,
                         checkpoint_every: int = 1) -> list[ClassificationRow]:
    """Resumable scan: recomputes from the recorded last_m + 1 and merges
    with the saved partial rows; the result is identical to an
    uninterrupted scan_k_table(max_m, max_k).  The row archive next to the
    checkpoint stores every row of each fully processed m, so the bounds
    may differ between runs."""
    last_m, saved = _load_checkpoint(checkpoint_path)
    rows_path = _rows_path(checkpoint_path)
    if saved or last_m > 1:
        # drop any rows past the recorded frontier (a flush may have been
        # interrupted between the archive append and the checkpoint write)
        with open(rows_path, "w", encoding="utf-8") as fh:
            for r in saved:
                fh.write(f"{r.k},{r.m},{r.a},{r.b}\n")
    all_rows = list(saved)
    pending = []
    processed = last_m
    for m in range(last_m + 1, max_m + 1):
        got = rows_for_modulus(m)
        all_rows.extend(got)
        pending.extend(got)
        processed = m
        if m % checkpoint_every == 0:
            _flush_checkpoint(checkpoint_path, rows_path, processed, pending)
            pending = []
    if processed > last_m:
        _flush_checkpoint(checkpoint_path, rows_path, processed, pending)
    rows = [r for r in all_rows if r.m <= max_m and r.k < max_k]
    rows.sort(key=lambda r: (r.k, r.m, r.a))
    return rows


def _flush_checkpoint(checkpoint_path, rows_path, last_m, pending) -> None:
    with open(rows_path, "a", encoding="utf-8") as fh:
        for r in pending:
            fh.write(f"{r.k},{r.m},{r.a},{r.b}\n")
    tmp = str(checkpoint_path) + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(f"last_m={last_m}\n")
    os.replace(tmp, checkpoint_path)


# ---------------------------------------------------------------------------
# discrepancy report against the bundled reference transcription
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Discrepancy:
    m: int
    a: int
    field: str
    reference_value: int | None
    computed_value: int | None
    note: str

    def __str__(self):
        return (f"m={self.m} a={self.a}: {self.field} reference="
                f"{self.reference_value} computed={self.computed_value} ({self.note})")


def _compare(computed: dict, reference: dict) -> list[Discrepancy]:
    out = []
    for key in sorted(set(computed) | set(reference)):
        m, a = key
        comp = computed.get(key)
        ref = reference.get(key)
        if comp is None:
            out.append(Discrepancy(m, a, "row", 1, None,
                                   "transcribed row not produced by the formulas"))
            continue
        if ref is None:
            out.append(Discrepancy(m, a, "row", None, 1,
                                   "computed row missing from the transcription"))
            continue
        for field in ("b", "k"):
            if comp[field] != ref[field]:
                out.append(Discrepancy(
                    m, a, field, ref[field], comp[field],
                    "transcription disagrees with the defining congruences"))
    return out


def scan_discrepancies(rows, max_m: int, max_k: int) -> list[Discrepancy]:
    """Differences between computed scan rows and the bundled reference,
    restricted to the sweep bounds."""
    computed = {(r.m, r.a): {"b": r.b, "k": r.k} for r in rows}
    reference = {
        (m, a): {"b": b, "k": k}
        for (k, m, a, b) in refdata.REFERENCE_SCAN_ROWS
        if m <= max_m and k < max_k
    }
    return _compare(computed, reference)


def classify_discrepancies(rows, max_m: int) -> list[Discrepancy]:
    computed = {(r.m, r.a): {"b": r.b, "k": r.k} for r in rows}
    reference = {
        (m, a): {"b": b, "k": k}
        for (m, a, b, k) in refdata.REFERENCE_CLASSIFY_ROWS
        if m <= max_m
    }
    return _compare(computed, reference)
