"""Plain-text Cayley table format.

Line 1 is the order n, lines 2..n+1 hold n space-separated integers each
(row x lists x*0 .. x*(n-1)), and an optional trailing comment line
``# labels: ...`` names the elements.  Every CLI command reads and writes
this format.
"""

from __future__ import annotations

from .core import CayleyTable

LABEL_PREFIX = "# labels:"


def format_table(t: CayleyTable) -> str:
    lines = [str(t.n)]
    lines.extend(" ".join(str(v) for v in row) for row in t.entries)
    if t.labels is not None:
        lines.append(f"{LABEL_PREFIX} " + " ".join(t.labels))
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> CayleyTable:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty table text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the order, got {lines[0]!r}") from None
    if len(lines) < n + 1:
        raise ValueError(f"expected {n} rows after the order line, got {len(lines) - 1}")
    rows = []
    for i in range(1, n + 1):
        parts = lines[i].split()
        if len(parts) != n:
            raise ValueError(f"row {i - 1} has {len(parts)} entries, expected {n}")
        try:
            rows.append([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"row {i - 1} contains a non-integer entry") from None
    labels = None
    rest = lines[n + 1:]
    if rest:
        if len(rest) != 1 or not rest[0].startswith(LABEL_PREFIX):
            raise ValueError("unexpected text after table rows")
        labels = tuple(rest[0][len(LABEL_PREFIX):].split())
    return CayleyTable.from_rows(rows, labels)


def read_table(path) -> CayleyTable:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return parse_table(fh.read())
        except ValueError as exc:
            raise ValueError(f"{path}: {exc}") from None


def write_table(t: CayleyTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_table(t))
