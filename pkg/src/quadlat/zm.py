"""Linear groupoids x*y = ax + by + c over Z_m.

The quadratical ones are exactly those with c = 0, b = 1 - a and
2a^2 - 2a + 1 = 0 (mod m); for these the translatability index k is the
unique solution of (a-1)k = a (mod m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import CayleyTable


def solve_quadratic_congruence(m: int) -> list[int]:
    """All a in 0..m-1 with 2a^2 - 2a + 1 = 0 (mod m), by direct scan.

    Solutions come in pairs {a, 1-a mod m}; the list is empty unless
    m = 1 (mod 4) or m = 1.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    return [a for a in range(m) if (2 * a * a - 2 * a + 1) % m == 0]


@dataclass(frozen=True)
class LinearSpec:
    """Parameters of x*y = ax + by + c over Z_m, reduced mod m."""

    m: int
    a: int
    b: int
    c: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        object.__setattr__(self, "a", self.a % self.m)
        object.__setattr__(self, "b", self.b % self.m)
        object.__setattr__(self, "c", self.c % self.m)

    @property
    def is_quadratical_form(self) -> bool:
        return (
            self.c == 0
            and self.b == (1 - self.a) % self.m
            and (2 * self.a * self.a - 2 * self.a + 1) % self.m == 0
        )


def linear_table(spec: LinearSpec) -> CayleyTable:
    """The Cayley table of x*y = ax + by + c (mod m)."""
    m, a, b, c = spec.m, spec.a, spec.b, spec.c
    rows = []
    for x in range(m):
        base = a * x + c
        rows.append(tuple((base + b * y) % m for y in range(m)))
    return CayleyTable(m, tuple(rows))


def quadratical_over_zm(m: int, a: int) -> CayleyTable:
    """The quadratical quasigroup x*y = ax + (1-a)y (mod m); a must solve
    the quadratic congruence."""
    if (2 * a * a - 2 * a + 1) % m != 0:
        raise ValueError(f"a={a} does not satisfy 2a^2-2a+1 = 0 (mod {m})")
    return linear_table(LinearSpec(m, a, (1 - a) % m, 0))


def translatability_shift_set(spec: LinearSpec) -> list[int]:
    """All k in 1..m-1 with a + kb = 0 (mod m)."""
    m, a, b = spec.m, spec.a, spec.b
    return [k for k in range(1, m) if (a + k * b) % m == 0]


def translatability_k_linear(spec: LinearSpec):
    """The shift k making the table of spec translatable under the natural
    ordering: a single int when unique (always the case for gcd(b, m) = 1),
    None when no k works, a sorted list when several do."""
    ks = translatability_shift_set(spec)
    if not ks:
        return None
    if len(ks) == 1:
        return ks[0]
    return ks


def translatability_k_quadratical(m: int, a: int) -> int:
    """The unique k in 2..m-2 with (a-1)k = a (mod m), for a solving the
    quadratic congruence.  Satisfies k(a) + k(1-a) = m."""
    if (2 * a * a - 2 * a + 1) % m != 0:
        raise ValueError(f"a={a} does not satisfy 2a^2-2a+1 = 0 (mod {m})")
    if m < 5:
        raise ValueError(f"no valid shift range for modulus {m}")
    am1 = (a - 1) % m
    if math.gcd(am1, m) != 1:
        raise ValueError(f"a-1={am1} is not invertible mod {m}")
    k = a * pow(am1, -1, m) % m
    if not (2 <= k <= m - 2):
        raise ValueError(f"computed shift k={k} outside 2..{m - 2}")
    return k
