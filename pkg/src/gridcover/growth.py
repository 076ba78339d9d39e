"""Growth-rate tables for covering counts and Fekete-style inequality checks.

Joining an m1 x n and an m2 x n covered grid side by side gives a valid
covering of the (m1+m2) x n grid, so the count tables here are
supermultiplicative along both axes and every per-site root
count^(1/mn) is a certified lower bound on the growth constant (the
per-site limit equals the supremum).  The module fills such tables from
exact counts, extracts high-precision roots, and checks the super- and
submultiplicative inequality families on any finite window.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import mpmath

from .counting import hosoya_index, pure_dimer_count

# Exact counts reach thousands of digits; roots are extracted with this
# many working digits (>= 20 significant digits survive formatting).
ROOT_WORKING_DIGITS = 50

GROWTH_MODES = ("hosoya", "pure-dimer")


def _per_site_root(count: int, cells: int) -> mpmath.mpf:
    with mpmath.workdps(ROOT_WORKING_DIGITS):
        if count == 0:
            return mpmath.mpf(0)
        return mpmath.exp(mpmath.log(count) / cells)


@dataclass(frozen=True)
class GrowthEntry:
    count: int
    root: mpmath.mpf


@dataclass
class GrowthTable:
    """Per-size exact counts with per-site roots and their running supremum."""

    mode: str
    entries: dict[tuple[int, int], GrowthEntry] = field(default_factory=dict)
    running_sup: mpmath.mpf = field(default_factory=lambda: mpmath.mpf(0))

    def add(self, m: int, n: int, count: int) -> GrowthEntry:
        entry = GrowthEntry(count, _per_site_root(count, m * n))
        self.entries[(m, n)] = entry
        if entry.root > self.running_sup:
            self.running_sup = entry.root
        return entry

    def counts(self) -> dict[tuple[int, int], int]:
        return {key: e.count for key, e in self.entries.items()}

    def best_diagonal(self) -> tuple[int, mpmath.mpf] | None:
        """Largest per-site root among square sizes, with its side length."""
        diag = [(size, e.root) for (size, n), e in self.entries.items() if size == n]
        if not diag:
            return None
        return max(diag, key=lambda item: item[1])

    def rows(self) -> list[dict]:
        """Entries in (m, n) order with the supremum accumulated left to right."""
        out = []
        sup = mpmath.mpf(0)
        for (m, n) in sorted(self.entries):
            entry = self.entries[(m, n)]
            if entry.root > sup:
                sup = entry.root
            out.append(
                {
                    "m": m,
                    "n": n,
                    "count": str(entry.count),
                    "exact_count_digits": len(str(entry.count)),
                    "per_site_root": mpmath.nstr(entry.root, 21),
                    "running_sup": mpmath.nstr(sup, 21),
                }
            )
        return out

    def to_csv(self) -> str:
        lines = ["m,n,exact_count_digits,per_site_root,running_sup"]
        for row in self.rows():
            lines.append(
                f"{row['m']},{row['n']},{row['exact_count_digits']},"
                f"{row['per_site_root']},{row['running_sup']}"
            )
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        best = self.best_diagonal()
        return {
            "mode": self.mode,
            "entries": self.rows(),
            "sup_lower_bound": mpmath.nstr(self.running_sup, 21),
            "best_diagonal": None
            if best is None
            else {"size": best[0], "per_site_root": mpmath.nstr(best[1], 21)},
        }


def growth_estimate(
    max_m: int, max_n: int, mode: str = "hosoya", max_state_bits: int | None = None
) -> GrowthTable:
    """Fill the growth table for all 1 <= m <= max_m, 1 <= n <= max_n.

    The running supremum is a certified lower bound on the growth
    constant; no limit extrapolation is attempted.
    """
    if mode not in GROWTH_MODES:
        raise ValueError(f"mode must be one of {GROWTH_MODES}")
    if max_m < 1 or max_n < 1:
        raise ValueError("table dimensions must be positive")
    table = GrowthTable(mode)
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            if mode == "hosoya":
                count = hosoya_index(m, n, max_state_bits)
            else:
                count = pure_dimer_count(m, n, max_state_bits=max_state_bits)
            table.add(m, n, count)
    return table


@dataclass(frozen=True)
class FeketeViolation:
    """One failed inequality instance, with the values that witnessed it."""

    axis: str  # "m" or "n"
    indices: tuple[int, int, int]  # (m1, m2, n) or (n1, n2, m)
    lhs: int
    rhs: int


def fekete_verify(
    values: Mapping[tuple[int, int], int], k: int = 0, direction: str = "super"
) -> list[FeketeViolation]:
    """Check every in-window instance of the two-variable Fekete hypotheses.

    direction "super": a[m1,n] * a[m2,n] <= a[m1+m2+k,n] and the same
    along the n-axis.  direction "sub": a[m1+m2,n] <= a[m1+k,n] * a[m2,n]
    and likewise.  Returns the violated instances; an empty list means
    the hypotheses hold on the sampled window.
    """
    if direction not in ("super", "sub"):
        raise ValueError("direction must be 'super' or 'sub'")
    if k < 0:
        raise ValueError("k must be nonnegative")
    for key, value in values.items():
        if value < 1:
            raise ValueError(f"sequence values must be >= 1, got a[{key}] = {value}")

    by_n: dict[int, list[int]] = {}
    by_m: dict[int, list[int]] = {}
    for (m, n) in values:
        by_n.setdefault(n, []).append(m)
        by_m.setdefault(m, []).append(n)

    violations: list[FeketeViolation] = []

    def check(axis: str, fixed: int, coords: list[int], at) -> None:
        coords = sorted(coords)
        pool = set(coords)
        for i, c1 in enumerate(coords):
            for c2 in coords[i:] if direction == "super" else coords:
                if direction == "super":
                    if c1 + c2 + k not in pool:
                        continue
                    lhs = at(c1, fixed) * at(c2, fixed)
                    rhs = at(c1 + c2 + k, fixed)
                else:
                    if c1 + c2 not in pool or c1 + k not in pool:
                        continue
                    lhs = at(c1 + c2, fixed)
                    rhs = at(c1 + k, fixed) * at(c2, fixed)
                if lhs > rhs:
                    violations.append(FeketeViolation(axis, (c1, c2, fixed), lhs, rhs))

    for n, ms in by_n.items():
        check("m", n, ms, lambda a, b: values[(a, b)])
    for m, ns in by_m.items():
        check("n", m, ns, lambda a, b: values[(b, a)])
    return violations
