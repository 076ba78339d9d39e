"""Independent verification layer: direct enumeration and closed forms.

Everything here recomputes quantities the transfer engine produces, by
entirely different means: backtracking over coverings, exhaustive tile
assignment over the five-tile mosaic alphabet, and the classical product
and sum formulas for domino tilings.  None of it touches the operator
recursion, so agreement is meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import CrossCheckError, GuardError
from .mdpoly import MDPolynomial

# Direct enumeration bounds.
MAX_BRUTE_CELLS = 20
MAX_MOSAIC_CELLS = 16
MAX_KASTELEYN_SIDE = 32


@dataclass(frozen=True)
class MosaicTile:
    """One of the five unit tiles, edge labels in (left, bottom, right, top).

    A b-labeled edge marks the cut end of a dimer: T2/T5 adjoin
    horizontally along their b-edges to form an x-dimer, T3/T4 adjoin
    vertically to form a y-dimer.  `weight` names the atom the tile
    contributes (the monomer tile and one designated half per dimer).
    """

    name: str
    left: str
    bottom: str
    right: str
    top: str
    weight: str | None


MOSAIC_TILES = (
    MosaicTile("T1", "a", "a", "a", "a", "v"),
    MosaicTile("T2", "b", "a", "a", "a", "x"),
    MosaicTile("T3", "a", "a", "a", "b", None),
    MosaicTile("T4", "a", "b", "a", "a", "y"),
    MosaicTile("T5", "a", "a", "b", "a", None),
)


@dataclass(frozen=True)
class BoundaryTriple:
    """Right, bottom and top boundary words; the left boundary is trivial.

    Bottom and top words are read right to left, the right word top to
    bottom.
    """

    s_r: str
    s_b: str
    s_t: str

    def __post_init__(self) -> None:
        for word in (self.s_r, self.s_b, self.s_t):
            if set(word) - {"a", "b"}:
                raise ValueError(f"boundary letters must be 'a' or 'b': {word!r}")


def _check_grid(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    if m * n > MAX_BRUTE_CELLS:
        raise GuardError(f"direct enumeration is capped at {MAX_BRUTE_CELLS} cells")


def brute_force_partition(m: int, n: int) -> MDPolynomial:
    """Partition polynomial by backtracking over coverings (mn <= 20).

    Scans vertices in row-major order; at the first uncovered vertex
    branches on monomer, x-dimer to the right, y-dimer upward.
    """
    _check_grid(m, n)
    cells = m * n
    counts: dict[tuple[int, int], int] = {}

    def walk(covered: int, idx: int, nx: int, ny: int) -> None:
        while idx < cells and covered >> idx & 1:
            idx += 1
        if idx == cells:
            key = (nx, ny)
            counts[key] = counts.get(key, 0) + 1
            return
        col = idx % m
        taken = covered | 1 << idx
        walk(taken, idx + 1, nx, ny)  # monomer
        if col + 1 < m and not covered >> (idx + 1) & 1:
            walk(taken | 1 << (idx + 1), idx + 2, nx + 1, ny)
        if idx + m < cells:
            walk(taken | 1 << (idx + m), idx + 1, nx, ny + 1)

    walk(0, 0, 0, 0)
    return MDPolynomial(counts, cells)


def brute_force_fixed(m: int, n: int, sites) -> int:
    """Perfect matchings of the grid minus the given monomer sites (mn <= 20)."""
    _check_grid(m, n)
    site_mask = 0
    for col, row in sites:
        if not (1 <= col <= m and 1 <= row <= n):
            raise ValueError(f"site ({col}, {row}) outside the {m}x{n} grid")
        site_mask |= 1 << ((row - 1) * m + (col - 1))
    cells = m * n
    total = 0

    def walk(covered: int, idx: int) -> None:
        nonlocal total
        while idx < cells and (covered | site_mask) >> idx & 1:
            idx += 1
        if idx == cells:
            total += 1
            return
        col = idx % m
        blocked = covered | site_mask
        if col + 1 < m and not blocked >> (idx + 1) & 1:
            walk(covered | 1 << idx | 1 << (idx + 1), idx + 2)
        if idx + m < cells and not blocked >> (idx + m) & 1:
            walk(covered | 1 << idx | 1 << (idx + m), idx + 1)

    walk(0, 0)
    return total


def enumerate_mosaics(p: int, q: int, triple: BoundaryTriple) -> MDPolynomial:
    """State polynomial by exhaustive tile assignment (pq <= 16).

    Counts suitably adjacent p x q tile arrays whose right, bottom and
    top boundary words match the triple and whose left boundary is
    trivial, collecting one term per array with exponents the numbers of
    monomer tiles, x-dimer right halves and y-dimer top halves.
    """
    if p < 1 or q < 1:
        raise ValueError("mosaic dimensions must be positive")
    if p * q > MAX_MOSAIC_CELLS:
        raise GuardError(f"mosaic enumeration is capped at {MAX_MOSAIC_CELLS} cells")
    if len(triple.s_r) != q:
        raise ValueError(f"right boundary word must have length {q}")
    if len(triple.s_b) != p or len(triple.s_t) != p:
        raise ValueError(f"bottom/top boundary words must have length {p}")

    counts: dict[tuple[int, int, int], int] = {}
    below_top = [triple.s_b[p - c] for c in range(1, p + 1)]

    def place(idx: int, left_req: str, nv: int, nx: int, ny: int) -> None:
        if idx == p * q:
            key = (nv, nx, ny)
            counts[key] = counts.get(key, 0) + 1
            return
        row, col = divmod(idx, p)
        row += 1
        col += 1
        bottom_req = below_top[col - 1]
        for tile in MOSAIC_TILES:
            if tile.left != left_req or tile.bottom != bottom_req:
                continue
            if col == p and tile.right != triple.s_r[q - row]:
                continue
            if row == q and tile.top != triple.s_t[p - col]:
                continue
            dv = 1 if tile.weight == "v" else 0
            dx = 1 if tile.weight == "x" else 0
            dy = 1 if tile.weight == "y" else 0
            saved = below_top[col - 1]
            below_top[col - 1] = tile.top
            next_left = "a" if col == p else tile.right
            place(idx + 1, next_left, nv + dv, nx + dx, ny + dy)
            below_top[col - 1] = saved

    place(0, "a", 0, 0, 0)
    return MDPolynomial.from_exponents(counts)


def kasteleyn_product(m: int, n: int) -> int:
    """Pure dimer count from the classical double product over cosines.

    Evaluated in high-precision arithmetic and rounded; the rounded
    value must be within 1e-6 of an integer or the call fails.
    """
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    if m > MAX_KASTELEYN_SIDE or n > MAX_KASTELEYN_SIDE:
        raise GuardError(f"product formula is capped at side length {MAX_KASTELEYN_SIDE}")
    if m * n % 2:
        raise ValueError("the product formula needs an even number of vertices")
    dps = max(50, 30 + m * n // 2)
    with mpmath.workdps(dps):
        cos_m = [2 * mpmath.cospi(mpmath.mpf(j) / (m + 1)) for j in range(1, m + 1)]
        cos_n = [2 * mpmath.cospi(mpmath.mpf(k) / (n + 1)) for k in range(1, n + 1)]
        product = mpmath.mpf(1)
        for cj in cos_m:
            cj2 = cj * cj
            for ck in cos_n:
                product *= cj2 + ck * ck
        value = mpmath.power(product, mpmath.mpf(1) / 4)
        nearest = mpmath.nint(value)
        if abs(value - nearest) >= mpmath.mpf("1e-6"):
            raise CrossCheckError(
                f"product formula for {m}x{n} is {mpmath.nstr(value, 30)}, "
                "not within 1e-6 of an integer"
            )
        return int(nearest)


def aztec_closed_form(n: int) -> int:
    """Domino tilings of the order-n Aztec diamond: 2^(n(n+1)/2)."""
    if n < 1:
        raise ValueError("order must be positive")
    return 1 << (n * (n + 1) // 2)


def delannoy_augmented(n: int) -> int:
    """Tilings of the order-n augmented Aztec diamond: sum C(n,k) C(n+k,k)."""
    if n < 1:
        raise ValueError("order must be positive")
    return sum(math.comb(n, k) * math.comb(n + k, k) for k in range(n + 1))
