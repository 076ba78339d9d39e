"""Bar transfer operators and their block-recursive application.

The operator pair (A_m, B_m) over bar states of length m satisfies

    A_k = [ v*A_{k-1} + x*B_{k-1}   A_{k-1} ]      B_k = [ A_{k-1}  O ]
          [ y*A_{k-1}               O       ]            [ O        O ]

with seeds A_1 = [[v, 1], [y, 0]], B_1 = [[1, 0], [0, 0]] (equivalently
A_0 = [1], B_0 = [0]).  The (i, j)-entry of A_m is the weighted count of
one-row tile arrangements with bottom state i and top state j, and an
m x n region is swept by applying n such operators to a row vector.

A_m is never materialized for sweeping.  Applying A_k to a row vector
splits the vector in halves (the leading state letter) and recurses; the
B-contribution comes for free because v1*B_{k-1} is, up to zero padding,
the second half of v1*A_{k-1}.  One application therefore costs
O(m * 2^m) semiring operations instead of the 4^m of a dense product.

Entries live in one of two coefficient semirings: symbolic (homogeneous
counting polynomials) or numeric (exact scalars after substituting fixed
weights).  Per-row operators for fixed-monomer constraints use the
numeric semiring only and carry no weights; sites forced to be monomers
admit a single tile, all other sites forbid the monomer tile.

Three dense constructions of the same operator exist for differential
testing: the two-matrix form above, the merged single recursion that
embeds A_{k-2} directly, and the tensor-product form.  The tensor form
reads state words in the reverse direction, so it equals the block form
conjugated by the bit-reversal permutation of state indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .errors import CrossCheckError, GuardError
from .mdpoly import ATOM_V, ATOM_X, ATOM_Y, ONE, ZERO, MDPolynomial
from .states import MAX_WORD_LENGTH

Element = Union[int, Fraction, MDPolynomial]

DEFAULT_MAX_STATE_BITS = {"numeric": 26, "symbolic": 14}

# Dense matrices are a test/debug oracle; beyond this they do not fit.
DENSE_MAX_M = 8

# Up to this size every build cross-checks the two-matrix construction
# against the merged single recursion.
_BUILD_CHECK_MAX_M = 4


class Semiring:
    """Coefficient domain: symbolic polynomials or exact numeric scalars."""

    __slots__ = ("mode", "weights")

    def __init__(self, mode: str, weights: tuple | None = None):
        if mode not in ("symbolic", "numeric"):
            raise ValueError(f"unknown semiring mode {mode!r}")
        if mode == "numeric":
            if weights is None or len(weights) != 3:
                raise ValueError("numeric semiring needs weights (v0, x0, y0)")
            for w in weights:
                if not isinstance(w, (int, Fraction)):
                    raise ValueError(
                        "numeric weights must be exact (int or Fraction), "
                        f"got {type(w).__name__}"
                    )
        elif weights is not None:
            raise ValueError("symbolic semiring takes no weights")
        self.mode = mode
        self.weights = weights

    @classmethod
    def symbolic(cls) -> "Semiring":
        return cls("symbolic")

    @classmethod
    def numeric(cls, v0: int | Fraction, x0: int | Fraction, y0: int | Fraction) -> "Semiring":
        return cls("numeric", (v0, x0, y0))

    @property
    def zero(self) -> Element:
        return ZERO if self.mode == "symbolic" else 0

    @property
    def one(self) -> Element:
        return ONE if self.mode == "symbolic" else 1

    @property
    def weight_v(self) -> Element:
        return ATOM_V if self.mode == "symbolic" else self.weights[0]

    @property
    def weight_x(self) -> Element:
        return ATOM_X if self.mode == "symbolic" else self.weights[1]

    @property
    def weight_y(self) -> Element:
        return ATOM_Y if self.mode == "symbolic" else self.weights[2]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Semiring):
            return NotImplemented
        return self.mode == other.mode and self.weights == other.weights

    def __repr__(self) -> str:
        if self.mode == "symbolic":
            return "Semiring.symbolic()"
        return f"Semiring.numeric{self.weights!r}"


@dataclass(frozen=True)
class TransferOperator:
    """One bar operator: uniform (weighted), per-row (fixed sites), or tensor.

    `row_sites` holds the columns forced to be monomers for the per-row
    kind.  Tensor-built operators keep their dense matrix (they exist as
    a differential-testing oracle and are capped at dense sizes).
    """

    m: int
    ring: Semiring
    kind: str  # "uniform" | "row" | "uniform-tensor"
    row_sites: frozenset[int] | None = None
    dense: list | None = field(default=None, repr=False, compare=False)

    @property
    def size(self) -> int:
        return 1 << self.m

    def apply(self, vec: Sequence[Element]) -> list[Element]:
        """Row vector times the operator matrix."""
        if len(vec) != self.size:
            raise ValueError(f"vector length {len(vec)} != 2^{self.m}")
        if self.kind == "uniform":
            return _bar_apply(
                self.m, list(vec), self.ring.weight_v, self.ring.weight_x,
                self.ring.weight_y, self.ring.zero,
            )
        if self.kind == "row":
            return _row_apply(self.m, list(vec), self.row_sites)
        return _dense_vecmat(vec, self.dense, self.ring.zero)


def bit_reversed_index(i: int, m: int) -> int:
    """Image of 1-based state index i under reversing its m-bit word."""
    return int(format(i - 1, f"0{m}b")[::-1], 2) + 1


def _check_m(m: int, ring: Semiring, max_state_bits: int | None) -> None:
    if m < 1:
        raise ValueError("bar length m must be positive")
    limit = DEFAULT_MAX_STATE_BITS[ring.mode] if max_state_bits is None else max_state_bits
    if limit > MAX_WORD_LENGTH:
        raise ValueError(f"max state bits cannot exceed {MAX_WORD_LENGTH}")
    if m > limit:
        raise GuardError(
            f"bar length {m} exceeds the {ring.mode} state-bit guard of {limit}"
        )


def build_bar_operator(
    m: int, ring: Semiring, max_state_bits: int | None = None
) -> TransferOperator:
    """The uniform bar operator A_m over the given semiring.

    For small m the two-matrix construction is cross-checked against the
    merged single recursion on every build; the full comparison up to
    the dense cap lives in the test suite.
    """
    _check_m(m, ring, max_state_bits)
    if m <= _BUILD_CHECK_MAX_M:
        lemma, _ = _dense_pair(m, ring)
        if lemma != _dense_merged(m, ring):
            raise CrossCheckError(
                f"two-matrix and merged constructions disagree at m={m}"
            )
    return TransferOperator(m=m, ring=ring, kind="uniform")


def build_bar_operator_tensor(
    m: int, ring: Semiring, max_state_bits: int | None = None
) -> TransferOperator:
    """A_m via the tensor-product recursion (reversed reading convention).

    Kept as a differential-testing oracle, hence dense-backed and capped
    at m <= 8.
    """
    _check_m(m, ring, max_state_bits)
    if m > DENSE_MAX_M:
        raise GuardError(f"tensor-form operator is dense-backed and capped at m={DENSE_MAX_M}")
    dense, _ = _dense_tensor_pair(m, ring)
    return TransferOperator(m=m, ring=ring, kind="uniform-tensor", dense=dense)


def build_row_operator(
    m: int,
    row: int,
    sites: frozenset[tuple[int, int]] | set[tuple[int, int]],
    ring: Semiring,
    max_state_bits: int | None = None,
) -> TransferOperator:
    """Per-row operator A_{m,row} with the sites of `sites` forced to monomers.

    Only counting is supported here (the numeric semiring); a row that
    meets no site behaves as the uniform operator with monomers
    forbidden (weights 0, 1, 1).
    """
    if ring.mode != "numeric":
        raise ValueError("per-row operators support the numeric semiring only")
    _check_m(m, ring, max_state_bits)
    if row < 1:
        raise ValueError("row index must be positive")
    for col, r in sites:
        if not 1 <= col <= m or r < 1:
            raise ValueError(f"site ({col}, {r}) outside the grid")
    scols = frozenset(col for col, r in sites if r == row)
    return TransferOperator(m=m, ring=ring, kind="row", row_sites=scols)


def sweep(ops: Sequence[TransferOperator], start: int, end: int) -> Element:
    """(start, end)-entry of the ordered product of the operators.

    Propagates a unit row vector through each operator in turn; no
    matrix product is ever materialized.
    """
    if not ops:
        raise ValueError("sweep needs at least one operator")
    first = ops[0]
    for op in ops:
        if op.m != first.m or op.ring != first.ring:
            raise ValueError("sweep operators must share bar length and semiring")
    size = first.size
    if not 1 <= start <= size or not 1 <= end <= size:
        raise ValueError(f"state indices must lie in 1..{size}")
    zero, one = first.ring.zero, first.ring.one
    vec: list[Element] = [zero] * size
    vec[start - 1] = one
    for op in ops:
        vec = op.apply(vec)
    return vec[end - 1]


def dense_matrix(op: TransferOperator, form: str = "lemma") -> list[list[Element]]:
    """Fully materialized operator matrix (test/debug oracle, m <= 8).

    For uniform operators `form` selects the construction: "lemma" (the
    two-matrix recursion) or "merged" (the single recursion embedding
    A_{k-2}).  Per-row and tensor operators have one construction each.
    """
    if op.m > DENSE_MAX_M:
        raise GuardError(f"dense matrices are capped at m={DENSE_MAX_M}")
    if op.kind == "uniform-tensor":
        return [list(row) for row in op.dense]
    if op.kind == "row":
        A, _ = _dense_row_pair(op.m, op.row_sites)
        return A
    if form == "lemma":
        return _dense_pair(op.m, op.ring)[0]
    if form == "merged":
        return _dense_merged(op.m, op.ring)
    raise ValueError(f"unknown dense form {form!r}")


# ---------------------------------------------------------------------------
# Block-recursive application
# ---------------------------------------------------------------------------

def _bar_apply(k, vec, wv, wx, wy, zero):
    # vec * A_k with A_k in the two-matrix recursion; len(vec) == 2^k.
    if k == 0:
        return vec[:]
    h = len(vec) >> 1
    u1 = _bar_apply(k - 1, vec[:h], wv, wx, wy, zero)
    u2 = _bar_apply(k - 1, vec[h:], wv, wx, wy, zero)
    h2 = h >> 1
    r1 = []
    for t in range(h):
        acc = zero
        e = u1[t]
        if e and wv:
            acc = e * wv
        if t < h2:
            # vec[:h] * B_{k-1} is the tail of u1, zero-padded.
            e = u1[h2 + t]
            if e and wx:
                acc = acc + e * wx
        e = u2[t]
        if e and wy:
            acc = acc + e * wy
        r1.append(acc)
    return r1 + u1


def _row_apply(k, vec, scols):
    # vec * A_{k,row}; numeric entries only, implicit unit weights.
    if k == 0:
        return vec[:]
    h = len(vec) >> 1
    u1 = _row_apply(k - 1, vec[:h], scols)
    if k in scols:
        return u1 + [0] * h
    u2 = _row_apply(k - 1, vec[h:], scols)
    h2 = h >> 1
    if k >= 2 and (k - 1) not in scols:
        r1 = [u1[h2 + t] + u2[t] for t in range(h2)] + u2[h2:]
    else:
        r1 = list(u2)
    return r1 + u1


def _dense_vecmat(vec, matrix, zero):
    out = []
    for j in range(len(vec)):
        acc = zero
        for i, e in enumerate(vec):
            if e:
                m_ij = matrix[i][j]
                if m_ij:
                    acc = acc + e * m_ij
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# Dense constructions
# ---------------------------------------------------------------------------

def _scale(w, matrix, zero):
    if not w:
        n = len(matrix)
        return [[zero] * n for _ in range(n)]
    return [[e * w if e else zero for e in row] for row in matrix]


def _madd(a, b):
    return [[ea + eb for ea, eb in zip(ra, rb)] for ra, rb in zip(a, b)]


def _zeros(n, zero):
    return [[zero] * n for _ in range(n)]


def _blocks(tl, tr, bl, br):
    top = [rl + rr for rl, rr in zip(tl, tr)]
    bottom = [rl + rr for rl, rr in zip(bl, br)]
    return top + bottom


def _dense_pair(m, ring):
    # (A_m, B_m) via the two-matrix recursion.
    zero = ring.zero
    wv, wx, wy = ring.weight_v, ring.weight_x, ring.weight_y
    A = [[ring.one]]
    B = [[zero]]
    for k in range(1, m + 1):
        size = 1 << (k - 1)
        z = _zeros(size, zero)
        newA = _blocks(_madd(_scale(wv, A, zero), _scale(wx, B, zero)), A, _scale(wy, A, zero), z)
        newB = _blocks(A, z, z, z)
        A, B = newA, newB
    return A, B


def _dense_merged(m, ring):
    # A_m via the merged single recursion: the x-block embeds A_{k-2}
    # into the top-left quarter directly, no B matrices involved.
    zero = ring.zero
    wv, wx, wy = ring.weight_v, ring.weight_x, ring.weight_y
    if m == 0:
        return [[ring.one]]
    prev_prev = [[ring.one]]
    prev = [[wv, ring.one], [wy, zero]]
    if m == 1:
        return prev
    for k in range(2, m + 1):
        half = 1 << (k - 1)
        quarter = half >> 1
        embedded = _zeros(half, zero)
        for i in range(quarter):
            for j in range(quarter):
                embedded[i][j] = prev_prev[i][j]
        tl = _madd(_scale(wv, prev, zero), _scale(wx, embedded, zero))
        cur = _blocks(tl, prev, _scale(wy, prev, zero), _zeros(half, zero))
        prev_prev, prev = prev, cur
    return prev


def _kron(a, b, zero):
    na, nb = len(a), len(b)
    out = [[zero] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            e = a[i][j]
            if not e:
                continue
            for r in range(nb):
                for c in range(nb):
                    f = b[r][c]
                    if f:
                        out[i * nb + r][j * nb + c] = e * f
    return out


def _dense_tensor_pair(m, ring):
    # (A_m, B_m) via the tensor recursion; state words read in reverse.
    zero, one = ring.zero, ring.one
    wv, wx, wy = ring.weight_v, ring.weight_x, ring.weight_y
    seed_a = [[wv, one], [wy, zero]]
    seed_b = [[wx, zero], [zero, zero]]
    seed_u = [[one, zero], [zero, zero]]
    A = [[one]]
    B = [[zero]]
    for _ in range(m):
        newA = _madd(_kron(A, seed_a, zero), _kron(B, seed_b, zero))
        newB = _kron(A, seed_u, zero)
        A, B = newA, newB
    return A, B


def _dense_row_pair(m, scols):
    # (A_{m,row}, B_{m,row}) for the fixed-monomer recursion; int entries.
    A = [[1]]
    B = [[0]]
    for k in range(1, m + 1):
        size = 1 << (k - 1)
        z = _zeros(size, 0)
        if k in scols:
            newA = _blocks(A, z, z, z)
            newB = _zeros(2 * size, 0)
        else:
            newA = _blocks(B, A, A, z)
            newB = _blocks(A, z, z, z)
        A, B = newA, newB
    return A, B
