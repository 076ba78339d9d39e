"""Bar states: words over {a, b} and their 1-based lexicographic index.

A bar state of length m is the letter sequence read off one horizontal
boundary of a width-m row of tiles.  States are ordered lexicographically
with a < b, so the all-a state has index 1.  Internally a state is the
integer whose binary digits are the letters (a = 0, b = 1) with the first
letter of the word as the most significant bit; the index is that integer
plus one.  Under this convention the letter at word position j of a
length-m state sits at bit m - j, i.e. grid column c maps to bit c - 1.

``aztec_boundary_index`` locates the boundary state that forces two
staircase corners of a rectangle to be covered by dominos in the unique
way, leaving an Aztec-octagon half-boundary free.  It is computed in a
closed form and as an explicit sum of powers of two; the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CrossCheckError

# Index arithmetic stays exact and tables of size 2^m are never built,
# but words longer than this are rejected up front.
MAX_WORD_LENGTH = 62

_LETTERS = frozenset("ab")


@dataclass(frozen=True)
class BarState:
    """A length-`length` word over {a, b}, packed into the int `bits`."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_WORD_LENGTH:
            raise ValueError(f"bar state length must be in 1..{MAX_WORD_LENGTH}")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError("bits out of range for the given length")

    @property
    def index(self) -> int:
        """1-based lexicographic rank among all words of this length."""
        return self.bits + 1

    @property
    def word(self) -> str:
        return format(self.bits, f"0{self.length}b").translate({48: 97, 49: 98})

    @classmethod
    def from_word(cls, word: str) -> "BarState":
        return cls(len(word), _word_to_bits(word))

    @classmethod
    def from_index(cls, length: int, i: int) -> "BarState":
        if not 1 <= length <= MAX_WORD_LENGTH:
            raise ValueError(f"bar state length must be in 1..{MAX_WORD_LENGTH}")
        if not 1 <= i <= (1 << length):
            raise ValueError(f"index {i} out of range 1..2^{length}")
        return cls(length, i - 1)


def _word_to_bits(word: str) -> int:
    if not word:
        raise ValueError("bar state word must be nonempty")
    if len(word) > MAX_WORD_LENGTH:
        raise ValueError(f"bar state word longer than {MAX_WORD_LENGTH} letters")
    bad = set(word) - _LETTERS
    if bad:
        raise ValueError(f"bar state letters must be 'a' or 'b', got {sorted(bad)}")
    return int(word.translate({97: 48, 98: 49}), 2)


def index_of_state(word: str) -> int:
    """1-based lexicographic rank of a word over {a, b} (a < b)."""
    return _word_to_bits(word) + 1


def state_of_index(length: int, i: int) -> str:
    """Inverse of :func:`index_of_state` for words of the given length."""
    return BarState.from_index(length, i).word


def aztec_boundary_word(m: int, r: int, s: int) -> str:
    """The boundary word that carves corner staircases of orders r and s.

    Three runs: r - 1 alternating letters ending with b, then
    m - r - s + 2 letters a, then s - 1 alternating letters beginning
    with b.  The r-run sits at the start of the word (rightmost grid
    columns), the s-run at the end (leftmost columns).
    """
    _check_orders(m, r, s)
    head = "".join("b" if (r - 2 - t) % 2 == 0 else "a" for t in range(r - 1))
    tail = "".join("b" if t % 2 == 0 else "a" for t in range(s - 1))
    return head + "a" * (m - r - s + 2) + tail


def aztec_boundary_index(m: int, r: int, s: int) -> int:
    """Index of the forced boundary state for corner orders (r, s).

    Evaluates both the closed form
    ``2/3 (2^(m-r+2[r/2]) - 2^(m-r)) + 1/3 (2^s - 2^(s-2[s/2])) + 1``
    and the explicit power sums from the staircase construction, and
    requires them to agree.
    """
    _check_orders(m, r, s)

    two = Fraction(2)
    closed = (
        Fraction(2, 3) * (two ** (m - r + 2 * (r // 2)) - two ** (m - r))
        + Fraction(1, 3) * (two**s - two ** (s - 2 * (s // 2)))
        + 1
    )

    r_sum = sum(1 << (m - r + 1 + 2 * t) for t in range(r // 2))
    s_sum = sum(1 << (s - 2 - 2 * t) for t in range(s // 2))
    summed = r_sum + s_sum + 1

    if closed.denominator != 1 or closed.numerator != summed:
        raise CrossCheckError(
            f"aztec boundary index mismatch for (m={m}, r={r}, s={s}): "
            f"closed form {closed}, power sums {summed}"
        )
    return summed


def _check_orders(m: int, r: int, s: int) -> None:
    if not 1 <= m <= MAX_WORD_LENGTH:
        raise ValueError(f"bar length m must be in 1..{MAX_WORD_LENGTH}")
    if r < 1 or s < 1:
        raise ValueError("corner orders must be positive")
    if r + s > m + 2:
        raise ValueError(
            f"corner orders (r={r}, s={s}) do not fit a bar of length {m}: "
            f"need r + s <= m + 2"
        )
