"""Homogeneous trivariate counting polynomials in v, x, y.

Every covering of a fixed region satisfies n_v + 2(n_x + n_y) = const
(each vertex is a monomer or belongs to exactly one dimer), so a counting
polynomial here is homogeneous once v is weighted 1 and x, y weighted 2.
That common value is the *grade*.  Only the dimer exponents (n_x, n_y)
are stored per term; the monomer exponent is recovered as
grade - 2(n_x + n_y).  Storing the grade once per polynomial halves the
key size and turns every addition into a consistency check: adding
polynomials of different grades is a hard error, which catches mixed-up
intermediate states in the transfer recursion immediately.

Coefficients are arbitrary-precision naturals; counts grow roughly like
1.94^(m*n) and overflow any fixed width almost immediately.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

Scalar = Union[int, Fraction]

_ATOM_KEY_SHIFT = {"x": (1, 0), "y": (0, 1)}


class MDPolynomial:
    """Immutable homogeneous polynomial; the zero polynomial has grade None."""

    __slots__ = ("terms", "grade")

    terms: dict[tuple[int, int], int]
    grade: int | None

    def __init__(self, terms: Mapping[tuple[int, int], int], grade: int | None):
        if not terms:
            if grade is not None:
                raise ValueError("the zero polynomial is grade-polymorphic: use grade None")
            object.__setattr__(self, "terms", {})
            object.__setattr__(self, "grade", None)
            return
        if grade is None or grade < 0:
            raise ValueError("nonzero polynomial needs a nonnegative grade")
        clean: dict[tuple[int, int], int] = {}
        for (nx, ny), coeff in terms.items():
            if nx < 0 or ny < 0:
                raise ValueError(f"negative dimer exponent in {(nx, ny)}")
            if coeff < 0:
                raise ValueError("coefficients are natural numbers")
            if coeff == 0:
                continue
            if 2 * (nx + ny) > grade:
                raise ValueError(
                    f"term {(nx, ny)} has negative monomer exponent at grade {grade}"
                )
            clean[(nx, ny)] = coeff
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "grade", grade if clean else None)

    # Internal fast path: callers guarantee a clean nonempty term dict.
    @classmethod
    def _make(cls, terms: dict[tuple[int, int], int], grade: int) -> "MDPolynomial":
        poly = object.__new__(cls)
        object.__setattr__(poly, "terms", terms)
        object.__setattr__(poly, "grade", grade)
        return poly

    @classmethod
    def zero(cls) -> "MDPolynomial":
        return ZERO

    @classmethod
    def monomial(cls, n_v: int, n_x: int, n_y: int, coeff: int = 1) -> "MDPolynomial":
        """The single term coeff * v^n_v * x^n_x * y^n_y."""
        if n_v < 0:
            raise ValueError("negative monomer exponent")
        return cls({(n_x, n_y): coeff}, n_v + 2 * (n_x + n_y))

    @classmethod
    def from_exponents(cls, counts: Mapping[tuple[int, int, int], int]) -> "MDPolynomial":
        """Build from a map (n_v, n_x, n_y) -> coefficient; grades must agree."""
        terms: dict[tuple[int, int], int] = {}
        grade: int | None = None
        for (nv, nx, ny), coeff in counts.items():
            g = nv + 2 * (nx + ny)
            if grade is None:
                grade = g
            elif g != grade:
                raise ValueError(f"inhomogeneous exponent map: grades {grade} and {g}")
            terms[(nx, ny)] = terms.get((nx, ny), 0) + coeff
        return cls(terms, grade) if terms else ZERO

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MDPolynomial):
            return NotImplemented
        return self.terms == other.terms and self.grade == other.grade

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "MDPolynomial") -> "MDPolynomial":
        if not isinstance(other, MDPolynomial):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        if self.grade != other.grade:
            raise ValueError(f"grade mismatch in sum: {self.grade} + {other.grade}")
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return MDPolynomial._make(merged, self.grade)

    def __mul__(self, other: "MDPolynomial | int") -> "MDPolynomial":
        if isinstance(other, int):
            if other == 0 or not self.terms:
                return ZERO
            if other < 0:
                raise ValueError("coefficients are natural numbers")
            if other == 1:
                return self
            return MDPolynomial._make(
                {k: c * other for k, c in self.terms.items()}, self.grade  # type: ignore[arg-type]
            )
        if not isinstance(other, MDPolynomial):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        prod: dict[tuple[int, int], int] = {}
        for (ax, ay), ac in self.terms.items():
            for (bx, by), bc in other.terms.items():
                key = (ax + bx, ay + by)
                prod[key] = prod.get(key, 0) + ac * bc
        return MDPolynomial._make(prod, self.grade + other.grade)  # type: ignore[operator]

    __rmul__ = __mul__

    def mul_atom(self, atom: str) -> "MDPolynomial":
        """Multiply by one of the atoms v, x, y or the identity '1'.

        v raises the grade by 1, x and y by 2 (a dimer accounts for two
        vertices).
        """
        if atom == "1":
            return self
        if not self.terms:
            return ZERO
        grade = self.grade  # type: ignore[assignment]
        if atom == "v":
            return MDPolynomial._make(dict(self.terms), grade + 1)
        try:
            dx, dy = _ATOM_KEY_SHIFT[atom]
        except KeyError:
            raise ValueError(f"unknown atom {atom!r}; expected one of v, x, y, 1") from None
        return MDPolynomial._make(
            {(nx + dx, ny + dy): c for (nx, ny), c in self.terms.items()}, grade + 2
        )

    def evaluate(self, v0: Scalar, x0: Scalar, y0: Scalar) -> Scalar:
        """Exact substitution value (ints stay ints, rationals stay exact)."""
        if not self.terms:
            return 0
        grade: int = self.grade  # type: ignore[assignment]
        total: Scalar = 0
        for (nx, ny), coeff in self.terms.items():
            nv = grade - 2 * (nx + ny)
            total += coeff * v0**nv * x0**nx * y0**ny
        return total

    def sorted_terms(self) -> Iterator[tuple[int, int, int, int]]:
        """Yield (n_v, n_x, n_y, coeff) in canonical order.

        Canonical order is ascending total dimer count, then y-count:
        descending powers of v with x before y, matching how the
        polynomials are conventionally written out.
        """
        grade: int = self.grade or 0
        for (nx, ny) in sorted(self.terms, key=lambda k: (k[0] + k[1], k[1])):
            yield grade - 2 * (nx + ny), nx, ny, self.terms[(nx, ny)]

    def text(self) -> str:
        """Canonical rendering, e.g. 'v^4 + 2*v^2*x + 2*v^2*y + x^2 + y^2'."""
        if not self.terms:
            return "0"
        chunks = []
        for nv, nx, ny, coeff in self.sorted_terms():
            parts = [] if coeff == 1 and (nv or nx or ny) else [str(coeff)]
            for sym, exp in (("v", nv), ("x", nx), ("y", ny)):
                if exp == 1:
                    parts.append(sym)
                elif exp > 1:
                    parts.append(f"{sym}^{exp}")
            chunks.append("*".join(parts))
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"MDPolynomial({self.text()!r}, grade={self.grade})"


ZERO = MDPolynomial({}, None)
ONE = MDPolynomial.monomial(0, 0, 0)
ATOM_V = MDPolynomial.monomial(1, 0, 0)
ATOM_X = MDPolynomial.monomial(0, 1, 0)
ATOM_Y = MDPolynomial.monomial(0, 0, 1)
