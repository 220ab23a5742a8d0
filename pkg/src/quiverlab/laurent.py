"""Exact multivariate Laurent polynomials with integer coefficients.

Terms are kept in a canonical normal form: a tuple of (exponent vector,
coefficient) pairs sorted lexicographically by exponent vector, with zero
coefficients dropped.  Two values are equal iff their normal forms are
equal, and ``to_text`` renders the normal form bit-for-bit reproducibly,
so text output can serve as a dictionary key or a golden value.

Exponents may be negative (that is the whole point); coefficients are
arbitrary-precision ints.  Division is only provided in exact form:
``exact_divide`` either returns the unique Laurent quotient or raises
``NotDivisible``.  Nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "LaurentPoly",
    "NotDivisible",
    "ZeroDivisor",
]


class ZeroDivisor(ZeroDivisionError):
    """Division (or substitution) hit a zero where a unit was required."""


class NotDivisible(ArithmeticError):
    """The quotient of two Laurent polynomials is not a Laurent polynomial.

    In exchange-relation arithmetic this is unreachable (the Laurent
    property guarantees exactness), so seeing it raised from that path
    means a genuine bug rather than bad input.
    """


Exponents = tuple[int, ...]
Term = tuple[Exponents, int]


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial in ``nvars`` variables, in normal form.

    Do not build instances by hand unless the terms are already sorted
    and free of zero coefficients; use the classmethod constructors.
    """

    nvars: int
    terms: tuple[Term, ...]

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        prev: Exponents | None = None
        for exps, coeff in self.terms:
            if len(exps) != self.nvars:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, expected {self.nvars}"
                )
            if coeff == 0:
                raise ValueError("zero coefficient stored in normal form")
            if prev is not None and not prev < exps:
                raise ValueError("terms not sorted by exponent vector")
            prev = exps

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_terms(
        cls, nvars: int, terms: Union[Mapping[Exponents, int], Iterable[Term]]
    ) -> "LaurentPoly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, int] = {}
        for exps, coeff in items:
            key = tuple(exps)
            acc[key] = acc.get(key, 0) + coeff
        return cls(nvars, tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, ())

    @classmethod
    def constant(cls, nvars: int, value: int) -> "LaurentPoly":
        if value == 0:
            return cls.zero(nvars)
        return cls(nvars, (((0,) * nvars, value),))

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPoly":
        """The variable x_i, with 1-based index i."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        exps = tuple(1 if j == i - 1 else 0 for j in range(nvars))
        return cls(nvars, ((exps, 1),))

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        if len(exps) != nvars:
            raise ValueError("exponent vector has wrong length")
        if coeff == 0:
            return cls.zero(nvars)
        return cls(nvars, ((tuple(exps), coeff),))

    # ------------------------------------------------------------------
    # ring operations

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        acc = dict(self.terms)
        for exps, coeff in other.terms:
            acc[exps] = acc.get(exps, 0) + coeff
        return LaurentPoly(self.nvars, tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check_compatible(other)
        acc: dict[Exponents, int] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                key = tuple(x + y for x, y in zip(ea, eb))
                acc[key] = acc.get(key, 0) + ca * cb
        return LaurentPoly(self.nvars, tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("negative powers are not defined; use exact_divide")
        result = LaurentPoly.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # exact division

    def exact_divide(self, den: "LaurentPoly") -> "LaurentPoly":
        """Return the unique h with h * den == self, or raise.

        Raises ZeroDivisor when den is zero and NotDivisible when no
        Laurent polynomial quotient exists (including non-integer
        coefficient quotients).
        """
        self._check_compatible(den)
        if den.is_zero:
            raise ZeroDivisor("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero(self.nvars)

        # Shift both operands by their per-variable minimum exponents so
        # that ordinary polynomial division applies; the monomial shift is
        # restored on the quotient at the end.
        num_shift = self._min_exponents()
        den_shift = den._min_exponents()
        num = {self._shifted(e, num_shift): c for e, c in self.terms}
        divisor = sorted(
            ((den._shifted(e, den_shift), c) for e, c in den.terms), reverse=True
        )
        lead_exp, lead_coeff = divisor[0]

        quotient: dict[Exponents, int] = {}
        remaining = dict(num)
        while remaining:
            exps = max(remaining)
            coeff = remaining[exps]
            step = tuple(a - b for a, b in zip(exps, lead_exp))
            if any(e < 0 for e in step) or coeff % lead_coeff != 0:
                raise NotDivisible("quotient is not a Laurent polynomial")
            factor = coeff // lead_coeff
            quotient[step] = factor
            for dexp, dcoeff in divisor:
                key = tuple(a + b for a, b in zip(step, dexp))
                val = remaining.get(key, 0) - factor * dcoeff
                if val:
                    remaining[key] = val
                else:
                    remaining.pop(key, None)

        unshift = tuple(a - b for a, b in zip(num_shift, den_shift))
        return LaurentPoly(
            self.nvars,
            tuple(
                sorted((tuple(e + s for e, s in zip(exps, unshift)), c) for exps, c in quotient.items())
            ),
        )

    def _min_exponents(self) -> Exponents:
        return tuple(min(col) for col in zip(*(e for e, _ in self.terms)))

    @staticmethod
    def _shifted(exps: Exponents, shift: Exponents) -> Exponents:
        return tuple(e - s for e, s in zip(exps, shift))

    # ------------------------------------------------------------------
    # inspection

    def denominator_vector(self) -> tuple[int, ...]:
        """Per-variable denominator exponents: d_i = max(0, -min exponent of x_i)."""
        if self.is_zero:
            return (0,) * self.nvars
        return tuple(max(0, -m) for m in self._min_exponents())

    def is_nonnegative(self) -> bool:
        """True iff every stored coefficient is positive."""
        return all(c > 0 for _, c in self.terms)

    def substitute(self, values: Sequence[Union[Fraction, int]]) -> Fraction:
        """Evaluate at a vector of nonzero rationals."""
        if len(values) != self.nvars:
            raise ValueError("value vector has wrong length")
        vals = [Fraction(v) for v in values]
        if any(v == 0 for v in vals):
            raise ZeroDivisor("substitution at zero is undefined for Laurent polynomials")
        total = Fraction(0)
        for exps, coeff in self.terms:
            product = Fraction(coeff)
            for v, e in zip(vals, exps):
                product *= v**e
            total += product
        return total

    # ------------------------------------------------------------------
    # text and wire formats

    def to_text(self) -> str:
        """Canonical text form: terms in exponent-lex order, joined by ' + '.

        A term renders its factors in variable order as ``x3`` or
        ``x3^-2``, multiplied with ``*``.  The coefficient prefix is
        dropped when it is 1 and at least one factor is present; a bare
        constant renders as the integer.  The zero polynomial is ``0``.
        """
        if self.is_zero:
            return "0"
        rendered = []
        for exps, coeff in self.terms:
            factors = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e != 0
            ]
            if not factors:
                rendered.append(str(coeff))
            elif coeff == 1:
                rendered.append("*".join(factors))
            else:
                rendered.append("*".join([str(coeff)] + factors))
        return " + ".join(rendered)

    def __str__(self) -> str:
        return self.to_text()

    def to_wire(self) -> list:
        """JSON-ready term list; coefficients as decimal strings.

        Strings keep arbitrary-precision coefficients intact for
        consumers whose native numbers lose precision past 2**53.
        """
        return [[list(exps), str(coeff)] for exps, coeff in self.terms]

    @classmethod
    def from_wire(cls, nvars: int, data: Iterable) -> "LaurentPoly":
        terms = []
        for entry in data:
            exps, coeff = entry
            terms.append((tuple(int(e) for e in exps), int(coeff)))
        return cls.from_terms(nvars, terms)


def product(nvars: int, factors: Iterable[LaurentPoly]) -> LaurentPoly:
    """Product of a (possibly empty) collection; empty product is 1."""
    result = LaurentPoly.one(nvars)
    for f in factors:
        result = result * f
    return result
