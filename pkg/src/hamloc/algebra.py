"""Exact arithmetic substrate.

Everything downstream (push-forward measures, reduced volumes, equivariant
characters) is computed over arbitrary-precision rationals; no floating point
enters any value in this package.  The carriers are:

* ``Rational`` -- alias of :class:`fractions.Fraction` (always lowest terms,
  positive denominator).
* :class:`Polynomial` -- univariate, rational coefficients, ascending degree.
* :class:`PiecewisePolynomialMeasure` -- a signed measure on the line with a
  piecewise-polynomial density, zero outside a compact interval.  Stored in a
  canonical form in which structural equality coincides with equality of
  measures.
* :class:`LaurentPolynomial` -- finitely many integer exponents (possibly
  negative), rational coefficients.
* :class:`RationalFunction` -- a formal quotient of Laurent polynomials used as
  an intermediate when summing fixed-point character terms.

All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import InexactDivisionError, NonRegularError

Rational = Fraction

RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    """Render as "p/q" with q > 0, or a bare integer string when q == 1."""
    return str(value)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of ``t**i``; trailing zeros are stripped
    on construction, so the zero polynomial has ``coeffs == ()`` and
    ``degree is None``.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls((as_rational(c),))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(
            (self.coeffs[i] if i < len(self.coeffs) else Fraction(0))
            + (other.coeffs[i] if i < len(other.coeffs) else Fraction(0))
            for i in range(n)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial | RationalLike") -> "Polynomial":
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(tuple(out))
        return Polynomial(tuple(c * as_rational(other) for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, t: RationalLike) -> Fraction:
        t = as_rational(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self, k: int = 1) -> "Polynomial":
        """k-th formal derivative (k >= 0)."""
        if k < 0:
            raise ValueError("derivative order must be >= 0")
        coeffs = self.coeffs
        for _ in range(k):
            coeffs = tuple(coeffs[i] * i for i in range(1, len(coeffs)))
        return Polynomial(coeffs)

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with zero constant term."""
        return Polynomial((Fraction(0),) + tuple(
            c / (i + 1) for i, c in enumerate(self.coeffs)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if c != 1 else f"t^{i}")
        return " + ".join(parts)


def poly_derivative(p: Polynomial, k: int) -> Polynomial:
    """Functional form of :meth:`Polynomial.derivative`."""
    return p.derivative(k)


# ---------------------------------------------------------------------------
# piecewise-polynomial signed measures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PiecewisePolynomialMeasure:
    """Signed measure with piecewise-polynomial density and compact support.

    ``breakpoints`` is a strictly increasing tuple b_0 < ... < b_m and
    ``pieces[i]`` is the density on the open interval (b_i, b_{i+1}); the
    density is identically zero outside [b_0, b_m].  Construction
    canonicalizes: adjacent equal pieces are merged and zero pieces at either
    end are trimmed, so two instances are equal as dataclasses exactly when
    they are equal as measures.  The density is deliberately undefined at the
    breakpoints themselves (a measure-zero set).
    """

    breakpoints: tuple[Fraction, ...] = ()
    pieces: tuple[Polynomial, ...] = ()

    def __post_init__(self) -> None:
        bs = [as_rational(b) for b in self.breakpoints]
        ps = list(self.pieces)
        if len(bs) != (len(ps) + 1 if ps else 0):
            raise ValueError(
                f"{len(bs)} breakpoints do not delimit {len(ps)} pieces")
        if any(b1 >= b2 for b1, b2 in zip(bs, bs[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        # trim zero pieces at the ends
        while ps and not ps[0]:
            ps.pop(0)
            bs.pop(0)
        while ps and not ps[-1]:
            ps.pop()
            bs.pop()
        if not ps:
            bs = []
        # merge adjacent equal pieces
        merged_bs: list[Fraction] = bs[:1]
        merged_ps: list[Polynomial] = []
        for b, p in zip(bs[1:], ps):
            if merged_ps and merged_ps[-1] == p:
                merged_bs[-1] = b
            else:
                merged_ps.append(p)
                merged_bs.append(b)
        object.__setattr__(self, "breakpoints", tuple(merged_bs))
        object.__setattr__(self, "pieces", tuple(merged_ps))

    @classmethod
    def zero(cls) -> "PiecewisePolynomialMeasure":
        return cls()

    @classmethod
    def single_piece(cls, lo: RationalLike, hi: RationalLike,
                     density: Polynomial) -> "PiecewisePolynomialMeasure":
        """Measure with the given density on (lo, hi) and zero elsewhere."""
        return cls((as_rational(lo), as_rational(hi)), (density,))

    def __bool__(self) -> bool:
        return bool(self.pieces)

    @property
    def support(self) -> tuple[Fraction, Fraction] | None:
        if not self.pieces:
            return None
        return self.breakpoints[0], self.breakpoints[-1]

    @property
    def degree_bound(self) -> int | None:
        degrees = [p.degree for p in self.pieces if p]
        return max(degrees) if degrees else None

    def piece_at(self, t: RationalLike) -> Polynomial:
        """Density polynomial on the piece containing t (zero outside support).

        Raises :class:`NonRegularError` when t is a breakpoint.
        """
        t = as_rational(t)
        if not self.pieces:
            return Polynomial()
        i = bisect.bisect_left(self.breakpoints, t)
        if i < len(self.breakpoints) and self.breakpoints[i] == t:
            raise NonRegularError(f"non-regular point: {t} is a breakpoint")
        if i == 0 or i == len(self.breakpoints):
            return Polynomial()
        return self.pieces[i - 1]

    def density_at(self, t: RationalLike) -> Fraction:
        """Density value at a non-breakpoint t."""
        return self.piece_at(t)(as_rational(t))

    def __add__(self, other: "PiecewisePolynomialMeasure") -> "PiecewisePolynomialMeasure":
        if not isinstance(other, PiecewisePolynomialMeasure):
            return NotImplemented
        if not self.pieces:
            return other
        if not other.pieces:
            return self
        bs = sorted(set(self.breakpoints) | set(other.breakpoints))
        pieces = []
        for lo, hi in zip(bs, bs[1:]):
            mid = (lo + hi) / 2
            pieces.append(self.piece_at(mid) + other.piece_at(mid))
        return PiecewisePolynomialMeasure(tuple(bs), tuple(pieces))

    def __neg__(self) -> "PiecewisePolynomialMeasure":
        return PiecewisePolynomialMeasure(
            self.breakpoints, tuple(-p for p in self.pieces))

    def __sub__(self, other: "PiecewisePolynomialMeasure") -> "PiecewisePolynomialMeasure":
        return self + (-other)

    def __mul__(self, scalar: RationalLike) -> "PiecewisePolynomialMeasure":
        c = as_rational(scalar)
        return PiecewisePolynomialMeasure(
            self.breakpoints, tuple(p * c for p in self.pieces))

    __rmul__ = __mul__

    def truncate(self, a: RationalLike) -> "PiecewisePolynomialMeasure":
        """Keep the density on (-inf, a), zero it on (a, inf).

        a must not be a breakpoint (raises :class:`NonRegularError`).
        """
        a = as_rational(a)
        if a in self.breakpoints:
            raise NonRegularError(f"non-regular cut level: {a} is a breakpoint")
        if not self.pieces or a < self.breakpoints[0]:
            return PiecewisePolynomialMeasure.zero()
        if a > self.breakpoints[-1]:
            return self
        i = bisect.bisect_left(self.breakpoints, a)  # b_{i-1} < a < b_i
        return PiecewisePolynomialMeasure(
            self.breakpoints[:i] + (a,), self.pieces[:i])

    def integrate(self) -> Fraction:
        """Exact integral of the density over the whole line."""
        total = Fraction(0)
        for lo, hi, p in zip(self.breakpoints, self.breakpoints[1:], self.pieces):
            anti = p.antiderivative()
            total += anti(hi) - anti(lo)
        return total

    def to_json_dict(self) -> dict:
        return {
            "breakpoints": [format_rational(b) for b in self.breakpoints],
            "pieces": [[format_rational(c) for c in p.coeffs] for p in self.pieces],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "PiecewisePolynomialMeasure":
        return cls(
            tuple(as_rational(b) for b in data["breakpoints"]),
            tuple(Polynomial(tuple(as_rational(c) for c in piece))
                  for piece in data["pieces"]))


# ---------------------------------------------------------------------------
# Laurent polynomials and rational functions
# ---------------------------------------------------------------------------

def _normalize_terms(terms) -> tuple[tuple[int, Fraction], ...]:
    acc: dict[int, Fraction] = {}
    items = terms.items() if isinstance(terms, Mapping) else terms
    for e, c in items:
        if not isinstance(e, int):
            raise TypeError(f"exponent {e!r} is not an integer")
        acc[e] = acc.get(e, Fraction(0)) + as_rational(c)
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


@dataclass(frozen=True)
class LaurentPolynomial:
    """Finite rational combination of integer powers of t (negatives allowed).

    ``terms`` is stored sorted by exponent with no zero coefficients; the
    empty tuple is the zero element.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()
    _by_exp: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        normalized = _normalize_terms(self.terms)
        object.__setattr__(self, "terms", normalized)
        object.__setattr__(self, "_by_exp", dict(normalized))

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls(((0, Fraction(1)),))

    @classmethod
    def monomial(cls, exponent: int, coefficient: RationalLike = 1) -> "LaurentPolynomial":
        return cls(((exponent, as_rational(coefficient)),))

    @classmethod
    def from_dict(cls, mapping: Mapping[int, RationalLike]) -> "LaurentPolynomial":
        return cls(tuple((e, as_rational(c)) for e, c in mapping.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self.terms)

    def coefficient(self, exponent: int) -> Fraction:
        return self._by_exp.get(exponent, Fraction(0))

    @property
    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero Laurent polynomial has no exponents")
        return self.terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero Laurent polynomial has no exponents")
        return self.terms[-1][0]

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return LaurentPolynomial(self.terms + other.terms)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | RationalLike") -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            acc: dict[int, Fraction] = {}
            for e1, c1 in self.terms:
                for e2, c2 in other.terms:
                    e = e1 + e2
                    acc[e] = acc.get(e, Fraction(0)) + c1 * c2
            return LaurentPolynomial(tuple(acc.items()))
        c = as_rational(other)
        return LaurentPolynomial(tuple((e, co * c) for e, co in self.terms))

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t**k."""
        return LaurentPolynomial(tuple((e + k, c) for e, c in self.terms))

    def div_exact(self, den: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient q with q * den == self.

        Raises :class:`InexactDivisionError` when no Laurent polynomial
        quotient exists, and ``ValueError`` on a zero denominator.
        """
        if not den:
            raise ValueError("division by the zero Laurent polynomial")
        if not self:
            return LaurentPolynomial.zero()
        # strip powers of t so both operands become honest polynomials with
        # nonzero constant term; divisibility is unaffected (t is a unit)
        shift = self.min_exp - den.min_exp
        num_map = {e - self.min_exp: c for e, c in self.terms}
        den_map = {e - den.min_exp: c for e, c in den.terms}
        den_deg = max(den_map)
        den_lead = den_map[den_deg]
        quot: dict[int, Fraction] = {}
        rem = dict(num_map)
        while rem:
            rem_deg = max(rem)
            if rem_deg < den_deg:
                raise InexactDivisionError(
                    "inexact division: remainder of degree "
                    f"{rem_deg} against divisor of degree {den_deg}")
            factor = rem[rem_deg] / den_lead
            pos = rem_deg - den_deg
            quot[pos] = quot.get(pos, Fraction(0)) + factor
            for e, c in den_map.items():
                k = e + pos
                v = rem.get(k, Fraction(0)) - factor * c
                if v == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return LaurentPolynomial(tuple(quot.items())).shift(shift)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{e}" if c != 1 else f"t^{e}")
        return " + ".join(parts)


def laurent_div_exact(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial:
    """Functional form of :meth:`LaurentPolynomial.div_exact`."""
    return num.div_exact(den)


def geometric_denominator(weight: int) -> LaurentPolynomial:
    """The factor 1 - t**weight."""
    return LaurentPolynomial.one() - LaurentPolynomial.monomial(weight)


@dataclass(frozen=True)
class RationalFunction:
    """Formal quotient of Laurent polynomials (denominator nonzero).

    No gcd reduction is performed; the quotient is simplified once at the end
    via exact division.
    """

    numerator: LaurentPolynomial
    denominator: LaurentPolynomial

    def __post_init__(self) -> None:
        if not self.denominator:
            raise ValueError("rational function with zero denominator")

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(LaurentPolynomial.zero(), LaurentPolynomial.one())

    @classmethod
    def from_laurent(cls, p: LaurentPolynomial) -> "RationalFunction":
        return cls(p, LaurentPolynomial.one())

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self.numerator * other.numerator,
            self.denominator * other.denominator)

    def to_laurent(self) -> LaurentPolynomial:
        """Exact quotient; raises :class:`InexactDivisionError` if improper."""
        return self.numerator.div_exact(self.denominator)


def measure_add(a: PiecewisePolynomialMeasure,
                b: PiecewisePolynomialMeasure) -> PiecewisePolynomialMeasure:
    """Functional form of measure addition."""
    return a + b


def measure_eval_density(mu: PiecewisePolynomialMeasure, t: RationalLike) -> Fraction:
    """Functional form of :meth:`PiecewisePolynomialMeasure.density_at`."""
    return mu.density_at(t)


def measure_truncate(mu: PiecewisePolynomialMeasure, a: RationalLike) -> PiecewisePolynomialMeasure:
    """Functional form of :meth:`PiecewisePolynomialMeasure.truncate`."""
    return mu.truncate(a)


def measure_integrate(mu: PiecewisePolynomialMeasure) -> Fraction:
    """Functional form of :meth:`PiecewisePolynomialMeasure.integrate`."""
    return mu.integrate()
