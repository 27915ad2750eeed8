"""Geometric quantization via fixed-point characters.

For a circle space with integer moment values, the equivariant Riemann-Roch
character is assembled from the fixed points:

    chi(t) = sum_k  sign_k * t**phi(p_k) / prod_r (1 - t**m_rk).

The sum of these rational functions always simplifies, for data coming from
an honest prequantized compact space, to a Laurent polynomial with integer
coefficients; a nonzero remainder in the final exact division is a
certificate that the data is not such a space.  The t^a-coefficient is the
Riemann-Roch number of the reduction at level a.

Expansion convention: each term is expanded in ascending powers of t.  A
positive weight m contributes the factor sum_{n>=0} t**(m n); a negative
weight -|m| contributes -t**|m| * sum_{n>=0} t**(|m| n).  Collecting signs
and shifts, the t^a-coefficient of the k-th term is

    sign_k * (-1)**sigma_k * #{n in Z_{>=0}^d : sum_r |m_rk| n_r = a - phi(p_k) - s_k},

with s_k the sum of |m_rk| over the negative weights.  This count is the
vector partition function computing the Riemann-Roch number of the k-th
toric reduction, so the coefficient identity

    multiplicity(chi, a) = sum_k partition_count(model_k, a)

is an algebraic theorem rather than a numerical coincidence; the orientation
sign enters termwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    LaurentPolynomial,
    RationalFunction,
    RationalLike,
    as_rational,
    geometric_denominator,
)
from .errors import ConsistencyError, NonRegularError
from .spaces import HamiltonianSpaceData, LinearModel, linearize


@dataclass(frozen=True)
class PrequantSpace:
    """A circle space whose moment values are all integers."""

    space: HamiltonianSpaceData

    def __post_init__(self) -> None:
        self.space._require_circle()
        for fp in self.space.fixed_points:
            if fp.moment[0].denominator != 1:
                raise ValueError(
                    f"non-integral moment value {fp.moment[0]} at fixed "
                    f"point {fp.name!r}")

    @property
    def moment_integers(self) -> tuple[int, ...]:
        return tuple(int(fp.moment[0]) for fp in self.space.fixed_points)


@dataclass(frozen=True)
class EquivariantCharacter:
    """Laurent polynomial in the circle variable with integer coefficients."""

    laurent: LaurentPolynomial

    def __post_init__(self) -> None:
        for e, c in self.laurent:
            if c.denominator != 1:
                raise ValueError(
                    f"character coefficient {c} of t^{e} is not an integer")

    def multiplicity(self, a: int) -> int:
        """Coefficient of t**a: the Riemann-Roch number of the level-a reduction."""
        return int(self.laurent.coefficient(a))

    def total(self) -> int:
        """Sum of all multiplicities (the non-equivariant Riemann-Roch number)."""
        return sum(int(c) for _, c in self.laurent)

    @property
    def support(self) -> tuple[int, int] | None:
        if not self.laurent:
            return None
        return self.laurent.min_exp, self.laurent.max_exp

    def truncate_below(self, a: Fraction) -> "EquivariantCharacter":
        """Keep only the terms with exponent strictly below a."""
        return EquivariantCharacter(LaurentPolynomial(
            tuple((e, c) for e, c in self.laurent if e < a)))

    def to_json_dict(self) -> dict:
        return {str(e): int(c) for e, c in self.laurent}

    @classmethod
    def from_json_dict(cls, data: dict) -> "EquivariantCharacter":
        return cls(LaurentPolynomial(
            tuple((int(e), Fraction(int(c))) for e, c in data.items())))


def character(ps: PrequantSpace) -> EquivariantCharacter:
    """Equivariant Riemann-Roch character of a prequantized circle space.

    Raises :class:`InexactDivisionError` when the fixed-point sum is not a
    Laurent polynomial, and :class:`ConsistencyError` when its support
    escapes the moment range -- either way the data cannot come from a
    prequantized compact space.
    """
    models = linearize(ps.space)
    if not models:
        return EquivariantCharacter(LaurentPolynomial.zero())
    acc = RationalFunction.zero()
    for model in models:
        num = LaurentPolynomial.monomial(int(model.base), model.orientation_sign)
        den = LaurentPolynomial.one()
        for w in model.circle_weights:
            den = den * geometric_denominator(w)
        acc = acc + RationalFunction(num, den)
    laurent = acc.to_laurent()
    if laurent:
        lo = min(int(m.base) for m in models)
        hi = max(int(m.base) for m in models)
        if laurent.min_exp < lo or laurent.max_exp > hi:
            raise ConsistencyError(
                f"character support [{laurent.min_exp}, {laurent.max_exp}] "
                f"escapes the moment range [{lo}, {hi}]")
    return EquivariantCharacter(laurent)


def multiplicity(chi: EquivariantCharacter, a: int) -> int:
    """Functional form of :meth:`EquivariantCharacter.multiplicity`."""
    return chi.multiplicity(a)


def partition_count(model: LinearModel, a: int) -> int:
    """Signed vector partition count: the t^a-coefficient of one character term.

    Counts lattice vectors n >= 0 with sum_r |m_r| n_r = a - base - s (s the
    sum of the negated weights' absolute values), with sign
    orientation_sign * (-1)**sigma.  This is the Riemann-Roch number of the
    model's toric reduction at level a.
    """
    if model.base.denominator != 1:
        raise ValueError(f"model base {model.base} is not an integer")
    shift = sum(-w for w in model.circle_weights if w < 0)
    target = a - int(model.base) - shift
    if target < 0:
        return 0
    counts = [0] * (target + 1)
    counts[0] = 1
    for w in model.circle_weights:
        step = abs(w)
        for value in range(step, target + 1):
            counts[value] += counts[value - step]
    return model.orientation_sign * (-1) ** model.sigma * counts[target]


@dataclass(frozen=True)
class RRReport:
    """Per-level comparison of character multiplicities and partition sums."""

    rows: tuple[tuple[int, int, int], ...]  # (level, multiplicity, partition sum)

    @property
    def passed(self) -> bool:
        return all(m == p for _, m, p in self.rows)

    def lines(self) -> list[str]:
        return [f"a={a}: multiplicity {m}, partition sum {p}"
                for a, m, p in self.rows]


def verify_rr_identity(ps: PrequantSpace, a_min: int, a_max: int) -> RRReport:
    """Compare multiplicity(chi, a) with the partition sums on [a_min, a_max]."""
    chi = character(ps)
    models = linearize(ps.space)
    rows = []
    for a in range(a_min, a_max + 1):
        lhs = chi.multiplicity(a)
        rhs = sum(partition_count(m, a) for m in models)
        rows.append((a, lhs, rhs))
    return RRReport(tuple(rows))


def cut_character(ps: PrequantSpace, a: RationalLike) -> EquivariantCharacter:
    """Character of the symplectic cut: keep the weights strictly below a.

    a must be regular for the measure-level cut; half-integer levels always
    are for integral data.
    """
    a = as_rational(a)
    for fp in ps.space.fixed_points:
        if fp.moment[0] == a:
            raise NonRegularError(
                f"non-regular cut level {a}: moment value of fixed point "
                f"{fp.name!r}")
    return character(ps).truncate_below(a)
