"""Reduced-space invariants at regular moment levels.

Reducing a circle space at a regular value a is, up to cobordism, the
disjoint union of the reductions of its fixed-point linear models: weighted
projective spaces with weights |m_1|..|m_d|, Kaehler parameter a - base, and
an orientation sign.  Volume and cohomology pairings are therefore computed
as signed sums over the fixed points below the level.

Two exact cross-checks tie this module to the measure module:

* the reduced volume at a equals the DH density at a;
* the pairing of the (d-1)-st power of the degree-2 equivariant generator
  equals the (d-1)-th derivative of the chamber polynomial.

Orientation convention: the generator is normalized so that each present
toric reduction pairs to orientation_sign / prod_r m_rk.  This fixes the
otherwise convention-dependent global sign relating the generator to the
curvature class of the reduction bundle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Polynomial,
    RationalLike,
    as_rational,
    format_rational,
)
from .errors import NonRegularError
from .dh import dh_measure
from .spaces import HamiltonianSpaceData, LinearModel, linearize, require_consistency


@dataclass(frozen=True)
class ToricReductionData:
    """Reduction of one linear model at a level: a weighted projective space.

    ``present`` records whether the level lies above the model base (only
    then is the reduction nonempty); the Kaehler level is a - base.
    """

    weights: tuple[int, ...]
    kaehler_level: Fraction
    sign: int
    present: bool

    def __post_init__(self) -> None:
        if self.present != (self.kaehler_level > 0):
            raise ValueError("present must hold exactly when kaehler_level > 0")


@dataclass(frozen=True)
class ChamberDecomposition:
    """Critical moment values and the DH density polynomial per chamber."""

    critical_values: tuple[Fraction, ...]
    chamber_polynomials: tuple[Polynomial, ...]

    def to_json_dict(self) -> dict:
        return {
            "critical_values": [format_rational(c) for c in self.critical_values],
            "chamber_polynomials": [[format_rational(c) for c in p.coeffs]
                                    for p in self.chamber_polynomials],
        }


def toric_reduction_data(model: LinearModel, a: RationalLike) -> ToricReductionData:
    """Reduction data of one linear model at a level a != base."""
    a = as_rational(a)
    if a == model.base:
        raise NonRegularError(
            f"non-regular level {a}: equals the model base")
    return ToricReductionData(
        weights=tuple(abs(w) for w in model.circle_weights),
        kaehler_level=a - model.base,
        sign=model.orientation_sign * (-1) ** model.sigma,
        present=a > model.base)


def linear_reduced_volume(model: LinearModel, a: RationalLike) -> Fraction:
    """Signed volume of the model's reduction at a; zero when absent.

    Equals the density of the model's push-forward measure at a.
    """
    data = toric_reduction_data(model, a)
    if not data.present:
        return Fraction(0)
    d = len(data.weights)
    prod = math.prod(data.weights)
    return (data.sign * data.kaehler_level ** (d - 1)
            / (math.factorial(d - 1) * prod))


def reduced_volume(space: HamiltonianSpaceData, a: RationalLike) -> Fraction:
    """Volume of the reduced space at a regular level a.

    The signed sum of the linear models' reduced volumes; exactly equal to
    the DH density at a.
    """
    a = as_rational(a)
    require_consistency(space)
    _require_regular(space, a)
    return sum((linear_reduced_volume(m, a) for m in linearize(space)),
               Fraction(0))


def jk_pairing(space: HamiltonianSpaceData, a: RationalLike) -> Fraction:
    """Pairing of the (d-1)-st power of the degree-2 generator at level a.

    Sums orientation_sign_k / prod_r m_rk over the fixed points strictly
    below a; constant on chambers, jumping by each point's contribution as
    a crosses its moment value, and zero above the top fixed point.
    """
    a = as_rational(a)
    space._require_circle()
    _require_regular(space, a)
    total = Fraction(0)
    for model in linearize(space):
        if model.base < a:
            total += Fraction(model.orientation_sign, model.weight_product)
    return total


def chamber_decomposition(space: HamiltonianSpaceData) -> ChamberDecomposition:
    """Chambers of regular values and the DH polynomial on each."""
    measure = dh_measure(space)
    critical = tuple(sorted(set(space.moment_values)))
    polynomials = []
    for lo, hi in zip(critical, critical[1:]):
        polynomials.append(measure.piece_at((lo + hi) / 2))
    return ChamberDecomposition(critical, tuple(polynomials))


def _require_regular(space: HamiltonianSpaceData, a: Fraction) -> None:
    for fp in space.fixed_points:
        if fp.moment[0] == a:
            raise NonRegularError(
                f"non-regular level {a}: moment value of fixed point "
                f"{fp.name!r}")
