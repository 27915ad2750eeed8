"""Duistermaat-Heckman measures from fixed-point data.

The moment-map push-forward of Liouville measure is assembled as the signed
sum of the push-forwards of the fixed-point linear models.  With the
normalization used throughout (Liouville form (omega/2pi)^d / d!), the model
with base b, weights m_1..m_d and orientation sign s pushes forward to the
density

    s * (t - b)**(d-1) / ((d-1)! * m_1 * ... * m_d)      on (b, horizon),

where the signed weight product absorbs the (-1)^sigma between the complex
and symplectic orientations.  Summing over all fixed points of a consistent
circle space, everything cancels above the top moment value, leaving an
exact piecewise-polynomial density supported on [min phi, max phi].

Symplectic cutting acts on measures as plain truncation at a regular level:
the reduced stratum of the cut space is lower-dimensional and carries no
Liouville mass.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import (
    PiecewisePolynomialMeasure,
    Polynomial,
    RationalLike,
    as_rational,
)
from .errors import NonRegularError
from .spaces import HamiltonianSpaceData, LinearModel, linearize, require_consistency


def linear_model_measure(model: LinearModel,
                         horizon: RationalLike) -> PiecewisePolynomialMeasure:
    """Push-forward measure of one linear model, truncated at the horizon.

    The density lives on (base, horizon); the horizon must lie strictly above
    the base.
    """
    horizon = as_rational(horizon)
    if horizon <= model.base:
        raise ValueError(
            f"horizon {horizon} must exceed the model base {model.base}")
    d = len(model.circle_weights)
    if d < 1:
        raise ValueError("push-forward needs at least one weight (d >= 1)")
    lead = Fraction(model.orientation_sign,
                    math.factorial(d - 1) * model.weight_product)
    density = Polynomial((-model.base, Fraction(1))) ** (d - 1) * lead
    return PiecewisePolynomialMeasure.single_piece(model.base, horizon, density)


def dh_measure(space: HamiltonianSpaceData) -> PiecewisePolynomialMeasure:
    """Duistermaat-Heckman measure of a consistent circle space.

    Raises :class:`ConsistencyError` when the localization sums do not vanish
    (the sum of model measures would then fail to cancel above the top fixed
    point).
    """
    require_consistency(space)
    models = linearize(space)
    if not models:
        return PiecewisePolynomialMeasure.zero()
    horizon = max(m.base for m in models)
    total = PiecewisePolynomialMeasure.zero()
    for model in models:
        if model.base < horizon:
            total = total + linear_model_measure(model, horizon)
    return total


def dh_jump(space: HamiltonianSpaceData, k: int) -> Fraction:
    """Jump of the (d-1)-th density derivative contributed at fixed point k.

    Equals orientation_sign_k / prod_r m_rk; when several fixed points share
    a moment value, the measure's jump there is the sum of their
    contributions.
    """
    models = linearize(space)
    if not 0 <= k < len(models):
        raise IndexError(
            f"fixed-point index {k} out of range ({len(models)} points)")
    model = models[k]
    return Fraction(model.orientation_sign, model.weight_product)


def cut_measure(space: HamiltonianSpaceData,
                a: RationalLike) -> PiecewisePolynomialMeasure:
    """Measure of the symplectic cut at a regular level a: pure truncation.

    a must avoid every moment value; the colliding fixed point is named
    otherwise.
    """
    a = as_rational(a)
    space._require_circle()
    for fp in space.fixed_points:
        if fp.moment[0] == a:
            raise NonRegularError(
                f"non-regular cut level {a}: moment value of fixed point "
                f"{fp.name!r}")
    return dh_measure(space).truncate(a)


def total_volume(space: HamiltonianSpaceData) -> Fraction:
    """Total Liouville mass: the integral of the DH density."""
    return dh_measure(space).integrate()
