"""Fixed-point data for Hamiltonian torus actions.

A compact Hamiltonian space with isolated fixed points is recorded purely by
its fixed-point data: for each fixed point a moment value in t*, an integer
matrix of isotropy weights (one row per complex tangent direction), and an
orientation sign comparing the ambient orientation with the complex one.  All
invariants computed by this package depend only on this data.

The central transform is :func:`linearize`: a circle space is traded for the
disjoint union of its fixed-point linear models, one (C^d, base, weights,
sign) summand per fixed point, whose moment map is proper and bounded below.
Consistency of the data (the signed moment-power sums that force the
localization sum to cancel above the top fixed point) is checked by
:func:`validate_consistency`.

Weight-sign ambiguity: when the two-form is degenerate the individual weight
signs are only determined up to flipping an even number of them.  The data
model stores one explicit choice; every quantity computed downstream depends
only on the invariant combinations (the count of negative weights and the
absolute weights), which the tests verify directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import RationalLike, as_rational, format_rational
from .errors import (
    ConsistencyError,
    NonGenericDirectionError,
    NotQuasiFreeError,
    SpaceFormatError,
)


@dataclass(frozen=True)
class FixedPointDatum:
    """One isolated fixed point: name, moment value(s), weight matrix, sign."""

    name: str
    moment: tuple[Fraction, ...]
    weights: tuple[tuple[int, ...], ...]
    orientation_sign: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "moment",
                           tuple(as_rational(m) for m in self.moment))
        rows = tuple(tuple(int(w) for w in row) for row in self.weights)
        object.__setattr__(self, "weights", rows)
        if self.orientation_sign not in (1, -1):
            raise ValueError(
                f"orientation_sign of {self.name!r} must be +1 or -1")
        for row in rows:
            if all(w == 0 for w in row):
                raise ValueError(
                    f"zero isotropy weight row at fixed point {self.name!r}")


@dataclass(frozen=True)
class HamiltonianSpaceData:
    """A Hamiltonian torus space given by its isolated fixed-point data.

    ``torus_rank`` is the rank n of the acting torus, ``half_dim`` the complex
    dimension d; every fixed point carries a length-n moment vector and a
    d x n weight matrix.
    """

    torus_rank: int
    half_dim: int
    fixed_points: tuple[FixedPointDatum, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "fixed_points", tuple(self.fixed_points))
        if self.torus_rank < 1:
            raise ValueError("torus_rank must be >= 1")
        if self.half_dim < 0:
            raise ValueError("half_dim must be >= 0")
        names = set()
        for fp in self.fixed_points:
            if len(fp.moment) != self.torus_rank:
                raise ValueError(
                    f"moment vector of {fp.name!r} has length {len(fp.moment)}, "
                    f"expected {self.torus_rank}")
            if len(fp.weights) != self.half_dim:
                raise ValueError(
                    f"{fp.name!r} has {len(fp.weights)} weight rows, "
                    f"expected {self.half_dim}")
            for row in fp.weights:
                if len(row) != self.torus_rank:
                    raise ValueError(
                        f"weight row of {fp.name!r} has length {len(row)}, "
                        f"expected {self.torus_rank}")
            if fp.name in names:
                raise ValueError(f"duplicate fixed-point name {fp.name!r}")
            names.add(fp.name)

    @property
    def moment_values(self) -> tuple[Fraction, ...]:
        """Scalar moment values; only meaningful for circle (rank 1) data."""
        self._require_circle()
        return tuple(fp.moment[0] for fp in self.fixed_points)

    def _require_circle(self) -> None:
        if self.torus_rank != 1:
            raise ValueError(
                f"operation requires a circle space (torus_rank 1), "
                f"got rank {self.torus_rank}")


@dataclass(frozen=True)
class LinearModel:
    """One linearization summand: C^d with a circle action.

    ``base`` is the moment value of the underlying fixed point, opening the
    moment image [base, inf); ``sigma`` counts the negative weights and is
    derived from them when not supplied.
    """

    base: Fraction
    circle_weights: tuple[int, ...]
    orientation_sign: int
    sigma: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_rational(self.base))
        ws = tuple(int(w) for w in self.circle_weights)
        object.__setattr__(self, "circle_weights", ws)
        if any(w == 0 for w in ws):
            raise ValueError("linear model has a zero circle weight")
        if self.orientation_sign not in (1, -1):
            raise ValueError("orientation_sign must be +1 or -1")
        negatives = sum(1 for w in ws if w < 0)
        if self.sigma is None:
            object.__setattr__(self, "sigma", negatives)
        elif self.sigma != negatives:
            raise ValueError(
                f"sigma={self.sigma} but {negatives} weights are negative")

    @property
    def weight_product(self) -> int:
        """Signed product of the circle weights; equals (-1)^sigma * prod |m_r|."""
        prod = 1
        for w in self.circle_weights:
            prod *= w
        return prod


@dataclass(frozen=True)
class ConsistencyReport:
    """Signed moment-power sums sum_k sign_k phi_k^j / prod_r m_rk, j < d."""

    sums: tuple[Fraction, ...]

    @property
    def passed(self) -> bool:
        return all(s == 0 for s in self.sums)

    def lines(self) -> list[str]:
        return [f"j={j} sum = {format_rational(s)}"
                for j, s in enumerate(self.sums)]


@dataclass(frozen=True)
class QuasiFreeCensus:
    """Census of a quasi-free circle space: fixed-point count and signs."""

    count: int
    signs: tuple[int, ...]


def restrict_to_circle(space: HamiltonianSpaceData,
                       xi: Sequence[int]) -> HamiltonianSpaceData:
    """Restrict a torus action to the circle subgroup with direction xi.

    The direction must be generic: every weight row must pair to a nonzero
    integer, otherwise :class:`NonGenericDirectionError` is raised naming the
    offending fixed point and row.  Moment values become the pairings
    <moment, xi>; orientation signs are preserved.
    """
    xi = tuple(int(x) for x in xi)
    if len(xi) != space.torus_rank:
        raise ValueError(
            f"direction has length {len(xi)}, expected {space.torus_rank}")
    new_points = []
    for fp in space.fixed_points:
        new_rows = []
        for r, row in enumerate(fp.weights):
            pairing = sum(m * x for m, x in zip(row, xi))
            if pairing == 0:
                raise NonGenericDirectionError(
                    f"non-generic direction {xi}: weight row {r} of fixed "
                    f"point {fp.name!r} pairs to zero")
            new_rows.append((pairing,))
        new_moment = sum((m * x for m, x in zip(fp.moment, xi)), Fraction(0))
        new_points.append(FixedPointDatum(
            name=fp.name,
            moment=(new_moment,),
            weights=tuple(new_rows),
            orientation_sign=fp.orientation_sign))
    return HamiltonianSpaceData(1, space.half_dim, tuple(new_points))


def find_generic_direction(space: HamiltonianSpaceData) -> tuple[int, ...]:
    """First integer direction (by increasing max-norm, then coordinate order,
    larger entries first) pairing nonzero with every weight row.  Deterministic."""
    n = space.torus_rank
    rows = [row for fp in space.fixed_points for row in fp.weights]
    for bound in itertools.count(1):
        for xi in itertools.product(range(bound, -bound - 1, -1), repeat=n):
            if max(abs(x) for x in xi) != bound:
                continue
            if all(sum(m * x for m, x in zip(row, xi)) != 0 for row in rows):
                return xi
    raise AssertionError("unreachable")


def linearize(space: HamiltonianSpaceData) -> list[LinearModel]:
    """One linear model per fixed point of a circle space."""
    space._require_circle()
    return [LinearModel(base=fp.moment[0],
                        circle_weights=tuple(row[0] for row in fp.weights),
                        orientation_sign=fp.orientation_sign)
            for fp in space.fixed_points]


def validate_consistency(space: HamiltonianSpaceData) -> ConsistencyReport:
    """Check the moment-power sums that compact support forces to vanish.

    For each j in 0..d-1 the sum over fixed points of
    sign_k * phi(p_k)**j / prod_r m_rk must be exactly zero; these are the
    coefficient conditions for the localization sum to cancel above the top
    fixed point.
    """
    space._require_circle()
    models = linearize(space)
    sums = []
    for j in range(space.half_dim):
        total = Fraction(0)
        for model in models:
            total += (model.orientation_sign
                      * model.base ** j
                      / model.weight_product)
        sums.append(total)
    return ConsistencyReport(tuple(sums))


def build_projective(weight_vector: Sequence[int],
                     scale: RationalLike = 1) -> HamiltonianSpaceData:
    """Circle data of the projective space of a weighted C^{d+1}.

    Given pairwise-distinct integers a_0..a_d, the space has d+1 fixed points
    P_j with moment value scale * a_j and weight rows {a_i - a_j : i != j},
    all with orientation sign +1.
    """
    a = [int(x) for x in weight_vector]
    if len(set(a)) != len(a):
        raise ValueError(f"weight vector entries must be distinct: {a}")
    if not a:
        raise ValueError("weight vector must be nonempty")
    scale = as_rational(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    d = len(a) - 1
    points = []
    for j, aj in enumerate(a):
        rows = tuple((ai - aj,) for i, ai in enumerate(a) if i != j)
        points.append(FixedPointDatum(
            name=f"P{j}",
            moment=(scale * aj,),
            weights=rows,
            orientation_sign=1))
    return HamiltonianSpaceData(1, d, tuple(points))


def build_projective_torus(dim: int,
                           scale: RationalLike = 1) -> HamiltonianSpaceData:
    """Rank-d torus data of projective d-space: the standard simplex.

    Fixed points are the vertices 0, e_1, ..., e_d of the scaled simplex;
    the weights at a vertex are the primitive edge vectors towards the other
    vertices.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    scale = as_rational(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    vertices = [(0,) * dim]
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        vertices.append(tuple(e))
    points = []
    for j, vj in enumerate(vertices):
        rows = tuple(
            tuple(vi[r] - vj[r] for r in range(dim))
            for i, vi in enumerate(vertices) if i != j)
        points.append(FixedPointDatum(
            name=f"P{j}",
            moment=tuple(scale * c for c in vj),
            weights=rows,
            orientation_sign=1))
    return HamiltonianSpaceData(dim, dim, tuple(points))


def product(s1: HamiltonianSpaceData,
            s2: HamiltonianSpaceData) -> HamiltonianSpaceData:
    """Product space: pairs of fixed points, added moments, stacked weights."""
    if s1.torus_rank != s2.torus_rank:
        raise ValueError(
            f"torus rank mismatch: {s1.torus_rank} != {s2.torus_rank}")
    points = []
    for fp1 in s1.fixed_points:
        for fp2 in s2.fixed_points:
            points.append(FixedPointDatum(
                name=f"{fp1.name}*{fp2.name}",
                moment=tuple(m1 + m2 for m1, m2 in zip(fp1.moment, fp2.moment)),
                weights=fp1.weights + fp2.weights,
                orientation_sign=fp1.orientation_sign * fp2.orientation_sign))
    return HamiltonianSpaceData(
        s1.torus_rank, s1.half_dim + s2.half_dim, tuple(points))


def disjoint_union(s1: HamiltonianSpaceData,
                   s2: HamiltonianSpaceData) -> HamiltonianSpaceData:
    """Disjoint union; requires matching rank and dimension."""
    if s1.torus_rank != s2.torus_rank:
        raise ValueError(
            f"torus rank mismatch: {s1.torus_rank} != {s2.torus_rank}")
    if s1.half_dim != s2.half_dim:
        raise ValueError(
            f"half_dim mismatch: {s1.half_dim} != {s2.half_dim}")
    names1 = {fp.name for fp in s1.fixed_points}
    points = list(s1.fixed_points)
    for fp in s2.fixed_points:
        name = fp.name
        while name in names1:
            name += "'"
        names1.add(name)
        points.append(FixedPointDatum(name, fp.moment, fp.weights,
                                      fp.orientation_sign))
    return HamiltonianSpaceData(s1.torus_rank, s1.half_dim, tuple(points))


def reverse(space: HamiltonianSpaceData) -> HamiltonianSpaceData:
    """Orientation reversal: flip every orientation sign."""
    return HamiltonianSpaceData(
        space.torus_rank, space.half_dim,
        tuple(FixedPointDatum(fp.name, fp.moment, fp.weights,
                              -fp.orientation_sign)
              for fp in space.fixed_points))


def quasi_free_census(space: HamiltonianSpaceData) -> QuasiFreeCensus:
    """Census of a quasi-free circle space (all isotropy weights +-1).

    Such a space is cobordant to a disjoint union of N projective spaces,
    N the number of fixed points, the k-th taken with sign
    orientation_sign_k * (-1)^sigma_k.
    """
    space._require_circle()
    models = linearize(space)
    for model in models:
        if any(abs(w) != 1 for w in model.circle_weights):
            raise NotQuasiFreeError(
                f"not quasi-free: weight {model.circle_weights} at base "
                f"{model.base} has |m| > 1")
    signs = tuple(m.orientation_sign * (-1) ** m.sigma for m in models)
    return QuasiFreeCensus(count=len(models), signs=signs)


# ---------------------------------------------------------------------------
# JSON space-file format
# ---------------------------------------------------------------------------

_SPACE_FIELDS = {"torus_rank", "half_dim", "fixed_points"}
_POINT_FIELDS = {"name", "moment", "weights", "orientation_sign"}


def _parse_rational(value) -> Fraction:
    if not isinstance(value, str):
        raise SpaceFormatError(
            f"rational values must be strings like \"p/q\", got {value!r}")
    body = value[1:] if value.startswith("-") else value
    head, slash, tail = body.partition("/")
    if not head.isdigit() or (slash and not tail.isdigit()):
        raise SpaceFormatError(f"malformed rational {value!r}")
    if slash and int(tail) == 0:
        raise SpaceFormatError(f"malformed rational {value!r}: zero denominator")
    return Fraction(value)


def space_from_json_dict(data: Mapping) -> HamiltonianSpaceData:
    """Parse the space-file JSON object; unknown fields are rejected."""
    if not isinstance(data, Mapping):
        raise SpaceFormatError("space file must be a JSON object")
    unknown = set(data) - _SPACE_FIELDS
    if unknown:
        raise SpaceFormatError(f"unknown space fields: {sorted(unknown)}")
    missing = _SPACE_FIELDS - set(data)
    if missing:
        raise SpaceFormatError(f"missing space fields: {sorted(missing)}")
    if not isinstance(data["torus_rank"], int) or isinstance(data["torus_rank"], bool):
        raise SpaceFormatError("torus_rank must be an integer")
    if not isinstance(data["half_dim"], int) or isinstance(data["half_dim"], bool):
        raise SpaceFormatError("half_dim must be an integer")
    points = []
    if not isinstance(data["fixed_points"], list):
        raise SpaceFormatError("fixed_points must be an array")
    for entry in data["fixed_points"]:
        if not isinstance(entry, Mapping):
            raise SpaceFormatError("each fixed point must be a JSON object")
        unknown = set(entry) - _POINT_FIELDS
        if unknown:
            raise SpaceFormatError(f"unknown fixed-point fields: {sorted(unknown)}")
        missing = _POINT_FIELDS - set(entry)
        if missing:
            raise SpaceFormatError(f"missing fixed-point fields: {sorted(missing)}")
        if not isinstance(entry["name"], str):
            raise SpaceFormatError("fixed-point name must be a string")
        if entry["orientation_sign"] not in (1, -1):
            raise SpaceFormatError(
                f"orientation_sign must be 1 or -1, got {entry['orientation_sign']!r}")
        if not isinstance(entry["moment"], list):
            raise SpaceFormatError("moment must be an array of rational strings")
        moment = tuple(_parse_rational(m) for m in entry["moment"])
        if not isinstance(entry["weights"], list):
            raise SpaceFormatError("weights must be an array of integer arrays")
        weights = []
        for row in entry["weights"]:
            if not isinstance(row, list) or not all(
                    isinstance(w, int) and not isinstance(w, bool) for w in row):
                raise SpaceFormatError(f"weight rows must be integer arrays, got {row!r}")
            weights.append(tuple(row))
        try:
            points.append(FixedPointDatum(
                name=entry["name"],
                moment=moment,
                weights=tuple(weights),
                orientation_sign=entry["orientation_sign"]))
        except ValueError as exc:
            raise SpaceFormatError(str(exc)) from exc
    try:
        return HamiltonianSpaceData(
            data["torus_rank"], data["half_dim"], tuple(points))
    except ValueError as exc:
        raise SpaceFormatError(str(exc)) from exc


def space_to_json_dict(space: HamiltonianSpaceData) -> dict:
    """Canonical JSON object for a space (fixed key order, exact rationals)."""
    return {
        "torus_rank": space.torus_rank,
        "half_dim": space.half_dim,
        "fixed_points": [
            {
                "name": fp.name,
                "moment": [format_rational(m) for m in fp.moment],
                "weights": [list(row) for row in fp.weights],
                "orientation_sign": fp.orientation_sign,
            }
            for fp in space.fixed_points
        ],
    }


def require_consistency(space: HamiltonianSpaceData) -> None:
    """Raise :class:`ConsistencyError` when the localization sums do not vanish."""
    report = validate_consistency(space)
    if not report.passed:
        raise ConsistencyError(
            "GLS sum does not vanish above the top fixed point: "
            + "; ".join(report.lines()))
