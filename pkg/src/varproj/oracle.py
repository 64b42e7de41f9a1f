"""Numerical limsup membership oracle for coderivative queries.

A vector z belongs to the coderivative of f at xbar applied to y exactly
when

    limsup_{u -> xbar}  ( <z, u - xbar> - <y, f(u) - f(xbar)> )
                        / ( ||u - xbar|| + ||f(u) - f(xbar)|| )   <=  0.

The oracle estimates the limsup by sampling u = xbar + t*d over a fixed
set of shrinking radii t and many unit directions d: a seeded batch of
random directions per radius plus structured probes aligned with the
known worst-case families (radial moves along xbar, moves along the
orthogonal parts of y and z against xbar, single-coordinate segments,
and moves along y and z themselves).  Scaled single-coordinate segments
such as u_j = xbar_j + t * z_j trace the same rays as the coordinate
probes, so normalising directions to unit length loses no coverage.

Verdict rule, with s_k the supremum of the quotient at the k-th radius
(radii decrease) and tol the configured tolerance:

* NonMember  if s_last > tol: some probe certifies a strictly positive
  limsup; the witness re-evaluates to the same quotient.
* Member     if s_last <= tol and the clipped sequence max(s_k, 0) never
  increases by more than tol between consecutive radii.  Negative
  estimates rising toward zero are fine (smooth cases approach the limit
  from below); a *positive* rising trend is not.
* Inconclusive otherwise: the estimates sit in the tolerance band but
  drift upward, so neither answer is safe.

The denominator may also be computed as sqrt(||u - xbar||^2 +
||f(u) - f(xbar)||^2); the two quotients have the same sign and their
ratio lies in [sqrt(2)/2, 1], so verdicts agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .vectors import SparseVector, Vector, as_vector, inner, is_zero, norm, orth_decompose

__all__ = [
    "ProbeConfig",
    "Verdict",
    "Witness",
    "OracleVerdict",
    "quotient",
    "membership",
    "directional_quotient",
    "jacobian_fd",
]

_DENOMINATORS = ("sum", "euclidean")


@dataclass(frozen=True)
class ProbeConfig:
    """Sampling plan for the membership estimator.

    radii: strictly decreasing probe radii.
    random_directions: random unit directions drawn per radius.
    seed: seed for the direction generator; fixed seed, fixed verdict.
    tolerance: decision band for the quotient suprema.
    structured_probes: include the worst-case-family probes.
    denominator: "sum" for ||du|| + ||df||, "euclidean" for the root of
        the sum of squares.
    """

    radii: tuple[float, ...] = (1e-2, 1e-3, 1e-4)
    random_directions: int = 256
    seed: int = 0
    tolerance: float = 1e-3
    structured_probes: bool = True
    denominator: str = "sum"

    def __post_init__(self):
        if not self.radii:
            raise ValueError("at least one probe radius is required")
        if any(not (t > 0.0) for t in self.radii):
            raise ValueError("probe radii must be positive")
        if any(a <= b for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("probe radii must be strictly decreasing")
        if self.random_directions < 0:
            raise ValueError("random_directions must be nonnegative")
        if not (self.tolerance > 0.0):
            raise ValueError("tolerance must be positive")
        if self.denominator not in _DENOMINATORS:
            raise ValueError(f"denominator must be one of {_DENOMINATORS}")


class Verdict(str, Enum):
    MEMBER = "member"
    NON_MEMBER = "non_member"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    """Probe achieving the supremum at the smallest radius."""

    direction: Vector
    radius: float
    quotient: float

    def to_json(self) -> dict:
        from .vectors import encode_vector

        return {
            "direction": encode_vector(self.direction),
            "radius": self.radius,
            "quotient": self.quotient,
        }


@dataclass(frozen=True)
class OracleVerdict:
    """Estimator output: per-radius suprema, decision, and witness.

    sup_estimates pairs (radius, supremum) in decreasing-radius order.
    Only a NonMember verdict carries a witness: the probe achieving the
    supremum at the smallest radius, whose quotient exceeds tolerance.
    """

    verdict: Verdict
    sup_estimates: tuple[tuple[float, float], ...]
    witness: Optional[Witness]
    tolerance: float

    @property
    def sups(self) -> dict[float, float]:
        return dict(self.sup_estimates)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "sup_estimates": {repr(t): s for t, s in self.sup_estimates},
            "witness": self.witness.to_json() if self.witness else None,
            "tolerance": self.tolerance,
        }


def _denominator(kind: str, d_in: float, d_out: float) -> float:
    if kind == "euclidean":
        return float(np.hypot(d_in, d_out))
    return d_in + d_out


def quotient(f: Callable[[Vector], Vector], xbar: Vector, y: Vector, z: Vector, u: Vector,
             denominator: str = "sum") -> float:
    """Difference quotient whose limsup decides membership of z.

    Requires u != xbar.  The denominator is strictly positive then, so the
    quotient is always finite.
    """
    if denominator not in _DENOMINATORS:
        raise ValueError(f"denominator must be one of {_DENOMINATORS}")
    if isinstance(xbar, np.ndarray):
        u = as_vector(u)
    du = u - xbar
    d_in = norm(du)
    if d_in == 0.0:
        raise ValueError("u must differ from xbar")
    df = f(u) - f(xbar)
    num = inner(z, du) - inner(y, df)
    return num / _denominator(denominator, d_in, norm(df))


def _unit(v: Vector) -> Vector:
    length = norm(v)
    if length == 0.0:
        raise ValueError("cannot normalise the zero vector")
    if isinstance(v, SparseVector):
        return v * (1.0 / length)
    return v / length


def _structured_directions(xbar: Vector, y: Vector, z: Vector) -> list[Vector]:
    """Worst-case-family probe directions, unit length, deterministic order."""
    dirs: list[Vector] = []

    def both_ways(v: Vector):
        u = _unit(v)
        dirs.append(u)
        dirs.append(-u)

    if not is_zero(xbar):
        both_ways(xbar)
    for v in (y, z):
        if not is_zero(v):
            both_ways(v)
            if not is_zero(xbar):
                o = orth_decompose(xbar, v).o
                if norm(o) > 1e-13 * norm(v):
                    both_ways(o)
    if isinstance(xbar, SparseVector):
        for i in _active_axes(xbar, y, z):
            both_ways(SparseVector.basis(i))
    else:
        n = xbar.shape[0]
        for j in range(n):
            e = np.zeros(n)
            e[j] = 1.0
            both_ways(e)
    return dirs


def _active_axes(xbar: SparseVector, y: SparseVector, z: SparseVector) -> list[int]:
    """Coordinate axes worth probing: all supports plus one fresh index."""
    active = sorted(xbar.support | y.support | z.support)
    fresh = (active[-1] + 1) if active else 1
    return active + [fresh]


def _random_directions(rng: np.random.Generator, xbar: Vector, y: Vector, z: Vector,
                       count: int) -> list[Vector]:
    dirs: list[Vector] = []
    if isinstance(xbar, SparseVector):
        axes = _active_axes(xbar, y, z)
        for _ in range(count):
            values = rng.standard_normal(len(axes))
            length = float(np.linalg.norm(values))
            if length < 1e-12:
                continue
            dirs.append(SparseVector({i: v / length for i, v in zip(axes, values)}))
    else:
        n = xbar.shape[0]
        for _ in range(count):
            values = rng.standard_normal(n)
            length = float(np.linalg.norm(values))
            if length < 1e-12:
                continue
            dirs.append(values / length)
    return dirs


def membership(f: Callable[[Vector], Vector], xbar: Vector, y: Vector, z: Vector,
               config: Optional[ProbeConfig] = None) -> OracleVerdict:
    """Estimate whether z belongs to the coderivative of f at xbar for y."""
    if config is None:
        config = ProbeConfig()
    if isinstance(xbar, np.ndarray):
        xbar = as_vector(xbar)
        y = as_vector(y)
        z = as_vector(z)
    rng = np.random.default_rng(config.seed)
    structured = _structured_directions(xbar, y, z) if config.structured_probes else []

    estimates: list[tuple[float, float]] = []
    best_dir_last: Optional[Vector] = None
    for t in config.radii:
        dirs = structured + _random_directions(rng, xbar, y, z, config.random_directions)
        if not dirs:
            raise ValueError("probe plan is empty; enable structured probes or random directions")
        sup = -np.inf
        best_dir = dirs[0]
        for d in dirs:
            q = quotient(f, xbar, y, z, xbar + t * d, denominator=config.denominator)
            if q > sup:
                sup = q
                best_dir = d
        estimates.append((t, float(sup)))
        best_dir_last = best_dir

    sups = [s for _, s in estimates]
    tol = config.tolerance
    witness = None
    if sups[-1] > tol:
        # a persisting positive quotient at the smallest radius certifies
        # exclusion; keep the probe that achieved it
        verdict = Verdict.NON_MEMBER
        witness = Witness(direction=best_dir_last, radius=config.radii[-1], quotient=sups[-1])
    elif all(max(b, 0.0) <= max(a, 0.0) + tol for a, b in zip(sups, sups[1:])):
        verdict = Verdict.MEMBER
    else:
        verdict = Verdict.INCONCLUSIVE
    return OracleVerdict(
        verdict=verdict,
        sup_estimates=tuple(estimates),
        witness=witness,
        tolerance=tol,
    )


def directional_quotient(f: Callable[[Vector], Vector], xbar: Vector, w: Vector, t: float) -> Vector:
    """Forward difference quotient (f(xbar + t w) - f(xbar)) / t."""
    if not (t > 0.0):
        raise ValueError("t must be positive")
    if isinstance(xbar, np.ndarray):
        xbar = as_vector(xbar)
        w = as_vector(w)
    df = f(xbar + t * w) - f(xbar)
    return df * (1.0 / t) if isinstance(df, SparseVector) else df / t


def jacobian_fd(f: Callable[[np.ndarray], np.ndarray], xbar, h: float = 1e-6) -> np.ndarray:
    """Central-difference Jacobian of a dense map; column j differentiates e_j."""
    if not (h > 0.0):
        raise ValueError("h must be positive")
    xbar = as_vector(xbar)
    n = xbar.shape[0]
    cols = []
    for j in range(n):
        e = np.zeros(n)
        e[j] = h
        cols.append((as_vector(f(xbar + e)) - as_vector(f(xbar - e))) / (2.0 * h))
    return np.column_stack(cols)
