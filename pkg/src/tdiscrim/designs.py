"""Finitely supported probability measures on [-1, 1] and the discrimination criterion.

A design is a finite set of support points with positive weights summing to
one. For the model pair of degrees n and n - 2 the criterion value of a
design is the weighted squared distance between the fixed highest-degree
part of the larger model and the span of 1, x, ..., x^(n-2); the inner
minimization is plain weighted least squares on the support.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .polynomials import Polynomial

POINT_TOL = 1e-12
WEIGHT_SUM_TOL = 1e-12
# Relative eigenvalue threshold for the pseudo-inverse of the moment matrix.
# Designs with fewer than n - 1 support points are legitimate inputs, so the
# normal equations must tolerate exact rank deficiency.
PINV_RTOL = 1e-10


@dataclass
class Design:
    """Probability measure with finite support in [-1, 1].

    points must be strictly increasing; weights positive and summing to one
    within WEIGHT_SUM_TOL. Construction validates, it never repairs.
    """

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        pts = np.atleast_1d(np.asarray(self.points, dtype=float))
        wts = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if pts.ndim != 1 or wts.ndim != 1:
            raise ValueError("points and weights must be one-dimensional")
        if pts.size == 0 or pts.size != wts.size:
            raise ValueError("points and weights must be non-empty and equally long")
        if not (np.all(np.isfinite(pts)) and np.all(np.isfinite(wts))):
            raise ValueError("points and weights must be finite")
        if pts.min() < -1.0 - POINT_TOL or pts.max() > 1.0 + POINT_TOL:
            raise ValueError("support points must lie in [-1, 1]")
        if pts.size > 1 and np.any(np.diff(pts) <= 0.0):
            raise ValueError("support points must be strictly increasing")
        if np.any(wts <= 0.0):
            raise ValueError("weights must be positive")
        s = float(np.sum(wts))
        if abs(s - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"weights must sum to one (got {s!r})")
        self.points = pts
        self.weights = wts

    @property
    def support_size(self) -> int:
        return int(self.points.size)

    def reflected(self) -> "Design":
        """The mirror design x -> -x."""
        return Design(-self.points[::-1], self.weights[::-1].copy())

    def to_json(self) -> str:
        return json.dumps(
            {"points": self.points.tolist(), "weights": self.weights.tolist()}
        )

    @classmethod
    def from_json(cls, source) -> "Design":
        """Parse a design from a JSON string or already-decoded mapping.

        Extra keys are ignored so that annotated CLI outputs round-trip.
        """
        obj = json.loads(source) if isinstance(source, (str, bytes)) else source
        if not isinstance(obj, dict) or "points" not in obj or "weights" not in obj:
            raise ValueError("design JSON must be an object with points and weights")
        return cls(np.asarray(obj["points"], dtype=float),
                   np.asarray(obj["weights"], dtype=float))

    def to_csv(self) -> str:
        # repr of a float is the shortest string that round-trips the bits
        lines = ["point,weight"]
        for x, w in zip(self.points, self.weights):
            lines.append(f"{float(x)!r},{float(w)!r}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "Design":
        rows = [r for r in csv.reader(io.StringIO(text)) if r and r[0].strip()]
        if rows and rows[0] and rows[0][0].strip().lower() == "point":
            rows = rows[1:]
        if not rows:
            raise ValueError("no design rows in CSV")
        pts = np.array([float(r[0]) for r in rows])
        wts = np.array([float(r[1]) for r in rows])
        return cls(pts, wts)


@dataclass
class DiscriminationProblem:
    """Model pair x^n vs degree n - 2, with the two leading terms fixed.

    Exactly one of b (coefficient of x^(n-1), monic x^n) and bbar (coefficient
    of x^n, unit x^(n-1)) must be given; the two parametrizations cover small
    and large ratios respectively. scale multiplies the fixed part.
    """

    n: int
    b: float | None = None
    bbar: float | None = None
    scale: float = 1.0

    def __post_init__(self) -> None:
        if self.n != int(self.n) or self.n < 2:
            raise ValueError("n must be an integer >= 2")
        self.n = int(self.n)
        if (self.b is None) == (self.bbar is None):
            raise ValueError("exactly one of b and bbar must be given")
        if self.b is not None:
            self.b = float(self.b)
        if self.bbar is not None:
            self.bbar = float(self.bbar)
        self.scale = float(self.scale)

    def fixed_part(self) -> Polynomial:
        """The non-fittable part: scale * (b x^(n-1) + x^n) or scale * (x^(n-1) + bbar x^n)."""
        c = np.zeros(self.n + 1)
        if self.b is not None:
            c[self.n - 1] = self.b
            c[self.n] = 1.0
        else:
            c[self.n - 1] = 1.0
            c[self.n] = self.bbar
        return Polynomial(self.scale * c)


def moment_matrix(design: Design, n: int) -> np.ndarray:
    """Moments sum_i w_i x_i^(j+k) for j, k = 0..n, as an (n+1) x (n+1) matrix."""
    if n != int(n) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    n = int(n)
    powers = design.points[None, :] ** np.arange(2 * n + 1)[:, None]
    mom = powers @ design.weights
    idx = np.arange(n + 1)
    return mom[idx[:, None] + idx[None, :]]


def best_l2_coefficients(design: Design, problem: DiscriminationProblem) -> Polynomial:
    """Weighted-L2-closest polynomial of degree <= n - 2 to the fixed part.

    Solves the normal equations through an eigendecomposition of the moment
    matrix, zeroing eigenvalues below PINV_RTOL times the largest; for
    singular designs this picks the minimum-norm minimizer.
    """
    n = problem.n
    g = problem.fixed_part()
    x, w = design.points, design.weights
    basis = x[None, :] ** np.arange(n - 1)[:, None]
    a = (basis * w) @ basis.T
    rhs = basis @ (w * g(x))
    evals, evecs = np.linalg.eigh(a)
    cut = PINV_RTOL * max(float(evals.max()), 0.0)
    inv = np.where(evals > cut, 1.0 / np.where(evals > cut, evals, 1.0), 0.0)
    coef = evecs @ (inv * (evecs.T @ rhs))
    return Polynomial(coef)


def t_criterion(design: Design, problem: DiscriminationProblem) -> float:
    """Criterion value: weighted squared deviation of the fixed part from its best fit.

    Computed as the explicit weighted sum of squared residuals, which is
    nonnegative by construction even when the moment matrix is singular.
    """
    g = problem.fixed_part()
    fit = best_l2_coefficients(design, problem)
    res = g(design.points) - fit(design.points)
    return float(np.sum(design.weights * res * res))
