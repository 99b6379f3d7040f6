"""Monomial-basis polynomials, Chebyshev construction, affine composition.

Everything works on dense coefficient arrays indexed by power, which is all
the small degrees used here (n <= 12 or so) ever need. Conversions and
arithmetic lean on numpy.polynomial.polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

# Trailing coefficients at or below this magnitude are treated as roundoff
# when reporting the degree; affine composition and basis changes leave
# tails of this size on exact cancellations.
DEGREE_TRIM = 1e-12


@dataclass
class Polynomial:
    """Real polynomial p(x) = sum_i coeffs[i] * x**i."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        c = np.atleast_1d(np.asarray(self.coeffs, dtype=float))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a non-empty one-dimensional sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        self.coeffs = c

    @property
    def degree(self) -> int:
        """Degree after ignoring roundoff-sized trailing coefficients."""
        nz = np.nonzero(np.abs(self.coeffs) > DEGREE_TRIM)[0]
        return int(nz[-1]) if nz.size else 0

    def __call__(self, x):
        return npoly.polyval(x, self.coeffs)

    def deriv(self) -> "Polynomial":
        if self.coeffs.size == 1:
            return Polynomial(np.zeros(1))
        return Polynomial(npoly.polyder(self.coeffs))

    def trimmed(self) -> "Polynomial":
        return Polynomial(npoly.polytrim(self.coeffs, tol=DEGREE_TRIM))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-self.coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        return Polynomial(npoly.polyadd(self.coeffs, other.coeffs))

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        return Polynomial(npoly.polysub(self.coeffs, other.coeffs))

    def __mul__(self, other) -> "Polynomial":
        if np.isscalar(other):
            return Polynomial(self.coeffs * float(other))
        other = _coerce(other)
        return Polynomial(npoly.polymul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.trimmed().coeffs, other.trimmed().coeffs
        return a.shape == b.shape and bool(np.array_equal(a, b))


def _coerce(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if np.isscalar(p):
        return Polynomial(np.array([float(p)]))
    return Polynomial(p)


def chebyshev_t(n: int) -> Polynomial:
    """Chebyshev polynomial of the first kind, expanded in the monomial basis.

    Built by the three-term recurrence; for the degrees used here every
    coefficient is an exactly representable integer.
    """
    if n != int(n) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    n = int(n)
    if n == 0:
        return Polynomial(np.array([1.0]))
    prev = np.array([1.0])
    cur = np.array([0.0, 1.0])
    for _ in range(n - 1):
        nxt = npoly.polysub(npoly.polymul(np.array([0.0, 2.0]), cur), prev)
        prev, cur = cur, nxt
    return Polynomial(cur)


def chebyshev_extrema(n: int) -> np.ndarray:
    """The n + 1 extremal points of T_n on [-1, 1], increasing: -cos(i pi / n)."""
    if n != int(n) or n < 1:
        raise ValueError("n must be a positive integer")
    n = int(n)
    return -np.cos(np.arange(n + 1) * np.pi / n)


def compose_affine(p: Polynomial, a: float, c: float) -> Polynomial:
    """Expand p(a x + c) in the monomial basis (Horner over the affine map)."""
    if a == 0:
        raise ValueError("degenerate affine map: a must be nonzero")
    lin = np.array([float(c), float(a)])
    out = np.array([p.coeffs[-1]])
    for coef in p.coeffs[-2::-1]:
        out = npoly.polyadd(npoly.polymul(out, lin), np.array([coef]))
    return Polynomial(out)
