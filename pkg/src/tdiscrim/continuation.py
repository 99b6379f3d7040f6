"""Path following for optimal discrimination designs at large ratios.

Past the explicit window the problem is parametrized by the inverse ratio
bbar = 1/b, running over a symmetric interval around zero. The optimal
design and its error polynomial psi(x) = q . (1, x, ..., x^(n-2))
+ x^(n-1) + bbar x^n solve a stationarity system: the weighted mean square
H of psi over the design is stationary in the free coefficients q, the
interior support points, and the weights (endpoints -1 and 1 stay in the
support throughout, and the last weight is implied). At bbar = 0 the state
is known in closed form, so the solver walks the path from there with a
first-order tangent predictor and Newton correction, halving the step
whenever a candidate state stops being a valid design or Newton fails.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .checks import global_inequality
from .closed_form import critical_b, REGIME_SLACK
from .designs import Design
from .errors import ConvergenceError, OptimalityError, RegimeError
from .polynomials import Polynomial, chebyshev_t

DEFAULT_STEP = 0.05
MIN_STEP = 1e-6
STATIONARITY_TOL = 1e-10
INEQUALITY_TOL = 1e-8
NEWTON_MAX_ITER = 40


@dataclass
class ContinuationState:
    """One point on the solution path.

    q holds the n-1 free coefficients of psi, interior_points the support
    between the fixed endpoints, weights the first n-1 design weights (the
    last is one minus their sum). Construction validates the design part:
    ordering, interval membership, positivity.
    """

    q: np.ndarray
    interior_points: np.ndarray
    weights: np.ndarray
    bbar: float

    def __post_init__(self) -> None:
        q = np.atleast_1d(np.asarray(self.q, dtype=float))
        t = np.atleast_1d(np.asarray(self.interior_points, dtype=float))
        w = np.atleast_1d(np.asarray(self.weights, dtype=float))
        n = q.size + 1
        if n < 3:
            raise ValueError("need n >= 3 (q must have at least 2 entries)")
        if t.size != n - 2 or w.size != n - 1:
            raise ValueError("inconsistent state dimensions")
        if not (np.all(np.isfinite(q)) and np.all(np.isfinite(t))
                and np.all(np.isfinite(w)) and np.isfinite(self.bbar)):
            raise ValueError("state entries must be finite")
        full = np.concatenate([[-1.0], t, [1.0]])
        if np.any(np.diff(full) <= 0.0):
            raise ValueError("support points must be strictly increasing in (-1, 1)")
        if np.any(w <= 0.0) or w.sum() >= 1.0:
            raise ValueError("weights must be positive with positive remainder")
        self.q = q
        self.interior_points = t
        self.weights = w
        self.bbar = float(self.bbar)

    @property
    def n(self) -> int:
        return int(self.q.size) + 1

    @property
    def theta(self) -> np.ndarray:
        return np.concatenate([self.q, self.interior_points, self.weights])

    def psi(self) -> Polynomial:
        return Polynomial(np.concatenate([self.q, [1.0, self.bbar]]))

    def design(self) -> Design:
        pts = np.concatenate([[-1.0], self.interior_points, [1.0]])
        wts = np.concatenate([self.weights, [1.0 - self.weights.sum()]])
        return Design(pts, wts)


def bbar_limit(n: int) -> float:
    """Half-width of the inverse-ratio interval the path is defined on."""
    return 1.0 / critical_b(n)


def d1_optimal_start(n: int) -> ContinuationState:
    """The known path point at bbar = 0.

    Support at the extrema of T_(n-1) with weight 1/(2(n-1)) on each endpoint
    and 1/(n-1) inside; psi is 2^(2-n) T_(n-1), whose leading coefficient is
    exactly one as the parametrization requires.
    """
    if n != int(n) or n < 3:
        raise ValueError("n must be an integer >= 3")
    n = int(n)
    j = np.arange(1, n - 1)
    interior = -np.cos(j * np.pi / (n - 1))
    w = np.full(n - 1, 1.0 / (n - 1))
    w[0] = 1.0 / (2.0 * (n - 1))
    q = 0.5 ** (n - 2) * chebyshev_t(n - 1).coeffs[: n - 1]
    return ContinuationState(q, interior, w, 0.0)


def _split(n: int, theta: np.ndarray):
    return theta[: n - 1], theta[n - 1 : 2 * n - 3], theta[2 * n - 3 :]


def _state_from(n: int, theta: np.ndarray, bbar: float) -> ContinuationState:
    q, t, w = _split(n, theta)
    return ContinuationState(q, t, w, bbar)


def _geometry(n: int, theta: np.ndarray, bbar: float):
    """Common evaluations: full points and weights, psi and derivatives there."""
    q, t, w = _split(n, theta)
    pts = np.concatenate([[-1.0], t, [1.0]])
    wts = np.concatenate([w, [1.0 - w.sum()]])
    psi = Polynomial(np.concatenate([q, [1.0, bbar]]))
    dpsi = psi.deriv()
    return pts, wts, psi(pts), dpsi(pts), psi, dpsi


def _gradient_raw(n: int, theta: np.ndarray, bbar: float) -> np.ndarray:
    pts, wts, pv, dv, _, _ = _geometry(n, theta, bbar)
    vand = np.vander(pts, n - 1, increasing=True)
    gq = 2.0 * ((wts * pv) @ vand)
    gt = 2.0 * wts[1:-1] * pv[1:-1] * dv[1:-1]
    gw = pv[:-1] ** 2 - pv[-1] ** 2
    return np.concatenate([gq, gt, gw])


def _jacobian_raw(n: int, theta: np.ndarray, bbar: float) -> np.ndarray:
    pts, wts, pv, dv, psi, dpsi = _geometry(n, theta, bbar)
    ddv = dpsi.deriv()(pts)
    d = 3 * n - 4
    jac = np.zeros((d, d))
    sq = slice(0, n - 1)
    st = slice(n - 1, 2 * n - 3)
    sw = slice(2 * n - 3, d)

    vand = np.vander(pts, n - 1, increasing=True)
    jac[sq, sq] = 2.0 * (vand.T * wts) @ vand

    j = np.arange(n - 1)
    tk = pts[1:-1]
    # d/dt_k of dH/dq_j: product rule through psi(t_k) t_k^j
    dvand = np.where(j[None, :] > 0, j[None, :] * tk[:, None] ** np.maximum(j - 1, 0), 0.0)
    block_qt = 2.0 * wts[1:-1, None] * (
        dv[1:-1, None] * vand[1:-1] + pv[1:-1, None] * dvand
    )
    jac[sq, st] = block_qt.T
    jac[st, sq] = block_qt

    block_qw = 2.0 * (pv[:-1, None] * vand[:-1] - pv[-1] * vand[-1][None, :])
    jac[sq, sw] = block_qw.T
    jac[sw, sq] = block_qw

    diag_tt = 2.0 * wts[1:-1] * (dv[1:-1] ** 2 + pv[1:-1] * ddv[1:-1])
    jac[st, st] = np.diag(diag_tt)

    # t_k pairs only with its own weight (index k among the free weights)
    block_tw = np.zeros((n - 2, n - 1))
    block_tw[np.arange(n - 2), np.arange(1, n - 1)] = 2.0 * pv[1:-1] * dv[1:-1]
    jac[st, sw] = block_tw
    jac[sw, st] = block_tw.T
    return jac


def _dgrad_dbbar(n: int, theta: np.ndarray, bbar: float) -> np.ndarray:
    pts, wts, pv, dv, _, _ = _geometry(n, theta, bbar)
    vand = np.vander(pts, n - 1, increasing=True)
    dq = 2.0 * ((wts * pts**n) @ vand)
    tk = pts[1:-1]
    dt = 2.0 * wts[1:-1] * (tk**n * dv[1:-1] + pv[1:-1] * n * tk ** (n - 1))
    dw = 2.0 * (pv[:-1] * pts[:-1] ** n - pv[-1])
    return np.concatenate([dq, dt, dw])


def stationarity_residual(state: ContinuationState) -> np.ndarray:
    """Gradient of H in the free variables; zero on the solution path."""
    return _gradient_raw(state.n, state.theta, state.bbar)


def h_form(state: ContinuationState) -> float:
    """The weighted mean square of psi over the design; the criterion value."""
    d = state.design()
    pv = state.psi()(d.points)
    return float(np.sum(d.weights * pv * pv))


def inequality_margin(state: ContinuationState) -> float:
    """Positive when some point of [-1, 1] beats the support; ~0 at an optimum."""
    return global_inequality(state)


def _newton(n: int, theta: np.ndarray, bbar: float, tol: float) -> ContinuationState:
    th = np.asarray(theta, dtype=float).copy()
    res = np.inf
    for _ in range(NEWTON_MAX_ITER):
        g = _gradient_raw(n, th, bbar)
        res = float(np.abs(g).max())
        if not np.isfinite(res):
            raise ConvergenceError("newton iterate diverged")
        if res <= tol:
            return _state_from(n, th, bbar)
        th = th - np.linalg.solve(_jacobian_raw(n, th, bbar), g)
    raise ConvergenceError(f"newton residual stalled at {res!r}")


def _walk(n: int, theta: np.ndarray, b_from: float, b_to: float, tol: float,
          step: float = DEFAULT_STEP, min_step: float = MIN_STEP) -> ContinuationState:
    """Continue the path from b_from (where theta solves it) to b_to."""
    th = np.asarray(theta, dtype=float)
    cur = float(b_from)
    state = _newton(n, th, cur, tol)
    while cur != b_to:
        direction = 1.0 if b_to > cur else -1.0
        h = direction * min(step, abs(b_to - cur))
        while True:
            try:
                tangent = -np.linalg.solve(
                    _jacobian_raw(n, th, cur), _dgrad_dbbar(n, th, cur)
                )
                state = _newton(n, th + tangent * h, cur + h, tol)
                break
            except (ValueError, ConvergenceError, np.linalg.LinAlgError):
                h *= 0.5
                if abs(h) < min_step:
                    raise ConvergenceError(
                        f"continuation step collapsed below {min_step} "
                        f"near bbar = {cur!r}"
                    ) from None
        th = state.theta
        cur = cur + h
    return state


def _check_bbar(n: int, bbar: float) -> None:
    lim = bbar_limit(n)
    if abs(bbar) > lim * (1.0 + REGIME_SLACK):
        raise RegimeError(
            f"|bbar| = {abs(bbar)!r} outside the path interval "
            f"[-{lim!r}, {lim!r}] for n = {n}"
        )


def solve_at(n: int, bbar: float, tol: float = STATIONARITY_TOL, *,
             step: float = DEFAULT_STEP,
             check_inequality: bool = True,
             inequality_tol: float = INEQUALITY_TOL) -> ContinuationState:
    """Walk the path from bbar = 0 to the requested inverse ratio.

    The returned state has stationarity residual at most tol; when
    check_inequality is set the converged design is also screened against
    the whole interval, and a violation raises OptimalityError rather than
    returning a merely stationary point.
    """
    if n != int(n) or n < 3:
        raise ValueError("n must be an integer >= 3")
    n = int(n)
    bbar = float(bbar)
    _check_bbar(n, bbar)
    anchor = d1_optimal_start(n)
    state = _walk(n, anchor.theta, 0.0, bbar, tol, step)
    margin = inequality_margin(state)
    if check_inequality and margin > inequality_tol:
        raise OptimalityError(
            f"stationary point at bbar = {bbar!r} violates the global "
            f"inequality by {margin!r}",
            margin=margin,
            last=state,
        )
    return state


def trajectory(n: int, grid, tol: float = 1e-9,
               step: float = DEFAULT_STEP) -> list[tuple[float, Design]]:
    """Designs along a sorted grid of inverse ratios.

    The grid is walked monotonically outward from zero in both directions,
    each grid value warm-starting the next, so neighboring designs connect
    continuously.
    """
    if n != int(n) or n < 3:
        raise ValueError("n must be an integer >= 3")
    n = int(n)
    g = np.atleast_1d(np.asarray(grid, dtype=float))
    if g.ndim != 1 or g.size == 0:
        raise ValueError("grid must be a non-empty one-dimensional sequence")
    if np.any(np.diff(g) < 0):
        raise ValueError("grid must be sorted ascending")
    for v in (g.min(), g.max()):
        _check_bbar(n, float(v))
    anchor = d1_optimal_start(n)
    states: dict[int, ContinuationState] = {}
    pos = np.nonzero(g >= 0)[0]
    neg = np.nonzero(g < 0)[0][::-1]
    for branch in (pos, neg):
        th, cur = anchor.theta, 0.0
        for i in branch:
            st = _walk(n, th, cur, float(g[i]), tol, step)
            states[int(i)] = st
            th, cur = st.theta, float(g[i])
    return [(float(g[i]), states[i].design()) for i in range(g.size)]


def taylor_coefficients(n: int, bbar0: float, order: int = 3, *,
                        step: float = 1e-4,
                        tol: float = 1e-12) -> np.ndarray:
    """Derivative coefficients of the path theta(bbar) at bbar0, orders 1..order.

    Central finite differences of converged states with one Richardson level.
    Row k-1 holds the k-th Taylor coefficient (k-th derivative over k!).
    Validation tool only; the solver itself uses the analytic tangent. The
    whole stencil, bbar0 +/- 2 step, must stay inside the path interval.
    """
    if order != int(order) or not 1 <= order <= 3:
        raise ValueError("order must be 1, 2 or 3")
    order = int(order)
    if step <= 0:
        raise ValueError("step must be positive")
    _check_bbar(n, abs(bbar0) + 2.0 * step)
    base = solve_at(n, bbar0, tol, check_inequality=False)
    cache: dict[float, np.ndarray] = {0.0: base.theta}

    def theta_at(db: float) -> np.ndarray:
        if db not in cache:
            cache[db] = _walk(n, base.theta, bbar0, bbar0 + db, tol).theta
        return cache[db]

    def d1(h):
        return (theta_at(h) - theta_at(-h)) / (2.0 * h)

    def d2(h):
        return (theta_at(h) - 2.0 * cache[0.0] + theta_at(-h)) / h**2

    def d3(h):
        return (theta_at(2 * h) - 2.0 * theta_at(h)
                + 2.0 * theta_at(-h) - theta_at(-2 * h)) / (2.0 * h**3)

    rows = [(4.0 * d1(step / 2) - d1(step)) / 3.0]
    if order >= 2:
        rows.append((4.0 * d2(step / 2) - d2(step)) / 3.0 / 2.0)
    if order >= 3:
        rows.append((4.0 * d3(step / 2) - d3(step)) / 3.0 / 6.0)
    return np.vstack(rows)
