"""Time-like zero-mean-curvature surfaces in R^3_1 from split-complex data.

Ambient space is Minkowski 3-space with inner product
<a, b> = a0*b0 + a1*b1 - a2*b2 (third coordinate time-like).

Two equivalent construction routes are provided:

* route "ko":   para-holomorphic data (g, omega_hat); the immersion is the
  real part of the antiderivative of (j (1 - g^2), 2 g, 1 + g^2) omega.
* route "null": a pair of one-variable data sets (g1, w1) in x and (g2, w2)
  in y, integrated along the null coordinates x = (u+v)/2, y = (u-v)/2.

The "ko" route reduces exactly to the "null" route through the idempotent
split, so a single engine serves both.  For polynomial data everything is
exact termwise antidifferentiation over rationals; smooth non-polynomial
branches fall back to adaptive quadrature.

Derived and validated here (rather than taken on faith):

* <f_x, f_x> = <f_y, f_y> = 0 and <f_x, f_y> = -2 (1 - g1 g2)^2 w1 w2, so
  the first fundamental form in (u,v) is -(1 - g1 g2)^2 w1 w2 (du^2 - dv^2).
  Its sign is recorded on the chart; with w1 w2 > 0 the u-direction comes
  out time-like.
* second fundamental form  -2 w1 g1' dx^2 - 2 w2 g2' dy^2  against the unit
  normal (-g1+g2, 1+g1g2, g1+g2)/(-1+g1g2).
* the quadratic-differential coefficient of the trace-free second form in
  dz^2 is -(omega_hat * dg/dz); the raw chart assembly (L+N) + 2jM equals
  4 times that because du = (dz + conj dz)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import numpy as np

from .geometry import GridSpec, SurfaceChart
from .parafunc import Branch, ParaFunction

MINKOWSKI_DIAG = (1.0, 1.0, -1.0)


class DegenerateDataError(ValueError):
    """Data violating the base-point regularity conditions."""


def minkowski_dot(a, b) -> float:
    return float(a[0]) * float(b[0]) + float(a[1]) * float(b[1]) - float(a[2]) * float(b[2])


def minkowski_cross(a, b) -> np.ndarray:
    """Lorentzian cross product: <cross(a,b), c> = det(a, b, c)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    e = np.cross(a, b)  # Euclidean cross
    return np.array([e[0], e[1], -e[2]])


@dataclass(frozen=True)
class WeierstrassData:
    """Route "ko" data: g with g(o) = 0 and a 1-form coefficient omega_hat
    with N2(omega_hat(o)) != 0."""

    g: ParaFunction
    omega_hat: ParaFunction


@dataclass(frozen=True)
class NullData:
    """Route "null" data: branch functions of x (index 1) and y (index 2)."""

    g1: Branch
    g2: Branch
    w1: Branch
    w2: Branch


def _check_base_point(data: NullData, strict: bool) -> bool:
    regular = True
    if data.g1(0) != 0 or data.g2(0) != 0:
        if strict:
            raise DegenerateDataError("g must vanish at the base point")
        regular = False
    if data.w1(0) * data.w2(0) == 0:
        if strict:
            raise DegenerateDataError(
                "omega_hat is null at the base point (surface degenerate there)"
            )
        regular = False
    return regular


class _QuadPrimitive:
    """t -> integral of fn over [0, t] by adaptive quadrature.

    Each value is integrated directly from 0 (no chaining) so results do not
    depend on evaluation order; values are memoized per argument.
    """

    def __init__(self, fn, tol: float = 1e-12):
        self.fn = fn
        self.tol = tol
        self._cache = {}

    def __call__(self, t):
        t = float(t)
        if t not in self._cache:
            from scipy.integrate import quad

            val, _err = quad(
                self.fn, 0.0, t, epsabs=self.tol, epsrel=self.tol, limit=200
            )
            self._cache[t] = val
        return self._cache[t]


def _primitive(branch: Branch):
    if branch.is_polynomial:
        return Branch(poly=branch.poly.antiderivative())
    return _QuadPrimitive(lambda t: float(branch(t)))


@dataclass(frozen=True)
class ImmersionPatch:
    """A generated surface patch with analytic access to all derived data."""

    data: NullData
    route: str
    comps_x: tuple  # three primitives in x
    comps_y: tuple  # three primitives in y
    base_regular: bool = True

    # -- construction -----------------------------------------------------

    @classmethod
    def build(cls, data: NullData, route: str, strict: bool = True):
        regular = _check_base_point(data, strict)
        one = Branch.constant(1)
        g1, g2, w1, w2 = data.g1, data.g2, data.w1, data.w2
        ints_x = ((one - g1 * g1) * w1, (g1 * 2) * w1, (one + g1 * g1) * w1)
        ints_y = (-((one - g2 * g2) * w2), (g2 * 2) * w2, (one + g2 * g2) * w2)
        return cls(
            data=data,
            route=route,
            comps_x=tuple(_primitive(b) for b in ints_x),
            comps_y=tuple(_primitive(b) for b in ints_y),
            base_regular=regular,
        )

    @property
    def is_polynomial(self) -> bool:
        d = self.data
        return all(b.is_polynomial for b in (d.g1, d.g2, d.w1, d.w2))

    def component_polys(self):
        """The (P(x), Q(y)) polynomial pair per coordinate, or None."""
        if not self.is_polynomial:
            return None
        return [
            (self.comps_x[a].poly, self.comps_y[a].poly) for a in range(3)
        ]

    # -- evaluation ----------------------------------------------------------

    def evaluate_null(self, x, y):
        return tuple(self.comps_x[a](x) + self.comps_y[a](y) for a in range(3))

    def evaluate(self, u, v):
        return self.evaluate_null(_half(u + v), _half(u - v))

    # -- first-order data ------------------------------------------------------

    def metric_factor(self, u, v):
        """<f_u, f_u> = -(1 - g1 g2)^2 w1 w2; the dv^2-coefficient is its negative."""
        x, y = _half(u + v), _half(u - v)
        d = self.data
        gg = d.g1(x) * d.g2(y)
        return -((1 - gg) ** 2) * d.w1(x) * d.w2(y)

    def normal(self, u, v) -> np.ndarray:
        """Unit space-like normal; undefined where the patch degenerates."""
        x, y = _half(u + v), _half(u - v)
        d = self.data
        a, b = float(d.g1(x)), float(d.g2(y))
        den = -1.0 + a * b
        if den == 0.0:
            raise ZeroDivisionError("normal undefined at a degenerate node")
        return np.array([(-a + b) / den, (1.0 + a * b) / den, (a + b) / den])

    # -- second-order data --------------------------------------------------------

    @property
    def _derivs(self):
        return _deriv_pair(self.data)

    def second_forms(self, u, v):
        """Honest (L, M, N) of the second fundamental form in the (u,v) frame."""
        x, y = _half(u + v), _half(u - v)
        d = self.data
        g1d, g2d = self._derivs
        lx = -2 * d.w1(x) * g1d(x)  # dx^2-coefficient
        ny = -2 * d.w2(y) * g2d(y)  # dy^2-coefficient
        L = (lx + ny) * _QUARTER
        M = (lx - ny) * _QUARTER
        return L, M, L

    def weingarten_null(self, u, v) -> np.ndarray:
        """Shape operator in the null frame: off-diagonal w_i g_i' / Delta."""
        x, y = _half(u + v), _half(u - v)
        d = self.data
        g1d, g2d = self._derivs
        delta = float(
            ((-1 + d.g1(x) * d.g2(y)) ** 2) * d.w1(x) * d.w2(y)
        )
        if delta == 0.0:
            raise ZeroDivisionError("Weingarten matrix undefined at a degenerate node")
        return np.array(
            [
                [0.0, float(d.w2(y) * g2d(y)) / delta],
                [float(d.w1(x) * g1d(x)) / delta, 0.0],
            ]
        )

    def hopf(self) -> ParaFunction:
        """Hopf coefficient -(omega_hat dg/dz), i.e. the dz^2-normalized
        quadratic-differential coefficient; branches -w_i g_i'/2."""
        g1d, g2d = self._derivs
        half = Fraction(1, 2)
        return ParaFunction(
            -(self.data.w1 * g1d) * half, -(self.data.w2 * g2d) * half
        )

    # -- chart extraction ------------------------------------------------------------

    def chart(self, grid: GridSpec) -> SurfaceChart:
        nu, nv = grid.nu, grid.nv
        sigma = np.full((nu, nv), np.nan)
        L = np.zeros((nu, nv))
        M = np.zeros((nu, nv))
        N = np.zeros((nu, nv))
        mask = np.zeros((nu, nv), dtype=bool)
        sign = np.ones((nu, nv), dtype=np.int8)
        for i, u in enumerate(grid.u_nodes()):
            for j, v in enumerate(grid.v_nodes()):
                factor = self.metric_factor(u, v)
                f = float(factor)
                if factor == 0 or abs(f) < 1e-300:
                    continue
                mask[i, j] = True
                sign[i, j] = 1 if f > 0 else -1
                sigma[i, j] = 0.5 * math.log(abs(f))
                l, m, n = self.second_forms(u, v)
                L[i, j], M[i, j], N[i, j] = float(l), float(m), float(n)
        return SurfaceChart(
            grid,
            sigma,
            L,
            M,
            N,
            mask,
            sign,
            provenance="generated",
            hopf=self.hopf(),
            source=self,
        )


_QUARTER = Fraction(1, 4)


@lru_cache(maxsize=None)
def _deriv_pair_cached(g1: Branch, g2: Branch):
    return g1.derivative(), g2.derivative()


def _deriv_pair(data: NullData):
    try:
        return _deriv_pair_cached(data.g1, data.g2)
    except TypeError:  # unhashable branch payloads
        return data.g1.derivative(), data.g2.derivative()


def _half(t):
    if isinstance(t, int):
        return Fraction(t, 2)
    return t / 2


def generate_null(
    g1: Branch, g2: Branch, w1: Branch, w2: Branch, strict: bool = True
) -> ImmersionPatch:
    """Surface from null-coordinate data; exact for polynomial branches."""
    return ImmersionPatch.build(NullData(g1, g2, w1, w2), "null", strict)


def generate_ko(data: WeierstrassData, strict: bool = True) -> ImmersionPatch:
    """Surface from para-holomorphic (g, omega_hat).

    The split branches of g and omega_hat (functions of x and y) are exactly
    the null-route data, so this delegates to the same engine.
    """
    null_data = NullData(
        data.g.plus, data.g.minus, data.omega_hat.plus, data.omega_hat.minus
    )
    return ImmersionPatch.build(null_data, "ko", strict)


def hopf_differential(data: WeierstrassData) -> ParaFunction:
    """-(omega_hat * dg/dz) as a ParaFunction; e.g. g=z^2, omega=dz -> -2z."""
    return -(data.omega_hat * data.g.derivative())


def numeric_first_forms(patch: ImmersionPatch, u: float, v: float, h: float = 1e-5):
    """Finite-difference first fundamental form (E, F, G); test oracle."""
    f = lambda uu, vv: np.array(
        [float(c) for c in patch.evaluate(uu, vv)], dtype=float
    )
    fu = (f(u + h, v) - f(u - h, v)) / (2 * h)
    fv = (f(u, v + h) - f(u, v - h)) / (2 * h)
    return (
        minkowski_dot(fu, fu),
        minkowski_dot(fu, fv),
        minkowski_dot(fv, fv),
    )


def numeric_second_forms(patch: ImmersionPatch, u: float, v: float, h: float = 1e-4):
    """Finite-difference (L, M, N) against the analytic unit normal; oracle."""
    f = lambda uu, vv: np.array(
        [float(c) for c in patch.evaluate(uu, vv)], dtype=float
    )
    n = patch.normal(u, v)
    f0 = f(u, v)
    fuu = (f(u + h, v) - 2 * f0 + f(u - h, v)) / h**2
    fvv = (f(u, v + h) - 2 * f0 + f(u, v - h)) / h**2
    fuv = (
        f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)
    ) / (4 * h**2)
    return (
        minkowski_dot(fuu, n),
        minkowski_dot(fuv, n),
        minkowski_dot(fvv, n),
    )
