"""Para-holomorphic functions in idempotent-split form.

A smooth function h(z) = A(u,v) + j B(u,v) satisfying the para-Cauchy-
Riemann equations A_u = B_v, A_v = B_u is equivalent to a pair of
one-variable functions: h = EPS1*phi_plus(x) + EPSM1*phi_minus(y), where

    x = (u + v)/2,   y = (u - v)/2.

This module fixes that half-sum argument convention once and for all; the
full-sum projections u+v, u-v of the raw idempotent split differ from the
branch arguments by the factor 2, and every conversion is explicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .paracomplex import ParaComplex, from_projections
from .poly import Poly

NEG_INF = float("-inf")
POS_INF = float("inf")


class DomainError(ValueError):
    """Branch evaluated outside its domain interval."""


class UnsupportedBranch(ValueError):
    """Operation needs analytic data the branch does not carry."""


def _halve(t):
    # exact halving for ints/Fractions, plain division otherwise
    if isinstance(t, int):
        return Fraction(t, 2)
    return t / 2


@dataclass(frozen=True)
class Branch:
    """One real branch of a para-holomorphic function.

    Either a polynomial (exact arithmetic) or a smooth callable carrying an
    optional derivative evaluator and a jet provider giving the derivatives
    d^k f(0)/dt^k needed for order-of-vanishing queries.
    """

    poly: Optional[Poly] = None
    fn: Optional[Callable] = None
    dfn: Optional[Callable] = None
    jet_fn: Optional[Callable[[int], Sequence]] = None
    domain: tuple = (NEG_INF, POS_INF)
    label: str = ""

    def __post_init__(self):
        if (self.poly is None) == (self.fn is None):
            raise ValueError("exactly one of poly/fn must be given")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_poly(cls, coeffs) -> "Branch":
        p = coeffs if isinstance(coeffs, Poly) else Poly(coeffs)
        return cls(poly=p)

    @classmethod
    def constant(cls, c) -> "Branch":
        return cls(poly=Poly([c]))

    @classmethod
    def zero(cls) -> "Branch":
        return cls(poly=Poly())

    @classmethod
    def exp_flat(cls) -> "Branch":
        """exp(-1/t**2), extended by 0 at t = 0; every jet at 0 vanishes."""

        def f(t):
            t = float(t)
            if t == 0.0:
                return 0.0
            return math.exp(-1.0 / (t * t))

        def df(t):
            t = float(t)
            if t == 0.0:
                return 0.0
            return 2.0 * math.exp(-1.0 / (t * t)) / t**3

        return cls(fn=f, dfn=df, jet_fn=lambda k: 0.0, label="exp_flat")

    # -- evaluation ----------------------------------------------------------

    @property
    def is_polynomial(self) -> bool:
        return self.poly is not None

    def __call__(self, t):
        if self.poly is not None:
            return self.poly(t)
        lo, hi = self.domain
        if not (lo <= t <= hi):
            raise DomainError(f"argument {t} outside branch domain [{lo}, {hi}]")
        return self.fn(t)

    # -- algebra -------------------------------------------------------------

    def __add__(self, other: "Branch") -> "Branch":
        if self.is_polynomial and other.is_polynomial:
            return Branch(poly=self.poly + other.poly)
        f, g = self._as_callable(), other._as_callable()
        return Branch(
            fn=lambda t: f.fn(t) + g.fn(t),
            dfn=_maybe(lambda t: f.dfn(t) + g.dfn(t), f.dfn and g.dfn),
            jet_fn=_maybe(lambda k: f.jet_fn(k) + g.jet_fn(k), f.jet_fn and g.jet_fn),
            domain=_meet(self.domain, other.domain),
        )

    def __mul__(self, other) -> "Branch":
        if not isinstance(other, Branch):
            if self.is_polynomial:
                return Branch(poly=self.poly * other)
            f = self
            return Branch(
                fn=lambda t: f.fn(t) * other,
                dfn=_maybe(lambda t: f.dfn(t) * other, f.dfn),
                jet_fn=_maybe(lambda k: f.jet_fn(k) * other, f.jet_fn),
                domain=self.domain,
            )
        if self.is_polynomial and other.is_polynomial:
            return Branch(poly=self.poly * other.poly)
        f, g = self._as_callable(), other._as_callable()
        jet = None
        if f.jet_fn and g.jet_fn:
            def jet(k, _f=f.jet_fn, _g=g.jet_fn):
                # Leibniz rule on derivatives at 0
                return sum(
                    math.comb(k, i) * _f(i) * _g(k - i) for i in range(k + 1)
                )
        return Branch(
            fn=lambda t: f.fn(t) * g.fn(t),
            dfn=_maybe(
                lambda t: f.dfn(t) * g.fn(t) + f.fn(t) * g.dfn(t),
                f.dfn and g.dfn,
            ),
            jet_fn=jet,
            domain=_meet(self.domain, other.domain),
        )

    __rmul__ = __mul__

    def __neg__(self) -> "Branch":
        return self * -1

    def __sub__(self, other: "Branch") -> "Branch":
        return self + (-other)

    def _as_callable(self) -> "Branch":
        if not self.is_polynomial:
            return self
        p = self.poly
        dp = p.derivative()
        return Branch(
            fn=p,
            dfn=dp,
            jet_fn=lambda k: p.coefficient(k) * math.factorial(k),
            domain=self.domain,
        )

    # -- calculus ------------------------------------------------------------

    def derivative(self) -> "Branch":
        if self.is_polynomial:
            return Branch(poly=self.poly.derivative())
        if self.dfn is None:
            raise UnsupportedBranch("callable branch has no derivative evaluator")
        shifted = None
        if self.jet_fn is not None:
            shifted = lambda k, _j=self.jet_fn: _j(k + 1)
        return Branch(fn=self.dfn, jet_fn=shifted, domain=self.domain)

    def compose_scale(self, a) -> "Branch":
        """The branch t -> f(a*t)."""
        if self.is_polynomial:
            return Branch(poly=self.poly.scale_arg(a))
        f = self
        jet = None
        if f.jet_fn is not None:
            jet = lambda k, _j=f.jet_fn: _j(k) * a**k
        lo, hi = self.domain
        if a != 0:
            bounds = sorted((lo / a, hi / a)) if abs(a) != POS_INF else (lo, hi)
        else:
            bounds = (NEG_INF, POS_INF)
        return Branch(
            fn=lambda t: f.fn(a * t),
            dfn=_maybe(lambda t: a * f.dfn(a * t), f.dfn),
            jet_fn=jet,
            domain=tuple(bounds),
        )

    # -- jets and order of vanishing ------------------------------------------

    def jets(self, cap: int) -> list:
        """Derivatives d^k f(0)/dt^k for k = 0..cap."""
        if self.is_polynomial:
            return [
                self.poly.coefficient(k) * math.factorial(k) for k in range(cap + 1)
            ]
        if self.jet_fn is None:
            raise UnsupportedBranch("callable branch has no jet provider")
        return [self.jet_fn(k) for k in range(cap + 1)]

    def order_at_zero(self, cap: int) -> "BranchOrder":
        """First non-vanishing Taylor order at 0, bounded by cap.

        Polynomial branches are decided exactly (including exact infinite
        order for the zero polynomial).  Floating jets use a relative
        threshold so round-off is not mistaken for a leading coefficient.
        """
        if self.is_polynomial:
            m = self.poly.trailing_order()
            if m is None:
                return BranchOrder(None, 0, True, cap)
            if m > cap:
                return BranchOrder(None, 0, False, cap)
            return BranchOrder(m, self.poly.coefficient(m), False, cap)
        jets = self.jets(cap)
        taylor = [j / math.factorial(k) for k, j in enumerate(jets)]
        scale = 0.0
        for k, c in enumerate(taylor):
            if abs(c) > 1e-9 * (1.0 + scale):
                return BranchOrder(k, c, False, cap)
            scale = max(scale, abs(c))
        return BranchOrder(None, 0.0, False, cap)


def _maybe(fn, condition):
    return fn if condition else None


def _meet(d1, d2):
    return (max(d1[0], d2[0]), min(d1[1], d2[1]))


@dataclass(frozen=True)
class BranchOrder:
    """Order of vanishing of one branch at 0."""

    order: Optional[int]
    coeff: object
    exact_infinite: bool
    cap: int

    @property
    def finite(self) -> bool:
        return self.order is not None

    @property
    def label(self) -> str:
        if self.order is not None:
            return str(self.order)
        return "inf" if self.exact_infinite else f">={self.cap}"


@dataclass(frozen=True)
class SplitOrders:
    plus: BranchOrder
    minus: BranchOrder
    cap: int


@dataclass(frozen=True)
class NormalForm:
    """Factorization data phi_s(t) = t**m_s * psi_s(t) at the origin."""

    orders: SplitOrders
    psi_plus_0: object
    psi_minus_0: object
    psi_plus: Optional[Branch]
    psi_minus: Optional[Branch]

    @property
    def finite(self) -> bool:
        return self.orders.plus.finite and self.orders.minus.finite

    @property
    def degenerate(self) -> Optional[bool]:
        if not self.finite:
            return None
        return self.orders.plus.order != self.orders.minus.order

    @property
    def order(self) -> Optional[int]:
        """Common order m when non-degenerate, else None."""
        if self.finite and not self.degenerate:
            return self.orders.plus.order
        return None


@dataclass(frozen=True)
class ParaFunction:
    """h(z) = EPS1*plus(x) + EPSM1*minus(y) with x=(u+v)/2, y=(u-v)/2."""

    plus: Branch
    minus: Branch

    #: branch arguments are the half-sums; full-sum data must be rescaled
    convention = "half-sum"

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_branches(cls, plus, minus) -> "ParaFunction":
        as_branch = lambda b: b if isinstance(b, Branch) else Branch.from_poly(b)
        return cls(as_branch(plus), as_branch(minus))

    @classmethod
    def from_z_poly(cls, coeffs: Sequence) -> "ParaFunction":
        """From a polynomial in z with paracomplex (or real) coefficients.

        z**k projects to (u+v)**k = (2x)**k, so the branch picks up 2**k.
        """
        plus, minus = [], []
        for k, c in enumerate(coeffs):
            if not isinstance(c, ParaComplex):
                c = ParaComplex(c, 0)
            plus.append(c.proj(1) * 2**k)
            minus.append(c.proj(-1) * 2**k)
        return cls(Branch.from_poly(plus), Branch.from_poly(minus))

    @classmethod
    def identity(cls) -> "ParaFunction":
        return cls.from_z_poly([0, 1])

    @classmethod
    def constant(cls, c) -> "ParaFunction":
        return cls.from_z_poly([c])

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "ParaFunction":
        return cls.from_z_poly([0] * k + [coeff])

    @classmethod
    def wedge(cls, phi1: Branch, phi2: Branch) -> "ParaFunction":
        """Para-holomorphic glue of two one-variable functions.

        The glued function has value parts (phi1(u+v) +- phi2(u-v))/2; its
        split branches in the half-sum convention are phi_i(2*arg).
        """
        return cls(phi1.compose_scale(2), phi2.compose_scale(2))

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, z: ParaComplex) -> ParaComplex:
        x = _halve(z.re + z.im)
        y = _halve(z.re - z.im)
        return from_projections(self.plus(x), self.minus(y))

    def __call__(self, z: ParaComplex) -> ParaComplex:
        return self.evaluate(z)

    def evaluate_uv(self, u, v) -> ParaComplex:
        return self.evaluate(ParaComplex(u, v))

    def n2_at(self, u, v):
        """N2(h(z)) = plus(x) * minus(y); exact on polynomial branches."""
        return self.plus(_halve(u + v)) * self.minus(_halve(u - v))

    # -- algebra ----------------------------------------------------------------

    def __add__(self, other: "ParaFunction") -> "ParaFunction":
        return ParaFunction(self.plus + other.plus, self.minus + other.minus)

    def __mul__(self, other) -> "ParaFunction":
        if isinstance(other, ParaFunction):
            return ParaFunction(self.plus * other.plus, self.minus * other.minus)
        return ParaFunction(self.plus * other, self.minus * other)

    __rmul__ = __mul__

    def __neg__(self) -> "ParaFunction":
        return ParaFunction(-self.plus, -self.minus)

    def __sub__(self, other: "ParaFunction") -> "ParaFunction":
        return self + (-other)

    # -- calculus ---------------------------------------------------------------

    def derivative(self) -> "ParaFunction":
        """dh/dz; branchwise this is phi_s'(arg)/2 by the half-sum chain rule."""
        half = Fraction(1, 2)
        return ParaFunction(
            self.plus.derivative() * half, self.minus.derivative() * half
        )

    def split_orders(self, cap: int = 16) -> SplitOrders:
        return SplitOrders(
            self.plus.order_at_zero(cap), self.minus.order_at_zero(cap), cap
        )

    def normal_form(self, cap: int = 16) -> NormalForm:
        orders = self.split_orders(cap)
        psi_p = psi_m = None
        if orders.plus.finite and self.plus.is_polynomial:
            psi_p = Branch(poly=self.plus.poly.deflate(orders.plus.order))
        if orders.minus.finite and self.minus.is_polynomial:
            psi_m = Branch(poly=self.minus.poly.deflate(orders.minus.order))
        return NormalForm(
            orders=orders,
            psi_plus_0=orders.plus.coeff,
            psi_minus_0=orders.minus.coeff,
            psi_plus=psi_p,
            psi_minus=psi_m,
        )


def para_cr_residual(h: ParaFunction, u: float, v: float, step: float = 1e-4) -> float:
    """Central-difference residual of the para-Cauchy-Riemann equations at (u,v)."""

    def val(uu, vv):
        w = h.evaluate_uv(uu, vv)
        return float(w.re), float(w.im)

    a_up, b_up = val(u + step, v)
    a_dn, b_dn = val(u - step, v)
    a_vp, b_vp = val(u, v + step)
    a_vn, b_vn = val(u, v - step)
    a_u = (a_up - a_dn) / (2 * step)
    a_v = (a_vp - a_vn) / (2 * step)
    b_u = (b_up - b_dn) / (2 * step)
    b_v = (b_vp - b_vn) / (2 * step)
    return max(abs(a_u - b_v), abs(a_v - b_u))
