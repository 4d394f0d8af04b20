#!/usr/bin/env python3
"""Split-complex numbers and para-holomorphic functions, from the ground up.

Walks through the arithmetic that everything else in the package builds on:
the para-imaginary unit j with j**2 = +1, the indefinite squared norm, the
idempotent split into null coordinates, and functions that are
"holomorphic" for this arithmetic.
"""

from fractions import Fraction

from zmcsurf import (
    EPS1,
    EPSM1,
    Branch,
    ParaComplex,
    ParaFunction,
    decompose,
)

print("== the ring of split-complex numbers ==")
j = ParaComplex(0, 1)
print("j * j                =", j * j)
z, w = ParaComplex(1, 2), ParaComplex(3, 1)
print("(1+2j)(3+1j)         =", z * w)
print("N2 multiplicativity  :", (z * w).n2(), "=", z.n2(), "*", w.n2())

print("\n== zero divisors live on the null lines v = +-u ==")
null = ParaComplex(1, 1)
print("N2(1+1j)             =", null.n2())
print("(1+1j)(1-1j)         =", null * null.conj())

print("\n== idempotent split: two independent real coordinates ==")
print("EPS1 * EPSM1         =", EPS1 * EPSM1)
print("decompose(2+3j)      =", decompose(ParaComplex(2, 3)))

print("\n== para-holomorphic functions are pairs of 1-variable functions ==")
h = ParaFunction.monomial(2)  # z^2
z0 = ParaComplex(Fraction(1, 2), Fraction(1, 3))
print("z0^2 via branches    =", h.evaluate(z0))
print("z0 * z0 directly     =", z0 * z0)

print("\n== orders of vanishing at the origin, per branch ==")
q = ParaFunction.from_z_poly([0, -2])  # the Hopf coefficient of a key example
so = q.split_orders(16)
print("branch orders of -2z :", so.plus.label, so.minus.label)
print("leading coefficients :", so.plus.coeff, so.minus.coeff)

flat = ParaFunction.wedge(Branch.exp_flat(), Branch.exp_flat())
so_flat = flat.split_orders(16)
print("flat-branch function :", so_flat.plus.label, "(not decidable from jets)")
