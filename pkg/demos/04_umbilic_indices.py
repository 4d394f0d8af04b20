#!/usr/bin/env python3
"""The order-mod-4 index law at umbilics, measured by winding numbers.

For an umbilic whose Hopf coefficient has equal even branch orders m and a
positive leading-coefficient product, smooth curvature-line flows exist and
their indices are {+1, -1} when m = 2 mod 4 and {0} when m = 0 mod 4.  Odd
orders leave no admissible neighborhood at all.  Space-like surfaces, by
contrast, always show index -m/2.
"""

from zmcsurf import (
    ParaFunction,
    WeierstrassData,
    analyze_point,
    hopf_differential,
    measure_indices,
    spacelike_index,
)

print("time-like umbilics (data g = z^k, omega = dz => order m = k-1):")
print(f"{'k':>3} {'m':>3} {'prediction':>24} {'measured':>12}")
for k in (2, 3, 4, 5, 7, 9):
    q = hopf_differential(
        WeierstrassData(ParaFunction.monomial(k), ParaFunction.constant(1))
    )
    report = measure_indices(analyze_point(q), q)
    pred = report.predicted_indices
    pred_str = str(sorted(pred)) if isinstance(pred, frozenset) else pred
    meas = (
        str(sorted(report.measured_indices.values()))
        if report.measured_indices
        else "(skipped)"
    )
    print(f"{k:>3} {report.orders.plus.label:>3} {pred_str:>24} {meas:>12}")

print("\ndegenerate branch orders (2, 6) still carry flows with indices +-1:")
from zmcsurf.presets import load_preset

q26 = load_preset("deg26").patch.hopf()
rep26 = measure_indices(analyze_point(q26), q26)
print("  orders:", rep26.orders.plus.label, rep26.orders.minus.label,
      " measured:", sorted(rep26.measured_indices.values()))

print("\nspace-like comparison: the line-field index is always -m/2:")
for m in (1, 2, 3):
    print(f"  m = {m}: index = {spacelike_index(m).index}")
