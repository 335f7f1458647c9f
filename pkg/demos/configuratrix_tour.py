#!/usr/bin/env python3
"""Configuratrix membership via an exact resultant.

A momentum vector y is attainable (lies on the momentum-space unit surface
of the metric L = S^(1/3)) exactly when {S = 1, dS/dx_i = 3*y_i} is
solvable, i.e. when the Macaulay resultant of its homogenization vanishes.
For the power-sum metric the curve xi(t) = (t, -t, 1) stays on S = 1, so it
manufactures attainable momenta (t^2, t^2, 1) for free.
"""
from fractions import Fraction

from symres import (
    MetricFunction,
    Momentum,
    SymmetricCubic,
    configuratrix_resultant,
    configuratrix_system,
    indicatrix_degenerate,
)

metric = MetricFunction(SymmetricCubic(3, 1, -3, 3))
print("metric cubic:", metric.s, "=> indicatrix degenerate:",
      indicatrix_degenerate(metric)[0])
print()

y = Momentum.of([1, 0, 0])
print("homogenized system at y = (1, 0, 0) (first variable = homogenizer):")
for form in configuratrix_system(metric, y):
    print("  ", form)
print()

print("attainable momenta from xi = (t, -t, 1):")
for t in (Fraction(1), Fraction(2), Fraction(-1, 2)):
    y = Momentum.of([t * t, t * t, 1])
    result = configuratrix_resultant(metric, y)
    print(f"  t = {t}: y = ({t * t}, {t * t}, 1) -> resultant {result.value} "
          f"(vanishes: {result.vanishes})")
print()

print("generic momenta miss the surface:")
for y_values in ([1, 1, 2], [1, 2, 3], [5, 0, 1]):
    result = configuratrix_resultant(metric, Momentum.of(y_values))
    print(f"  y = {tuple(y_values)} -> vanishes: {result.vanishes} "
          f"(resultant has {len(str(result.value.numerator))} digits)")
print()

degenerate = MetricFunction(SymmetricCubic(3, 0, 0, 1))
result = configuratrix_resultant(degenerate, Momentum.of([5, 7, 11]))
print("degenerate metric s3: every momentum gives 0, flagged as such:")
print("  resultant:", result.value, " diagnostic:", result.diagnostic)
