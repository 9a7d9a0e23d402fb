# The intersection form on the components of a degenerate fiber
#
# For a connected fiber with nonnegative intersections between distinct
# components the form is negative semidefinite, and its kernel is the line
# through the fiber class.

from fractions import Fraction

from tautdiv import (
    FiberConfiguration,
    check_hypotheses,
    classify,
    cycle_configuration,
    quadratic_eval,
    sublemma_expansion_eval,
)

cycle = cycle_configuration(5)
c = classify(cycle)
print("I_5:", c.signature, "kernel", c.kernel, "fiber line:", c.kernel_is_fiber_line)

# A fiber of type I_0^*: a double central curve meeting four reduced ones.
a = [2, 1, 1, 1, 1]
q = [[-2, 1, 1, 1, 1]] + [[1 if j == 0 else (-2 if j == i else 0) for j in range(5)] for i in range(1, 5)]
d4 = FiberConfiguration(a, q)
print(check_hypotheses(d4).fiber_case, classify(d4).kernel)

x = [Fraction(1, 3), 2, -1, 0, Fraction(5, 2)]
print(quadratic_eval(d4, x), sublemma_expansion_eval(d4, x))

# Break connectivity and the statement no longer applies.
split_fiber = FiberConfiguration([1, 1], [[0, 0], [0, 0]])
print(check_hypotheses(split_fiber).failures())
