"""
Poisson brackets of polynomials and fractions
=============================================

A free Poisson polynomial is an ordinary commutative polynomial in the
Lyndon basis variables.  The bracket is the biderivation extending the Lie
bracket, and it extends once more to fractions.
"""

from freepoisson import PoissonFrac, fvar, parse_field, partial, x

x1, x2 = x(1), x(2)
print((x1 + PoissonFrac.var("12").num) ** 2)

# Leibniz rule in action.
print(x1.bracket(x2 ** 2))

# Degrees add under brackets of homogeneous elements.
f, g = x1 * x2, PoissonFrac.var("112").num
print(f.degree(), g.degree(), f.bracket(g).degree())

# Fractions are kept reduced with a monic denominator.
print(parse_field("(x1^2 - x2^2)/(3*x1 - 3*x2)"))
q1, q2 = fvar(1), fvar(2)
print((1 / q1).bracket(q2 / q1))
print(partial(q1 / q2, (2,)))
