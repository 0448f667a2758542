"""
Poisson dependence, three ways
==============================

Two elements are Poisson dependent when their bracket vanishes.  The same
verdict follows from the Jacobian minors and from left dependence of h_f
and h_g.  Asking for all three checks that they agree.
"""

from freepoisson import fvar, poisson_dependent

x1, x2 = fvar(1), fvar(2)
f = x1 / x2
g = (f ** 2 + 1) / (f - 3)

for a, b in [(x1, x1 ** 2 + 1), (x1, x2), (f, g), (x1.bracket(x2), x1)]:
    verdict = poisson_dependent(a, b, "all")
    print(a, "|", b, "->", verdict.dependent, verdict.method_results)
