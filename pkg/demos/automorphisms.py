"""
Automorphisms of P(x, y)
========================

A pair (f, g) extends to a bracket-preserving substitution.  Given a
candidate inverse (p, q) the map is checked by composing in both
directions; images must be rational in x1 and x2.
"""

from freepoisson import apply_endo, check_automorphism, extend_endo, fvar

x1, x2 = fvar(1), fvar(2)

for name, f, g, p, q in [("swap", x2, x1, x2, x1),
                         ("involution", 1 / x1, x2 / x1, 1 / x1, x2 / x1),
                         ("triangular", x1, x1 * x2, x1, x2 / x1),
                         ("diagonal", x1, x1, x1, x2)]:
    res = check_automorphism(f, g, p, q)
    print(f"{name:11s}", res.is_automorphism, res.diagnostic)

psi = extend_endo(x1, x1 * x2)
a, b = x2 / x1, x1 + x2
print(apply_endo(psi, a.bracket(b)) == apply_endo(psi, a).bracket(apply_endo(psi, b)))
print(apply_endo(psi, x1.bracket(x2)))
