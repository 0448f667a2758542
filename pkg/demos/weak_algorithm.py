"""
Left ideals and the weak algorithm
==================================

Interreduction makes leading words suffix-free.  After that, membership
and left dependence are decided by top reduction, and every answer comes
with a certificate that is checked by multiplication.
"""

from freepoisson import EnvElement, fvar, h, h_of, interreduce, left_dependent, membership

x1, x2 = fvar(1), fvar(2)
h1, h2 = h(1), h(2)

rs = interreduce([h_of(x1 * x2), h1, h2])
print("survivors:", [str(e) for e in rs.elements], "zeros:", rs.zeros)

print(left_dependent([h1, EnvElement.word((2, 1))]))

res = membership(h_of(x1 * x2), [h1, h2])
print(res.member, [str(c) for c in res.cofactors])

# Field elements are never in the ideal generated by h1 and h2.
res = membership(EnvElement.from_field(x1.bracket(x2)), [h1, h2])
print(res.member, res.remainder)
