"""
The enveloping algebra Q^e
==========================

Elements are sums q*h[w] with field coefficients on the left.  Products
are straightened with h_i q = q h_i + {x_i, q}, and the universal
derivation q -> h_q lands in this algebra.
"""

from freepoisson import EnvElement, act, env_mul, fvar, h, h_of

x1, x2 = fvar(1), fvar(2)
h1, h2 = h(1), h(2)

# Straightening a single letter past a coefficient.
print(env_mul(h1, EnvElement.from_field(x2)))

# The universal derivation on a product, an inverse, and a bracket.
print(h_of(x1 * x2))
print(h_of(1 / x1))
print(h_of(x1.bracket(x2)))

# Leading terms multiply: words concatenate and coefficients multiply.
u = x2 * h1 + EnvElement.from_field(x1)
v = x1 * h2
uv = env_mul(u, v)
print(uv.ldt(), u.ldm() + v.ldm())

# Q^e acts on P(x1, x2, y) by nested brackets; here y is x3.
y = fvar(3, 3)
print(act(h1, y), "|", act(u, y))
