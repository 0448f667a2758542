"""The free Poisson field P(x_1, ..., x_n).

Elements are reduced fractions of :class:`~freepoisson.poly.PoissonPoly`
with a denominator that is monic in the graded monomial order, so two
fractions are equal exactly when their stored numerators and denominators are.
Multivariate gcds and the polynomial products inside fraction arithmetic
run in FLINT (python-flint).
"""

from numbers import Rational

from ._flint import Frame
from .lie import lyndon_word
from .poly import PoissonPoly, poisson_bracket_poly


def poly_cofactors(a, b):
    """``(g, a/g, b/g)`` with ``g`` a gcd of two nonzero polynomials."""
    fr = Frame((a, b))
    A, B = fr.to(a), fr.to(b)
    g = A.gcd(B)
    return tuple(PoissonPoly._raw(fr.back(P), a.n) for P in (g, A / g, B / g))


def poly_gcd(a, b):
    return poly_cofactors(a, b)[0]


def _make_monic(num, den):
    lc = den.leading_coefficient()
    if lc != 1:
        inv = 1 / lc
        num, den = num * inv, den * inv
    return num, den


def _reduced(fr, N, D, n):
    # N/D in lowest terms with a monic denominator
    if D.is_zero():
        raise ZeroDivisionError("zero denominator")
    if N.is_zero():
        return PoissonFrac.const(0, n)
    g = N.gcd(D)
    if not g.is_one():
        N, D = N / g, D / g
    return _lowest(fr, N, D, n)


def _lowest(fr, N, D, n):
    # N/D already coprime: convert back and make the denominator monic
    if N.is_zero():
        return PoissonFrac.const(0, n)
    num = PoissonPoly._raw(fr.back(N), n)
    den = PoissonPoly._raw(fr.back(D), n)
    return PoissonFrac._raw(*_make_monic(num, den))


def frac_normalize(a, b):
    """Reduced representative of ``a/b`` with monic denominator."""
    if not b.terms:
        raise ZeroDivisionError("zero denominator")
    if a.n != b.n:
        raise ValueError(f"alphabet size mismatch: {a.n} vs {b.n}")
    if not a.terms:
        return PoissonFrac._raw(a, PoissonPoly.const(1, a.n))
    if b.is_constant():
        return PoissonFrac._raw(a * (1 / b.constant_value()), PoissonPoly.const(1, a.n))
    if a.is_constant():
        return PoissonFrac._raw(*_make_monic(a, b))
    fr = Frame((a, b))
    return _reduced(fr, fr.to(a), fr.to(b), a.n)


class PoissonFrac:
    """Element of the free Poisson field: a normalized fraction ``num/den``.

    The constructor normalizes; use :meth:`const` and :meth:`var` for
    constants and basis variables.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if den is None:
            den = PoissonPoly.const(1, num.n)
        f = frac_normalize(num, den)
        self.num, self.den, self._hash = f.num, f.den, None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c, n=2):
        return cls._raw(PoissonPoly.const(c, n), PoissonPoly.const(1, n))

    @classmethod
    def var(cls, w, n=2):
        return cls._raw(PoissonPoly.var(w, n), PoissonPoly.const(1, n))

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, PoissonPoly.const(1, p.n))

    @property
    def n(self):
        return self.num.n

    def with_n(self, n):
        return PoissonFrac._raw(self.num.with_n(n), self.den.with_n(n))

    def _coerce(self, other):
        if isinstance(other, PoissonFrac):
            if other.n != self.n:
                raise ValueError(f"alphabet size mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, PoissonPoly):
            if other.n != self.n:
                raise ValueError(f"alphabet size mismatch: {self.n} vs {other.n}")
            return PoissonFrac.from_poly(other)
        if isinstance(other, Rational):
            return PoissonFrac.const(other, self.n)
        return NotImplemented

    def _den_is_one(self):
        return len(self.den.terms) == 1 and () in self.den.terms

    # -- field structure ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self._den_is_one() and other._den_is_one():
            return PoissonFrac._raw(self.num + other.num, self.den)
        fr = Frame((self.num, self.den, other.num, other.den))
        a, b, c, d = (fr.to(p) for p in (self.num, self.den, other.num, other.den))
        if self.den == other.den:
            return _reduced(fr, a + c, b, self.n)
        # split off g = gcd(b, d); only g can share factors with the new numerator
        g = b.gcd(d)
        if g.is_one():
            return _lowest(fr, a * d + c * b, b * d, self.n)
        b1, d1 = b / g, d / g
        top = a * d1 + c * b1
        if top.is_zero():
            return PoissonFrac.const(0, self.n)
        g2 = top.gcd(g)
        if not g2.is_one():
            top, g = top / g2, g / g2
        return _lowest(fr, top, b1 * d1 * g, self.n)

    __radd__ = __add__

    def __neg__(self):
        return PoissonFrac._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return PoissonFrac.const(0, self.n)
            return PoissonFrac._raw(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return PoissonFrac.const(0, self.n)
        if self._den_is_one() and other._den_is_one():
            return PoissonFrac._raw(self.num * other.num, self.den)
        if other.is_constant():
            return PoissonFrac._raw(self.num * other.num.constant_value(), self.den)
        if self.is_constant():
            return PoissonFrac._raw(other.num * self.num.constant_value(), other.den)
        fr = Frame((self.num, self.den, other.num, other.den))
        a, b, c, d = (fr.to(p) for p in (self.num, self.den, other.num, other.den))
        # cross-cancel; inputs are reduced, so the product is then reduced too
        g1, g2 = a.gcd(d), c.gcd(b)
        if not g1.is_one():
            a, d = a / g1, d / g1
        if not g2.is_one():
            c, b = c / g2, b / g2
        return _lowest(fr, a * c, b * d, self.n)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num.terms:
            raise ZeroDivisionError("inverse of zero")
        return frac_normalize(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num.terms:
            raise ZeroDivisionError("division by zero")
        if other.is_constant():
            return PoissonFrac._raw(self.num * (1 / other.num.constant_value()), self.den)
        fr = Frame((self.num, self.den, other.num, other.den))
        a, b, c, d = (fr.to(p) for p in (self.num, self.den, other.num, other.den))
        return _reduced(fr, a * d, b * c, self.n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("exponent must be an integer")
        if k < 0:
            return self.inverse() ** (-k)
        # powers of a reduced fraction stay reduced; den**k stays monic
        return PoissonFrac._raw(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, (Rational, PoissonPoly)):
            other = self._coerce(other)
        if not isinstance(other, PoissonFrac):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num.terms)

    # -- inspection -----------------------------------------------------------

    def is_zero(self):
        return not self.num.terms

    def is_constant(self):
        return self.num.is_constant() and self._den_is_one()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.constant_value()

    def is_polynomial(self):
        return self._den_is_one()

    def variables(self):
        return self.num.variables() | self.den.variables()

    # -- calculus -------------------------------------------------------------

    def bracket(self, other):
        return poisson_bracket_frac(self, other)

    def partial(self, w):
        return partial(self, w)

    def __str__(self):
        if self._den_is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"PoissonFrac({self}, n={self.n})"


def poisson_bracket_frac(f, g):
    """Bracket on the fraction field.

    Uses ``{a/b, c/d} = ({a,c}bd - {a,d}bc - {b,c}ad + {b,d}ac) / (b^2 d^2)``.
    """
    if f.n != g.n:
        raise ValueError(f"alphabet size mismatch: {f.n} vs {g.n}")
    a, b, c, d = f.num, f.den, g.num, g.den
    if f.is_constant() or g.is_constant():
        return PoissonFrac.const(0, f.n)
    br = poisson_bracket_poly
    if b.is_constant() and d.is_constant():
        return PoissonFrac.from_poly(br(a, c))
    brackets = [br(a, c), br(a, d), br(b, c), br(b, d)]
    fr = Frame([a, b, c, d] + brackets)
    A, B, C, D, AC, AD, BC, BD = (fr.to(p) for p in [a, b, c, d] + brackets)
    top = AC * B * D - AD * B * C - BC * A * D + BD * A * C
    return _reduced(fr, top, (B * D) ** 2, f.n)


def partial(f, w):
    """Partial derivative of ``f`` with respect to the basis variable ``e_w``."""
    w = tuple(w)
    if w not in f.variables():
        return PoissonFrac.const(0, f.n)
    da = f.num.diff(w)
    if f._den_is_one():
        return PoissonFrac._raw(da, f.den)
    db = f.den.diff(w)
    fr = Frame((f.num, f.den, da, db))
    A, B, DA, DB = (fr.to(p) for p in (f.num, f.den, da, db))
    return _reduced(fr, DA * B - A * DB, B * B, f.n)


def variables_of(f):
    return f.variables()


def frac(num, den=None):
    """Convenience constructor accepting polynomials or rationals."""
    if isinstance(num, PoissonFrac):
        return num if den is None else num / den
    if den is None:
        return PoissonFrac(num)
    if isinstance(den, PoissonFrac):
        return PoissonFrac(num) / den
    return PoissonFrac(num, den)


def fvar(w, n=2):
    """Basis variable ``e_w`` as a field element (``fvar(1)`` is ``x1``)."""
    if isinstance(w, int):
        w = (w,)
    return PoissonFrac.var(lyndon_word(w, n), n)
