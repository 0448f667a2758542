"""The free Poisson algebra P<x_1, ..., x_n> as a polynomial ring.

The ring variables are the Lyndon basis elements ``e_w`` of the free Lie
algebra, so a :class:`PoissonPoly` is a sparse commutative polynomial in
infinitely many variables.  The Poisson bracket is the biderivation fixed by
``{e_u, e_v} = [e_u, e_v]``.

A monomial is a tuple of ``(word, exponent)`` pairs sorted by word (plain
tuple order, which keeps the representation canonical and cheap to merge);
the empty tuple is the monomial 1.  The graded order used for printing and
leading terms is :func:`mono_key`.
"""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from ._flint import Frame
from .lie import bracket_words, lyndon_word, word_key, word_to_str

NEG_INF = float("-inf")
_FLINT_MUL_THRESHOLD = 24


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for w, e in b:
        exps[w] = exps.get(w, 0) + e
    return tuple(sorted(exps.items()))


def mono_drop(m, w):
    """Divide monomial ``m`` by one power of ``e_w`` (assumed present)."""
    out = []
    for v, e in m:
        if v == w:
            if e > 1:
                out.append((v, e - 1))
        else:
            out.append((v, e))
    return tuple(out)


def mono_degree(m):
    return sum(len(w) * e for w, e in m)


@lru_cache(maxsize=100_000)
def mono_key(m):
    """Graded order: weighted degree, then lex on exponent vectors.

    Exponent vectors are indexed by variables in increasing global order;
    a larger exponent at the first differing variable wins.
    """
    ordered = sorted(m, key=lambda t: word_key(t[0]))
    return (mono_degree(m), tuple((-len(w), tuple(-c for c in w), e) for w, e in ordered))


def mono_str(m):
    parts = []
    for w, e in sorted(m, key=lambda t: word_key(t[0])):
        base = f"x{w[0]}" if len(w) == 1 else f"e[{word_to_str(w)}]"
        parts.append(base if e == 1 else f"{base}^{e}")
    return "*".join(parts)


def _add_into(out, m, c):
    c = out.get(m, 0) + c
    if c:
        out[m] = c
    else:
        out.pop(m, None)


class PoissonPoly:
    """Element of P<x_1..x_n>: a map monomial -> nonzero Fraction.

    Instances are immutable; arithmetic accepts ints and Fractions as
    constants.
    """

    __slots__ = ("terms", "n", "_hash")

    def __init__(self, terms=None, n=2):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}
        self.n = n
        self._hash = None

    @classmethod
    def _raw(cls, terms, n):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.n = n
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c, n=2):
        c = Fraction(c)
        return cls._raw({(): c} if c else {}, n)

    @classmethod
    def var(cls, w, n=2):
        """The basis variable ``e_w``; ``w`` may be a tuple or digit string."""
        w = lyndon_word(w, n)
        return cls._raw({((w, 1),): Fraction(1)}, n)

    def _coerce(self, other):
        if isinstance(other, PoissonPoly):
            if other.n != self.n:
                raise ValueError(f"alphabet size mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, Rational):
            return PoissonPoly.const(other, self.n)
        return NotImplemented

    def with_n(self, n):
        """Same polynomial viewed over a larger alphabet."""
        if n < self.n:
            letters = {c for m in self.terms for w, _ in m for c in w}
            if letters and max(letters) > n:
                raise ValueError("polynomial uses letters beyond the new alphabet")
        return PoissonPoly._raw(self.terms, n)

    # -- ring structure -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(out, m, c)
        return PoissonPoly._raw(out, self.n)

    __radd__ = __add__

    def __neg__(self):
        return PoissonPoly._raw({m: -c for m, c in self.terms.items()}, self.n)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(out, m, -c)
        return PoissonPoly._raw(out, self.n)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            other = Fraction(other)
            if not other:
                return PoissonPoly._raw({}, self.n)
            return PoissonPoly._raw({m: c * other for m, c in self.terms.items()}, self.n)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self.terms) * len(other.terms) > _FLINT_MUL_THRESHOLD:
            fr = Frame((self, other))
            return PoissonPoly._raw(fr.back(fr.to(self) * fr.to(other)), self.n)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _add_into(out, mono_mul(m1, m2), c1 * c2)
        return PoissonPoly._raw(out, self.n)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = PoissonPoly.const(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = PoissonPoly.const(other, self.n)
        if not isinstance(other, PoissonPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        return self.terms.get((), Fraction(0))

    def variables(self):
        return {w for m in self.terms for w, _ in m}

    def sorted_terms(self):
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: mono_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=mono_key)
        return m, self.terms[m]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(mono_degree(m) for m in self.terms)

    def degrees(self):
        """``(deg, (deg_x1, ..., deg_xn))``; all entries are -inf for zero."""
        if not self.terms:
            return NEG_INF, (NEG_INF,) * self.n
        per = [max(sum(e * w.count(i) for w, e in m) for m in self.terms)
               for i in range(1, self.n + 1)]
        return self.degree(), tuple(per)

    def is_homogeneous(self):
        return len({mono_degree(m) for m in self.terms}) <= 1

    def multidegrees(self):
        return {tuple(sum(e * w.count(i) for w, e in m) for i in range(1, self.n + 1))
                for m in self.terms}

    # -- calculus -------------------------------------------------------------

    def bracket(self, other):
        return poisson_bracket_poly(self, other)

    def diff(self, w):
        """Partial derivative with respect to the variable ``e_w``."""
        w = tuple(w)
        out = {}
        for m, c in self.terms.items():
            for v, e in m:
                if v == w:
                    _add_into(out, mono_drop(m, w), c * e)
                    break
        return PoissonPoly._raw(out, self.n)

    def evaluate(self, values, one):
        """Substitute ``values[w]`` for each ``e_w`` and sum in the target ring.

        ``one`` is the unit of the target ring; any ring supporting ``+``,
        ``*``, integer powers and scaling by Fractions works.
        """
        total = one * 0
        powers = {}
        for m, c in self.terms.items():
            term = one * c
            for w, e in m:
                key = (w, e)
                if key not in powers:
                    powers[key] = values[w] ** e
                term = term * powers[key]
            total = total + term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            if not m:
                s = str(c)
            elif c == 1:
                s = mono_str(m)
            elif c == -1:
                s = "-" + mono_str(m)
            else:
                s = f"{c}*{mono_str(m)}"
            if pieces:
                pieces.append(" - " + s[1:] if s.startswith("-") else " + " + s)
            else:
                pieces.append(s)
        return "".join(pieces)

    def __repr__(self):
        return f"PoissonPoly({self}, n={self.n})"


def x(i, n=2):
    """The generator ``x_i`` as a polynomial."""
    return PoissonPoly.var((i,), n)


def poisson_bracket_poly(f, g):
    """Poisson bracket of two polynomials via the Leibniz rule."""
    if f.n != g.n:
        raise ValueError(f"alphabet size mismatch: {f.n} vs {g.n}")
    out = {}
    for m1, c1 in f.terms.items():
        if not m1:
            continue
        for m2, c2 in g.terms.items():
            if not m2:
                continue
            c12 = c1 * c2
            for v, a in m1:
                r1 = mono_drop(m1, v)
                for w, b in m2:
                    bw = bracket_words(v, w)
                    if not bw:
                        continue
                    r = mono_mul(r1, mono_drop(m2, w))
                    k = c12 * a * b
                    for u, s in bw:
                        _add_into(out, mono_mul(r, ((u, 1),)), k * s)
    return PoissonPoly._raw(out, f.n)


def degrees(f):
    return f.degrees()
