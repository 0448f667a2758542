"""Universal enveloping algebra Q^e of the free Poisson field.

Every element has a unique canonical form ``sum q_i w_i`` with ``q_i`` in Q
and ``w_i`` distinct words in the generators ``h_{x_1}, ..., h_{x_n}``.
Words are tuples of letter indices; the empty word is the unit, so the
hdeg-0 part of an element is its field component.

Products are straightened with the commutation rule
``h_{x_i} q = q h_{x_i} + {x_i, q}``.
"""

from functools import lru_cache
from numbers import Rational

from .field import PoissonFrac, partial, poisson_bracket_frac
from .lie import assoc_expand, word_to_str
from .poly import NEG_INF, PoissonPoly


def hword_key(w):
    """Words are ordered by length, then lexicographically."""
    return (len(w), w)


def _add_into(out, w, c):
    if w in out:
        c = out[w] + c
        if c.num.terms:
            out[w] = c
        else:
            del out[w]
    elif c.num.terms:
        out[w] = c


class EnvElement:
    """Element of Q^e in canonical form: map word -> nonzero PoissonFrac."""

    __slots__ = ("terms", "n", "_hash")

    def __init__(self, terms=None, n=2):
        self.terms = {}
        self.n = n
        self._hash = None
        for w, c in (terms or {}).items():
            w = tuple(w)
            if w and (min(w) < 1 or max(w) > n):
                raise ValueError(f"letter out of range in h[{word_to_str(w)}]")
            c = _as_frac(c, n)
            if c.num.terms:
                self.terms[w] = c

    @classmethod
    def _raw(cls, terms, n):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.n = n
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, n=2):
        return cls._raw({}, n)

    @classmethod
    def one(cls, n=2):
        return cls.from_field(PoissonFrac.const(1, n))

    @classmethod
    def from_field(cls, q):
        """The field element ``q`` as an hdeg-0 element."""
        return cls._raw({(): q} if q.num.terms else {}, q.n)

    @classmethod
    def word(cls, w, n=2, coeff=1):
        """``coeff * h_{x_{w_1}} ... h_{x_{w_k}}``."""
        return cls({tuple(w): coeff}, n)

    def _coerce(self, other):
        if isinstance(other, EnvElement):
            if other.n != self.n:
                raise ValueError(f"alphabet size mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (PoissonFrac, PoissonPoly, Rational)):
            return EnvElement.from_field(_as_frac(other, self.n))
        return NotImplemented

    # -- vector space ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(out, w, c)
        return EnvElement._raw(out, self.n)

    __radd__ = __add__

    def __neg__(self):
        return EnvElement._raw({w: -c for w, c in self.terms.items()}, self.n)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(out, w, -c)
        return EnvElement._raw(out, self.n)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q):
        """Left multiplication by a field element (no straightening needed)."""
        q = _as_frac(q, self.n)
        if not q.num.terms:
            return EnvElement.zero(self.n)
        return EnvElement._raw({w: q * c for w, c in self.terms.items()}, self.n)

    # -- algebra --------------------------------------------------------------

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return env_mul(self, other)

    def __rmul__(self, other):
        # field * element: left scaling
        return self.scale(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("envelope powers need a nonnegative integer exponent")
        result = EnvElement.one(self.n)
        for _ in range(k):
            result = env_mul(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, (PoissonFrac, PoissonPoly, Rational)):
            other = self._coerce(other)
        if not isinstance(other, EnvElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- leading-term calculus -------------------------------------------------

    def is_zero(self):
        return not self.terms

    def hdeg(self):
        if not self.terms:
            return NEG_INF
        return max(len(w) for w in self.terms)

    def ldm(self):
        if not self.terms:
            raise ValueError("zero element has no leading monomial")
        return max(self.terms, key=hword_key)

    def ldc(self):
        return self.terms[self.ldm()]

    def ldt(self):
        """``(ldc, ldm)`` of a nonzero element."""
        w = self.ldm()
        return self.terms[w], w

    def leading_part(self):
        """Sum of the terms of top word length (the graded image)."""
        if not self.terms:
            raise ValueError("zero element has no leading part")
        top = self.hdeg()
        return EnvElement._raw({w: c for w, c in self.terms.items() if len(w) == top},
                               self.n)

    def constant_part(self):
        return self.terms.get((), PoissonFrac.const(0, self.n))

    def sorted_terms(self):
        """Terms in descending word order."""
        return sorted(self.terms.items(), key=lambda t: hword_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*h[{word_to_str(w)}]" for w, c in self.sorted_terms())

    def __repr__(self):
        return f"EnvElement({self}, n={self.n})"


def _as_frac(c, n):
    if isinstance(c, PoissonFrac):
        if c.n != n:
            raise ValueError(f"alphabet size mismatch: {n} vs {c.n}")
        return c
    if isinstance(c, PoissonPoly):
        if c.n != n:
            raise ValueError(f"alphabet size mismatch: {n} vs {c.n}")
        return PoissonFrac.from_poly(c)
    return PoissonFrac.const(c, n)


def h(i, n=2):
    """The generator ``h_{x_i}``."""
    return EnvElement.word((i,), n)


@lru_cache(maxsize=None)
def _generator(i, n):
    return PoissonFrac.var((i,), n)


@lru_cache(maxsize=200_000)
def _word_times(w, c):
    # w * c straightened: push letters of w past c, innermost first
    terms = {(): c}
    n = c.n
    for a in reversed(w):
        xa = _generator(a, n)
        out = {}
        for v, q in terms.items():
            _add_into(out, (a,) + v, q)
            _add_into(out, v, poisson_bracket_frac(xa, q))
        terms = out
    return tuple(terms.items())


def env_mul(u, v):
    """Product in Q^e, returned in canonical form."""
    if u.n != v.n:
        raise ValueError(f"alphabet size mismatch: {u.n} vs {v.n}")
    out = {}
    for w1, q in u.terms.items():
        for w2, p in v.terms.items():
            if not w1:
                _add_into(out, w2, q * p)
                continue
            for w, c in _word_times(w1, p):
                _add_into(out, w + w2, q * c)
    return EnvElement._raw(out, u.n)


@lru_cache(maxsize=None)
def h_basis(w, n):
    """``h_{e_w}``: the bracketing of ``w`` evaluated on the generators."""
    return EnvElement({v: c for v, c in assoc_expand(w).items()}, n)


def h_of(q):
    """The universal derivation ``q -> h_q = sum_w d(q)/d(e_w) h_{e_w}``."""
    if not isinstance(q, PoissonFrac):
        q = _as_frac(q, q.n)
    out = {}
    for w in q.variables():
        d = partial(q, w)
        for v, c in h_basis(w, q.n).terms.items():
            _add_into(out, v, d * c)
    return EnvElement._raw(out, q.n)


def act(u, v):
    """Action of ``u`` (over n letters) on ``v`` in P(x_1..x_n, y), ``y = x_{n+1}``.

    A term ``q h_{x_{i_1}} ... h_{x_{i_k}}`` sends ``v`` to
    ``q {x_{i_1}, {..., {x_{i_k}, v}...}}``.
    """
    m = u.n + 1
    if v.n != m:
        raise ValueError(f"act expects a field element over {m} letters, got {v.n}")
    total = PoissonFrac.const(0, m)
    cache = {(): v}

    def nested(w):
        if w not in cache:
            cache[w] = poisson_bracket_frac(_generator(w[0], m), nested(w[1:]))
        return cache[w]

    for w, q in u.terms.items():
        total = total + q.with_n(m) * nested(w)
    return total
