"""Lyndon-word basis of the free Lie algebra Lie<x_1, ..., x_n>.

Words are plain tuples of positive ints (letter ``i`` stands for ``x_i``).
Each Lyndon word ``w`` names the basis element ``e_w`` obtained by bracketing
``w`` along its standard factorization; ``("1", "12")`` gives ``[x1, [x1, x2]]``.

Brackets of basis elements are computed by expanding both sides as iterated
commutators in the free associative algebra and converting the commutator back
to the Lyndon basis by triangular elimination.  The associative expansion of
``e_w`` is ``w`` plus words that are lexicographically larger of the same
length, so elimination always removes the lex-smallest word first.
"""

from fractions import Fraction
from functools import lru_cache

Word = tuple


def is_lyndon(w):
    """True if ``w`` is strictly smaller than each of its proper suffixes."""
    w = tuple(w)
    if not w:
        return False
    return all(w < w[i:] for i in range(1, len(w)))


def word_key(w):
    """Sort key of the global variable order: degree first, then lex."""
    return (len(w), w)


def word_to_str(w):
    """Digit string for single-digit letters, comma-separated otherwise."""
    if all(c <= 9 for c in w):
        return "".join(str(c) for c in w)
    return ",".join(str(c) for c in w)


def word_from_str(s):
    s = s.strip()
    if not s:
        return ()
    if "," in s:
        return tuple(int(c) for c in s.split(","))
    return tuple(int(c) for c in s)


def lyndon_word(w, n=None):
    """Validate and return ``w`` (tuple or digit string) as a Lyndon word."""
    if isinstance(w, str):
        w = word_from_str(w)
    w = tuple(int(c) for c in w)
    if not is_lyndon(w):
        raise ValueError(f"{word_to_str(w) or '<empty>'} is not a Lyndon word")
    if min(w) < 1 or (n is not None and max(w) > n):
        raise ValueError(f"letter out of range in {word_to_str(w)}")
    return w


def _duval(n, maxdeg):
    # Duval's algorithm: all Lyndon words of length <= maxdeg in lex order.
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(c + 1 for c in w)
        m = len(w)
        while len(w) < maxdeg:
            w.append(w[-m])
        while w and w[-1] == n - 1:
            w.pop()


def lyndon_basis(n, maxdeg):
    """All Lyndon words over ``1..n`` of length at most ``maxdeg``.

    The result is sorted by (degree, lex), which is the order used for the
    basis variables everywhere else in the package.

    >>> [word_to_str(w) for w in lyndon_basis(2, 3)]
    ['1', '2', '12', '112', '122']
    """
    if n < 1 or maxdeg < 1:
        raise ValueError("n and maxdeg must be positive")
    return sorted(_duval(n, maxdeg), key=word_key)


def necklace_count(n, d):
    """Number of Lyndon words of length ``d`` over ``n`` letters (Witt formula)."""
    def mobius(k):
        result, p = 1, 2
        while p * p <= k:
            if k % p == 0:
                k //= p
                if k % p == 0:
                    return 0
                result = -result
            p += 1
        return -result if k > 1 else result

    total = sum(mobius(e) * n ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


def standard_factorization(w):
    """Split ``w = u v`` with ``v`` the longest proper Lyndon suffix."""
    w = tuple(w)
    if len(w) < 2:
        raise ValueError("letters have no standard factorization")
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise AssertionError("unreachable: the last letter is always Lyndon")


def bracketing(w):
    """Nested-tuple bracketing of a Lyndon word, letters at the leaves."""
    if len(w) == 1:
        return w[0]
    u, v = standard_factorization(w)
    return (bracketing(u), bracketing(v))


# -- free associative algebra: dict word -> coefficient ---------------------

def assoc_add(p, q, scale=1):
    out = dict(p)
    for w, c in q.items():
        c = out.get(w, 0) + scale * c
        if c:
            out[w] = c
        else:
            out.pop(w, None)
    return out


def assoc_mul(p, q):
    out = {}
    for a, ca in p.items():
        for b, cb in q.items():
            w = a + b
            c = out.get(w, 0) + ca * cb
            if c:
                out[w] = c
            else:
                del out[w]
    return out


def commutator(p, q):
    return assoc_add(assoc_mul(p, q), assoc_mul(q, p), -1)


@lru_cache(maxsize=None)
def _expand(w):
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    return tuple(commutator(dict(_expand(u)), dict(_expand(v))).items())


def assoc_expand(w):
    """Associative expansion of ``e_w`` as an iterated commutator.

    Coefficients are integers.  ``w`` itself occurs with coefficient 1 and is
    the lex-smallest word in the expansion.
    """
    return dict(_expand(tuple(w)))


class NotLieError(ValueError):
    """Raised when a polynomial handed to :func:`to_lyndon` is not a Lie element."""


def to_lyndon(p, n=None):
    """Express an associative Lie polynomial in the Lyndon basis."""
    p = {w: Fraction(c) for w, c in p.items() if c}
    if n is None:
        n = max((max(w) for w in p if w), default=1)
    out = {}
    while p:
        # lex-smallest word among those of maximal length
        top = max(len(w) for w in p)
        w = min(u for u in p if len(u) == top)
        if not is_lyndon(w):
            raise NotLieError(
                f"residue has non-Lyndon leading word {word_to_str(w) or '<empty>'}")
        c = p[w]
        out[w] = c
        p = assoc_add(p, assoc_expand(w), -c)
    return LieElement(out, n)


@lru_cache(maxsize=None)
def _bracket_words(u, v):
    p = commutator(assoc_expand(u), assoc_expand(v))
    return tuple(to_lyndon(p).terms.items())


def bracket_words(u, v):
    """``[e_u, e_v]`` as a tuple of ``(word, coefficient)`` pairs."""
    if u == v:
        return ()
    if word_key(u) > word_key(v):
        return tuple((w, -c) for w, c in _bracket_words(v, u))
    return _bracket_words(u, v)


class LieElement:
    """Element of the free Lie algebra in the Lyndon basis."""

    __slots__ = ("terms", "n")

    def __init__(self, terms, n):
        self.terms = {tuple(w): Fraction(c) for w, c in terms.items() if c}
        self.n = n

    @classmethod
    def basis(cls, w, n):
        return cls({lyndon_word(w, n): 1}, n)

    def _check(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"alphabet size mismatch: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return LieElement(assoc_add(self.terms, other.terms), self.n)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return LieElement(assoc_add(self.terms, other.terms, -1), self.n)

    def __neg__(self):
        return LieElement({w: -c for w, c in self.terms.items()}, self.n)

    def __rmul__(self, c):
        return LieElement({w: c * a for w, a in self.terms.items()}, self.n)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "LieElement(0)"
        parts = [f"{c}*e[{word_to_str(w)}]"
                 for w, c in sorted(self.terms.items(), key=lambda t: word_key(t[0]))]
        return "LieElement(" + " + ".join(parts) + ")"

    def bracket(self, other):
        return lie_bracket(self, other)

    def expand(self):
        """Associative expansion as a dict word -> coefficient."""
        out = {}
        for w, c in self.terms.items():
            out = assoc_add(out, assoc_expand(w), c)
        return out

    def multidegree(self):
        """Set of multidegrees (as tuples of length n) of the terms."""
        return {tuple(w.count(i) for i in range(1, self.n + 1)) for w in self.terms}


def lie_bracket(u, v):
    """Bilinear bracket of two :class:`LieElement` values."""
    if u.n != v.n:
        raise ValueError(f"alphabet size mismatch: {u.n} vs {v.n}")
    out = {}
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            out = assoc_add(out, dict(bracket_words(a, b)), ca * cb)
    return LieElement(out, u.n)
