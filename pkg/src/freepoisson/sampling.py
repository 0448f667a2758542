"""Seeded random elements for property checks and demos."""

import random
from fractions import Fraction

from .envelope import EnvElement
from .field import PoissonFrac, frac_normalize
from .lie import LieElement, lyndon_basis
from .poly import PoissonPoly, mono_mul


def _coeff(rng, big=3):
    c = rng.randint(-big, big)
    while c == 0:
        c = rng.randint(-big, big)
    if rng.random() < 0.2:
        return Fraction(c, rng.randint(1, 3))
    return Fraction(c)


def random_lie(rng, n, maxdeg, terms=3, homogeneous=False):
    basis = lyndon_basis(n, maxdeg)
    if homogeneous:
        d = rng.randint(1, maxdeg)
        basis = [w for w in basis if len(w) == d]
    out = {}
    for _ in range(rng.randint(1, terms)):
        out[rng.choice(basis)] = _coeff(rng)
    return LieElement(out, n)


def random_monomial(rng, variables, maxdeg):
    m = ()
    budget = rng.randint(0, maxdeg)
    while budget > 0:
        fits = [w for w in variables if len(w) <= budget]
        if not fits:
            break
        w = rng.choice(fits)
        m = mono_mul(m, ((w, 1),))
        budget -= len(w)
    return m


def random_poly(rng, n, maxdeg, terms=3, maxlen=1, nonzero=True):
    """Random polynomial of weighted degree <= maxdeg in variables of length <= maxlen."""
    variables = lyndon_basis(n, maxlen)
    while True:
        out = {}
        for _ in range(rng.randint(1, terms)):
            m = random_monomial(rng, variables, maxdeg)
            out[m] = out.get(m, 0) + _coeff(rng)
        p = PoissonPoly(out, n)
        if p or not nonzero:
            return p


def random_homogeneous_poly(rng, n, deg, terms=3, maxlen=2):
    variables = lyndon_basis(n, maxlen)
    while True:
        out = {}
        for _ in range(rng.randint(1, terms)):
            m, budget = (), deg
            while budget > 0:
                w = rng.choice([v for v in variables if len(v) <= budget])
                m = mono_mul(m, ((w, 1),))
                budget -= len(w)
            out[m] = out.get(m, 0) + _coeff(rng)
        p = PoissonPoly(out, n)
        if p:
            return p


def random_frac(rng, n, num_deg=2, den_deg=2, terms=3, maxlen=1, nonconstant=False):
    """Random fraction; a polynomial about a third of the time."""
    while True:
        a = random_poly(rng, n, num_deg, terms, maxlen)
        if rng.random() < 0.35:
            q = PoissonFrac.from_poly(a)
        else:
            b = random_poly(rng, n, den_deg, terms, maxlen)
            q = frac_normalize(a, b)
        if not nonconstant or not q.is_constant():
            return q


def random_env(rng, n, maxhdeg, terms=3, coeff=None, nonzero=True):
    """Random element of Q^e with words of length <= maxhdeg."""
    coeff = coeff or (lambda: random_frac(rng, n, 1, 1, 2))
    while True:
        out = {}
        top = rng.randint(0, maxhdeg)
        for k in range(rng.randint(1, terms)):
            length = top if k == 0 else rng.randint(0, top)
            w = tuple(rng.randint(1, n) for _ in range(length))
            out[w] = coeff()
        u = EnvElement(out, n)
        if u or not nonzero:
            return u


def rng_for(seed):
    return random.Random(seed)
