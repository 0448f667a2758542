"""Endomorphisms of the two-variable free Poisson field P(x, y).

A pair ``(f, g)`` extends uniquely to a bracket-compatible substitution
``x1 -> f, x2 -> g``: the image of ``e_w`` is the bracket of the images of
its standard factors.  Automorphy is checked against a caller-supplied
inverse pair; no inversion is attempted.
"""

from dataclasses import dataclass, field

from .dependence import InconsistencyError
from .envelope import h_of
from .field import PoissonFrac, poisson_bracket_frac
from .lie import standard_factorization


class SubstitutionError(ValueError):
    """The denominator of an element maps to zero under the substitution."""


class Endomorphism:
    """Substitution ``x1 -> f, x2 -> g`` extended to every basis variable."""

    n = 2

    def __init__(self, f, g):
        if f.n != 2 or g.n != 2:
            raise ValueError("endomorphisms are defined on the two-variable field only")
        self.images = (f, g)
        self.image_cache = {(1,): f, (2,): g}

    def image(self, w):
        w = tuple(w)
        if w not in self.image_cache:
            u, v = standard_factorization(w)
            self.image_cache[w] = poisson_bracket_frac(self.image(u), self.image(v))
        return self.image_cache[w]

    def __call__(self, a):
        return apply_endo(self, a)

    def __repr__(self):
        f, g = self.images
        return f"Endomorphism(x1 -> {f}, x2 -> {g})"


def extend_endo(f, g):
    return Endomorphism(f, g)


def apply_endo(psi, a):
    """Image of ``a`` under ``psi``; raises :class:`SubstitutionError` if undefined."""
    if a.n != 2:
        raise ValueError("expected an element of the two-variable field")
    one = PoissonFrac.const(1, 2)
    values = {w: psi.image(w) for w in a.variables()}
    den = a.den.evaluate(values, one)
    if den.is_zero():
        raise SubstitutionError(f"denominator {a.den} maps to 0: not in the domain of {psi}")
    return a.num.evaluate(values, one) / den


def is_rational_in_generators(a):
    """True iff ``a`` only involves ``x1, ..., xn``.

    Both the syntactic test and ``hdeg(h_a) <= 1`` are computed; they must agree.
    """
    syntactic = all(len(w) == 1 for w in a.variables())
    via_h = h_of(a).hdeg() <= 1
    if syntactic != via_h:
        raise InconsistencyError(
            f"rationality tests disagree on {a}: syntactic={syntactic}, hdeg test={via_h}")
    return syntactic


@dataclass
class AutomorphismCheck:
    is_automorphism: bool
    checks: dict = field(default_factory=dict)
    diagnostic: str = ""


def check_automorphism(f, g, p, q):
    """Verify that ``(p, q)`` inverts ``(f, g)`` on the field of rational functions."""
    checks = {}
    names = {"f": f, "g": g, "p": p, "q": q}
    for name, a in names.items():
        checks[f"rational_{name}"] = is_rational_in_generators(a)
    bad = [k for k, ok in checks.items() if not ok]
    if bad:
        return AutomorphismCheck(False, checks,
                                 "not rational in x1, x2: " + ", ".join(b[-1] for b in bad))
    x1, x2 = PoissonFrac.var((1,), 2), PoissonFrac.var((2,), 2)
    forward, backward = Endomorphism(f, g), Endomorphism(p, q)
    try:
        checks["p(f,g) = x1"] = apply_endo(forward, p) == x1
        checks["q(f,g) = x2"] = apply_endo(forward, q) == x2
        checks["f(p,q) = x1"] = apply_endo(backward, f) == x1
        checks["g(p,q) = x2"] = apply_endo(backward, g) == x2
    except SubstitutionError as exc:
        return AutomorphismCheck(False, checks, str(exc))
    ok = all(checks.values())
    if ok:
        # both images must have h-degree exactly one
        checks["hdeg(h_f) = hdeg(h_g) = 1"] = h_of(f).hdeg() == 1 and h_of(g).hdeg() == 1
        ok = checks["hdeg(h_f) = hdeg(h_g) = 1"]
    diagnostic = "" if ok else "failed: " + ", ".join(k for k, v in checks.items() if not v)
    return AutomorphismCheck(ok, checks, diagnostic)


def verify_automorphism(f, g, p, q):
    return check_automorphism(f, g, p, q).is_automorphism
