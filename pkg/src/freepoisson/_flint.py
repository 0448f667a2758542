"""Bridge between sparse term dicts and FLINT multivariate polynomials over Q.

Only the variables that occur in a group of polynomials are mapped to FLINT
generators, so the unbounded variable set never has to be materialized.
"""

from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_mpoly_ctx


@lru_cache(maxsize=None)
def _ctx(k):
    return fmpq_mpoly_ctx.get(tuple(f"v{i}" for i in range(k)), "lex")


class Frame:
    """Shared FLINT context for a group of polynomials."""

    __slots__ = ("variables", "index", "k", "ctx")

    def __init__(self, polys):
        vs = set()
        for p in polys:
            for m in p.terms:
                for w, _ in m:
                    vs.add(w)
        self.variables = sorted(vs)
        self.index = {w: i for i, w in enumerate(self.variables)}
        self.k = max(len(self.variables), 1)
        self.ctx = _ctx(self.k)

    def to(self, p):
        k, index = self.k, self.index
        d = {}
        for m, c in p.terms.items():
            e = [0] * k
            for w, x in m:
                e[index[w]] = x
            d[tuple(e)] = fmpq(c.numerator, c.denominator)
        return self.ctx.from_dict(d)

    def back(self, P):
        """Term dict (monomial -> Fraction) of a FLINT polynomial."""
        variables = self.variables
        terms = {}
        for exps, c in P.to_dict().items():
            m = tuple((variables[i], int(e)) for i, e in enumerate(exps) if e)
            terms[m] = Fraction(int(c.p), int(c.q))
        return terms
