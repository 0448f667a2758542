"""Weak algorithm for Q^e: interreduction, left dependence, left-ideal membership.

Leading monomials multiply by concatenation and leading coefficients by
field multiplication, so a left multiple ``v s`` has leading word
``ldm(v) ldm(s)``.  A family whose leading words are pairwise suffix-free
therefore has no cancellation among the leading terms of ``sum v_i s_i``;
reducing until that holds decides both left dependence and membership.

Every certificate returned here is re-checked with :func:`env_mul` first.
"""

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .envelope import EnvElement, env_mul, hword_key


class CertificateError(RuntimeError):
    """A computed witness or cofactor set failed re-verification."""


class Step(NamedTuple):
    """One elementary transformation ``elements[target] -= multiplier * elements[source]``."""

    target: int
    multiplier: EnvElement
    source: int


@dataclass
class ReducedSet:
    """Result of :func:`interreduce`.

    ``elements`` are the surviving nonzero elements and ``indices`` their
    positions in the input family.  ``rows[j]`` expresses the current
    element ``j`` as a left combination of the inputs (one entry per input).
    """

    elements: list
    indices: list
    zeros: list
    log: list
    rows: dict = field(repr=False)
    n: int = 2

    def is_suffix_free(self):
        words = [e.ldm() for e in self.elements]
        for i, a in enumerate(words):
            for j, b in enumerate(words):
                if i != j and _is_suffix(a, b):
                    return False
        return True

    def replay(self, family):
        """Apply the logged steps to ``family``; returns ``(elements, zeros)``."""
        cur = list(family)
        for step in self.log:
            cur[step.target] = cur[step.target] - env_mul(step.multiplier, cur[step.source])
        zeros = [i for i, e in enumerate(cur) if e.is_zero()]
        return [cur[i] for i in self.indices], zeros


def _is_suffix(a, b):
    """True if word ``a`` is a suffix of word ``b`` (the empty word always is)."""
    return len(a) <= len(b) and b[len(b) - len(a):] == a


def _combine(row, family, n):
    total = EnvElement.zero(n)
    for k, v in row.items():
        total = total + env_mul(v, family[k])
    return total


def interreduce(family):
    """Reduce a finite family until its leading words are suffix-free.

    Strategy: among elements whose leading word has another element's
    leading word as a suffix, reduce the one with the largest leading word
    (lowest index on ties), using the lowest-index applicable reducer.
    """
    family = list(family)
    if not family:
        return ReducedSet([], [], [], [], {}, 2)
    n = family[0].n
    if any(s.n != n for s in family):
        raise ValueError("alphabet size mismatch inside family")
    one = EnvElement.one(n)
    cur = list(family)
    rows = {j: {j: one} for j in range(len(cur))}
    zeros = [j for j, s in enumerate(cur) if s.is_zero()]
    active = [j for j, s in enumerate(cur) if not s.is_zero()]
    log = []
    while True:
        ldm = {j: cur[j].ldm() for j in active}
        best = None
        for j in active:
            sources = [i for i in active if i != j and _is_suffix(ldm[i], ldm[j])]
            if not sources:
                continue
            if best is None or hword_key(ldm[j]) > hword_key(ldm[best[0]]):
                best = (j, sources[0])
        if best is None:
            break
        j, i = best
        prefix = ldm[j][: len(ldm[j]) - len(ldm[i])]
        mult = EnvElement._raw({prefix: cur[j].ldc() / cur[i].ldc()}, n)
        cur[j] = cur[j] - env_mul(mult, cur[i])
        row = dict(rows[j])
        for k, v in rows[i].items():
            r = row.get(k, EnvElement.zero(n)) - env_mul(mult, v)
            if r.is_zero():
                row.pop(k, None)
            else:
                row[k] = r
        rows[j] = row
        log.append(Step(j, mult, i))
        if cur[j].is_zero():
            zeros.append(j)
            active.remove(j)
    return ReducedSet([cur[j] for j in active], list(active), sorted(zeros), log, rows, n)


class LeftDependence(NamedTuple):
    dependent: bool
    witness: Optional[list]


def left_dependent(family):
    """Decide left dependence of a finite family over Q^e.

    Returns ``(verdict, witness)``; when dependent, ``witness`` is a list
    ``u`` with ``sum u[i] * family[i] == 0`` and not all ``u[i]`` zero.
    """
    family = list(family)
    if not family:
        raise ValueError("left_dependent needs a nonempty family")
    rs = interreduce(family)
    if not rs.zeros:
        return LeftDependence(False, None)
    n = rs.n
    row = rs.rows[rs.zeros[0]]
    witness = [row.get(k, EnvElement.zero(n)) for k in range(len(family))]
    if all(w.is_zero() for w in witness):
        raise CertificateError("trivial dependence witness")
    if not _combine(dict(enumerate(witness)), family, n).is_zero():
        raise CertificateError("dependence witness does not annihilate the family")
    return LeftDependence(True, witness)


class Membership(NamedTuple):
    member: bool
    cofactors: Optional[list]
    remainder: EnvElement


def _top_reduce(u, elements):
    # subtract left multiples of ``elements`` while one of them has a leading
    # word that is a suffix of the current leading word
    n = u.n
    r = u
    acc = {}
    words = [None if e.is_zero() else e.ldm() for e in elements]
    while not r.is_zero():
        lw = r.ldm()
        hit = next((k for k, w in enumerate(words) if w is not None and _is_suffix(w, lw)),
                   None)
        if hit is None:
            break
        e = elements[hit]
        mult = EnvElement._raw({lw[: len(lw) - len(words[hit])]: r.ldc() / e.ldc()}, n)
        r = r - env_mul(mult, e)
        acc[hit] = acc.get(hit, EnvElement.zero(n)) + mult
    return r, acc


def reduce_element(u, rs):
    """Top-reduce ``u`` by a reduced set; returns ``(remainder, multipliers)``.

    ``multipliers`` maps positions in ``rs.elements`` to left multipliers.
    """
    return _top_reduce(u, rs.elements)


def membership(u, family):
    """Decide whether ``u`` lies in the left ideal generated by ``family``.

    ``u`` is first top-reduced by the generators themselves, which keeps
    cofactors small; whatever is left is reduced by the interreduced
    (suffix-free) family, whose remainder is zero exactly for members.
    Cofactors are expressed against the original family and verified:
    ``sum cofactors[i] * family[i] == u``.
    """
    family = list(family)
    n = u.n
    if not family:
        return Membership(u.is_zero(), [] if u.is_zero() else None, u)
    r, cof = _top_reduce(u, family)
    if not r.is_zero():
        rs = interreduce(family)
        r, acc = reduce_element(r, rs)
        for k, mult in acc.items():
            for src, v in rs.rows[rs.indices[k]].items():
                cof[src] = cof.get(src, EnvElement.zero(n)) + env_mul(mult, v)
    cofactors = [cof.get(k, EnvElement.zero(n)) for k in range(len(family))]
    if _combine(dict(enumerate(cofactors)), family, n) != u - r:
        raise CertificateError("membership cofactors do not reproduce the element")
    if not r.is_zero():
        return Membership(False, None, r)
    return Membership(True, cofactors, r)


def omega_decompose(u):
    """Split ``u`` in the ideal generated by the ``h_{x_i}`` as ``sum u_i h_{x_i}``."""
    if () in u.terms:
        raise ValueError("element has a nonzero field component; it is not in Omega_Q")
    parts = [dict() for _ in range(u.n)]
    for w, q in u.terms.items():
        parts[w[-1] - 1][w[:-1]] = q
    return [EnvElement._raw(p, u.n) for p in parts]
