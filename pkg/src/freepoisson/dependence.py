"""Poisson dependence of two elements of the free Poisson field.

Three independent tests are available and must agree:

* ``bracket``: ``{f, g} == 0``;
* ``jacobian``: all 2x2 minors of the gradients in the basis variables vanish;
* ``env``: ``h_f`` and ``h_g`` are left dependent over Q^e.

The statement for more than two elements is not covered; ``left_dependent``
in :mod:`freepoisson.weak` handles longer families but says nothing about
Poisson dependence there.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .envelope import h_of
from .field import partial, poisson_bracket_frac
from .lie import word_key
from .weak import left_dependent

METHODS = ("bracket", "jacobian", "env")


class InconsistencyError(RuntimeError):
    """The dependence methods disagreed; indicates a bug, never a verdict."""


def _bracket(f, g):
    br = poisson_bracket_frac(f, g)
    return br.is_zero(), {"bracket": br}


def _jacobian(f, g):
    variables = sorted(f.variables() | g.variables(), key=word_key)
    df = {w: partial(f, w) for w in variables}
    dg = {w: partial(g, w) for w in variables}
    for w, v in combinations(variables, 2):
        minor = df[w] * dg[v] - df[v] * dg[w]
        if not minor.is_zero():
            return False, {"minor": (w, v, minor)}
    return True, {}


def _env(f, g):
    dep = left_dependent([h_of(f), h_of(g)])
    if dep.dependent:
        return True, {"witness": dep.witness}
    return False, {}


_RUNNERS = {"bracket": _bracket, "jacobian": _jacobian, "env": _env}


def dep_bracket(f, g):
    return _bracket(f, g)[0]


def dep_jacobian(f, g):
    return _jacobian(f, g)[0]


def dep_env(f, g):
    return _env(f, g)[0]


@dataclass
class DependenceVerdict:
    dependent: bool
    method_results: dict
    evidence: dict = field(default_factory=dict)


def poisson_dependent(f, g, methods="bracket"):
    """Run the selected dependence tests on ``(f, g)``.

    ``methods`` is a method name, ``"all"``, or an iterable of names.
    Disagreement between methods raises :class:`InconsistencyError`.
    """
    if methods == "all":
        methods = METHODS
    elif isinstance(methods, str):
        methods = (methods,)
    unknown = [m for m in methods if m not in _RUNNERS]
    if unknown or not methods:
        raise ValueError(f"unknown dependence method(s): {unknown or methods}")
    results, evidence = {}, {}
    for m in methods:
        results[m], evidence[m] = _RUNNERS[m](f, g)
    verdicts = set(results.values())
    if len(verdicts) != 1:
        raise InconsistencyError(
            f"dependence methods disagree on f={f}, g={g}: {results}; evidence {evidence}")
    return DependenceVerdict(verdicts.pop(), results, evidence)
