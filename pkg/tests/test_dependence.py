import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from freepoisson import (
    EnvElement,
    InconsistencyError,
    PoissonFrac,
    dep_bracket,
    dep_env,
    dep_jacobian,
    env_mul,
    fvar,
    h_of,
    poisson_dependent,
)
from freepoisson import dependence
from freepoisson.sampling import random_frac

x1, x2 = fvar(1), fvar(2)
e12 = fvar((1, 2))

METHODS = (dep_bracket, dep_jacobian, dep_env)


@pytest.mark.parametrize("f,g,expected", [
    (x1, x1 ** 2 + 1, True),
    (x1, x2, False),
    (x1 / x2, (x1 ** 2 + x2 ** 2) / x2 ** 2, True),
    (e12, x1, False),
    (x1, x1 ** 2, True),
    (x1 / x2, x2 / x1, True),
    (e12, 3 * e12 ** 2 - 1 / e12, True),
])
@pytest.mark.parametrize("method", METHODS, ids=lambda m: m.__name__)
def test_examples(method, f, g, expected):
    assert method(f, g) is expected


def test_bracket_evidence():
    v = poisson_dependent(x1, x2)
    assert not v.dependent and v.evidence["bracket"]["bracket"] == e12


def test_jacobian_evidence_names_a_nonzero_minor():
    _, ev = dependence._jacobian(e12, x1)
    w, v, minor = ev["minor"]
    assert {w, v} == {(1,), (1, 2)} and minor in (1, -1)


def test_env_witness_for_a_square():
    _, ev = dependence._env(x1, x1 ** 2)
    u = ev["witness"]
    assert env_mul(u[0], h_of(x1)) + env_mul(u[1], h_of(x1 ** 2)) == EnvElement.zero()
    assert h_of(x1 ** 2) == (2 * x1) * h_of(x1)


def test_all_methods_report():
    v = poisson_dependent(x1, x1 ** 2 + 1, "all")
    assert v.dependent and v.method_results == {"bracket": True, "jacobian": True, "env": True}
    v = poisson_dependent(x1, x2, ["jacobian", "env"])
    assert not v.dependent and set(v.method_results) == {"jacobian", "env"}


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        poisson_dependent(x1, x2, "guess")


def test_disagreement_raises(monkeypatch):
    monkeypatch.setitem(dependence._RUNNERS, "env", lambda f, g: (True, {}))
    with pytest.raises(InconsistencyError):
        poisson_dependent(x1, x2, "all")


seeds = st.integers(min_value=0, max_value=10**9)


def rational_function_of(rng, f):
    def univariate():
        total = PoissonFrac.const(0, f.n)
        for i in range(rng.randint(1, 3)):
            total = total + f ** i * Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        return total

    while True:
        p, q = univariate(), univariate()
        if q:
            return p / q


@settings(max_examples=30, deadline=None)
@given(seed=seeds)
def test_rational_functions_of_f_are_dependent(seed):
    rng = random.Random(seed)
    f = random_frac(rng, 2, 2, 2, terms=2, maxlen=2, nonconstant=True)
    g = rational_function_of(rng, f)
    assert poisson_dependent(f, g, "all").dependent
    assert poisson_dependent(g, f, "all").dependent


@settings(max_examples=30, deadline=None)
@given(seed=seeds)
def test_generic_pairs_agree_and_are_symmetric(seed):
    rng = random.Random(seed)
    f = random_frac(rng, 2, 2, 2, maxlen=2)
    g = random_frac(rng, 2, 2, 2, maxlen=2)
    forward = poisson_dependent(f, g, "all")
    assert poisson_dependent(g, f, "all").dependent == forward.dependent
    assert forward.dependent == f.bracket(g).is_zero()


@settings(max_examples=20, deadline=None)
@given(seed=seeds, c=st.integers(min_value=-5, max_value=5))
def test_constants_are_dependent_on_everything(seed, c):
    g = random_frac(random.Random(seed), 2, 2, 2, maxlen=2)
    assert poisson_dependent(PoissonFrac.const(c), g, "all").dependent
