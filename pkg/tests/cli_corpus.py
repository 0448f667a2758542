"""Documented CLI example corpus: argv, exit code, text fragment and a JSON check.

Each JSON check re-parses the emitted values with the library parser and
compares them with independently constructed expectations.
"""

from typing import Callable, NamedTuple, Optional

from freepoisson import EnvElement, env_mul, parse_env, parse_field
from freepoisson.parsing import env_from_json, field_from_json


class Case(NamedTuple):
    argv: list
    code: int
    text: str
    check: Optional[Callable] = None


def _field_is(expected, n=2):
    return lambda out: field_from_json(out["value"], n) == parse_field(expected, n)


def _env_is(expected, n=2):
    return lambda out: env_from_json(out["value"], n) == parse_env(expected, n)


def _combination(coeffs, gens, n=2):
    total = EnvElement.zero(n)
    for c, g in zip(coeffs, gens):
        total = total + env_mul(env_from_json(c, n), parse_env(g, n))
    return total


def _member_ok(gens, elem):
    def check(out):
        return out["member"] and _combination(out["cofactors"], gens) == parse_env(elem)
    return check


def _witness_ok(exprs):
    def check(out):
        w = out["witness"]
        return (out["dependent"] and any(env_from_json(c) for c in w)
                and _combination(w, exprs).is_zero())
    return check


def _reduce_ok(out):
    return out["zeros"] == [0] and [r["index"] for r in out["reduced"]] == [1] \
        and env_from_json(out["reduced"][0]["value"]) == parse_env("x1*h(x1)")


CORPUS = [
    Case(["canon", "(x1^2-1)/(x1-1)"], 0, "x1 + 1", _field_is("x1+1")),
    Case(["canon", "{x1,x2}"], 0, "e[12]", _field_is("e[12]")),
    Case(["canon", "x2/(x1*x2)"], 0, "1", _field_is("1/x1")),
    Case(["canon", "e[21]"], 2, ""),
    Case(["canon", "x3"], 2, ""),
    Case(["canon", "x1 +"], 2, ""),
    Case(["bracket", "x1", "x2"], 0, "e[12]", _field_is("e[12]")),
    Case(["bracket", "e[12]", "x2"], 0, "e[122]", _field_is("e[122]")),
    Case(["bracket", "1/x1", "x2/x1"], 0, "", _field_is("-e[12]/x1^3")),
    Case(["deg", "x1^2*e[12]+x2"], 0, "deg = 4",
         lambda out: out["deg"] == 4 and out["multideg"] == [3, 1]),
    Case(["h", "x1*x2"], 0, "", _env_is("x2*h(x1) + x1*h(x2)")),
    Case(["h", "e[12]"], 0, "", _env_is("h(x1)*h(x2) - h(x2)*h(x1)")),
    Case(["env", "h(x1)*(x2)"], 0, "(x2)*h[1] + (e[12])*h[]",
         _env_is("(x2)*h(x1) + (e[12])")),
    Case(["env", "h(x1)/x2"], 2, ""),
    Case(["ldt", "h(x1)*h(x2)+x1*h(x2)"], 0, "ldm = h[12]",
         lambda out: out["ldm"] == "12" and out["hdeg"] == 2
         and field_from_json(out["ldc"]) == parse_field("1")),
    Case(["act", "h(x1)", "x3"], 0, "e[13]", _field_is("e[13]", 3)),
    Case(["act", "-n", "1", "h(x1)*h(x1)", "x2"], 0, "e[112]", _field_is("e[112]", 2)),
    Case(["reduce", "--gen", "h(x1)", "--gen", "x1*h(x1)"], 0, "zeros: [0]", _reduce_ok),
    Case(["member", "--gen", "h(x1)", "--gen", "h(x2)", "--elem", "h(x1*x2)"], 0, "member",
         _member_ok(["h(x1)", "h(x2)"], "h(x1*x2)")),
    Case(["member", "--gen", "h(x1)", "--gen", "h(x2)", "--elem", "e[12]"], 1, "not member",
         lambda out: out["member"] is False
         and env_from_json(out["remainder"]) == parse_env("e[12]")),
    Case(["leftdep", "h(x1)", "h(x1^2)"], 0, "dependent", _witness_ok(["h(x1)", "h(x1^2)"])),
    Case(["leftdep", "h(x1)", "h(x2)"], 1, "independent",
         lambda out: out["dependent"] is False),
    Case(["pdep", "x1", "x1^2+1"], 0, "dependent", lambda out: out["dependent"] is True),
    Case(["pdep", "x1", "x2", "--method", "all"], 1, "independent",
         lambda out: out["dependent"] is False
         and set(out["methods"].values()) == {False}),
    Case(["pdep", "x1/(x2+1)", "(x1^2+(x2+1)^2)/(x2+1)^2", "--method", "env"], 0, "dependent",
         lambda out: out["dependent"] is True),
    Case(["pdep", "x1", "x2", "--method", "bogus"], 2, ""),
    Case(["aut", "--f", "x2", "--g", "x1", "--p", "x2", "--q", "x1"], 0, "automorphism",
         lambda out: out["automorphism"] is True and all(out["checks"].values())),
    Case(["aut", "--f", "1/x1", "--g", "x2/x1", "--p", "1/x1", "--q", "x2/x1"], 0,
         "automorphism", lambda out: out["automorphism"] is True),
    Case(["aut", "--f", "x1", "--g", "x1", "--p", "x1", "--q", "x2"], 1,
         "not an automorphism", lambda out: out["automorphism"] is False),
    Case(["aut", "--f", "e[12]", "--g", "x2", "--p", "x1", "--q", "x2"], 1,
         "not an automorphism", lambda out: out["automorphism"] is False),
    Case(["apply", "--f", "x2", "--g", "x1", "x1/x2"], 0, "", _field_is("x2/x1")),
    Case(["apply", "--f", "x1", "--g", "x1", "1/(x1-x2)"], 2, ""),
    Case(["frobnicate"], 2, ""),
]
