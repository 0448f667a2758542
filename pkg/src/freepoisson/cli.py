"""Command-line front end.

Exit codes: 0 success or true verdict, 1 false verdict (member, leftdep,
pdep, aut), 2 usage or parse error, 3 internal consistency failure.
"""

import argparse
import json
import sys

from .automorphism import SubstitutionError, apply_endo, check_automorphism, extend_endo
from .dependence import METHODS, InconsistencyError, poisson_dependent
from .envelope import act, h_of
from .field import poisson_bracket_frac
from .lie import word_to_str
from .parsing import ParseError, env_to_json, field_to_json, parse_env, parse_field
from .weak import CertificateError, interreduce, left_dependent, membership, reduce_element

OK, FALSE, USAGE, INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _deg_json(d):
    return d if d != float("-inf") else "-inf"


def _common(p):
    p.add_argument("-n", type=int, default=2, help="number of generators (default 2)")
    p.add_argument("--json", action="store_true", help="emit JSON")


def build_parser():
    parser = _ArgumentParser(prog="freepoisson",
                             description="Exact computations in free Poisson fields.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("canon", help="canonical form of a field element")
    p.add_argument("expr")
    p = sub.add_parser("bracket", help="Poisson bracket of two field elements")
    p.add_argument("a")
    p.add_argument("b")
    p = sub.add_parser("deg", help="degree and multidegree of a polynomial")
    p.add_argument("expr")
    p = sub.add_parser("h", help="universal derivative h_q")
    p.add_argument("expr")
    p = sub.add_parser("env", help="canonical form of an envelope element")
    p.add_argument("expr")
    p = sub.add_parser("ldt", help="leading term of an envelope element")
    p.add_argument("expr")
    p = sub.add_parser("act", help="action of an envelope element on P(x1..xn, y)")
    p.add_argument("expr")
    p.add_argument("target", help="field element over n+1 letters; y is x(n+1)")
    for name in ("reduce", "member"):
        p = sub.add_parser(name, help="interreduce generators and reduce an element"
                           if name == "reduce" else "left ideal membership")
        p.add_argument("--gen", action="append", default=[], required=True)
        p.add_argument("--elem", required=(name == "member"))
    p = sub.add_parser("leftdep", help="left dependence of envelope elements")
    p.add_argument("exprs", nargs="+")
    p = sub.add_parser("pdep", help="Poisson dependence of two field elements")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--method", choices=list(METHODS) + ["all"], default="bracket")
    p = sub.add_parser("aut", help="verify an automorphism of P(x1, x2) with an inverse")
    for name in ("f", "g", "p", "q"):
        p.add_argument(f"--{name}", required=True)
    p = sub.add_parser("apply", help="apply the substitution x1 -> f, x2 -> g")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("expr")
    for p in sub.choices.values():
        _common(p)
    return parser


def _cmd_canon(args):
    q = parse_field(args.expr, args.n)
    return OK, str(q), {"value": field_to_json(q)}


def _cmd_bracket(args):
    q = poisson_bracket_frac(parse_field(args.a, args.n), parse_field(args.b, args.n))
    return OK, str(q), {"value": field_to_json(q)}


def _cmd_deg(args):
    q = parse_field(args.expr, args.n)
    if not q.is_polynomial():
        raise UsageError("deg expects a polynomial")
    d, per = q.num.degrees()
    text = f"deg = {d}; " + ", ".join(f"deg_x{i + 1} = {e}" for i, e in enumerate(per))
    return OK, text, {"deg": _deg_json(d), "multideg": [_deg_json(e) for e in per]}


def _cmd_h(args):
    u = h_of(parse_field(args.expr, args.n))
    return OK, str(u), {"value": env_to_json(u)}


def _cmd_env(args):
    u = parse_env(args.expr, args.n)
    return OK, str(u), {"value": env_to_json(u)}


def _cmd_ldt(args):
    u = parse_env(args.expr, args.n)
    if u.is_zero():
        raise UsageError("ldt of zero is undefined")
    c, w = u.ldt()
    text = f"ldc = {c}\nldm = h[{word_to_str(w)}]\nhdeg = {u.hdeg()}"
    return OK, text, {"ldc": field_to_json(c), "ldm": word_to_str(w), "hdeg": u.hdeg()}


def _cmd_act(args):
    u = parse_env(args.expr, args.n)
    v = parse_field(args.target, args.n + 1)
    r = act(u, v)
    return OK, str(r), {"value": field_to_json(r)}


def _gens(args):
    return [parse_env(g, args.n) for g in args.gen]


def _cmd_reduce(args):
    gens = _gens(args)
    rs = interreduce(gens)
    lines = ["reduced:"] + [f"  [{i}] {e}" for i, e in zip(rs.indices, rs.elements)]
    lines.append(f"zeros: {rs.zeros}")
    payload = {
        "reduced": [{"index": i, "value": env_to_json(e)}
                    for i, e in zip(rs.indices, rs.elements)],
        "zeros": rs.zeros,
        "steps": len(rs.log),
    }
    if args.elem is not None:
        r, _ = reduce_element(parse_env(args.elem, args.n), rs)
        lines.append(f"remainder: {r}")
        payload["remainder"] = env_to_json(r)
    return OK, "\n".join(lines), payload


def _cmd_member(args):
    gens = _gens(args)
    res = membership(parse_env(args.elem, args.n), gens)
    if res.member:
        lines = ["member"] + [f"  cofactor[{i}] = {c}" for i, c in enumerate(res.cofactors)]
        payload = {"member": True, "cofactors": [env_to_json(c) for c in res.cofactors],
                   "remainder": env_to_json(res.remainder)}
        return OK, "\n".join(lines), payload
    text = f"not member\n  remainder = {res.remainder}"
    return FALSE, text, {"member": False, "cofactors": None,
                         "remainder": env_to_json(res.remainder)}


def _cmd_leftdep(args):
    family = [parse_env(e, args.n) for e in args.exprs]
    res = left_dependent(family)
    if res.dependent:
        lines = ["dependent"] + [f"  u[{i}] = {c}" for i, c in enumerate(res.witness)]
        return OK, "\n".join(lines), {"dependent": True,
                                      "witness": [env_to_json(c) for c in res.witness]}
    return FALSE, "independent", {"dependent": False, "witness": None}


def _evidence_json(method, ev):
    if method == "bracket":
        return {"bracket": field_to_json(ev["bracket"])}
    if method == "jacobian":
        if "minor" not in ev:
            return {}
        w, v, m = ev["minor"]
        return {"minor": {"vars": [word_to_str(w), word_to_str(v)],
                          "value": field_to_json(m)}}
    if "witness" in ev:
        return {"witness": [env_to_json(c) for c in ev["witness"]]}
    return {}


def _cmd_pdep(args):
    f, g = parse_field(args.a, args.n), parse_field(args.b, args.n)
    verdict = poisson_dependent(f, g, args.method)
    word = "dependent" if verdict.dependent else "independent"
    lines = [word] + [f"  {m}: {r}" for m, r in verdict.method_results.items()]
    if "bracket" in verdict.evidence:
        lines.append(f"  {{f,g}} = {verdict.evidence['bracket']['bracket']}")
    payload = {
        "dependent": verdict.dependent,
        "methods": verdict.method_results,
        "evidence": {m: _evidence_json(m, ev) for m, ev in verdict.evidence.items()},
    }
    return (OK if verdict.dependent else FALSE), "\n".join(lines), payload


def _two_vars(args):
    if args.n != 2:
        raise UsageError("automorphisms are defined for n = 2 only")


def _cmd_aut(args):
    _two_vars(args)
    f, g, p, q = (parse_field(getattr(args, k), 2) for k in "fgpq")
    res = check_automorphism(f, g, p, q)
    word = "automorphism" if res.is_automorphism else "not an automorphism"
    lines = [word] + [f"  {k}: {v}" for k, v in res.checks.items()]
    if res.diagnostic:
        lines.append(f"  {res.diagnostic}")
    payload = {"automorphism": res.is_automorphism, "checks": res.checks,
               "diagnostic": res.diagnostic}
    return (OK if res.is_automorphism else FALSE), "\n".join(lines), payload


def _cmd_apply(args):
    _two_vars(args)
    psi = extend_endo(parse_field(args.f, 2), parse_field(args.g, 2))
    try:
        r = apply_endo(psi, parse_field(args.expr, 2))
    except SubstitutionError as exc:
        raise UsageError(str(exc)) from None
    return OK, str(r), {"value": field_to_json(r)}


COMMANDS = {
    "canon": _cmd_canon, "bracket": _cmd_bracket, "deg": _cmd_deg, "h": _cmd_h,
    "env": _cmd_env, "ldt": _cmd_ldt, "act": _cmd_act, "reduce": _cmd_reduce,
    "member": _cmd_member, "leftdep": _cmd_leftdep, "pdep": _cmd_pdep,
    "aut": _cmd_aut, "apply": _cmd_apply,
}


def run(argv, out=None, err=None):
    """Execute one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.n < 1:
            raise UsageError("-n must be positive")
        code, text, payload = COMMANDS[args.command](args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=err)
        return USAGE
    except SystemExit as exc:  # --help
        return OK if not exc.code else USAGE
    except (InconsistencyError, CertificateError) as exc:
        print(f"internal consistency failure: {exc}", file=err)
        return INTERNAL
    if args.json:
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(text, file=out)
    return code


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
