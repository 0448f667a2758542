"""Text syntax for field and envelope elements.

Field expressions::

    field  := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | factor
    factor := base ('^' ['-'] int)?
    base   := int | 'x' int | 'e[' word ']' | '(' field ')' | '{' field ',' field '}'

Envelope expressions use the same atoms as constants (hdeg 0) plus
``h(field)`` for the universal derivation and ``h[word]`` for a word in
the generators; products are noncommutative and division is not allowed::

    env    := eterm (('+' | '-') eterm)*
    eterm  := eunary ('*' eunary)*
    eunary := '-' eunary | efactor
    efactor:= eatom ('^' int)?
    eatom  := '(' field ')' | '(' env ')' | 'h(' field ')' | 'h[' word ']' | field atom

Printing uses ``str`` on the values, which is canonical and parses back.
"""

import re

from .envelope import EnvElement, env_mul, h_of
from .field import PoissonFrac, poisson_bracket_frac
from .lie import is_lyndon, word_from_str, word_to_str


class ParseError(ValueError):
    def __init__(self, message, pos=None, src=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
            if src is not None:
                message += f"\n  {src}\n  {' ' * pos}^"
        super().__init__(message)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<var>x(?P<idx>\d+))
  | (?P<evar>e\[(?P<ew>[\d,\s]*)\])
  | (?P<hword>h\[(?P<hw>[\d,\s]*)\])
  | (?P<hopen>h\()
  | (?P<op>[-+*/^(){},])
""", re.VERBOSE)


def tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos, src)
        kind = m.lastgroup
        if kind in ("idx", "ew", "hw"):
            kind = {"idx": "var", "ew": "evar", "hw": "hword"}[kind]
        if kind != "ws":
            if kind == "int":
                value = int(m.group("int"))
            elif kind == "var":
                value = int(m.group("idx"))
            elif kind == "evar":
                value = m.group("ew").replace(" ", "")
            elif kind == "hword":
                value = m.group("hw").replace(" ", "")
            else:
                value = m.group()
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src, n):
        self.src = src
        self.n = n
        self.tokens = tokenize(src)
        self.i = 0

    # -- helpers --------------------------------------------------------------

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, value):
        kind, v, _ = self.peek()
        return kind in ("op", "hopen") and v == value

    def expect(self, value):
        kind, v, pos = self.next()
        if v != value or kind not in ("op", "hopen"):
            raise self.error(f"expected {value!r}, found {self._describe(kind, v)}", pos)

    def error(self, message, pos=None):
        if pos is None:
            pos = self.peek()[2]
        return ParseError(message, pos, self.src)

    @staticmethod
    def _describe(kind, v):
        return "end of input" if kind == "end" else repr(str(v))

    def finish(self):
        kind, v, pos = self.peek()
        if kind != "end":
            raise self.error(f"unexpected {self._describe(kind, v)}", pos)

    # -- field expressions ----------------------------------------------------

    def field(self):
        value = self.term()
        while self.at("+") or self.at("-"):
            op = self.next()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.at("*") or self.at("/"):
            _, op, pos = self.next()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise self.error("division by zero", pos)
                value = value / rhs
        return value

    def unary(self):
        if self.at("-"):
            self.next()
            return -self.unary()
        if self.at("+"):
            self.next()
            return self.unary()
        return self.factor()

    def factor(self):
        value = self.base()
        if self.at("^"):
            _, _, pos = self.next()
            sign = 1
            if self.at("-"):
                self.next()
                sign = -1
            kind, k, kpos = self.next()
            if kind != "int":
                raise self.error("exponent must be an integer literal", kpos)
            if sign < 0 and value.is_zero():
                raise self.error("negative power of zero", pos)
            value = value ** (sign * k)
        return value

    def base(self):
        kind, v, pos = self.peek()
        atom = self.field_atom()
        if atom is not None:
            return atom
        if self.at("("):
            self.next()
            value = self.field()
            self.expect(")")
            return value
        if kind == "hopen" or kind == "hword":
            raise self.error("h(...) is only allowed in envelope expressions", pos)
        raise self.error(f"unexpected {self._describe(kind, v)}", pos)

    def field_atom(self):
        """Literal, variable or bracket; ``None`` if the next token is none of these."""
        kind, v, pos = self.peek()
        n = self.n
        if kind == "int":
            self.next()
            return PoissonFrac.const(v, n)
        if kind == "var":
            self.next()
            if not 1 <= v <= n:
                raise self.error(f"variable x{v} out of range for n={n}", pos)
            return PoissonFrac.var((v,), n)
        if kind == "evar":
            self.next()
            try:
                w = word_from_str(v)
            except ValueError:
                raise self.error(f"malformed word {v!r}", pos) from None
            if not is_lyndon(w):
                raise self.error(f"e[{v}]: {v!r} is not a Lyndon word", pos)
            if min(w) < 1 or max(w) > n:
                raise self.error(f"e[{v}]: letter out of range for n={n}", pos)
            return PoissonFrac.var(w, n)
        if kind == "op" and v == "{":
            self.next()
            a = self.field()
            self.expect(",")
            b = self.field()
            self.expect("}")
            return poisson_bracket_frac(a, b)
        return None

    # -- envelope expressions -------------------------------------------------

    def env(self):
        value = self.eterm()
        while self.at("+") or self.at("-"):
            op = self.next()[1]
            rhs = self.eterm()
            value = value + rhs if op == "+" else value - rhs
        return value

    def eterm(self):
        value = self.eunary()
        while self.at("*") or self.at("/"):
            _, op, pos = self.next()
            if op == "/":
                raise self.error("division is not allowed in envelope expressions", pos)
            value = env_mul(value, self.eunary())
        return value

    def eunary(self):
        if self.at("-"):
            self.next()
            return -self.eunary()
        if self.at("+"):
            self.next()
            return self.eunary()
        return self.efactor()

    def efactor(self):
        value = self.eatom()
        if self.at("^"):
            self.next()
            kind, k, kpos = self.next()
            if kind != "int":
                raise self.error(
                    "envelope exponents must be nonnegative integer literals", kpos)
            value = value ** k
        return value

    def eatom(self):
        kind, v, pos = self.peek()
        n = self.n
        if kind == "hopen":
            self.next()
            q = self.field()
            self.expect(")")
            return h_of(q)
        if kind == "hword":
            self.next()
            try:
                w = word_from_str(v)
            except ValueError:
                raise self.error(f"malformed word {v!r}", pos) from None
            if w and (min(w) < 1 or max(w) > n):
                raise self.error(f"h[{v}]: letter out of range for n={n}", pos)
            return EnvElement.word(w, n)
        if self.at("("):
            start = self.i
            self.next()
            try:
                q = self.field()
                if self.at(")"):
                    self.next()
                    return EnvElement.from_field(q)
            except ParseError:
                pass
            self.i = start + 1
            value = self.env()
            self.expect(")")
            return value
        atom = self.field_atom()
        if atom is not None:
            return EnvElement.from_field(atom)
        raise self.error(f"unexpected {self._describe(kind, v)}", pos)


def parse_field(src, n=2):
    """Parse a field expression over ``n`` letters into a :class:`PoissonFrac`."""
    p = _Parser(src, n)
    value = p.field()
    p.finish()
    return value


def parse_env(src, n=2):
    """Parse an envelope expression over ``n`` letters into an :class:`EnvElement`."""
    p = _Parser(src, n)
    value = p.env()
    p.finish()
    return value


def parse_poly(src, n=2):
    q = parse_field(src, n)
    if not q.is_polynomial():
        raise ParseError(f"{src!r} is not a polynomial")
    return q.num


def print_field(q):
    return str(q)


def print_env(u):
    return str(u)


# -- JSON forms ---------------------------------------------------------------

def field_to_json(q):
    return {"num": str(q.num), "den": str(q.den)}


def field_from_json(obj, n=2):
    return parse_field(f"({obj['num']})/({obj['den']})", n)


def env_to_json(u):
    return [{"coeff": field_to_json(c), "word": word_to_str(w)} for w, c in u.sorted_terms()]


def env_from_json(items, n=2):
    terms = {}
    for item in items:
        terms[word_from_str(item["word"])] = field_from_json(item["coeff"], n)
    return EnvElement(terms, n)
