"""Gödel numbering of a small first-order arithmetic language.

A token word ``t_1 ... t_k`` is numbered ``2^c(t_1) * 3^c(t_2) * ... * p_k^c(t_k)``
with the code table below.  The empty word is numbered 1.

Formulas are fully parenthesised::

    term    := "0" | "S" term | variable
    formula := "(" term "=" term ")"
             | "~" formula
             | "(" formula "∨" formula ")"
             | "(" "A" variable ")" formula

Variables are written ``v1, v2, ...`` (``v₁, v₂`` on output); ``x, y, z`` are
accepted as aliases of the first three.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Sequence, Union

from sympy import isprime, sieve

ZERO, SUCC, NOT, OR, ALL, LPAREN, RPAREN, EQ = "0", "S", "~", "∨", "A", "(", ")", "="

CODES = {ZERO: 1, SUCC: 3, NOT: 5, OR: 7, ALL: 9, LPAREN: 11, RPAREN: 13, EQ: 15}
FIRST_VARIABLE_PRIME_INDEX = 7  # sieve[7] == 17
ALIASES = {"x": "v1", "y": "v2", "z": "v3"}
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_PLAIN = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")


class UnknownLogicalToken(ValueError):
    pass


class NotASequenceNumber(ValueError):
    pass


class NotAFormula(ValueError):
    pass


class NotATerm(ValueError):
    pass


def is_variable(tok: str) -> bool:
    return len(tok) > 1 and tok[0] == "v" and tok[1:].isdigit() and tok[1] != "0"


def variable(i: int) -> str:
    return f"v{i}"


def variable_code(tok: str) -> int:
    return sieve[FIRST_VARIABLE_PRIME_INDEX + int(tok[1:]) - 1]


def variable_for_code(code: int) -> str:
    if code < 17 or not isprime(code):
        raise UnknownLogicalToken(f"{code} is not a variable code")
    return variable(sieve.search(code)[0] - FIRST_VARIABLE_PRIME_INDEX + 1)


def code(tok: str) -> int:
    if tok in CODES:
        return CODES[tok]
    if is_variable(tok):
        return variable_code(tok)
    raise UnknownLogicalToken(tok)


_DECODE = {c: t for t, c in CODES.items()}


def token_for_code(c: int) -> str:
    if c in _DECODE:
        return _DECODE[c]
    return variable_for_code(c)


def encode_word(tokens: Sequence[str]) -> int:
    g = 1
    for i, tok in enumerate(tokens, start=1):
        g *= sieve[i] ** code(tok)
    return g


def decode_number(g: int) -> list[str]:
    """Invert :func:`encode_word` by dividing out successive primes."""
    if g < 1:
        raise NotASequenceNumber(f"{g} is not a positive integer")
    tokens = []
    i = 1
    while g > 1:
        p = sieve[i]
        e = 0
        while g % p == 0:
            g //= p
            e += 1
        if e == 0:
            raise NotASequenceNumber(f"prime {p} is missing from the factorisation")
        try:
            tokens.append(token_for_code(e))
        except UnknownLogicalToken:
            raise NotASequenceNumber(f"exponent {e} of {p} is not a symbol code") from None
        i += 1
    return tokens


def numeral(q: int) -> list[str]:
    return [SUCC] * q + [ZERO]


def Z(q: int) -> int:
    return encode_word(numeral(q))


# formula trees


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Succ:
    arg: "Term"


@dataclass(frozen=True)
class Var:
    name: str


Term = Union[Zero, Succ, Var]


@dataclass(frozen=True)
class Equals:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class ForAll:
    var: str
    body: "Formula"


Formula = Union[Equals, Not, Or, ForAll]


class _Parser:
    def __init__(self, tokens):
        self.toks = list(tokens)
        self.i = 0

    def peek(self, k=0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise NotAFormula(f"expected {expected or 'a token'} at position {self.i}, got {tok!r}")
        self.i += 1
        return tok

    def term(self):
        tok = self.peek()
        if tok == ZERO:
            self.i += 1
            return Zero()
        if tok == SUCC:
            self.i += 1
            return Succ(self.term())
        if tok is not None and is_variable(tok):
            self.i += 1
            return Var(tok)
        raise NotATerm(f"expected a term at position {self.i}, got {tok!r}")

    def formula(self):
        tok = self.peek()
        if tok == NOT:
            self.i += 1
            return Not(self.formula())
        if tok != LPAREN:
            raise NotAFormula(f"expected '(' or '~' at position {self.i}, got {tok!r}")
        nxt = self.peek(1)
        if nxt == ALL:
            self.i += 2
            var = self.take()
            if not is_variable(var):
                raise NotAFormula(f"quantifier needs a variable, got {var!r}")
            self.take(RPAREN)
            return ForAll(var, self.formula())
        if nxt in (ZERO, SUCC) or (nxt is not None and is_variable(nxt)):
            self.i += 1
            left = self._term_in_formula()
            self.take(EQ)
            right = self._term_in_formula()
            self.take(RPAREN)
            return Equals(left, right)
        self.i += 1
        left = self.formula()
        self.take(OR)
        right = self.formula()
        self.take(RPAREN)
        return Or(left, right)

    def _term_in_formula(self):
        try:
            return self.term()
        except NotATerm as exc:
            raise NotAFormula(str(exc)) from None

    def end(self):
        if self.i != len(self.toks):
            raise NotAFormula(f"trailing tokens from position {self.i}")


def parse_formula(tokens: Sequence[str]) -> Formula:
    p = _Parser(tokens)
    f = p.formula()
    p.end()
    return f


def parse_term(tokens: Sequence[str]) -> Term:
    p = _Parser(tokens)
    t = p.term()
    if p.i != len(p.toks):
        raise NotATerm(f"trailing tokens from position {p.i}")
    return t


def serialize(node) -> list[str]:
    if isinstance(node, Zero):
        return [ZERO]
    if isinstance(node, Succ):
        return [SUCC] + serialize(node.arg)
    if isinstance(node, Var):
        return [node.name]
    if isinstance(node, Equals):
        return [LPAREN] + serialize(node.left) + [EQ] + serialize(node.right) + [RPAREN]
    if isinstance(node, Not):
        return [NOT] + serialize(node.body)
    if isinstance(node, Or):
        return [LPAREN] + serialize(node.left) + [OR] + serialize(node.right) + [RPAREN]
    if isinstance(node, ForAll):
        return [LPAREN, ALL, node.var, RPAREN] + serialize(node.body)
    raise TypeError(f"not a formula node: {node!r}")


def _occurrences(node, pos, bound, out):
    """Append (position, variable, is_free) for every variable token; return next position."""
    if isinstance(node, Zero):
        return pos + 1
    if isinstance(node, Succ):
        return _occurrences(node.arg, pos + 1, bound, out)
    if isinstance(node, Var):
        out.append((pos, node.name, node.name not in bound))
        return pos + 1
    if isinstance(node, Equals):
        pos = _occurrences(node.left, pos + 1, bound, out)
        return _occurrences(node.right, pos + 1, bound, out) + 1
    if isinstance(node, Not):
        return _occurrences(node.body, pos + 1, bound, out)
    if isinstance(node, Or):
        pos = _occurrences(node.left, pos + 1, bound, out)
        return _occurrences(node.right, pos + 1, bound, out) + 1
    if isinstance(node, ForAll):
        out.append((pos + 2, node.var, False))
        return _occurrences(node.body, pos + 4, bound | {node.var}, out)
    raise TypeError(f"not a formula node: {node!r}")


def _as_formula(f) -> Formula:
    if isinstance(f, (Equals, Not, Or, ForAll)):
        return f
    return parse_formula(f)


def free_occurrences(f, v: int) -> list[int]:
    """Token positions where the variable with code ``v`` occurs free in ``f``.

    ``f`` is a formula tree or a token sequence.
    """
    name = variable_for_code(v)
    out: list = []
    _occurrences(_as_formula(f), 0, frozenset(), out)
    return [pos for pos, var, free in out if free and var == name]


def _decode_formula(g: int) -> list[str]:
    try:
        tokens = decode_number(g)
    except NotASequenceNumber as exc:
        raise NotAFormula(str(exc)) from None
    parse_formula(tokens)
    return tokens


def neg(g: int) -> int:
    return encode_word([NOT] + _decode_formula(g))


def form(g: int) -> bool:
    try:
        _decode_formula(g)
    except (NotAFormula, NotATerm):
        return False
    return True


def sb(x: int, v: int, z: int) -> int:
    """Substitute the term numbered ``z`` for free occurrences of variable ``v``.

    Plain textual substitution: no renaming is done, so a term containing a
    variable may be captured by a quantifier.
    """
    tokens = _decode_formula(x)
    try:
        term = decode_number(z)
    except NotASequenceNumber as exc:
        raise NotATerm(str(exc)) from None
    parse_term(term)
    free = set(free_occurrences(tokens, v))
    if not free:
        return x
    out: list[str] = []
    for i, tok in enumerate(tokens):
        if i in free:
            out.extend(term)
        else:
            out.append(tok)
    return encode_word(out)


@dataclass(frozen=True)
class GrowthRow:
    q: int
    z: int

    @property
    def passed(self) -> bool:
        return self.z > self.q


def numeral_growth_report(q_max: int) -> list[GrowthRow]:
    return [GrowthRow(q, Z(q)) for q in range(q_max + 1)]


def concat_monotonic_check(a: Sequence[str], b: Sequence[str]) -> bool:
    ab = encode_word(list(a) + list(b))
    return ab >= encode_word(a) and ab >= encode_word(b)


def numerals_in(tokens: Sequence[str]) -> list[int]:
    """Values of the maximal ``S...S0`` runs in a token word."""
    values = []
    for i, tok in enumerate(tokens):
        if tok == ZERO:
            j = i
            while j > 0 and tokens[j - 1] == SUCC:
                j -= 1
            values.append(i - j)
    return values


def numeral_bound_check(f) -> bool:
    tokens = serialize(_as_formula(f))
    g = encode_word(tokens)
    return all(n < g for n in numerals_in(tokens))


# text forms


_TOKEN_RE = re.compile(r"\s*(v[0-9₀-₉]+|[xyz]|[0S~∨|A()=])")


def tokenize(text: str) -> list[str]:
    """Split a formula string into tokens; ``|`` is accepted for ``∨``."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise UnknownLogicalToken(f"cannot read {text[pos:]!r}")
        tok = m.group(1)
        if tok == "|":
            tok = OR
        elif tok in ALIASES:
            tok = ALIASES[tok]
        elif tok[0] == "v":
            tok = tok.translate(_PLAIN)
            if not is_variable(tok):
                raise UnknownLogicalToken(tok)
        tokens.append(tok)
        pos = m.end()
    return tokens


def render(tokens: Sequence[str]) -> str:
    return "".join(t.translate(_SUBSCRIPTS) if is_variable(t) else t for t in tokens)


def parse_number(text: str) -> int:
    """Read a Gödel number written in decimal or as ``2^a·3^b·...``."""
    text = text.strip()
    if text.isdigit():
        return int(text)
    g = 1
    for part in re.split(r"[·*]", text):
        base, _, exp = part.strip().partition("^")
        if not base.isdigit() or (exp and not exp.isdigit()):
            raise ValueError(f"cannot read number {text!r}")
        g *= int(base) ** (int(exp) if exp else 1)
    return g


def factored(tokens: Sequence[str]) -> str:
    """The prime-power form of a word's Gödel number."""
    if not tokens:
        return "1"
    return "·".join(f"{sieve[i]}^{code(t)}" for i, t in enumerate(tokens, start=1))


# random generation, used by the property checks


def random_term(rng: random.Random, n_vars: int = 3, depth: int = 3) -> Term:
    r = rng.random()
    if depth <= 0 or r < 0.3:
        return Zero() if rng.random() < 0.5 else Var(variable(rng.randint(1, n_vars)))
    if r < 0.8:
        return Succ(random_term(rng, n_vars, depth - 1))
    return Var(variable(rng.randint(1, n_vars)))


def random_formula(rng: random.Random, n_vars: int = 3, depth: int = 3) -> Formula:
    r = rng.random()
    if depth <= 0 or r < 0.3:
        return Equals(random_term(rng, n_vars), random_term(rng, n_vars))
    if r < 0.5:
        return Not(random_formula(rng, n_vars, depth - 1))
    if r < 0.75:
        return Or(random_formula(rng, n_vars, depth - 1), random_formula(rng, n_vars, depth - 1))
    return ForAll(variable(rng.randint(1, n_vars)), random_formula(rng, n_vars, depth - 1))


def random_word(rng: random.Random, max_len: int = 8, n_vars: int = 3) -> list[str]:
    alphabet = list(CODES) + [variable(i) for i in range(1, n_vars + 1)]
    return [rng.choice(alphabet) for _ in range(rng.randint(0, max_len))]
