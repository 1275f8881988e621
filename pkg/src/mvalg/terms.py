"""Terms of the basic many-valued language: parsing, printing, evaluation,
subalgebra generation, and order-rank.

Grammar (precedence tightest first, binary operators left-associative):

    term  := '0' | '1' | INT '/' INT | IDENT
           | '!' term                  negation
           | term '*' term             strong conjunction
           | term '+' term             truncated addition
           | term '^' term             lattice meet
           | term 'v' term             lattice join
           | '(' term ')'

The bare word ``v`` is the join operator and is therefore not available as a
variable name.  Rational constants must lie in [0,1] and are only evaluable
in algebras that contain them in every coordinate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .algebras import (
    ZERO,
    ONE,
    AlgebraError,
    Element,
    FiniteMV,
    _join,
    _meet,
    _neg,
    _odot,
    _oplus,
)
from .pierce import decompose_subalgebra
from .rationals import RationalAlgebra


class TermError(ValueError):
    """Evaluation error: unbound variable or constant outside the algebra."""


class ParseError(TermError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# -- syntax trees ---------------------------------------------------------------


@dataclass(frozen=True)
class Term:
    pass


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class Const(Term):
    value: Fraction


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Oplus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Odot(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


_BINARY = {Join: ("v", 0), Meet: ("^", 1), Oplus: ("+", 2), Odot: ("*", 3)}
_NEG_LEVEL = 4
_ATOM_LEVEL = 5


# -- parser ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[+*!^()/]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        if m.group("int") is not None:
            tokens.append(("int", m.group("int"), m.start("int")))
        elif m.group("ident") is not None:
            word = m.group("ident")
            kind = "op" if word == "v" else "ident"
            tokens.append((kind, word, m.start("ident")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.pos += 1
        return tok

    def expect(self, value: str) -> None:
        tok = self.take()
        if tok[0] != "op" or tok[1] != value:
            raise ParseError(f"expected {value!r}, got {tok[1]!r}", tok[2])

    def parse(self) -> Term:
        t = self.parse_join()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return t

    def _binary(self, symbol: str, node, next_level):
        t = next_level()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] != symbol:
                return t
            self.take()
            t = node(t, next_level())

    def parse_join(self) -> Term:
        return self._binary("v", Join, self.parse_meet)

    def parse_meet(self) -> Term:
        return self._binary("^", Meet, self.parse_sum)

    def parse_sum(self) -> Term:
        return self._binary("+", Oplus, self.parse_product)

    def parse_product(self) -> Term:
        return self._binary("*", Odot, self.parse_unary)

    def parse_unary(self) -> Term:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "!":
            self.take()
            return Neg(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> Term:
        tok = self.take()
        kind, value, at = tok
        if kind == "op" and value == "(":
            t = self.parse_join()
            self.expect(")")
            return t
        if kind == "ident":
            return Var(value)
        if kind == "int":
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den_tok = self.take()
                if den_tok[0] != "int":
                    raise ParseError("malformed fraction: expected a denominator", den_tok[2])
                num, den = int(value), int(den_tok[1])
                if den == 0:
                    raise ParseError("malformed fraction: zero denominator", den_tok[2])
                frac = Fraction(num, den)
                if not ZERO <= frac <= ONE:
                    raise ParseError(f"malformed fraction: {num}/{den} is outside [0,1]", at)
                return _const(frac)
            if value == "0":
                return Zero()
            if value == "1":
                return One()
            raise ParseError(f"bare integer {value!r} is not a term (only 0, 1, fractions)", at)
        raise ParseError(f"unexpected {value!r}", at)


def _const(value: Fraction) -> Term:
    if value == ZERO:
        return Zero()
    if value == ONE:
        return One()
    return Const(value)


def parse_term(text: str) -> Term:
    return _Parser(text).parse()


def term_to_str(term: Term) -> str:
    """Canonical rendering; parse(term_to_str(t)) == t."""

    def level(t: Term) -> int:
        if isinstance(t, Neg):
            return _NEG_LEVEL
        for cls, (_, lvl) in _BINARY.items():
            if isinstance(t, cls):
                return lvl
        return _ATOM_LEVEL

    def render(t: Term) -> str:
        if isinstance(t, Zero):
            return "0"
        if isinstance(t, One):
            return "1"
        if isinstance(t, Const):
            return f"{t.value.numerator}/{t.value.denominator}"
        if isinstance(t, Var):
            return t.name
        if isinstance(t, Neg):
            inner = render(t.arg)
            if level(t.arg) < _NEG_LEVEL:
                inner = f"({inner})"
            return f"!{inner}"
        sym, lvl = _BINARY[type(t)]
        left, right = render(t.left), render(t.right)
        if level(t.left) < lvl:
            left = f"({left})"
        if level(t.right) <= lvl:  # left-associative: parenthesize equal-level right children
            right = f"({right})"
        return f"{left} {sym} {right}"

    return render(term)


def term_variables(term: Term) -> set[str]:
    if isinstance(term, Var):
        return {term.name}
    if isinstance(term, Neg):
        return term_variables(term.arg)
    if isinstance(term, (Oplus, Odot, Meet, Join)):
        return term_variables(term.left) | term_variables(term.right)
    return set()


def eval_term(term: Term, env: Mapping[str, Element], algebra: FiniteMV) -> Element:
    """Structural evaluation in the given algebra."""
    if isinstance(term, Zero):
        return algebra.zero()
    if isinstance(term, One):
        return algebra.one()
    if isinstance(term, Const):
        coords = tuple(term.value for _ in range(algebra.num_components))
        if not algebra.contains(coords):
            raise TermError(f"constant {term.value} is not an element of {algebra}")
        return coords
    if isinstance(term, Var):
        if term.name not in env:
            raise TermError(f"unbound variable {term.name!r}")
        return algebra.check(env[term.name])
    if isinstance(term, Neg):
        return _neg(eval_term(term.arg, env, algebra))
    ops = {Oplus: _oplus, Odot: _odot, Meet: _meet, Join: _join}
    fn = ops[type(term)]
    return fn(eval_term(term.left, env, algebra), eval_term(term.right, env, algebra))


# -- generated subalgebras and order-rank ----------------------------------------


@dataclass(frozen=True, eq=False)
class Subalgebra:
    """A subalgebra given by its closed element set, with a closure
    certificate recording one derivation per element."""

    ambient: FiniteMV
    generators: tuple[Element, ...]
    elements: frozenset[Element]
    certificate: dict[Element, tuple]

    @property
    def size(self) -> int:
        return len(self.elements)

    def contains(self, x: Element) -> bool:
        return x in self.elements

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subalgebra)
            and self.ambient == other.ambient
            and self.elements == other.elements
        )


def generated_subalgebra(algebra: FiniteMV, generators: Iterable[Element]) -> Subalgebra:
    """Least subalgebra containing the generators: the closure of G u {0}
    under + and !, built by a deterministic round-based worklist."""
    gens = tuple(algebra.check(g) for g in generators)
    cert: dict[Element, tuple] = {algebra.zero(): ("zero",)}
    for g in gens:
        cert.setdefault(g, ("generator",))
    elements = set(cert)
    while True:
        snapshot = sorted(elements)
        new: dict[Element, tuple] = {}
        for x in snapshot:
            nx = _neg(x)
            if nx not in elements and nx not in new:
                new[nx] = ("neg", x)
        for a in snapshot:
            for b in snapshot:
                if b < a:
                    continue
                s = _oplus(a, b)
                if s not in elements and s not in new:
                    new[s] = ("oplus", a, b)
        if not new:
            break
        elements.update(new)
        cert.update(new)
    return Subalgebra(algebra, gens, frozenset(elements), cert)


@dataclass(frozen=True)
class OrderRank:
    """Order-rank of an element: the number of non-terminal indecomposable
    factors of the subalgebra it generates (0 only over the terminal algebra),
    together with the factors' chain orders."""

    rank: int
    chain_orders: tuple[int, ...]
    subalgebra: Subalgebra


RankAmbient = FiniteMV | RationalAlgebra | list | tuple


def _envelope(ambient: RankAmbient, a) -> tuple[FiniteMV, Element]:
    if isinstance(ambient, FiniteMV):
        return ambient, ambient.check(a)
    comps = [ambient] if isinstance(ambient, RationalAlgebra) else list(ambient)
    if not all(isinstance(c, RationalAlgebra) for c in comps):
        raise AlgebraError(f"{ambient!r} is not a representable ambient")
    coords = tuple(Fraction(c) for c in (a if isinstance(a, (tuple, list)) else (a,)))
    if len(coords) != len(comps):
        raise AlgebraError(f"{a!r} has {len(coords)} coordinates, ambient has {len(comps)}")
    for c, comp in zip(coords, comps):
        comp.check(c)
    # the subalgebra generated by a rational p/q is the chain of order q, so
    # closing inside the product of those chains loses nothing
    envelope = FiniteMV(c.denominator for c in coords)
    return envelope, coords


def order_rank(ambient: RankAmbient, a) -> OrderRank:
    envelope, elem = _envelope(ambient, a)
    sub = generated_subalgebra(envelope, [elem])
    orders = decompose_subalgebra(envelope, sub.elements)
    return OrderRank(len(orders), orders, sub)
