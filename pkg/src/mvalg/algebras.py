"""Finite MV-algebras represented exactly as products of finite chains.

``FiniteMV((m1, ..., mk))`` is the product of the chains with denominators
m1, ..., mk; its carrier is the set of k-tuples whose i-th coordinate is a
fraction in {0, 1/mi, ..., 1}.  All operations are coordinatewise and exact
(stdlib fractions).  The empty product (k = 0) is the one-element algebra in
which 0 = 1.  Values are immutable and every function here is pure.

Homomorphisms between such algebras are stored dually: one source-component
index per target component, constrained by divisibility of the chain
denominators.  That this captures *all* homomorphisms is not assumed; it is
checked against a brute-force function search (see oracles / tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import prod
from typing import Iterable, Iterator, Sequence

Element = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraError(ValueError):
    """Element/algebra mismatch or malformed algebraic input."""


@dataclass(frozen=True)
class FiniteMV:
    """A finite product of finite chains, given by their denominators."""

    orders: tuple[int, ...]

    def __init__(self, orders: Iterable[int] = ()):
        orders = tuple(orders)
        for m in orders:
            if not isinstance(m, int) or m < 1:
                raise AlgebraError(f"chain order must be a positive integer, got {m!r}")
        object.__setattr__(self, "orders", orders)

    @property
    def num_components(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        return prod(m + 1 for m in self.orders)

    @property
    def is_terminal(self) -> bool:
        return not self.orders

    def zero(self) -> Element:
        return tuple(ZERO for _ in self.orders)

    def one(self) -> Element:
        return tuple(ONE for _ in self.orders)

    def atom(self, i: int) -> Element:
        """The Boolean element that is 1 on component i and 0 elsewhere."""
        if not 0 <= i < len(self.orders):
            raise AlgebraError(f"no component {i} in {self}")
        return tuple(ONE if j == i else ZERO for j in range(len(self.orders)))

    def chain(self, i: int) -> list[Fraction]:
        m = self.orders[i]
        return [Fraction(j, m) for j in range(m + 1)]

    def elements(self) -> Iterator[Element]:
        """All carrier elements, in lexicographic coordinate order."""
        yield from iproduct(*(self.chain(i) for i in range(len(self.orders))))

    def contains(self, x: Element) -> bool:
        if not isinstance(x, tuple) or len(x) != len(self.orders):
            return False
        return all(
            isinstance(c, Fraction) and ZERO <= c <= ONE and m % c.denominator == 0
            for c, m in zip(x, self.orders)
        )

    def check(self, x: Element) -> Element:
        if not self.contains(x):
            raise AlgebraError(f"{x!r} is not an element of {self}")
        return x

    def element(self, coords: Iterable) -> Element:
        """Build a validated element from fractions, ints, or 'p/q' strings."""
        x = tuple(Fraction(c) for c in coords)
        return self.check(x)

    def canonical(self) -> "FiniteMV":
        return FiniteMV(sorted(self.orders))

    def is_isomorphic_to(self, other: "FiniteMV") -> bool:
        # finite products of chains: isomorphism = equal order multisets
        return sorted(self.orders) == sorted(other.orders)

    def __repr__(self) -> str:
        return f"FiniteMV({list(self.orders)})"


# -- coordinatewise operations ------------------------------------------------
#
# The underscored versions skip membership validation; they are what closure
# loops and exhaustive sweeps call.  The public ones validate and are the
# operations the rest of the API exposes.


def _neg(x: Element) -> Element:
    return tuple(ONE - c for c in x)


def _oplus(x: Element, y: Element) -> Element:
    return tuple(min(a + b, ONE) for a, b in zip(x, y))


def _odot(x: Element, y: Element) -> Element:
    return tuple(max(a + b - ONE, ZERO) for a, b in zip(x, y))


def _join(x: Element, y: Element) -> Element:
    return tuple(max(a, b) for a, b in zip(x, y))


def _meet(x: Element, y: Element) -> Element:
    return tuple(min(a, b) for a, b in zip(x, y))


def neg(algebra: FiniteMV, x: Element) -> Element:
    return _neg(algebra.check(x))


def oplus(algebra: FiniteMV, x: Element, y: Element) -> Element:
    return _oplus(algebra.check(x), algebra.check(y))


def odot(algebra: FiniteMV, x: Element, y: Element) -> Element:
    return _odot(algebra.check(x), algebra.check(y))


def join(algebra: FiniteMV, x: Element, y: Element) -> Element:
    return _join(algebra.check(x), algebra.check(y))


def meet(algebra: FiniteMV, x: Element, y: Element) -> Element:
    return _meet(algebra.check(x), algebra.check(y))


OPERATIONS = {
    "oplus": (2, oplus),
    "neg": (1, neg),
    "odot": (2, odot),
    "join": (2, join),
    "meet": (2, meet),
}

_OP_ALIASES = {"+": "oplus", "!": "neg", "*": "odot", "v": "join", "^": "meet"}


def apply_operation(op: str, args: Sequence[Element], algebra: FiniteMV) -> Element:
    """Apply a named basic operation (oplus/neg/odot/join/meet or +,!,*,v,^)."""
    name = _OP_ALIASES.get(op, op)
    if name not in OPERATIONS:
        raise AlgebraError(f"unknown operation {op!r}")
    arity, fn = OPERATIONS[name]
    if len(args) != arity:
        raise AlgebraError(f"{name} takes {arity} argument(s), got {len(args)}")
    return fn(algebra, *args)


def is_boolean(algebra: FiniteMV, x: Element) -> bool:
    """x is Boolean iff x + x = x (equivalently every coordinate is 0 or 1)."""
    x = algebra.check(x)
    return _oplus(x, x) == x


def leq(x: Element, y: Element) -> bool:
    """Coordinatewise (product) order."""
    return all(a <= b for a, b in zip(x, y))


# -- homomorphisms -------------------------------------------------------------


@dataclass(frozen=True)
class Hom:
    """Homomorphism stored dually: component_map[j] is the source component
    feeding target component j; the source chain order must divide the target
    one.  The action copies that coordinate (values are unchanged; only the
    admissible denominator grows)."""

    source: FiniteMV
    target: FiniteMV
    component_map: tuple[int, ...]

    def __init__(self, source: FiniteMV, target: FiniteMV, component_map: Iterable[int]):
        component_map = tuple(component_map)
        if len(component_map) != target.num_components:
            raise AlgebraError("component map must assign one source component per target component")
        for j, i in enumerate(component_map):
            if not 0 <= i < source.num_components:
                raise AlgebraError(f"component map entry {i} out of range for {source}")
            if target.orders[j] % source.orders[i] != 0:
                raise AlgebraError(
                    f"order {source.orders[i]} does not divide {target.orders[j]} "
                    f"(source component {i} -> target component {j})"
                )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "component_map", component_map)

    def __call__(self, x: Element) -> Element:
        self.source.check(x)
        return tuple(x[i] for i in self.component_map)

    @staticmethod
    def identity(algebra: FiniteMV) -> "Hom":
        return Hom(algebra, algebra, range(algebra.num_components))

    def compose(self, other: "Hom") -> "Hom":
        """self o other (apply other first)."""
        if other.target != self.source:
            raise AlgebraError("homs not composable")
        return Hom(other.source, self.target, (other.component_map[i] for i in self.component_map))

    def is_identity(self) -> bool:
        return self.source == self.target and self.component_map == tuple(
            range(self.source.num_components)
        )

    def graph(self) -> tuple[tuple[Element, Element], ...]:
        """The hom as a function table over the source carrier."""
        return tuple((x, self(x)) for x in self.source.elements())

    def __repr__(self) -> str:
        return f"Hom({list(self.source.orders)}->{list(self.target.orders)}, {list(self.component_map)})"


def enumerate_homs(source: FiniteMV, target: FiniteMV) -> list[Hom]:
    """All homomorphisms source -> target, via the dual representation."""
    k_t = target.num_components
    choices = []
    for j in range(k_t):
        ok = [i for i, m in enumerate(source.orders) if target.orders[j] % m == 0]
        if not ok:
            return []
        choices.append(ok)
    return [Hom(source, target, cm) for cm in iproduct(*choices)]


# -- products, ideals, quotients ----------------------------------------------


def product_algebra(a: FiniteMV, b: FiniteMV) -> tuple[FiniteMV, Hom, Hom]:
    """Direct product with its two projections."""
    p = FiniteMV(a.orders + b.orders)
    pr0 = Hom(p, a, range(a.num_components))
    pr1 = Hom(p, b, (a.num_components + j for j in range(b.num_components)))
    return p, pr0, pr1


@dataclass(frozen=True)
class Ideal:
    """Ideal of a finite product of chains: the elements vanishing on a fixed
    set of components.  (Every ideal of such an algebra has this shape; the
    tests justify this against the naive all-subsets enumeration.)"""

    ambient: FiniteMV
    vanishing: frozenset[int]

    def __init__(self, ambient: FiniteMV, vanishing: Iterable[int]):
        vanishing = frozenset(vanishing)
        if not all(0 <= i < ambient.num_components for i in vanishing):
            raise AlgebraError(f"vanishing set {set(vanishing)} out of range for {ambient}")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "vanishing", vanishing)

    @staticmethod
    def generated_by(ambient: FiniteMV, generators: Iterable[Element]) -> "Ideal":
        gens = [ambient.check(g) for g in generators]
        vanishing = set(range(ambient.num_components))
        for g in gens:
            vanishing &= {i for i, c in enumerate(g) if c == ZERO}
        return Ideal(ambient, vanishing)

    @staticmethod
    def principal(ambient: FiniteMV, a: Element) -> "Ideal":
        return Ideal.generated_by(ambient, [a])

    def contains(self, x: Element) -> bool:
        self.ambient.check(x)
        return all(x[i] == ZERO for i in self.vanishing)

    def elements(self) -> Iterator[Element]:
        for x in self.ambient.elements():
            if all(x[i] == ZERO for i in self.vanishing):
                yield x

    @property
    def is_zero(self) -> bool:
        return self.vanishing == frozenset(range(self.ambient.num_components))

    def __repr__(self) -> str:
        return f"Ideal({self.ambient!r}, vanishing={sorted(self.vanishing)})"


def quotient_by_ideal(algebra: FiniteMV, ideal: Ideal) -> tuple[FiniteMV, Hom]:
    """Quotient map A -> A/I.  Two elements are congruent mod I exactly when
    they agree on I's vanishing components, so the quotient keeps those."""
    if ideal.ambient != algebra:
        raise AlgebraError(f"{ideal!r} is not an ideal of {algebra}")
    kept = sorted(ideal.vanishing)
    q_alg = FiniteMV(algebra.orders[i] for i in kept)
    return q_alg, Hom(algebra, q_alg, kept)


def localize(algebra: FiniteMV, x: Element) -> tuple[FiniteMV, Hom]:
    """The quotient A -> A/<not x> for Boolean x, which inverts x."""
    if not is_boolean(algebra, x):
        raise AlgebraError(f"{x!r} is not Boolean in {algebra}")
    return quotient_by_ideal(algebra, Ideal.principal(algebra, _neg(x)))


@dataclass(frozen=True)
class ProductSplit:
    """The two quotients induced by a Boolean element x, exhibiting the
    ambient algebra as the product of the part where x = 0 (q0, which inverts
    not-x) and the part where x = 1 (q1, which inverts x)."""

    ambient: FiniteMV
    element: Element
    part0: FiniteMV
    q0: Hom
    part1: FiniteMV
    q1: Hom

    def pair(self, a: Element) -> tuple[Element, Element]:
        return self.q0(a), self.q1(a)

    def combine(self, c0: Element, c1: Element) -> Element:
        """The element c with q0 c = q0 c0 and q1 c = q1 c1, via
        c = (c0 /\\ not x) \\/ (c1 /\\ x)."""
        c0 = self.ambient.check(c0)
        c1 = self.ambient.check(c1)
        nx = _neg(self.element)
        return _join(_meet(c0, nx), _meet(c1, self.element))


def product_split(algebra: FiniteMV, x: Element) -> ProductSplit:
    if not is_boolean(algebra, x):
        raise AlgebraError(f"{x!r} is not Boolean in {algebra}")
    part0, q0 = localize(algebra, _neg(x))
    part1, q1 = localize(algebra, x)
    return ProductSplit(algebra, x, part0, q0, part1, q1)
