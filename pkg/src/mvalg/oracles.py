"""Naive reference implementations and exhaustive catalogs.

Everything here is deliberately independent of the representations it is
used to validate: homomorphisms are searched as raw functions on carrier
tables, ideals and subalgebras as subsets, connectivity by looking for
two-block clopen partitions.  Slow by design, but complete at desk scale.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .algebras import Element, FiniteMV, Hom, _neg, _oplus, leq
from .topology import FinSpace, bits, mask_of


# -- catalogs -------------------------------------------------------------------


def iter_finite_algebras(
    max_size: int | None = None,
    max_components: int | None = None,
    max_order: int | None = None,
) -> Iterator[FiniteMV]:
    """All canonical-form algebras within the given bounds (at least one
    bound on the component count must be implied)."""
    if max_size is None and (max_components is None or max_order is None):
        raise ValueError("bounds leave infinitely many algebras")

    def rec(prefix: list[int], size: int, min_order: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if max_components is not None and len(prefix) >= max_components:
            return
        order = min_order
        while True:
            if max_order is not None and order > max_order:
                return
            new_size = size * (order + 1)
            if max_size is not None and new_size > max_size:
                return
            prefix.append(order)
            yield from rec(prefix, new_size, order)
            prefix.pop()
            order += 1

    for orders in rec([], 1, 1):
        yield FiniteMV(orders)


# -- homomorphisms as raw functions ----------------------------------------------


@lru_cache(maxsize=512)
def op_tables(algebra: FiniteMV) -> tuple[tuple[Element, ...], tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """(elements, negation table, addition table) with elements indexed in
    enumeration order."""
    elems = tuple(algebra.elements())
    index = {e: i for i, e in enumerate(elems)}
    neg_t = tuple(index[_neg(e)] for e in elems)
    plus_t = tuple(
        tuple(index[_oplus(a, b)] for b in elems) for a in elems
    )
    return elems, neg_t, plus_t


def hom_graph(h: Hom) -> tuple[int, ...]:
    """A hom as a function table: image index per source element index."""
    elems_s, _, _ = op_tables(h.source)
    elems_t = op_tables(h.target)[0]
    index_t = {e: i for i, e in enumerate(elems_t)}
    return tuple(index_t[h(x)] for x in elems_s)


def brute_force_hom_graphs(source: FiniteMV, target: FiniteMV) -> set[tuple[int, ...]]:
    """All functions carrier(source) -> carrier(target) preserving +, !, 0,
    found by backtracking over function tables with forced-value propagation.
    The full function space is decided; propagation only prunes assignments
    that already violate a preservation equation."""
    elems_s, neg_s, plus_s = op_tables(source)
    elems_t, neg_t, plus_t = op_tables(target)
    n_s, n_t = len(elems_s), len(elems_t)
    zero_s = elems_s.index(source.zero())
    zero_t = elems_t.index(target.zero())

    f = [-1] * n_s
    results: set[tuple[int, ...]] = set()

    def assign(i: int, v: int, trail: list[int]) -> bool:
        stack = [(i, v)]
        while stack:
            i, v = stack.pop()
            cur = f[i]
            if cur != -1:
                if cur != v:
                    return False
                continue
            f[i] = v
            trail.append(i)
            stack.append((neg_s[i], neg_t[v]))
            row_s, row_t = plus_s[i], plus_t[v]
            for j in range(n_s):
                w = f[j]
                if w != -1:
                    stack.append((row_s[j], row_t[w]))
                    stack.append((plus_s[j][i], plus_t[w][v]))
        return True

    def undo(trail: list[int]) -> None:
        for i in trail:
            f[i] = -1

    def search() -> None:
        try:
            i = f.index(-1)
        except ValueError:
            results.add(tuple(f))
            return
        for v in range(n_t):
            trail: list[int] = []
            if assign(i, v, trail):
                search()
            undo(trail)

    trail0: list[int] = []
    if assign(zero_s, zero_t, trail0):
        search()
    undo(trail0)
    return results


# -- ideals and subalgebras as subsets --------------------------------------------


def all_ideals_bruteforce(algebra: FiniteMV) -> list[frozenset[Element]]:
    """All subsets containing 0, downward closed, and closed under +."""
    elems = list(algebra.elements())
    n = len(elems)
    if n > 16:
        raise ValueError(f"brute-force ideal enumeration capped at 16 elements, got {n}")
    zero = algebra.zero()
    out = []
    for mask in range(1 << n):
        subset = [elems[i] for i in range(n) if mask & (1 << i)]
        sset = set(subset)
        if zero not in sset:
            continue
        if any(leq(b, a) and b not in sset for a in subset for b in elems):
            continue
        if any(_oplus(a, b) not in sset for a in subset for b in subset):
            continue
        out.append(frozenset(sset))
    return out


def is_closed_subalgebra(algebra: FiniteMV, subset: set[Element]) -> bool:
    if algebra.zero() not in subset:
        return False
    return all(_neg(a) in subset for a in subset) and all(
        _oplus(a, b) in subset for a in subset for b in subset
    )


def all_subalgebras_bruteforce(algebra: FiniteMV) -> list[frozenset[Element]]:
    """All closed subsets, by full powerset scan (tiny algebras only)."""
    elems = list(algebra.elements())
    n = len(elems)
    if n > 12:
        raise ValueError(f"powerset subalgebra scan capped at 12 elements, got {n}")
    out = []
    for mask in range(1 << n):
        subset = {elems[i] for i in range(n) if mask & (1 << i)}
        if is_closed_subalgebra(algebra, subset):
            out.append(frozenset(subset))
    return out


def all_subalgebras_by_extension(algebra: FiniteMV) -> list[frozenset[Element]]:
    """All subalgebras, generated by repeatedly closing one-element
    extensions; each candidate is re-verified to be closed."""
    from .terms import generated_subalgebra

    elems = list(algebra.elements())
    least = generated_subalgebra(algebra, []).elements
    found = {least}
    frontier = [least]
    while frontier:
        s = frontier.pop()
        for a in elems:
            if a in s:
                continue
            t = generated_subalgebra(algebra, sorted(s | {a})).elements
            if t not in found:
                assert is_closed_subalgebra(algebra, set(t))
                found.add(t)
                frontier.append(t)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


# -- connectivity of finite spaces -------------------------------------------------


def is_relatively_open(space: FinSpace, part: int, whole: int) -> bool:
    """Whether ``part`` is open in the subspace topology on ``whole``."""
    return any(o & whole == part for o in space.opens)


def is_connected_subset(space: FinSpace, subset: int) -> bool:
    """No two-block partition into relatively clopen parts; empty set is not
    connected."""
    if subset == 0:
        return False
    points = list(bits(subset))
    rest = points[1:]
    for pick in range(1 << len(rest)):
        u = mask_of([points[0]] + [p for t, p in enumerate(rest) if pick & (1 << t)])
        v = subset & ~u
        if v == 0:
            continue
        if is_relatively_open(space, u, subset) and is_relatively_open(space, v, subset):
            return False
    return True


def random_topology(n: int, rng) -> FinSpace:
    """A uniform-ish random topology on n points: the up-set topology of the
    transitive-reflexive closure of a random relation."""
    reach = [1 << x for x in range(n)]
    for x in range(n):
        for y in range(n):
            if x != y and rng.random() < 0.35:
                reach[x] |= 1 << y
    for _ in range(n):
        for x in range(n):
            m = reach[x]
            for y in bits(m):
                m |= reach[y]
            reach[x] = m
    from .topology import space_from_min_nbhds

    return space_from_min_nbhds(reach)


def components_bruteforce(space: FinSpace) -> tuple[int, ...]:
    """Component labels via maximal connected subsets (classes numbered by
    smallest member)."""
    n = space.points
    connected = [s for s in range(1, 1 << n) if is_connected_subset(space, s)]
    label = [-1] * n
    cls = 0
    for x in range(n):
        if label[x] != -1:
            continue
        best = 1 << x
        for s in connected:
            if s & (1 << x) and s | best != best:
                best |= s  # union of connected sets through x is connected
        for y in bits(best):
            label[y] = cls
        cls += 1
    return tuple(label)
