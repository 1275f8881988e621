"""Exhaustive verification suites behind ``mvalg verify`` and the acceptance
tests.

Each criterion sweeps a finite catalog and checks a structural property
against an independent reference computation.  ``size`` rescales the primary
sweep bound (the defaults are the ones the acceptance tests pin); ``seed``
only affects criteria that sample an otherwise impractical catalog, and the
default makes every run reproducible bit for bit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import gcd

from .algebras import (
    FiniteMV,
    enumerate_homs,
    is_boolean,
    product_split,
)
from .coproducts import (
    coproduct_finite,
    is_separable,
    is_subterminal_epic,
    pierce_coproduct_check,
    separability_witness,
)
from .lgroups import gamma, product_unital, xi
from .oracles import (
    brute_force_hom_graphs,
    components_bruteforce,
    hom_graph,
    iter_finite_algebras,
)
from .pierce import (
    boolean_skeleton,
    chi,
    decompose,
    holder_embed,
    is_boolean_via_primes,
    phi,
)
from .rationals import RationalAlgebra
from .terms import generated_subalgebra, order_rank
from .topology import (
    components,
    e_map,
    gamma_compare,
    iter_topologies,
    quasi_components,
)

EXHAUSTIVE_SPLIT_BOUND = 20000  # pairing bijectivity by exhaustion up to this carrier size


@dataclass
class CriterionReport:
    name: str
    passed: bool
    summary: str
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name}: {self.summary} ({self.elapsed:.1f}s)"


def _fail(name: str, summary: str, **stats) -> CriterionReport:
    return CriterionReport(name, False, summary, stats)


# -- 1: hom enumeration against the function-table search ------------------------


def check_hom_oracle(size: int = 30, seed: int = 0) -> CriterionReport:
    """Dual-map hom enumeration equals brute-force function search for all
    pairs of algebras with carrier size <= ``size``."""
    catalog = list(iter_finite_algebras(max_size=size))
    pairs = homs = 0
    for a in catalog:
        for b in catalog:
            expected = brute_force_hom_graphs(a, b)
            got = {hom_graph(h) for h in enumerate_homs(a, b)}
            if got != expected:
                return _fail(
                    "hom-oracle",
                    f"mismatch for {a} -> {b}: {len(got)} enumerated vs {len(expected)} brute force",
                )
            pairs += 1
            homs += len(got)
    return CriterionReport(
        "hom-oracle",
        True,
        f"{pairs} algebra pairs (|A|,|B| <= {size}), {homs} homs, enumeration = function search",
        {"pairs": pairs, "homs": homs, "algebras": len(catalog)},
    )


# -- 2: coproduct universal property ---------------------------------------------


def check_coproduct_universal(size: int = 6, seed: int = 0) -> CriterionReport:
    """Precomposition with (in0, in1) is a bijection
    Hom(A+B, C) -> Hom(A, C) x Hom(B, C) over the stated sweep."""
    summands = list(iter_finite_algebras(max_components=2, max_order=size))
    targets = list(iter_finite_algebras(max_components=2, max_order=2 * size))
    triples = 0
    for a in summands:
        for b in summands:
            cop = coproduct_finite(a, b)
            for c in targets:
                pairs = set()
                for h in enumerate_homs(cop.algebra, c):
                    key = (
                        h.compose(cop.in0).component_map,
                        h.compose(cop.in1).component_map,
                    )
                    if key in pairs:
                        return _fail("coproduct-universal", f"pairing not injective for {a}+{b} -> {c}")
                    pairs.add(key)
                expected = {
                    (f.component_map, g.component_map)
                    for f in enumerate_homs(a, c)
                    for g in enumerate_homs(b, c)
                }
                if pairs != expected:
                    return _fail("coproduct-universal", f"pairing not surjective for {a}+{b} -> {c}")
                triples += 1
    return CriterionReport(
        "coproduct-universal",
        True,
        f"{triples} triples (summands orders <= {size}, targets <= {2 * size}), pairing bijective",
        {"triples": triples},
    )


# -- 3: Boolean part of coproducts -------------------------------------------------


def check_pierce_coproducts(size: int = 4, seed: int = 0) -> CriterionReport:
    """The Boolean part of A+B is the Boolean coproduct of the parts: atom
    counts multiply and the canonical map is an isomorphism."""
    catalog = list(iter_finite_algebras(max_components=3, max_order=size))
    pairs = 0
    for a in catalog:
        for b in catalog:
            report = pierce_coproduct_check(a, b)
            if not report.passed or report.atoms_coproduct != a.num_components * b.num_components:
                return _fail("pierce-coproducts", f"failed for {a}, {b}: {report.detail}")
            pairs += 1
    return CriterionReport(
        "pierce-coproducts",
        True,
        f"{pairs} pairs (<= 3 components, orders <= {size}), atom counts multiply",
        {"pairs": pairs},
    )


# -- 4: separability structure -----------------------------------------------------


def check_separability(size: int = 4, seed: int = 0) -> CriterionReport:
    """Witness search and chain decomposition agree: every algebra in the
    sweep gets a Boolean complement of the codiagonal kernel whose split is a
    product decomposition, and decompose + embed produces matching rational
    factors."""
    catalog = list(iter_finite_algebras(max_components=3, max_order=size))
    checked = 0
    for a in catalog:
        cert = separability_witness(a)
        if not cert.separable:
            return _fail("separability", f"no witness for {a}: {cert.refutation}")
        split = cert.split
        kept0 = sorted(split.q0.component_map)
        kept1 = sorted(split.q1.component_map)
        k = cert.coproduct.algebra.num_components
        if sorted(kept0 + kept1) != list(range(k)):
            return _fail("separability", f"witness split of {a} is not complementary")
        if split.part1.orders != a.orders:
            return _fail("separability", f"codiagonal leg of {a} is not the algebra itself")
        if cert.coproduct.algebra.size <= EXHAUSTIVE_SPLIT_BOUND:
            seen = set()
            for x in cert.coproduct.algebra.elements():
                seen.add(split.pair(x))
            if len(seen) != cert.coproduct.algebra.size:
                return _fail("separability", f"witness split of {a} is not bijective")
        result = is_separable(a)
        factor_orders = sorted(f.chain_order() for f in result.factors)
        if not result.separable or factor_orders != sorted(a.orders):
            return _fail("separability", f"decomposition route disagrees for {a}")
        dec = decompose(a)
        for f in dec.factors:
            holder_embed(f)  # must exist: every factor is simple
        checked += 1
    return CriterionReport(
        "separability",
        True,
        f"{checked} algebras (<= 3 components, orders <= {size}): witness and decomposition agree",
        {"algebras": checked},
    )


# -- 5: subterminality = single chain ----------------------------------------------


def check_subterminal(size: int = 8, seed: int = 0) -> CriterionReport:
    catalog = list(iter_finite_algebras(max_components=3, max_order=size))
    for a in catalog:
        if is_subterminal_epic(a) != (a.num_components == 1):
            return _fail("subterminal", f"misclassified {a}")
    return CriterionReport(
        "subterminal",
        True,
        f"{len(catalog)} algebras (<= 3 components, orders <= {size}): epic-injections = single chain",
        {"algebras": len(catalog)},
    )


# -- 6: vanishing-locus isomorphism and the prime criterion -------------------------


def check_vanishing_locus(size: int = 8, seed: int = 0) -> CriterionReport:
    """phi and chi are mutually inverse (component sweeps up to ``size``
    components), and the prime-residue Boolean criterion matches the
    equational one for every element of every algebra with carrier <= 200."""
    sweep = list(iter_finite_algebras(max_components=size, max_order=2))
    sweep += list(iter_finite_algebras(max_components=min(size, 4), max_order=3))
    sweep += [FiniteMV([5, 7, 9]), FiniteMV([2, 3, 4, 5, 6])]
    pairs = 0
    for a in sweep:
        k = a.num_components
        for picks in iproduct((False, True), repeat=k):
            x0 = frozenset(i for i in range(k) if picks[i])
            elem = chi(a, x0)
            back = frozenset(p.index for p in phi(a, elem))
            if back != x0:
                return _fail("vanishing-locus", f"phi(chi({sorted(x0)})) != id on {a}")
            pairs += 1
        for b_elem in boolean_skeleton(a).elements():
            locus = frozenset(p.index for p in phi(a, b_elem))
            if chi(a, locus) != b_elem:
                return _fail("vanishing-locus", f"chi(phi(b)) != id on {a}")
    elements = 0
    for a in iter_finite_algebras(max_size=200):
        for x in a.elements():
            if is_boolean_via_primes(a, x) != is_boolean(a, x):
                return _fail("vanishing-locus", f"prime criterion disagrees on {x} in {a}")
            elements += 1
    return CriterionReport(
        "vanishing-locus",
        True,
        f"phi/chi inverse on {pairs} clopens (<= {size} components); prime criterion on {elements} elements (|A| <= 200)",
        {"clopens": pairs, "elements": elements},
    )


# -- 7: product splitting -----------------------------------------------------------


REPRESENTATIVE_PAIR_BOUND = 36  # full A x A representative sweep up to this carrier size


def check_product_split(size: int = 100, seed: int = 0) -> CriterionReport:
    """For every Boolean x, the pairing (q0, q1) is a bijection and combine
    is a section of it.  Injectivity and the section property over the full
    quotient product are exhaustive for every algebra in the sweep; that
    combine ignores the choice of representatives is additionally exhausted
    over all A x A pairs on carriers up to REPRESENTATIVE_PAIR_BOUND."""

    def lift(algebra: FiniteMV, kept: tuple[int, ...], y) -> tuple:
        coords = [Fraction(0)] * algebra.num_components
        for pos, i in enumerate(kept):
            coords[i] = y[pos]
        return tuple(coords)

    algebras = booleans = 0
    for a in iter_finite_algebras(max_size=size):
        algebras += 1
        elems = list(a.elements())
        for x in boolean_skeleton(a).elements():
            split = product_split(a, x)
            if len(split.part0.orders) + len(split.part1.orders) != a.num_components:
                return _fail("product-split", f"split of {a} at {x} not complementary")
            images = {split.pair(e) for e in elems}
            if len(images) != len(elems):
                return _fail("product-split", f"pairing not injective for x={x} in {a}")
            for y0 in split.part0.elements():
                for y1 in split.part1.elements():
                    c = split.combine(lift(a, split.q0.component_map, y0), lift(a, split.q1.component_map, y1))
                    if split.q0(c) != y0 or split.q1(c) != y1:
                        return _fail("product-split", f"combine not a section for x={x} in {a}")
            if len(elems) <= REPRESENTATIVE_PAIR_BOUND:
                for c0, c1 in iproduct(elems, elems):
                    c = split.combine(c0, c1)
                    if split.q0(c) != split.q0(c0) or split.q1(c) != split.q1(c1):
                        return _fail("product-split", f"combine depends on representatives for x={x} in {a}")
            booleans += 1
    return CriterionReport(
        "product-split",
        True,
        f"{booleans} Boolean splits over {algebras} algebras (|A| <= {size}): bijective, combine a section",
        {"algebras": algebras, "splits": booleans},
    )


# -- 8: pi0 and products -------------------------------------------------------------


def check_pi0_products(size: int = 4, seed: int = 0, sample: int = 24) -> CriterionReport:
    """components = quasi-components = brute force, the clopen-membership map
    separates exactly the quasi-components (n <= 5 exhaustively), and the
    product comparison gamma is a homeomorphism (exhaustive pairs up to 3
    points; seeded sample at ``size`` points)."""
    size = min(size, 6)  # exhaustive topology catalogs explode beyond this
    spaces_checked = 0
    for n in range(6):
        for space in iter_topologies(n):
            comp = components(space)
            if comp != quasi_components(space):
                return _fail("pi0-products", f"components != quasi-components on {space}")
            if n <= 4 and comp != components_bruteforce(space):
                return _fail("pi0-products", f"components disagree with brute force on {space}")
            em = e_map(space)
            for x in range(n):
                for y in range(n):
                    if (em.table[x] == em.table[y]) != (comp[x] == comp[y]):
                        return _fail("pi0-products", f"clopen-membership map wrong on {space}")
            if not em.is_bijective:
                return _fail("pi0-products", f"comparison with the image space not bijective on {space}")
            spaces_checked += 1
    small = [s for n in range(4) for s in iter_topologies(n)]
    pairs = 0
    for a in small:
        for b in small:
            if not gamma_compare(a, b).is_homeomorphism:
                return _fail("pi0-products", f"gamma not a homeomorphism for {a} x {b}")
            pairs += 1
    rng = random.Random(seed)
    four = list(iter_topologies(size))
    sampled = 0
    if four:
        for _ in range(sample):
            a = rng.choice(four)
            b = rng.choice(small + four[:40])
            if a.points * b.points > 20:
                continue
            if not gamma_compare(a, b).is_homeomorphism:
                return _fail("pi0-products", f"gamma not a homeomorphism for {a} x {b}")
            sampled += 1
    return CriterionReport(
        "pi0-products",
        True,
        f"{spaces_checked} spaces (n <= 5) for components/E-map; gamma on {pairs} exhaustive + {sampled} sampled pairs",
        {"spaces": spaces_checked, "pairs": pairs, "sampled": sampled},
    )


# -- 9: order-rank ---------------------------------------------------------------------


def check_order_rank(size: int = 24, seed: int = 0) -> CriterionReport:
    """Every rational p/q generates the full chain of order q (rank 1), and
    homs preserve generation and finite order-rank."""
    full = RationalAlgebra.full()
    singles = 0
    for q in range(1, size + 1):
        for p in range(q + 1):
            if gcd(p, q) != 1:
                continue
            r = order_rank(full, Fraction(p, q))
            expected = {(Fraction(k, q),) for k in range(q + 1)}
            if r.rank != 1 or set(r.subalgebra.elements) != expected or r.chain_orders != (q,):
                return _fail("order-rank", f"Sa({p}/{q}) is not the chain of order {q}")
            singles += 1
    checked = 0
    catalog = list(iter_finite_algebras(max_components=2, max_order=4))
    for a in catalog:
        elems = list(a.elements())
        for b in catalog:
            for h in enumerate_homs(a, b):
                for x in elems:
                    image_sub = generated_subalgebra(b, [h(x)])
                    pushed = frozenset(h(s) for s in generated_subalgebra(a, [x]).elements)
                    if pushed != image_sub.elements:
                        return _fail("order-rank", f"h[Sa(x)] != Sa(h x) for {h}, x={x}")
                    order_rank(b, h(x))  # must be defined
                    checked += 1
    return CriterionReport(
        "order-rank",
        True,
        f"rank-1 chains for all p/q with q <= {size} ({singles} cases); generation preserved along {checked} hom evaluations",
        {"rank_one": singles, "hom_evaluations": checked},
    )


# -- 10: simplicial round trip -----------------------------------------------------------


def check_simplicial_roundtrip(size: int = 6, seed: int = 0) -> CriterionReport:
    catalog = list(iter_finite_algebras(max_components=4, max_order=size))
    for a in catalog:
        if gamma(xi(a)) != a:
            return _fail("simplicial-roundtrip", f"gamma(xi({a})) != {a}")
    groups = [xi(a) for a in catalog if a.num_components <= 2]
    for g in groups:
        if xi(gamma(g)) != g:
            return _fail("simplicial-roundtrip", f"xi(gamma({g})) != {g}")
        for h in groups:
            left = gamma(product_unital(g, h))
            right = FiniteMV(gamma(g).orders + gamma(h).orders)
            if left != right:
                return _fail("simplicial-roundtrip", f"gamma does not commute with {g} x {h}")
    return CriterionReport(
        "simplicial-roundtrip",
        True,
        f"{len(catalog)} algebras (<= 4 components, orders <= {size}): round trips and products commute",
        {"algebras": len(catalog)},
    )


CRITERIA = {
    "hom-oracle": check_hom_oracle,
    "coproduct-universal": check_coproduct_universal,
    "pierce-coproducts": check_pierce_coproducts,
    "separability": check_separability,
    "subterminal": check_subterminal,
    "vanishing-locus": check_vanishing_locus,
    "product-split": check_product_split,
    "pi0-products": check_pi0_products,
    "order-rank": check_order_rank,
    "simplicial-roundtrip": check_simplicial_roundtrip,
}


def run_criterion(name: str, size: int | None = None, seed: int = 0) -> CriterionReport:
    if name not in CRITERIA:
        raise ValueError(f"unknown criterion {name!r}; known: {', '.join(sorted(CRITERIA))}")
    fn = CRITERIA[name]
    start = time.perf_counter()
    report = fn(seed=seed) if size is None else fn(size, seed=seed)
    report.elapsed = time.perf_counter() - start
    return report


def run_all(size: int | None = None, seed: int = 0) -> list[CriterionReport]:
    return [run_criterion(name, size=size, seed=seed) for name in CRITERIA]
