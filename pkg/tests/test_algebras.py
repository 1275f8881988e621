"""Core carriers, operations, homs, ideals, quotients, and splittings."""

from fractions import Fraction

import pytest

from mvalg import (
    AlgebraError,
    FiniteMV,
    Hom,
    Ideal,
    apply_operation,
    enumerate_homs,
    is_boolean,
    join,
    localize,
    meet,
    neg,
    odot,
    oplus,
    product_algebra,
    product_split,
    quotient_by_ideal,
)
from mvalg.oracles import (
    all_ideals_bruteforce,
    brute_force_hom_graphs,
    hom_graph,
    iter_finite_algebras,
)

L2 = FiniteMV([2])
L3 = FiniteMV([3])
L6 = FiniteMV([6])
A23 = FiniteMV([2, 3])
TERMINAL = FiniteMV([])


def frac(s):
    return Fraction(s)


class TestOperations:
    def test_oplus_clips_at_one(self):
        assert oplus(L6, L6.element(["1/2"]), L6.element(["1/3"])) == (frac("5/6"),)

    def test_neg_of_zero(self):
        assert neg(L3, L3.zero()) == L3.one()

    def test_odot_half_half(self):
        assert odot(L2, L2.element(["1/2"]), L2.element(["1/2"])) == (frac(0),)

    def test_join_meet(self):
        x, y = A23.element(["1/2", 0]), A23.element([0, "2/3"])
        assert join(A23, x, y) == A23.element(["1/2", "2/3"])
        assert meet(A23, x, y) == A23.zero()

    def test_apply_operation_dispatch_and_aliases(self):
        x = L6.element(["1/2"])
        assert apply_operation("+", [x, x], L6) == apply_operation("oplus", [x, x], L6)
        assert apply_operation("!", [x], L6) == (frac("1/2"),)

    def test_apply_operation_arity_mismatch(self):
        with pytest.raises(AlgebraError):
            apply_operation("neg", [L6.zero(), L6.zero()], L6)

    def test_element_algebra_mismatch(self):
        with pytest.raises(AlgebraError):
            oplus(L6, A23.element(["1/2", "1/3"]), L6.zero())  # wrong arity
        with pytest.raises(AlgebraError):
            neg(L3, (frac("1/2"),))  # 1/2 not in L3

    def test_terminal_algebra(self):
        assert TERMINAL.size == 1
        assert TERMINAL.zero() == TERMINAL.one() == ()
        assert is_boolean(TERMINAL, ())


class TestMVAxioms:
    # associativity is cubic in the carrier, so it is exhausted on the small
    # catalog; the 1- and 2-variable axioms run up to carrier 200
    @pytest.mark.parametrize("algebra", list(iter_finite_algebras(max_size=16)), ids=repr)
    def test_oplus_associative_small(self, algebra):
        elems = list(algebra.elements())
        for a in elems:
            for b in elems:
                ab = oplus(algebra, a, b)
                for c in elems:
                    assert oplus(algebra, ab, c) == oplus(algebra, a, oplus(algebra, b, c))

    @pytest.mark.parametrize("orders", [[29], [2, 3, 7], [1, 1, 2, 4], [199], [9, 9]])
    def test_two_variable_axioms_to_200(self, orders):
        algebra = FiniteMV(orders)
        assert algebra.size <= 200
        zero, one = algebra.zero(), algebra.one()
        elems = list(algebra.elements())
        for a in elems:
            assert oplus(algebra, a, zero) == a
            assert neg(algebra, neg(algebra, a)) == a
            assert oplus(algebra, a, one) == one  # a + !0 = !0
        for a in elems:
            for b in elems:
                assert oplus(algebra, a, b) == oplus(algebra, b, a)
                # characteristic axiom: !(!a + b) + b == !(!b + a) + a
                left = oplus(algebra, neg(algebra, oplus(algebra, neg(algebra, a), b)), b)
                right = oplus(algebra, neg(algebra, oplus(algebra, neg(algebra, b), a)), a)
                assert left == right


class TestBoolean:
    def test_examples(self):
        assert is_boolean(A23, A23.element([1, 0]))
        assert not is_boolean(L2, L2.element(["1/2"]))
        assert is_boolean(TERMINAL, ())

    @pytest.mark.parametrize("algebra", [L6, A23, FiniteMV([1, 2, 4])], ids=repr)
    def test_equivalent_characterizations(self, algebra):
        one, zero = algebra.one(), algebra.zero()
        for a in algebra.elements():
            expected = all(c in (0, 1) for c in a)
            assert is_boolean(algebra, a) == expected
            assert (join(algebra, a, neg(algebra, a)) == one) == expected
            assert (meet(algebra, a, neg(algebra, a)) == zero) == expected


class TestHoms:
    def test_frozen_counts(self):
        assert enumerate_homs(L2, L3) == []
        assert len(enumerate_homs(L2, L6)) == 1
        assert len(enumerate_homs(A23, L6)) == 2
        assert len(enumerate_homs(A23, TERMINAL)) == 1
        assert enumerate_homs(TERMINAL, L2) == []

    def test_hom_action_rescales(self):
        (h,) = enumerate_homs(L2, L6)
        assert h(L2.element(["1/2"])) == (frac("1/2"),)

    def test_composition_matches_function_composition(self):
        for h in enumerate_homs(A23, FiniteMV([6, 6])):
            for g in enumerate_homs(FiniteMV([6, 6]), FiniteMV([12])):
                comp = g.compose(h)
                for x in A23.elements():
                    assert comp(x) == g(h(x))

    def test_identity(self):
        ident = Hom.identity(A23)
        assert ident.is_identity()
        assert all(ident(x) == x for x in A23.elements())

    def test_divisibility_enforced(self):
        with pytest.raises(AlgebraError):
            Hom(L3, L2, [0])

    @pytest.mark.parametrize(
        "orders_a,orders_b",
        [([2], [4]), ([2, 3], [6]), ([1, 1], [1, 2]), ([], []), ([4], [2, 8]), ([2, 2], [2, 2])],
    )
    def test_agrees_with_bruteforce(self, orders_a, orders_b):
        a, b = FiniteMV(orders_a), FiniteMV(orders_b)
        assert {hom_graph(h) for h in enumerate_homs(a, b)} == brute_force_hom_graphs(a, b)


class TestProduct:
    def test_concatenation_and_size(self):
        p, pr0, pr1 = product_algebra(L2, L3)
        assert p == A23
        assert p.size == 12
        x = p.element(["1/2", "2/3"])
        assert pr0(x) == (frac("1/2"),)
        assert pr1(x) == (frac("2/3"),)

    def test_terminal_is_unit(self):
        p, _, _ = product_algebra(A23, TERMINAL)
        assert p == A23


class TestIdealsAndQuotients:
    def test_ideal_shape_matches_bruteforce(self):
        # every ideal of a product of chains is a vanishing-set ideal
        for algebra in [FiniteMV([2, 3]), FiniteMV([1, 1, 2]), FiniteMV([3]), TERMINAL]:
            brute = {frozenset(i) for i in map(frozenset, all_ideals_bruteforce(algebra))}
            structured = {
                frozenset(Ideal(algebra, v).elements())
                for v in _subsets(range(algebra.num_components))
            }
            assert brute == structured
            assert len(brute) == 2 ** algebra.num_components

    def test_principal_ideal_of_boolean_is_down_set(self):
        x = A23.element([1, 0])
        ideal = Ideal.principal(A23, neg(A23, x))
        expected = {c for c in A23.elements() if all(ci <= ni for ci, ni in zip(c, neg(A23, x)))}
        assert set(ideal.elements()) == expected

    def test_quotient_keeps_vanishing_components(self):
        q_alg, q = quotient_by_ideal(A23, Ideal(A23, [0]))
        assert q_alg == L2
        assert q(A23.element(["1/2", "2/3"])) == (frac("1/2"),)

    def test_localize_examples(self):
        assert localize(A23, A23.element([1, 0]))[0] == L2  # invert (1,0): keep where x=1
        assert localize(A23, A23.one())[0] == A23
        assert localize(A23, A23.zero())[0] == TERMINAL

    def test_localize_requires_boolean(self):
        with pytest.raises(AlgebraError):
            localize(A23, A23.element(["1/2", 0]))

    def test_localization_universal_property(self):
        # every hom inverting x factors uniquely through the localization
        targets = list(iter_finite_algebras(max_size=30))
        for algebra in [A23, FiniteMV([2, 2]), FiniteMV([1, 2, 3])]:
            for x in _booleans(algebra):
                quotient, q = localize(algebra, x)
                for b in targets:
                    for k in enumerate_homs(algebra, b):
                        if k(x) != b.one():
                            continue
                        factorizations = [
                            c for c in enumerate_homs(quotient, b) if c.compose(q) == k
                        ]
                        assert len(factorizations) == 1


class TestProductSplit:
    def test_split_of_atom(self):
        split = product_split(A23, A23.element([0, 1]))
        assert split.part0 == L2 and split.part1 == L3

    def test_combine_example(self):
        split = product_split(A23, A23.element([0, 1]))
        c = split.combine(A23.element(["1/2", "1/3"]), A23.element([0, "2/3"]))
        assert c == A23.element(["1/2", "2/3"])

    def test_degenerate_split_at_one(self):
        # inverting !1 = 0 collapses everything: q0 lands in the terminal
        # algebra and q1 is an isomorphism
        split = product_split(A23, A23.one())
        assert split.part0 == TERMINAL
        assert split.part1 == A23 and split.q1.is_identity()

    def test_pairing_bijective_and_section(self):
        for algebra in [A23, FiniteMV([2, 2, 2]), FiniteMV([1, 4]), TERMINAL]:
            elems = list(algebra.elements())
            for x in _booleans(algebra):
                split = product_split(algebra, x)
                assert len({split.pair(e) for e in elems}) == len(elems)
                for c0 in elems:
                    for c1 in elems:
                        c = split.combine(c0, c1)
                        assert split.q0(c) == split.q0(c0)
                        assert split.q1(c) == split.q1(c1)

    def test_requires_boolean(self):
        with pytest.raises(AlgebraError):
            product_split(L2, L2.element(["1/2"]))


def _subsets(indices):
    indices = list(indices)
    for mask in range(1 << len(indices)):
        yield {indices[i] for i in range(len(indices)) if mask & (1 << i)}


def _booleans(algebra):
    from mvalg import boolean_skeleton

    return list(boolean_skeleton(algebra).elements())
