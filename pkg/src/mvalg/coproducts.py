"""Coproducts of finite and rational algebras, subterminality, separability.

The coproduct of two finite products of chains is computed by a closed
formula: one component per pair (i, j) of summand components, with the lcm
of the two chain orders, ordered lexicographically in (i, j).  The formula
is an implementation hypothesis, not an axiom: the test suite discharges it
by checking the universal property (precomposition with the injections is a
bijection onto pairs of homs) over exhaustive sweeps.

Separability is decided through the codiagonal: an algebra is separable
exactly when ker(codiagonal) is generated by the negation of a Boolean
element e of A+A, which then splits A+A as A x (A+A)/<e> with the codiagonal
as the first projection.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .algebras import (
    ONE,
    AlgebraError,
    Element,
    FiniteMV,
    Hom,
    Ideal,
    ProductSplit,
    _meet,
    product_split,
)
from .pierce import boolean_skeleton, decompose, holder_embed
from .rationals import RationalAlgebra
from .topology import FiniteBoolean, ba_coproduct


@dataclass(frozen=True)
class CoproductResult:
    """A + B with its injections; the codiagonal is present when the two
    summands coincide.  ``grid[t]`` is the (i, j) pair behind component t."""

    algebra: FiniteMV
    in0: Hom
    in1: Hom
    codiagonal: Hom | None
    grid: tuple[tuple[int, int], ...]


def coproduct_finite(a: FiniteMV, b: FiniteMV) -> CoproductResult:
    grid = tuple((i, j) for i in range(a.num_components) for j in range(b.num_components))
    algebra = FiniteMV(lcm(a.orders[i], b.orders[j]) for i, j in grid)
    in0 = Hom(a, algebra, (i for i, _ in grid))
    in1 = Hom(b, algebra, (j for _, j in grid))
    codiag = None
    if a == b:
        # nabla o in0 = nabla o in1 = id forces component i to read the (i, i) cell
        codiag = Hom(algebra, a, (grid.index((i, i)) for i in range(a.num_components)))
    return CoproductResult(algebra, in0, in1, codiag, grid)


def coproduct_rational(a: RationalAlgebra, b: RationalAlgebra) -> RationalAlgebra:
    """Join of denominator specifications (lcm on finite chains); A + A = A,
    realizing the codiagonal as an isomorphism."""
    return a.join(b)


def is_subterminal_epic(algebra: FiniteMV | RationalAlgebra) -> bool:
    """Whether the unique map from the initial algebra is epic, decided by
    computing A + A and comparing the injections; the trivial algebra is
    excluded."""
    if isinstance(algebra, RationalAlgebra):
        # A + A = A with both injections the identity; rational algebras are
        # never trivial
        return coproduct_rational(algebra, algebra) == algebra
    if algebra.is_terminal:
        return False
    cop = coproduct_finite(algebra, algebra)
    return cop.in0 == cop.in1


@dataclass(frozen=True)
class SeparabilityCertificate:
    """Either a Boolean witness e in A+A with ker(codiagonal) = <not e>,
    together with the split it induces, or a refutation reason."""

    algebra: FiniteMV
    coproduct: CoproductResult
    witness: Element | None
    split: ProductSplit | None
    refutation: str | None

    @property
    def separable(self) -> bool:
        return self.witness is not None


def separability_witness(algebra: FiniteMV) -> SeparabilityCertificate:
    """Search the Boolean skeleton of A+A for the complement of the
    codiagonal kernel; the lexicographically least witness is returned
    (there is at most one).  The search space is 2^(k^2) for k components,
    so this is meant for k <= 3 or so."""
    cop = coproduct_finite(algebra, algebra)
    nabla = cop.codiagonal
    assert nabla is not None
    kernel = Ideal(cop.algebra, set(nabla.component_map))
    one = algebra.one()
    for e in sorted(boolean_skeleton(cop.algebra).elements()):
        if nabla(e) != one:
            continue
        if Ideal.principal(cop.algebra, tuple(ONE - c for c in e)) == kernel:
            return SeparabilityCertificate(algebra, cop, e, product_split(cop.algebra, e), None)
    return SeparabilityCertificate(
        algebra, cop, None, None, "no Boolean element complements the codiagonal kernel"
    )


@dataclass(frozen=True)
class SeparabilityResult:
    separable: bool
    factors: tuple[RationalAlgebra, ...]


def is_separable(
    algebra: FiniteMV | RationalAlgebra | Sequence[RationalAlgebra],
) -> SeparabilityResult:
    """Decide separability and produce the rational factors.  Finite algebras
    are split into chains and embedded; a product of rational algebras is
    already its own factorization.  (Every representable algebra is
    separable; the decision procedure is cross-checked against the witness
    search in the tests.)"""
    if isinstance(algebra, RationalAlgebra):
        return SeparabilityResult(True, (algebra,))
    if isinstance(algebra, FiniteMV):
        factors = tuple(holder_embed(f) for f in decompose(algebra).factors)
        return SeparabilityResult(True, factors)
    factors = tuple(algebra)
    if not all(isinstance(f, RationalAlgebra) for f in factors):
        raise AlgebraError(f"{algebra!r} is not a representable algebra")
    return SeparabilityResult(True, factors)


@dataclass(frozen=True)
class PierceCoproductReport:
    """Comparison of the Boolean part of A+B with the Boolean coproduct of
    the parts, through the canonical map on atoms."""

    passed: bool
    atoms_left: int
    atoms_right: int
    atoms_coproduct: int
    detail: str


def pierce_coproduct_check(a: FiniteMV, b: FiniteMV) -> PierceCoproductReport:
    """The canonical Boolean map P(A) + P(B) -> P(A+B) sends the atom pair
    (i, j) to in0(atom_i) /\\ in1(atom_j); it is an isomorphism exactly when
    those meets enumerate the atoms of P(A+B) bijectively."""
    cop = coproduct_finite(a, b)
    skel = boolean_skeleton(cop.algebra)
    expected = ba_coproduct(
        FiniteBoolean(a.num_components), FiniteBoolean(b.num_components)
    ).atom_count
    images = []
    for i in range(a.num_components):
        for j in range(b.num_components):
            images.append(_meet(cop.in0(a.atom(i)), cop.in1(b.atom(j))))
    atom_set = set(skel.atoms())
    ok = (
        len(images) == len(set(images)) == expected == skel.atom_count
        and set(images) == atom_set
    )
    detail = (
        f"P({list(a.orders)}+{list(b.orders)}) has {skel.atom_count} atoms; "
        f"Boolean coproduct has {expected}"
    )
    return PierceCoproductReport(ok, a.num_components, b.num_components, skel.atom_count, detail)
