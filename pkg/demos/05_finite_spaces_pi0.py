"""
Finite spaces: components, pi0, and product preservation
========================================================

Components of finite spaces coincide with quasi-components, the
clopen-membership map separates exactly those classes, and pi0 preserves
finite products - all checkable by exhaustion here.
"""

from mvalg import (
    FiniteMV,
    FinSpace,
    ba_coproduct,
    clopen_algebra,
    components,
    e_map,
    gamma_compare,
    pi0,
    pierce_coproduct_check,
    quasi_components,
)
from mvalg.topology import FiniteBoolean, iter_topologies

# the two-point space with one open point is connected
sierpinski = FinSpace.from_sets(2, [[], [0], [0, 1]])
print("components:", components(sierpinski), " quasi:", quasi_components(sierpinski))
print("pi0 classes:", pi0(sierpinski).class_count)

# on a discrete space pi0 changes nothing
print("pi0 of discrete 3:", pi0(FinSpace.discrete(3)).class_count)

# the clopen-membership map E: x -> which clopens contain x
em = e_map(sierpinski)
print("\nclopen table:", em.table, "(both points in the same clopens)")
print("comparison with pi0 bijective:", em.is_bijective)

# pi0 of a product vs the product of the pi0s: the comparison map gamma
report = gamma_compare(sierpinski, FinSpace.discrete(2))
print("\ngamma bijective:", report.is_bijective, " homeomorphism:", report.is_homeomorphism)

# sweep every topology on three points
count = sum(1 for _ in iter_topologies(3))
print("topologies on 3 labeled points:", count)

# the Boolean side: clopens form a powerset on the component classes
print("\nclopen algebra of discrete 3:", clopen_algebra(FinSpace.discrete(3)))
print("Boolean coproduct of 2 and 3 atoms:", ba_coproduct(FiniteBoolean(2), FiniteBoolean(3)))

# and the same multiplication law shows up for Boolean parts of coproducts
print(pierce_coproduct_check(FiniteMV([2, 3]), FiniteMV([2, 3])).detail)
