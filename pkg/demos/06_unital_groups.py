"""
Unital simplicial groups and unit intervals
===========================================

Z^r with the coordinatewise order and a strictly positive unit corresponds
to the finite product of chains cut out by its unit interval; products on
one side are products on the other.
"""

from mvalg import FiniteMV, SimplicialGroup, gamma, order_rank, product_unital, xi

# the unit interval of (Z^2, (2,3)) is the box {0..2} x {0..3} in Holder
# coordinates, i.e. the algebra [2,3]
g = SimplicialGroup([2, 3])
print("gamma(Z^2, (2,3)) =", gamma(g))

# and back again
print("xi([2,3]) =", xi(FiniteMV([2, 3])))
print("round trips:", gamma(xi(FiniteMV([2, 3]))) == FiniteMV([2, 3]), xi(gamma(g)) == g)

# the rank-0 group is the terminal algebra
print("gamma(rank 0) =", gamma(SimplicialGroup([])))

# Cartesian products concatenate units
h = product_unital(SimplicialGroup([2]), SimplicialGroup([3]))
print("\n(Z,(2)) x (Z,(3)) =", h)
print("gamma commutes with the product:", gamma(h) == FiniteMV([2, 3]))

# every element of a unit interval has finite order-rank, bounded by the rank
interval = gamma(g)
worst = max(order_rank(interval, a).rank for a in interval.elements())
print("\nmax order-rank inside gamma(Z^2,(2,3)):", worst)
