"""
Finite algebras, Boolean elements, and product splittings
=========================================================

Build finite products of chains, compute with exact fractions, and watch a
Boolean element split an algebra into a product.
"""

from mvalg import (
    FiniteMV,
    boolean_skeleton,
    is_boolean,
    neg,
    oplus,
    product_split,
)

# the chain with denominator 6: {0, 1/6, ..., 1}
L6 = FiniteMV([6])
print("carrier of L6:", [str(c[0]) for c in L6.elements()])

# truncated addition clips at 1
x, y = L6.element(["1/2"]), L6.element(["2/3"])
print("1/2 + 2/3 =", oplus(L6, x, y))  # -> 1
print("!(1/2)    =", neg(L6, x))

# a product of two chains; elements are coordinate tuples
A = FiniteMV([2, 3])
print("\n[2,3] has", A.size, "elements and", boolean_skeleton(A).size, "Boolean ones")
for b in boolean_skeleton(A).elements():
    print("  boolean:", b, "is_boolean:", is_boolean(A, b))

# a Boolean element x splits the algebra into the part where x = 0 and the
# part where x = 1
split = product_split(A, A.element([0, 1]))
print("\nsplit at (0,1):", split.part0, "x", split.part1)

# combine glues a pair of representatives back into one element
c = split.combine(A.element(["1/2", "1/3"]), A.element([0, "2/3"]))
print("combine((1/2,1/3), (0,2/3)) =", c)
print("projections agree:", split.q0(c), split.q1(c))

# the pairing (q0, q1) is a bijection; exhaust it
images = {split.pair(e) for e in A.elements()}
print("pairing image size:", len(images), "=", A.size)
