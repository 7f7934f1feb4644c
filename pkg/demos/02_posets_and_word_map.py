"""2-posets and the linear-extension word map.

A 2-poset is a finite partial order with x/y labels.  Its W-image is the
sum of the label words over all linear extensions; disjoint union turns
into the shuffle product.  Star values come from zig-zag shaped posets:
one y-rooted x-chain per index entry, consecutive chains linked at the top.
"""

from mzvkit import TwoPoset, disjoint_union, is_admissible, w_map, x_star
from mzvkit.words import shuffle

print("== chains give plain z-words ==")
for k in (2, 3, 4):
    p = x_star((k,))
    print(f"x_star(({k},)) = {p.describe()}  W = {w_map(p)}")
print()

print("== the zig-zag of (2,2) ==")
p = x_star((2, 2))
print("poset:", p.describe())
print("W =", w_map(p), "  (5 linear extensions)")
print("so zeta*(2,2) = zeta(2,2) + 4 zeta(1,3) = zeta(2,2) + zeta(4)")
print()

print("== admissibility = convergence ==")
for k in ((2,), (1, 2), (2, 1)):
    print(f"x_star({k}) admissible: {is_admissible(x_star(k))}")
print()

print("== disjoint union is shuffle ==")
a = x_star((2,))
b = x_star((1, 2))
lhs = w_map(disjoint_union(a, b))
rhs = shuffle(w_map(a), w_map(b))
print("W(a | b)          =", lhs)
print("W(a) sh W(b) same :", lhs == rhs)
print()

print("== splitting a non-comparable pair ==")
anti = TwoPoset(["x", "y"])  # two incomparable vertices
print("W(antichain x,y) =", w_map(anti))
print("  equals W(x<y) + W(y<x):", w_map(anti) == w_map(anti.with_relation(0, 1)) + w_map(anti.with_relation(1, 0)))
