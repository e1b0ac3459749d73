"""Derived operations of a six-element involutive BE algebra.

Everything is computed from the implication table: the involution
x* = x -> 0, join (x -> y) -> y, meet ((x* -> y*) -> y*)*, the product
(x -> y*)* and the two orders.
"""
import numpy as np

from qwalg import example, phi_to_mbe, psi_to_be

a = example("qw_noncommutative")
ops = a.ops


def show(title, table):
    print(title)
    print("      " + " ".join(f"{n:>2}" for n in a.names))
    for name, row in zip(a.names, table):
        print(f"  {name:>2} |" + " ".join(f"{a.names[v]:>2}" for v in row))
    print()


show("x -> y", a.imp)
print("x*   :", " ".join(f"{n}*={a.names[s]}" for n, s in zip(a.names, ops.star)), "\n")
show("join  x \\/ y", ops.join)
show("meet  x /\\ y", ops.meet)

# the meet is not commutative here
ai, ci = a.index("a"), a.index("c")
print(f"a /\\ c = {a.names[ops.meet[ai, ci]]},  c /\\ a = {a.names[ops.meet[ci, ai]]}")

# <= is not antisymmetric: a <= c and c <= a although a != c
print("a <= c:", bool(ops.leq[ai, ci]), "  c <= a:", bool(ops.leq[ci, ai]))
print("a <=Q c:", bool(ops.leqQ[ai, ci]), " (the quantum order stays antisymmetric)\n")

# product signature and back
m = phi_to_mbe(a)
print("product table x (.) y:")
print(np.array([[a.names[v] for v in row] for row in m.prod]))
print("round trip restores the implication table:", psi_to_be(m) == a)
