"""
Polynomials as substitution
===========================

Over the trivial base a polynomial is just a list of direction counts, and
the composition product behaves like substituting one polynomial into
another.
"""

import polycat as pc

# y^2 has one position with two directions; y + 1 has two positions
p = pc.Polynomial(pc.TRIVIAL, {"i": {"a": "y", "b": "y"}})
q = pc.Polynomial(pc.TRIVIAL, {"j": {"u": "y"}, "k": {}})
print("p =", p)
print("q =", q)

# %%
# Morphisms go forward on positions and backward on directions.  There are
# three from y^2 to y + 1: two that land on j (pick which of a, b answers u)
# and one that lands on k.
print("hom count:", pc.hom_count(p, q))
for phi in pc.enumerate_hom(p, q):
    print("  ", phi.on_positions, phi.on_directions)

# %%
# p ◁ q has a position for every way of sending the directions of p to
# positions of q.  Its direction counts are the coefficients of
# (y + 1)^2 = y^2 + 2y + 1.
pq = pc.comp_obj(p, q)
print("p ◁ q =", pq)
print("direction counts:", pq.direction_counts())

# %%
# The parallel product multiplies direction sets instead.
print("p ⊗ q =", pc.parallel_obj(p, q))

# %%
# Structural isomorphisms are explicit pairs of morphisms, so the monoidal
# laws can be checked by composing them.
y = pc.Polynomial.from_counts([1])
iso = pc.canonical_iso("assoc◁", y, y, q)
print("associator verifies:", pc.verify_iso(iso) == [])
print("p ◁ e ≅ p:", pc.verify_iso(pc.canonical_iso("unit◁", p)) == [])
