"""
Cofree comonoids, truncated
===========================

The cofree comonoid on p has p-trees as objects and paths from the root as
morphisms.  Below a chosen depth everything is finite and can be listed.
"""

import polycat as pc
from polycat.cofree import format_tree

# one position with one direction of cost 2: trees are a single branch
r = pc.linear(pc.COST, pc.cost(2))
approx = pc.cofree_approx(r, 3)
(t,) = approx.trees()
print("the tree:", format_tree(t))
for s in approx.paths(t):
    print(f"  path of length {len(s)} costs {approx.weight(t, s)}")

# %%
# A loop that is idempotent, with the predicate bound 2, unfolds into that
# tree.  Every path lifts to the loop except the empty one.
L = pc.EnrichedCategory.build(pc.COST, ["x"], {"id": ("x", "x", 0), "l": ("x", "x", 2)},
                              {"x": "id"}, {("l", "l"): "l"})
X = pc.enriched_to_comonoid(L)
psi = pc.PolyMorphism(X.carrier, r, {"x": "*"}, {"x": {"*": "l"}})
M = pc.cofree_lift(X, psi, 3)
print("lift is lawful:", pc.validate_cofree_map(X, M, r) == [])
print("lifts:", dict(M.lifts))

# %%
# Going back down recovers the map we started from.
print("unlift recovers psi:", pc.cofree_unlift(X, M, r) == psi)

# %%
# Two directions branch: there are more trees at each depth.
p = pc.Polynomial.from_counts([2, 0])
for d in range(4):
    print(f"depth {d}: {pc.cofree_approx(p, d).count_trees()} trees")
