"""
Walking in a metric space
=========================

A generalised metric space is a category whose morphisms are paths with a
cost.  A dynamical system picks one path out of every point; running it
composes those choices.
"""

import polycat as pc

# two points and a road from x to y costing 3
S = pc.MetricSpace.build(["x", "y"],
                         {"idx": ("x", "x", 0), "idy": ("y", "y", 0), "f": ("x", "y", 3)},
                         {"x": "idx", "y": "idy"})

# %%
# The same space seen as a comonoid: positions are points, directions are
# paths, predicates are costs.
X = S.comonoid
print("carrier:", X.carrier)
print("comonoid laws hold:", pc.validate_comonoid(X) == [])

# %%
# Drive along the road, then stay put.  Every chosen path costs at most 3.
settle = pc.make_dds(S, {"x": "f", "y": "idy"}, bound=3)
run, traces = pc.run_dds(settle, 2)
for x, t in traces.items():
    print(f"from {x}: steps {[s[0] for s in t.steps]}, cumulative {t.cumulative}, composite {t.composite}")
print("two-step bound:", run.bound)

# %%
# A bound that is too tight is refused.
try:
    pc.make_dds(S, {"x": "f", "y": "idy"}, bound=2)
except pc.BoundViolated as exc:
    print("refused:", exc)

# %%
# The same system as a cofunctor into the window 0..4 of the natural
# numbers, where n costs 3n.  Reading off the lift of 1 recovers it.
F = pc.dds_to_cofunctor(settle, 4)
print("cofunctor lawful:", pc.validate_cofunctor(F) == [])
print("lift of 2 at x:", F.lifted("x", "2"))
print("round trip:", pc.cofunctor_to_dds(F).assignment == settle.assignment)
