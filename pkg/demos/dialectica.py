"""
Dialectica morphisms over the walking arrow
===========================================

With predicates in the arrow F -> T a homogeneous polynomial is a relation
between positions and directions.  A morphism must carry true predicates to
true predicates.
"""

import polycat as pc
from polycat.errors import laws

questions = pc.Polynomial(pc.ARROW, {"alice": {"q": "T"}, "bob": {"q": "F"}})
answers = pc.Polynomial(pc.ARROW, {"yes": {"q": "T"}, "no": {"q": "F"}})

view = pc.as_dialectica(questions)
print("relation of questions:", sorted(view.relation))

# %%
# Sending alice to "no" would need a morphism T -> F, which the arrow lacks.
bad = pc.PolyMorphism(questions, answers, {"alice": "no", "bob": "no"},
                      {"alice": {"q": "q"}, "bob": {"q": "q"}})
for v in pc.validate_poly_morphism(bad):
    print("rejected:", v)

good = pc.PolyMorphism(questions, answers, {"alice": "yes", "bob": "no"},
                       {"alice": {"q": "q"}, "bob": {"q": "q"}})
print("accepted:", pc.validate_poly_morphism(good) == [])

# %%
# Counting with the closed formula and by enumeration agree.
print("hom count:", pc.hom_count(questions, answers), "=", len(pc.enumerate_hom(questions, answers)))
print("laws broken by the bad map:", laws(pc.validate_poly_morphism(bad)))
