"""
``polycat`` works with polynomials over a monoidal base category.

A polynomial is a sum of products of base objects: it has positions, a set
of directions at each position and a predicate (a base object) on every
direction.  Over the trivial base these are the usual polynomial functors;
over the cost base ``[0, inf]`` they carry the data of generalised metric
spaces.  The package provides

* the category of polynomials: hom-sets, composition, sums and products;
* the parallel and composition products with their canonical isomorphisms;
* enriched categories, cofunctors and the equivalence with comonoids;
* depth-truncated cofree comonoids;
* cost-bounded discrete dynamical systems;
* a text format for all of the above and the ``polycat`` command.

All arithmetic is exact.  The examples assume::

    >>> import polycat as pc
    >>> p = pc.Polynomial.from_counts([2])
    >>> q = pc.Polynomial.from_counts([1, 0])
    >>> pc.comp_obj(p, q).direction_counts()
    [0, 1, 1, 2]
"""

__version__ = "0.1.0"

from polycat.base import (
    ARROW,
    BUILTIN_BASES,
    COST,
    INF,
    TRIVIAL,
    BaseMorphism,
    FinitePresentedBase,
    MonoidalBase,
    compose_base,
    cost,
    hom_base,
    tensor_base,
    validate_base,
)
from polycat.cofree import CofreeApprox, CofreeMap, cofree_approx, cofree_lift, cofree_unlift, validate_cofree_map
from polycat.comonoid import (
    Comonoid,
    ComonoidMorphism,
    cofunctor_to_comonoid_mor,
    comonoid_mor_to_cofunctor,
    comonoid_to_enriched,
    enriched_to_comonoid,
    nfold_comult,
    trivial_comonoid,
    validate_comonoid,
    validate_comonoid_morphism,
)
from polycat.dynamics import (
    DynSystem,
    MetricSpace,
    Trace,
    cofunctor_to_dds,
    dds_to_cofunctor,
    make_dds,
    naive_iterate,
    nat_window,
    run_dds,
    seq_compose_dds,
)
from polycat.enriched import (
    EnrichedCategory,
    EnrichedCofunctor,
    compose_cofunctors,
    identity_cofunctor,
    validate_cofunctor,
    validate_enriched,
)
from polycat.errors import *  # noqa: F401,F403
from polycat.monoidal import (
    ISO_KINDS,
    CanonicalIso,
    bowtie_obj,
    canonical_iso,
    comp_mor,
    comp_obj,
    comp_obj_def_form,
    find_iso,
    is_isomorphic,
    parallel_mor,
    parallel_obj,
    rtimes_obj,
    verify_iso,
)
from polycat.polynomial import (
    Polynomial,
    PolyMorphism,
    as_dialectica,
    compose_poly,
    constant,
    coproduct,
    enumerate_hom,
    hom_count,
    identity_poly,
    is_homogeneous,
    linear,
    product,
    representable,
    unit_polynomial,
    validate_poly_morphism,
    zero,
)
from polycat.structure import ParseError, UnresolvedReference, ValidationFailure, load, parse, print_structure
