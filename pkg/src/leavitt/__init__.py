"""Exact symbolic computation in Leavitt path algebras of directed graphs.

The package models finitely presented graphs (with infinite emitters given by
infinite-multiplicity target sets), decides Conditions (L) and (K) with
certificates, builds hereditary saturated sets and quotient graphs, performs
exact element arithmetic over the rationals or a prime field with confluent
normal forms, and constructs verified Zorn witnesses (or the exitless-cycle
Laurent obstruction) for nonzero elements.
"""

from .algebra import Element, LeavittAlgebra, Monomial
from .conditions import (
    ConditionReport,
    SimpleClosedPathCount,
    check_condition_K_direct,
    check_condition_K_via_quotients,
    check_condition_L,
    count_simple_closed_paths,
)
from .errors import LeavittError
from .exprs import parse_element, render_element
from .fields import QQ, Fp, PrimeField, RationalField, field_from_spec
from .graph import (
    Cycle,
    Edge,
    Graph,
    Path,
    find_exitless_cycle,
    graph_from_dict,
    graph_from_json,
    graph_to_dict,
    graph_to_json,
    is_cycle,
    make_path,
    parse_graph,
    path_range,
    path_source,
    regular_vertices,
    validate_graph,
)
from .ideals import (
    AdmissiblePair,
    QuotientGraph,
    admissible_pairs,
    breaking_vertex_element,
    breaking_vertices,
    enumerate_hereditary_saturated,
    hereditary_saturated_closure,
    is_hereditary_saturated,
    quotient_graph,
    quotient_survey,
)
from .reduction import (
    LaurentObstruction,
    LaurentPoly,
    ReductionCertificate,
    VertexHit,
    ZornWitness,
    bab_witness,
    corner_to_laurent,
    exitless_cycle_at,
    idempotent_in_right_ideal,
    laurent_to_corner,
    reduce_to_vertex,
    verify_theorem1,
    zorn_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
