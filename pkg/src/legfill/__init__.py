"""legfill: positivity certificates, rulings, HOMFLY tb bounds, and
decomposable Lagrangian fillings for Legendrian knots presented by fronts."""

from .braid import (
    BandPresentation,
    BraidWord,
    ConjugatedBand,
    EmbeddedBand,
    HierarchyLevel,
    chi4_quasipositive,
    classify_certificate,
    closure_components,
    expand_bands,
    exponent_sum,
    parse_bands,
    parse_braid,
)
from .cobordism import (
    Birth,
    Exchange,
    FillingTrace,
    NotFillableByThisMethod,
    PatternMismatch,
    PinchCrossing,
    R1,
    R2,
    R3,
    Saddle,
    apply_move,
    construct_filling,
    parse_moves,
    replay_script,
    verify_trace,
)
from .corpus import corpus_get, corpus_list
from .front import (
    Front,
    OrientedFront,
    SweepViolation,
    check_tanaka_form,
    classical_invariants,
    components,
    front_of_braid_closure,
    front_to_pd,
    parse_front,
    tanaka_orientation,
    zero_resolution,
)
from .homfly import (
    Crossing,
    HomflyPoly,
    PlanarDiagram,
    braid_closure_diagram,
    homfly,
    homfly_tb_bound,
    max_framing_degree,
)
from .ruling import Ruling, enumerate_rulings, find_all_switched_oriented, unlinked_resolution

__version__ = "0.1.0"
