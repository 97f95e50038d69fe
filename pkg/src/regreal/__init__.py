"""Regular real analysis with Büchi automata over digit alphabets."""
from .automaton import (
    Automaton,
    Lasso,
    accepts,
    closure,
    complete,
    is_closed,
    is_weak,
    path_label_count,
    scc,
    sinks,
    trim,
    validate,
)
from .omega import (
    complement_det,
    determinize_closed,
    find_lasso,
    includes,
    is_empty,
    is_universal_closed,
    language_equal,
    normalize_closed,
    product_intersect,
    product_union,
    project,
)
from .reals import (
    affine_graph_automaton,
    encode_rational,
    equal_value_automaton,
    eval_function,
    midpoint_relation_automaton,
    saturate,
    singleton_automaton,
    valuation,
)
from .analysis import (
    is_continuous,
    is_differentiable,
    is_function,
    make_full,
    sink_affine,
    sink_projection_full,
    slope_set,
    sum_form_check,
    value_universal,
)
from .geometry import (
    attractor_boxes,
    box_measure_estimate,
    gdifs_of,
    kernel_residuals,
    porosity_witness,
)
from .regba import load, load_corpus, parse, serialize

__version__ = "0.1.0"
