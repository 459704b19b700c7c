from .complex import SimplicialComplex
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    HypergraphMorphism,
    UnknownLabelError,
    collapse_multiedges,
    complement,
    dual,
    incidence_matrix,
    is_isomorphic,
    line_graph,
    lower_closure,
    nerve,
    s_components,
    same_hyperblock,
    simple,
    toplexes,
    upper_closure,
    validate_morphism,
)
from .io import ParseError, format_hypergraph, load_hypergraph, parse_hypergraph, parse_json, to_json
