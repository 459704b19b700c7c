from .barycentric import (
    barycentric_subdivision,
    fence_components,
    missing_subcomplex,
    order_complex,
    rbs_betti,
    relbs_betti,
    restricted_barycentric_complex,
)
from .closure import closure_betti
from .polar import polar_betti, polar_complex
from .wnerve import (
    NotAWeightedNerveError,
    WeightedSimplicialComplex,
    nerve_barcode,
    reconstruct_from_weighted_nerve,
    weighted_nerve,
    wnerve_barcode,
)
