"""Homology theories for finite hypergraphs, computed exactly over GF(2) or the rationals."""
from .chains import (
    allowed_paths,
    chromatic_betti_table,
    embedded_betti,
    intercrossing_distances,
    magnitude_betti_table,
    path_betti,
)
from .core import *  # noqa: F401,F403
from .engine import Barcode, ChainComplex, Field, build_chain_complex, homology_ranks, infimum_subcomplex, relative_betti
from .engine.persistence import FilteredComplex, persistent_homology
from .guards import ResourceGuardError
from .simplicial import (
    barycentric_subdivision,
    closure_betti,
    fence_components,
    missing_subcomplex,
    polar_complex,
    rbs_betti,
    reconstruct_from_weighted_nerve,
    relbs_betti,
    restricted_barycentric_complex,
    weighted_nerve,
    wnerve_barcode,
)

__version__ = "0.1.0"
