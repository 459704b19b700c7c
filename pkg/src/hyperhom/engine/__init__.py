from .chain import (
    ChainComplex,
    ChainComplexError,
    build_chain_complex,
    homology_ranks,
    infimum_subcomplex,
    relative_betti,
    relative_chain_complex,
    simplicial_betti,
)
from .linalg import Field
from .persistence import Barcode, FilteredComplex, FiltrationError, persistent_homology
