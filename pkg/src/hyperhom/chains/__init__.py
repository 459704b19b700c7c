from .chromatic import chromatic_betti_table
from .embedded import embedded_betti, embedded_complex
from .magnitude import intercrossing_distances, magnitude_betti_table
from .path import PathBasis, allowed_paths, path_betti
