"""Exact constructions and verifiers for higher-dimensional Hadamard matrices."""
from .core import BIN, PM1, PMZ, SYM, Hypercube, InputError, LayerSpec, Verdict, verify_hadamard_hypercube
from .conference import ConferenceMatrix, paley_conference, verify_conference
from .cubes import cube_from_conference, paley_cube, yang_cube
from .latin import LatinHypercube, line_rainbow_latin, modular_latin, verify_latin, verify_line_rainbow
from .families import ConstructionError, OrthogonalFamily, recursive_hypercube, replace, verify_orthogonal_family
from .designs import design_hypercube, kharaghani_block_matrix, verify_symmetric_design_hypercube

__version__ = "0.1.0"
