"""Exact crystal graphs, tensor-product decompositions and the quasi-minuscule crystal lemma."""
from .cartan import (
    CartanError,
    CartanType,
    Sign,
    Weight,
    cartan_matrix,
    fundamental_weight,
    positive_roots,
    simple_root,
    to_root_coords,
    weight_sign,
    weyl_dim,
    weyl_orbit,
)
from .lemma import (
    classify_quasi_minuscule,
    find_lemma_seed,
    reproduce_g2_paper_data,
    verify_hypothesis,
    verify_lemma,
)
from .paths import CrystalGraph, CrystalInvariantError, NodeCapExceeded, build_crystal
from .tensor import TensorNode, component, component_isomorphic, decompose, highest_weight_nodes

__version__ = "0.1.0"
