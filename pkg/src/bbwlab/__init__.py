"""Exact Borel-Bott-Weil computations on Grassmannians of planes.

The public surface is re-exported here; submodules hold the details.
"""

from .bbw import CohomologyTable, bundle_cohomology, line_bundle_cohomology
from .clifford import QuadSpace, SpinorModule, radical_filtration, splitting_independence, verify_even_structure
from .complexes import FormalComplex, build_sequence, check_k_exact, spinor_relations
from .lefschetz import LefschetzCollection, build_collection, k_decompose, restrict_hyperplane, verify_exceptional
from .rootsys import RootSystem, Weight, dotted_action
from .spaces import BundleSum, Space, chi, cohomology, dual_bundle, ext, parse_bundle, tensor_bundles

__version__ = "0.1.0"

__all__ = [
    "BundleSum",
    "CohomologyTable",
    "FormalComplex",
    "LefschetzCollection",
    "QuadSpace",
    "RootSystem",
    "Space",
    "SpinorModule",
    "Weight",
    "build_collection",
    "build_sequence",
    "bundle_cohomology",
    "check_k_exact",
    "chi",
    "cohomology",
    "dotted_action",
    "dual_bundle",
    "ext",
    "k_decompose",
    "line_bundle_cohomology",
    "parse_bundle",
    "radical_filtration",
    "restrict_hyperplane",
    "spinor_relations",
    "splitting_independence",
    "tensor_bundles",
    "verify_even_structure",
    "verify_exceptional",
]
