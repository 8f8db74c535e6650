"""Specht modules over GF(p) and Young-subgroup fixed-point invariants.

Exact modular representation theory for symmetric groups: partition
combinatorics, Specht and permutation modules with their bilinear forms,
fixed-point functors, Hom spaces and first cohomology, a meataxe, and an
evaluation engine with closed formulas, branching bounds and brute force.
"""

from .engine import InvariantResult, evaluate
from .modules import (
    ModuleRep,
    permutation_module,
    simple_module_D,
    specht_fixed_space,
    specht_module,
)
from .partitions import char0_dim, conjugate, p_core, partitions_of

__version__ = "0.1.0"

__all__ = [
    "InvariantResult",
    "ModuleRep",
    "char0_dim",
    "conjugate",
    "evaluate",
    "p_core",
    "partitions_of",
    "permutation_module",
    "simple_module_D",
    "specht_fixed_space",
    "specht_module",
    "__version__",
]
