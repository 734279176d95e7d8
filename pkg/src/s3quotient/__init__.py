"""Exact algebra of functions on quotients of the 3-sphere by finite subgroups of SU(2)."""

from .binform import BinaryForm, act, cross, hessian, transvectant
from .cyclo import CycloMatrix, CycloNum, nullspace, root_of_unity
from .groups import FiniteSubgroup, GroupElement, build, character_of, is_invariant, molien_dim
from .invariants import InvariantSystem, fundamental, syzygy
from .sphere import Multiplet, SphereFunction, apply_generator, cg_highest, multiplet_from_hw

__all__ = [
    "BinaryForm", "CycloMatrix", "CycloNum", "FiniteSubgroup", "GroupElement", "InvariantSystem",
    "Multiplet", "SphereFunction", "act", "apply_generator", "build", "cg_highest", "character_of",
    "cross", "fundamental", "hessian", "is_invariant", "molien_dim", "multiplet_from_hw", "nullspace",
    "root_of_unity", "syzygy", "transvectant",
]
