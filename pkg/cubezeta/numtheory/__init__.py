"""Elementary number theory: totients, Moebius, index sets and unit groups."""

from cubezeta.numtheory.arithmetic import (
    JSet,
    UnitGroup,
    divisors,
    euler_phi,
    factorize,
    fold_residue,
    j_set,
    lcm_all,
    mobius,
    phi_tilde,
    primitive_root,
    unit_group,
    unit_group_generators,
)

__all__ = [
    "JSet",
    "UnitGroup",
    "divisors",
    "euler_phi",
    "factorize",
    "fold_residue",
    "j_set",
    "lcm_all",
    "mobius",
    "phi_tilde",
    "primitive_root",
    "unit_group",
    "unit_group_generators",
]
