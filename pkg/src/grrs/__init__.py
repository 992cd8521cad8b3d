"""Exact-arithmetic root systems with reflections at isotropic vectors.

Finite systems live in `finite`, infinite ones with finite minimal quotient
in `symbolic` (as lattice-coset families), named constructions in `catalog`,
and canonical classification data in `classify`.
"""

from .linalg import (
    BilinearSpace,
    Lattice,
    form_eval,
    kernel_basis,
    lattice_from_vectors,
    lattice_member,
    standard_space,
    vec,
)
from .finite import (
    AxiomReport,
    FiniteRootSystem,
    check_axioms,
    generate_subsystem,
    gw_orbits,
    integral_subsystem,
    is_irreducible,
    is_reduced,
    isomorphic_finite,
    isotropic_reflect,
    k_value,
    reflect,
    weyl_orbits,
)
from .symbolic import (
    CosetSet,
    GapTable,
    SymbolicRootSystem,
    affinize,
    check_symbolic_axioms,
    cl,
    F_of,
    from_finite,
    gaps,
    quotient,
)
from .catalog import a_nn_x, build, family, real_roots_from_matrix
from .classify import (
    ClassDescriptor,
    F2Subset,
    affine_canonical,
    contains_affine_basis,
    enumerate_classes,
    identify,
    kac_moody_name,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
