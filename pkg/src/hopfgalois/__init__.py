"""Exact Galois connections between comodule-algebra subalgebras and
generalised quotients of a finite-dimensional Hopf algebra.

Quick start::

    from hopfgalois import *

    h = sweedler(PrimeField(3))
    a = regular(h)
    fam = enumerate_ricos(h)
    closure_report(a, family=fam).closed_indices

Everything computes over Q or GF(p) with exact scalars; no floats
anywhere, so every reported equality is a theorem about the instance.
"""

from .comod import (
    CleftData,
    ComoduleAlgebraData,
    ModuleAlgebraData,
    NotCleft,
    coinvariants,
    coinvariants_q,
    hom_canonical,
    invariants,
    regular,
    tensor_over,
    to_module_algebra,
    trivial,
    trivial_cleft,
    validate_comodule_algebra,
    validate_module_algebra,
    verify_cleft,
)
from .fields import FieldMismatchError, PrimeField, Rational, parse_field
from .galois import (
    BijectionCertificate,
    CanonicalMap,
    DescentError,
    GaloisConnectionInstance,
    MontgomeryReport,
    RegularInverse,
    bigalois_descent,
    bigalois_space,
    canonical_inverse_regular,
    canonical_map,
    check_fdim_bijection,
    check_mono_on_qgalois,
    check_montgomery_conditions,
    closure_report,
    hopf_quotient,
    is_closed,
    is_normal_ideal,
    is_normal_subalgebra,
    is_q_galois,
    phi,
    psi_enum,
    psi_regular,
)
from .hopf import (
    AlgebraData,
    CoalgebraData,
    HopfAlgebraData,
    LinearHom,
    StructureError,
    ValidationReport,
    convolution_inverse,
    convolve,
    coopposite,
    cyclic_table,
    dual,
    group_algebra,
    ker_counit,
    opposite,
    sweedler,
    symmetric_table,
    taft,
    tensor_algebra,
    validate_algebra,
    validate_coalgebra,
    validate_hopf,
)
from .linalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    kron,
    subspace_intersect,
    subspace_le,
    subspace_sum,
)
from .quotlat import (
    CoidealSubalgebra,
    FinitePoset,
    GeneralisedQuotient,
    cogenerated_rico,
    enumerate_coideal_subalgebras,
    enumerate_ricos,
    enumerate_subalgebras_over,
    enumerate_subspaces,
    gaussian_binomial,
    join_q,
    meet_q,
    poset_report,
    validate_coideal_subalgebra,
    validate_rico,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
