"""Generalized central structures of finite-dimensional left Leibniz algebras.

Exact arithmetic over Q and F_p; derivation sets D containing Ad^l(L); the
D-center, D-derived subalgebra, upper and lower D-central series; and the
Schur/Baer/Hegarty type dimension bounds checked on concrete algebras.
"""

from .algebra import (
    LeibnizAlgebra,
    LeibnizIdentityError,
    catalog_make,
    centers,
    change_basis,
    derived_subalgebra,
    direct_sum,
    is_ideal,
    is_lie,
    quotient_algebra,
    validate_leibniz,
)
from .bounds import BoundReport, beta, verify_corollaries, verify_theorem_a, verify_theorem_b
from .derivations import (
    DerivationSet,
    ad_left,
    ad_set,
    annihilator,
    d_center,
    d_derived,
    derivation_algebra,
    induced_derivations,
    is_derivation,
    lie_closure,
)
from .field import GF, QQ, FieldSpec, Residue
from .linalg import Matrix, Subspace
from .series import (
    SeriesResult,
    lower_central_series,
    lower_d_central_series,
    upper_central_series,
    upper_d_central_series,
)

__version__ = "0.1.0"
