"""Exact arithmetic for deformed oscillator algebras.

Structure functions, recursive minimal deformations, weighted-shift operator
algebra on truncated Fock windows, normal-ordering tables, inverse
presentations, and Casimir operators; every computation is carried out over
arbitrary-precision rationals with zero numerical error.
"""

from .errors import (
    AlphaVanishes,
    DegenerateParameters,
    DivisionByZeroAtLevel,
    ExprParseError,
    InvalidParameter,
    PreconditionViolated,
    QoscilError,
    WindowMismatch,
)
from .exppoly import ExpPoly
from .rationals import (
    Rational,
    WeightVector,
    basic_number,
    format_rational,
    omega,
    omega_weights,
    parse_rational,
    phi,
    q_integer,
    rat,
    residue_sum,
)
from .deform import (
    FAMILIES,
    DeformationChain,
    arik_coon,
    bem,
    calogero_vasiliev,
    chain,
    chakrabarti_jagannathan,
    macfarlane_biedenharn,
    match_quadratic_start,
    minimal_deform,
    polynomial_start,
    qcv,
    qcv_defining_relation,
)
from .opalg import (
    FockWindow,
    Operator,
    QuommutatorSpec,
    VerifyReport,
    annihilator,
    anticommutator,
    commutator,
    creator,
    diag,
    general_quommutator_rhs,
    identity,
    number_operator,
    quommutator,
    structure_from_quommutator,
    verify_relation,
)
from .ordering import (
    NormalOrderTable,
    bracket,
    bracket_bar,
    normal_order_table,
    normal_order_table_bar,
    verify_normal_order,
)
from .inverse import (
    BetaForm,
    PhiForm,
    simplest_Q,
    to_Q_quommutator,
    to_unit_quommutator,
    to_unit_quommutator_with_gamma,
)
from .casimir import (
    CasimirPair,
    casimir_commutator,
    casimir_quommutator,
    non_fock_spectrum,
    verify_casimir_relation,
)
from .qcalc import jackson_derivative, multi_q_derivative

__version__ = "0.1.0"
