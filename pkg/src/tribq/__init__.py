"""Exact Tribonacci and Tribonacci-Lucas quaternion toolkit.

Integer sequences over all integer indices, exact quaternion algebra,
high-precision closed-form evaluation with certified rounding, generating
function expansion, companion-matrix fast evaluation, the 2x2 complex-matrix
representation, and a machine-checked audit of the identity catalog.
"""

from .seqcore import (
    IndexDomainError,
    SequenceKind,
    derived_scalar,
    sequence_value,
    tribonacci,
    tribonacci_lucas,
)
from .quat import (
    QuatSeqKind,
    Quaternion,
    RationalQuaternion,
    cd_mul,
    q_progression_sum,
    qadd,
    qconj,
    qinv,
    qmul,
    qnorm,
    seq_quaternion,
)
from .binet import (
    PrecisionError,
    QuaternionC,
    Roots,
    binet_quaternion,
    binet_scalar,
    compute_roots,
    policy_precision_bits,
    rounding_residue,
)
from .series import (
    RationalSeries,
    UnsupportedDenominatorError,
    builtin_series,
    expand,
)
from .matrices import (
    GaussInt,
    Mat2C,
    NotInImageError,
    companion_power,
    det2,
    fast_seq,
    phi,
    phi_inverse,
)
from .audit import (
    EmptyRangeError,
    IdentityCase,
    UnknownIdentityError,
    VerdictReport,
    catalog,
    check_identity,
    minimal_counterexample,
    render_report,
    run_audit,
)

__version__ = "0.1.0"

__all__ = [
    "IndexDomainError",
    "SequenceKind",
    "derived_scalar",
    "sequence_value",
    "tribonacci",
    "tribonacci_lucas",
    "QuatSeqKind",
    "Quaternion",
    "RationalQuaternion",
    "cd_mul",
    "q_progression_sum",
    "qadd",
    "qconj",
    "qinv",
    "qmul",
    "qnorm",
    "seq_quaternion",
    "PrecisionError",
    "QuaternionC",
    "Roots",
    "binet_quaternion",
    "binet_scalar",
    "compute_roots",
    "policy_precision_bits",
    "rounding_residue",
    "RationalSeries",
    "UnsupportedDenominatorError",
    "builtin_series",
    "expand",
    "GaussInt",
    "Mat2C",
    "NotInImageError",
    "companion_power",
    "det2",
    "fast_seq",
    "phi",
    "phi_inverse",
    "EmptyRangeError",
    "IdentityCase",
    "UnknownIdentityError",
    "VerdictReport",
    "catalog",
    "check_identity",
    "minimal_counterexample",
    "render_report",
    "run_audit",
    "__version__",
]
