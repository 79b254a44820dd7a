"""Minimal linear codes over small fields.

Construction of families of minimal codes from explicit generator matrices,
exhaustive verification of minimality and weight claims, and Massey-style
secret sharing on top of any constructed code.
"""

from .analysis import (
    ab_condition,
    has_full_value_property,
    is_minimal_code,
    is_minimal_codeword,
    minimal_codewords,
)
from .codes import (
    DEFAULT_BUDGET,
    Codeword,
    LinearCode,
    dual_code,
    enumerate_codewords,
    from_generator,
    min_max_weight,
    random_code,
    weight_distribution,
)
from .constructions import (
    cf_code,
    cg_code,
    extended,
    first,
    lift,
    second,
    tensor_product,
    weight_s,
)
from .errors import (
    BadParams,
    BudgetExceeded,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    InconsistentShares,
    MinCodesError,
    NotInCode,
    NotPrimePower,
    PreconditionFailed,
    RankDeficient,
    TrivialDual,
    Unauthorized,
    ZeroColumn,
)
from .field import GF, build_field
from .matrix import (
    GFMatrix,
    dumps_matrix,
    in_span,
    kronecker,
    loads_matrix,
    nullspace,
    rank,
    read_matrix,
    rref,
    write_matrix,
)
from .sss import (
    SssScheme,
    deal,
    is_authorized,
    minimal_authorized_sets,
    perfectness_check,
    reconstruct,
)
from .sweep import run_criterion, run_sweep

__all__ = [
    "GF",
    "build_field",
    "GFMatrix",
    "rref",
    "rank",
    "in_span",
    "nullspace",
    "kronecker",
    "dumps_matrix",
    "loads_matrix",
    "read_matrix",
    "write_matrix",
    "LinearCode",
    "Codeword",
    "from_generator",
    "enumerate_codewords",
    "weight_distribution",
    "min_max_weight",
    "dual_code",
    "random_code",
    "DEFAULT_BUDGET",
    "is_minimal_code",
    "is_minimal_codeword",
    "minimal_codewords",
    "ab_condition",
    "has_full_value_property",
    "first",
    "second",
    "weight_s",
    "extended",
    "lift",
    "tensor_product",
    "cf_code",
    "cg_code",
    "SssScheme",
    "deal",
    "reconstruct",
    "is_authorized",
    "minimal_authorized_sets",
    "perfectness_check",
    "run_criterion",
    "run_sweep",
    "MinCodesError",
    "NotPrimePower",
    "DivisionByZero",
    "FieldMismatch",
    "DimensionMismatch",
    "RankDeficient",
    "TrivialDual",
    "NotInCode",
    "BudgetExceeded",
    "BadParams",
    "PreconditionFailed",
    "Unauthorized",
    "InconsistentShares",
    "ZeroColumn",
]
