"""Orders, operators and Arthur type tests for local Arthur parameters.

"""

from ._error import (
    ArthurLabError,
    AssumptionViolated,
    AttributeTypeError,
    BadIndex,
    BadKind,
    BadTypeError,
    DecompositionFailed,
    GroupMismatch,
    HypothesisFailed,
    InfinitesimalMismatch,
    InvariantBroken,
    LZero,
    NegativeMultiplicity,
    NotApplicable,
    NotTemperedAllPlus,
    NoWideRow,
    ParseError,
    PPrimeViolated,
    RangeError,
    RowExchangeRequired,
    SearchExhausted,
    TemperedData,
    TotalMismatch,
    TupleError,
    UnknownFixture,
    UnpairableBadParity,
)
from ._version import __version__  # noqa
from .algorithms import StepResult, lower_step, upper_step
from .config import Settings
from .dot import emit_dot
from .dsl import (
    format_ems,
    format_ldata,
    format_lparameter,
    format_parameter,
    parse_dsl,
    parse_ems,
    parse_ldata,
    parse_lparameter,
    parse_parameter,
)
from .halfint import HalfInt, half
from .ldata import (
    LanglandsData,
    Segment,
    TemperedEntry,
    insert_segments,
    max_b_check,
    predicate_lower,
    predicate_upper,
    reduce_lower,
    reduce_upper,
    remove_segments,
)
from .multisegments import (
    EmsBlock,
    ExtendedMultiSegment,
    ExtendedSegment,
    Mode,
    dual_tempered_ems,
    e_minus,
    e_plus_lower,
    e_plus_upper,
    e_rho_minus,
    psi_of_ems,
    shift_add,
    tempered_ems,
    validate_ems,
)
from .operators import (
    OperatorDescriptor,
    OperatorKind,
    applicable_ui,
    apply,
    dual_transport,
    enumerate_lowering,
    enumerate_raising,
    is_absolutely_maximal,
    is_absolutely_minimal,
    raising_closure,
)
from .orders import OrderKind, compare, extremal, poset_edges
from .params import (
    ArthurSummand,
    Family,
    GroupSpec,
    LocalArthurParameter,
    LocalLParameter,
    LSummand,
    SelfDualType,
    SupercuspidalLabel,
    dual_psi,
    extremal_parameters_of_lambda,
    good_parity_split,
    infinitesimal_of,
    is_anti_tempered,
    is_tempered,
    lambda_of,
    partition_of_phi,
    partitions_of,
    phi_of,
    validate_parameter,
)
from .partitions import OrderResult, Partition, dominance_compare
from .suites import SuiteReport, run_suite
from .vogan import (
    RankTriangle,
    cancel_common,
    closure_compare,
    m_matrix,
    partition_from_triangle,
    rank_entry_by_count,
    rank_entry_closed_form,
    rank_triangle,
    rank_triangles,
    unramified_reduction,
)

__all__ = [
    "ArthurLabError",
    "AssumptionViolated",
    "AttributeTypeError",
    "BadIndex",
    "BadKind",
    "BadTypeError",
    "DecompositionFailed",
    "GroupMismatch",
    "HypothesisFailed",
    "InfinitesimalMismatch",
    "InvariantBroken",
    "LZero",
    "NegativeMultiplicity",
    "NotApplicable",
    "NotTemperedAllPlus",
    "NoWideRow",
    "ParseError",
    "PPrimeViolated",
    "RangeError",
    "RowExchangeRequired",
    "SearchExhausted",
    "TemperedData",
    "TotalMismatch",
    "TupleError",
    "UnknownFixture",
    "UnpairableBadParity",
    "StepResult",
    "lower_step",
    "upper_step",
    "Settings",
    "emit_dot",
    "format_ems",
    "format_ldata",
    "format_lparameter",
    "format_parameter",
    "parse_dsl",
    "parse_ems",
    "parse_ldata",
    "parse_lparameter",
    "parse_parameter",
    "HalfInt",
    "half",
    "LanglandsData",
    "Segment",
    "TemperedEntry",
    "insert_segments",
    "max_b_check",
    "predicate_lower",
    "predicate_upper",
    "reduce_lower",
    "reduce_upper",
    "remove_segments",
    "EmsBlock",
    "ExtendedMultiSegment",
    "ExtendedSegment",
    "Mode",
    "dual_tempered_ems",
    "e_minus",
    "e_plus_lower",
    "e_plus_upper",
    "e_rho_minus",
    "psi_of_ems",
    "shift_add",
    "tempered_ems",
    "validate_ems",
    "OperatorDescriptor",
    "OperatorKind",
    "applicable_ui",
    "apply",
    "dual_transport",
    "enumerate_lowering",
    "enumerate_raising",
    "is_absolutely_maximal",
    "is_absolutely_minimal",
    "raising_closure",
    "OrderKind",
    "compare",
    "extremal",
    "poset_edges",
    "ArthurSummand",
    "Family",
    "GroupSpec",
    "LocalArthurParameter",
    "LocalLParameter",
    "LSummand",
    "SelfDualType",
    "SupercuspidalLabel",
    "dual_psi",
    "extremal_parameters_of_lambda",
    "good_parity_split",
    "infinitesimal_of",
    "is_anti_tempered",
    "is_tempered",
    "lambda_of",
    "partition_of_phi",
    "partitions_of",
    "phi_of",
    "validate_parameter",
    "OrderResult",
    "Partition",
    "dominance_compare",
    "SuiteReport",
    "run_suite",
    "RankTriangle",
    "cancel_common",
    "closure_compare",
    "m_matrix",
    "partition_from_triangle",
    "rank_entry_by_count",
    "rank_entry_closed_form",
    "rank_triangle",
    "rank_triangles",
    "unramified_reduction",
]
