"""Locally repairable codes with list decoding past the Johnson radius."""

from .analysis import (
    CurvePoint,
    GainRow,
    curve_csv,
    gain_csv,
    gain_table,
    johnson_normalized,
    normalized_radius_curve,
    rate,
    render_table,
    table1,
    table_csv,
)
from .errors import ParameterError
from .gf import Felt, Field, field_for_order, field_new
from .kernels import BACKEND
from .listdec import (
    LocalDecodeOutcome,
    RadiusReport,
    ShortenedInstance,
    global_radius,
    list_decode,
    list_size_bound,
    local_phase,
    shorten,
    sigma_bound,
    unshorten,
)
from .lrc import (
    LrcParams,
    TamoBargCode,
    is_lrc_member,
    local_code_view,
    supercode,
    tb_construct,
    tb_encode,
)
from .poly import (
    BiPoly,
    UniPoly,
    divided_difference_reduce,
    interpolate,
    newton_reconstruct,
)
from .prob import (
    FailureReason,
    MiscorrectionModel,
    UniqueOutcome,
    estimate_model,
    p_f,
    p_suc_bound,
    unique_decode,
    unique_decode_report,
)
from .rs import (
    Candidate,
    DecodeList,
    GsParams,
    RsCode,
    bmd_decode,
    gs_list_decode,
    gs_params,
    hamming_distance,
    johnson_radius,
    rs_encode,
    t_of_tau,
)
from .simulate import TrialRow, run_simulation

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BiPoly",
    "Candidate",
    "CurvePoint",
    "DecodeList",
    "FailureReason",
    "Felt",
    "Field",
    "GainRow",
    "GsParams",
    "LocalDecodeOutcome",
    "LrcParams",
    "MiscorrectionModel",
    "ParameterError",
    "RadiusReport",
    "RsCode",
    "ShortenedInstance",
    "TamoBargCode",
    "TrialRow",
    "UniPoly",
    "UniqueOutcome",
    "__version__",
    "bmd_decode",
    "curve_csv",
    "divided_difference_reduce",
    "estimate_model",
    "field_for_order",
    "field_new",
    "gain_csv",
    "gain_table",
    "global_radius",
    "gs_list_decode",
    "gs_params",
    "hamming_distance",
    "interpolate",
    "is_lrc_member",
    "johnson_normalized",
    "johnson_radius",
    "list_decode",
    "list_size_bound",
    "local_code_view",
    "local_phase",
    "newton_reconstruct",
    "normalized_radius_curve",
    "p_f",
    "p_suc_bound",
    "rate",
    "render_table",
    "rs_encode",
    "run_simulation",
    "shorten",
    "sigma_bound",
    "supercode",
    "t_of_tau",
    "table1",
    "table_csv",
    "tb_construct",
    "tb_encode",
    "unique_decode",
    "unique_decode_report",
    "unshorten",
]
