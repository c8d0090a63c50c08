"""Numerical kernels for averaged prime-pair sums.

Thin re-export of the compiled module; everything heavy lives in C++.
"""

from ._core import (
    Calibration,
    CircleIdentityCheck,
    ExperimentReport,
    ExpSumConfig,
    I2Check,
    LambdaTable,
    MeanSquareCheck,
    RemarkResult,
    ReportRow,
    ResidueCheck,
    RMethod,
    RTable,
    SumIntegralCheck,
    SumWithBound,
    WeightedExpSum,
    ZeroTable,
    builtin_calibration,
    builtin_zeros,
    check_sum_integral,
    circle_identity_check,
    exp_config_default,
    exp_config_for_tol,
    exp_config_probe,
    fft_error_estimate,
    fit_zeta_constant,
    i2_identity_check,
    load_calibration,
    load_zeros,
    mean_square_check,
    parse_csv,
    psi,
    psi0,
    psi0_explicit,
    psi_iterated,
    r2_direct,
    r_table,
    read_lambda_cache,
    remark_counterexample,
    residue_check,
    rvm_estimate,
    sieve_lambda,
    singular_series,
    short_interval_sum,
    sum_R,
    sum_Rk,
    tail_estimate,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
    weighted_discrepancy,
    write_lambda_cache,
    zero_sum_interval,
    zero_sum_k,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
