"""Exact and numerical evaluation of the integrals I(m, n) = int_0^inf sin^n(x) / x^m dx."""

from ._core import (
    EULER_GAMMA,
    ClosedFormResult,
    NumericEstimate,
    QuadratureError,
    SymbolicReal,
    __version__,
    alternating_power_sum,
    binomial,
    classify,
    eval_regularized,
    evaluate,
    ft_theta_over_x,
    ft_theta_over_xm,
    harmonic,
    integrate_regularized,
    integrate_sinc_power,
    run_cli,
    to_json,
)

__all__ = [
    "EULER_GAMMA",
    "ClosedFormResult",
    "NumericEstimate",
    "QuadratureError",
    "SymbolicReal",
    "__version__",
    "alternating_power_sum",
    "binomial",
    "classify",
    "eval_regularized",
    "evaluate",
    "ft_theta_over_x",
    "ft_theta_over_xm",
    "harmonic",
    "integrate_regularized",
    "integrate_sinc_power",
    "run_cli",
    "to_json",
]
