"""Exact symbolic engine for gauge theory over quantum SU(2)."""

from ._qsu2 import (  # noqa: F401
    AlgebraElement,
    Calculus,
    EngineError,
    MuScalar,
    curvature_json,
    delta_table_json,
    eom_json,
    haar,
    mu,
    normal_form_str,
    parse,
    qfact,
    qint,
    rho,
    suite,
)

__all__ = [
    "AlgebraElement",
    "Calculus",
    "EngineError",
    "MuScalar",
    "curvature_json",
    "delta_table_json",
    "eom_json",
    "haar",
    "mu",
    "normal_form_str",
    "parse",
    "qfact",
    "qint",
    "rho",
    "suite",
]
