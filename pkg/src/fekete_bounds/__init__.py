"""Fekete-Szego coefficient bounds for bi-univalent classes defined by subordination.

The package computes closed-form bounds on |a2|, |a3| and |a3 - mu a2^2| and
checks them against a brute-force maximization over admissible Schwarz data.
"""

from .bounds import (
    BoundReport,
    a2_bound,
    a3_bound,
    applicable_theorems,
    corollary_bound,
    fs_bound,
    fs_bound_t1,
    fs_bound_t2,
    fs_bound_t3,
)
from .class_operator import ClassParams, SchwarzPair, operator_coefficients, operator_expand, schwarz_to_a
from .errors import DomainError, UnsupportedError
from .extremal_oracle import OracleConfig, OracleResult, VerificationRecord, oracle_max, verify_all, verify_config
from .minda_catalog import FAMILIES, MindaTarget, elliptic_k, minda_coeffs, minda_series
from .power_series import TruncatedSeries, series_compose, series_reversion
from .sweep import SweepConfig, load_sweep_config, run_sweep, standard_sweep_config

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ClassParams",
    "DomainError",
    "FAMILIES",
    "MindaTarget",
    "OracleConfig",
    "OracleResult",
    "SchwarzPair",
    "SweepConfig",
    "TruncatedSeries",
    "UnsupportedError",
    "VerificationRecord",
    "a2_bound",
    "a3_bound",
    "applicable_theorems",
    "corollary_bound",
    "elliptic_k",
    "fs_bound",
    "fs_bound_t1",
    "fs_bound_t2",
    "fs_bound_t3",
    "load_sweep_config",
    "minda_coeffs",
    "minda_series",
    "operator_coefficients",
    "operator_expand",
    "oracle_max",
    "run_sweep",
    "schwarz_to_a",
    "series_compose",
    "series_reversion",
    "standard_sweep_config",
    "verify_all",
    "verify_config",
]
