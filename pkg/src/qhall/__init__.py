"""qhall: exact Hall-Littlewood polynomials, truncated q-series, and a
mechanical verifier for the associated family of summation identities."""

from .partitions import Partition, partitions
from .rings import ABRing, QQ, ZZ
from .series import (
    QLaurentSeries,
    SeriesFactor,
    invert,
    pochhammer_finite,
    pochhammer_infinite,
    substitute_q_power,
)
from .qbinom import csq_euler_check, qbinom, qbinom_partition
from .hall import hl_oracle, hl_poly, pieri_coeff, phi_eval, psi_eval, principal_value
from .identities import REGISTRY, run_identity, verify_all

__all__ = [
    "Partition", "partitions", "ABRing", "QQ", "ZZ",
    "QLaurentSeries", "SeriesFactor", "invert",
    "pochhammer_finite", "pochhammer_infinite", "substitute_q_power",
    "csq_euler_check", "qbinom", "qbinom_partition",
    "hl_oracle", "hl_poly", "pieri_coeff", "phi_eval", "psi_eval", "principal_value",
    "REGISTRY", "run_identity", "verify_all",
]

__version__ = "0.1.0"
