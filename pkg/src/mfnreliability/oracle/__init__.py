from .brute_force import (
    OracleResult,
    VerificationOutcome,
    brute_force,
    compare,
    demand_satisfiable,
)

__all__ = [
    "OracleResult",
    "VerificationOutcome",
    "brute_force",
    "compare",
    "demand_satisfiable",
]
