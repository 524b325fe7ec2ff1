"""
Configuration module for mfnreliability.

This module defines the Settings class, which loads environment variables
(prefixed with ``MFN_``) and an optional ``.env`` file, and provides the
defaults used by the search, reliability, oracle and CLI layers.

Usage:
    Import the `settings` object to access configuration throughout the project.
"""

import os
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Attributes:
        SIGMA_GUARD (int): Largest (d,λ)-MP count accepted by subset inclusion-exclusion.
        STATE_LIMIT (int): Largest state space the brute-force oracle will iterate.
        PARALLELISM (int): Worker count for FFV enumeration (0 means one per CPU).
        LOG_LEVEL (str): Logging level used by the entry points.
        PROBABILITY_TOLERANCE (float): Allowed deviation of a pmf sum from 1.
        VERIFY_TOLERANCE (float): Allowed reliability gap between search and oracle.
        RECHECK_CYCLIC (bool): Re-check cyclic-only candidates for exact minimality.
    """
    SIGMA_GUARD: int = 25
    STATE_LIMIT: int = 10_000_000
    PARALLELISM: int = 1
    LOG_LEVEL: str = "WARNING"
    PROBABILITY_TOLERANCE: float = 1e-12
    VERIFY_TOLERANCE: float = 1e-10
    RECHECK_CYCLIC: bool = True

    @property
    def worker_count(self) -> int:
        """
        Returns the effective number of workers for parallel enumeration.

        Returns:
            int: PARALLELISM, or the CPU count when PARALLELISM is 0.
        """
        if self.PARALLELISM <= 0:
            return os.cpu_count() or 1
        return self.PARALLELISM

    model_config = SettingsConfigDict(env_file=".env", env_prefix="MFN_", extra="ignore")

settings = Settings()
