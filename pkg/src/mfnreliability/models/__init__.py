# src/mfnreliability/models/__init__.py
from .state import StateVector, Demand, INFINITY
from .network import Arc, Network
from .probability import tail_probability, tail_table, upper_probability
