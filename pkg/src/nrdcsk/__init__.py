"""Simulation and closed-form analysis of NR-DCSK links under jamming."""
from .analysis import AnalysisPoint, ber_bbj, ber_lower_bound, ber_ptj, decision_moments, optimal_rho
from .channel import LinkBudget, apply_channel, calibrate
from .chaos import ChaoticSequence, generate, logistic_next
from .engine import BerEstimate, Scenario, StopRule, run, sweep
from .jammers import JammerSpec
from .modem import ModemParams, block_average, demodulate, modulate

__version__ = "0.1.0"
