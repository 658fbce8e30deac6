"""
Hadamard walk on an N-site cycle: simulation, spectral formulas and
temporal fluctuation statistics.
"""

__version__ = "0.1.0"
