"""
Network bootstrap package.

This package estimates the sampling law of the mean of a process indexed by
the nodes of a network, using the network block bootstrap or the network
dependent wild bootstrap, and ships a simulation harness for coverage checks.
"""

__all__ = ["__version__"]
__version__ = "0.1.0"
