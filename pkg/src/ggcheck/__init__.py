"""Verification engine and benchmark harness for two-coefficient prime partitions.

The package checks, for a coprime coefficient pair (m1, m2), which integers n
admit a partition n = m1*p + m2*q with p and q prime, and measures how fast the
four search strategies find the extremal partitions.

Heavy lifting lives in the submodules:

    core       coefficient pairs, qualifying conditions, residue wheel
    sieve      small-prime tables and segment generators (Phase I)
    verify     the segmented search engine (Phase II) and run reports
    oracle     slow, independent reference implementation (trial division)
    analytics  partition statistics, speed predictors, group labels
    bench      wall-clock comparison of the four variants
    eggc       extended queries with a negative second coefficient
    cli        the ``ggcheck`` command line tool
"""

from ggcheck.core import CoefficientPair, RawPair, reduce_pair, satisfies_conditions

__version__ = "0.1.0"

__all__ = [
    "CoefficientPair",
    "RawPair",
    "reduce_pair",
    "satisfies_conditions",
    "__version__",
]
