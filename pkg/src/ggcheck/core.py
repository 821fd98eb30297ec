"""Coefficient pairs, qualifying conditions, and the residue wheel.

A coefficient pair (m1, m2) is the object everything else hangs off.
Only coprime pairs are accepted here; arbitrary pairs enter as RawPair
and are reduced, since n = m1*p + m2*q behaves identically after
dividing out gcd(m1, m2) from m1, m2 and n together.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

# Pairs beyond this make the per-residue tables explode; nothing in the
# supported workloads comes close.
MAX_COEFFICIENT = 10_000


class ConfigError(ValueError):
    """Raised for invalid coefficients, limits, or plan parameters."""


def _phi(m: int) -> int:
    """Euler's totient by trial factorization; m is at most 10**4 here."""
    result = m
    d = 2
    while d * d <= m:
        if m % d == 0:
            result -= result // d
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class CoefficientPair:
    """A coprime pair (m1, m2) plus the derived quantities used everywhere.

    lcm is lcm(2, m1, m2): the period of the qualifying conditions, used
    to size the residue wheel. phi_m1m2 equals phi_m1 * phi_m2 because
    the pair is coprime.
    """

    m1: int
    m2: int
    phi_m1: int = field(init=False)
    phi_m2: int = field(init=False)
    phi_m1m2: int = field(init=False)
    lcm: int = field(init=False)

    def __post_init__(self):
        if not (1 <= self.m1 <= MAX_COEFFICIENT and 1 <= self.m2 <= MAX_COEFFICIENT):
            raise ConfigError(
                f"coefficients must be in [1, {MAX_COEFFICIENT}]; got ({self.m1}, {self.m2})")
        if math.gcd(self.m1, self.m2) != 1:
            raise ConfigError(
                f"({self.m1}, {self.m2}) is not coprime; reduce it first "
                f"(see reduce_pair)")
        object.__setattr__(self, "phi_m1", _phi(self.m1))
        object.__setattr__(self, "phi_m2", _phi(self.m2))
        object.__setattr__(self, "phi_m1m2", self.phi_m1 * self.phi_m2)
        object.__setattr__(self, "lcm", math.lcm(2, self.m1, self.m2))

    @property
    def swapped(self) -> "CoefficientPair":
        """The same pair with the roles of m1 and m2 exchanged."""
        return CoefficientPair(self.m2, self.m1)

    def __str__(self):
        return f"({self.m1}, {self.m2})"


@dataclass(frozen=True)
class RawPair:
    """A possibly non-coprime pair as the user gave it, plus its gcd."""

    m1: int
    m2: int
    d: int = field(init=False)

    def __post_init__(self):
        if self.m1 < 1 or self.m2 < 1:
            raise ConfigError(f"coefficients must be positive; got ({self.m1}, {self.m2})")
        object.__setattr__(self, "d", math.gcd(self.m1, self.m2))

    @cached_property
    def reduced(self) -> CoefficientPair:
        return CoefficientPair(self.m1 // self.d, self.m2 // self.d)


def reduce_pair(m1: int, m2: int) -> RawPair:
    """Wrap raw coefficients; .reduced is the canonical coprime pair.

    >>> rp = reduce_pair(6, 15)
    >>> rp.d, (rp.reduced.m1, rp.reduced.m2)
    (3, (2, 5))
    """
    return RawPair(m1, m2)


def satisfies_conditions(pair: CoefficientPair, n: int) -> bool:
    """Whether n >= 1 meets the necessary conditions for a partition.

    Those are: n coprime to m1 and to m2, and n of the same parity as
    m1 + m2. Numbers failing them are excluded from verification runs
    rather than counted as counterexamples.
    """
    if n < 1:
        return False
    if (n & 1) != ((pair.m1 + pair.m2) & 1):
        return False
    return math.gcd(n, pair.m1) == 1 and math.gcd(n, pair.m2) == 1


@dataclass(frozen=True)
class ResidueWheel:
    """Boolean mask over residues mod lcm(2, m1, m2) marking qualifying n.

    The engine tests candidates against this mask with an incrementally
    maintained residue instead of re-evaluating gcds per n.
    """

    modulus: int
    mask: np.ndarray

    @property
    def residues(self) -> np.ndarray:
        return np.flatnonzero(self.mask)


def residue_wheel(pair: CoefficientPair) -> ResidueWheel:
    """Build the qualifying-residue mask for a pair.

    >>> residue_wheel(CoefficientPair(3, 4)).residues.tolist()
    [1, 5, 7, 11]
    """
    mod = pair.lcm
    r = np.arange(mod, dtype=np.int64)
    mask = (r & 1) == ((pair.m1 + pair.m2) & 1)
    if pair.m1 > 1:
        mask &= np.gcd(r, pair.m1) == 1
    if pair.m2 > 1:
        mask &= np.gcd(r, pair.m2) == 1
    return ResidueWheel(mod, mask)


class PartitionKind(Enum):
    P_MINIMAL = "p-minimal"
    Q_MINIMAL = "q-minimal"


@dataclass(frozen=True)
class PartitionRecord:
    """One extremal partition n = m1*p + m2*q.

    kind says which prime is extremal: P_MINIMAL records carry the least
    possible p (with its forced q), Q_MINIMAL the least possible q.
    """

    n: int
    p: int
    q: int
    kind: PartitionKind


def scale_instance(pair: CoefficientPair, n: int, d: int) -> tuple[RawPair, int]:
    """Scale an instance by d: (m1, m2, n) -> (d*m1, d*m2, d*n).

    Partitions transport across this map unchanged (same p, same q), so
    the scaled instance is solvable exactly when the original is.
    """
    if d < 1:
        raise ConfigError(f"scale factor must be positive; got {d}")
    return RawPair(pair.m1 * d, pair.m2 * d), n * d
