"""Small-prime tables and the per-segment prime-multiple generators.

This is the table-building half of the engine. A verification run first
sieves every prime up to K (enough to cover p-candidates and to sieve
any segment), then per segment generates the multiples m2*q falling in
[lo, hi), either grouped into residue buckets mod m1 (for the descending
strategy) or as a flat boolean view (for the ascending one).

Odd numbers are the only ones stored: isprime[i] speaks for 2*i + 3, and
segment sieving walks odd multiples with index stride p. The prime 2
needs special handling in exactly one place, the q = 2 multiple 2*m2,
which belongs to a segment [lo, hi) precisely when lo <= 2*m2 < hi.
"""

import math
from dataclasses import dataclass

import numpy as np

from ggcheck.core import ConfigError


@dataclass(frozen=True)
class SmallPrimeTables:
    """Primes up to limit: an odd-only flag array plus the packed list.

    isprime[i] is True iff 2*i + 3 is prime; primes is ascending and
    starts with 2.
    """

    limit: int
    isprime: np.ndarray
    primes: np.ndarray


def small_primes(limit: int) -> SmallPrimeTables:
    """Sieve of Eratosthenes over odd numbers only.

    >>> small_primes(10).primes.tolist()
    [2, 3, 5, 7]
    """
    if limit < 3:
        raise ConfigError(f"prime table limit must be at least 3; got {limit}")
    flags = np.ones((limit - 1) // 2, dtype=bool)
    i = 0
    while True:
        p = 2 * i + 3
        if p * p > limit:
            break
        if flags[i]:
            flags[(p * p - 3) // 2:: p] = False
        i += 1
    primes = np.concatenate((
        np.array([2], dtype=np.int64),
        2 * np.flatnonzero(flags).astype(np.int64) + 3,
    ))
    return SmallPrimeTables(limit, flags, primes)


# ----------------------------------------------------------------------
# multiples of m1 (fixed table, values up to alpha)
# ----------------------------------------------------------------------

def _m1p_values(m1: int, alpha: int, tables: SmallPrimeTables) -> np.ndarray:
    """Ascending m1*p <= alpha over primes p, straight from the tables."""
    if alpha < 1:
        raise ConfigError(f"alpha must be positive; got {alpha}")
    if alpha // m1 > tables.limit:
        raise ConfigError(
            f"prime tables reach {tables.limit} but alpha/m1 needs {alpha // m1}")
    top = alpha // m1
    jmax = (top - 3) // 2
    odd = 2 * np.flatnonzero(tables.isprime[: jmax + 1]).astype(np.int64) + 3 \
        if jmax >= 0 else np.array([], dtype=np.int64)
    vals = m1 * odd
    if 2 * m1 <= alpha:
        vals = np.concatenate((np.array([2 * m1], dtype=np.int64), vals))
    return vals


def generate_ism1p(m1: int, alpha: int, tables: SmallPrimeTables) -> np.ndarray:
    """Boolean array of length alpha + 1; index v is True iff v = m1*p.

    The descending strategy probes this with n - m2*q, so it is sized to
    accept any offset up to alpha inclusive.
    """
    flat = np.zeros(alpha + 1, dtype=bool)
    flat[_m1p_values(m1, alpha, tables)] = True
    return flat


def generate_m1p_buckets(m1: int, m2: int, alpha: int,
                         tables: SmallPrimeTables) -> list[np.ndarray]:
    """The same m1*p values, grouped by residue mod m2, each ascending.

    >>> [b.tolist() for b in generate_m1p_buckets(3, 5, 25, small_primes(25))]
    [[15], [6, 21], [], [], [9]]
    """
    vals = _m1p_values(m1, alpha, tables)
    return _bucketize(vals, m2)


# ----------------------------------------------------------------------
# multiples of m2 (regenerated per segment)
# ----------------------------------------------------------------------

def _odd_prime_flags(c: int, d: int, tables: SmallPrimeTables) -> np.ndarray:
    """Sieve the odd numbers of [c, d): flags[i] marks c + 2*i + 1 prime.

    c and d are even. Each sieving prime starts at p*p, or at its first
    odd multiple >= c when p*p lies below the segment.
    """
    flags = np.ones((d - c) // 2, dtype=bool)
    if c == 0 and flags.size:
        flags[0] = False
    for p in tables.primes[1:]:
        p = int(p)
        if p * p >= d:
            break
        if p * p >= c:
            start = p * p
        else:
            start = 2 * p * ((c + p - 1) // (2 * p)) + p
        flags[(start - c - 1) // 2:: p] = False
    return flags


def _m2q_values(m2: int, lo: int, hi: int, tables: SmallPrimeTables) -> np.ndarray:
    """Ascending m2*q in [lo, hi) over primes q."""
    c, d = lo // m2, hi // m2
    if math.isqrt(d) > tables.limit:
        raise ConfigError(
            f"prime tables reach {tables.limit} but sieving to {hi} needs {math.isqrt(d)}")
    idx = np.flatnonzero(_odd_prime_flags(c, d, tables)).astype(np.int64)
    vals = m2 * (c + 2 * idx + 1)
    if c <= 2 < d:
        vals = np.concatenate((np.array([2 * m2], dtype=np.int64), vals))
    return vals


def generate_m2q_buckets(m1: int, m2: int, lo: int, hi: int,
                         tables: SmallPrimeTables) -> list[np.ndarray]:
    """m2*q values of one segment, grouped by residue mod m1.

    lo and hi must be multiples of 2*m1*m2 so that segment boundaries
    never split a residue pattern.

    >>> [b.tolist() for b in generate_m2q_buckets(3, 5, 0, 30, small_primes(30))]
    [[15], [10, 25], []]
    """
    step = 2 * m1 * m2
    if lo % step or hi % step:
        raise ConfigError(
            f"segment bounds must be multiples of {step}; got [{lo}, {hi})")
    if lo >= hi:
        raise ConfigError(f"empty segment [{lo}, {hi})")
    return _bucketize(_m2q_values(m2, lo, hi, tables), m1)


def generate_ism2q(m2: int, lo: int, hi: int, tables: SmallPrimeTables) -> np.ndarray:
    """Flat boolean view of one segment: index v - lo is True iff v = m2*q.

    lo and hi must be multiples of 2*m2.

    >>> np.flatnonzero(generate_ism2q(2, 0, 12, small_primes(12))).tolist()
    [4, 6, 10]
    """
    if lo % (2 * m2) or hi % (2 * m2):
        raise ConfigError(
            f"segment bounds must be multiples of {2 * m2}; got [{lo}, {hi})")
    if lo >= hi:
        raise ConfigError(f"empty segment [{lo}, {hi})")
    flags = np.zeros(hi - lo, dtype=bool)
    flags[_m2q_values(m2, lo, hi, tables) - lo] = True
    return flags


def _bucketize(vals: np.ndarray, modulus: int) -> list[np.ndarray]:
    """Split ascending values into per-residue arrays, order preserved."""
    if modulus == 1:
        return [vals]
    res = vals % modulus
    order = np.argsort(res, kind="stable")
    counts = np.bincount(res, minlength=modulus)
    return np.split(vals[order], np.cumsum(counts)[:-1])
