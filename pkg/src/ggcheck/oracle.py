"""Slow reference implementation used to cross-check the segmented engine.

Every primality decision in this module comes from per-integer trial
division, and nothing here is imported from the sieve or the engine, so
agreement between the two routes is real evidence rather than a tautology.
Keep it that way: no imports from ggcheck.sieve or ggcheck.verify.

Intended scale is ranges up to about 10**6. Beyond that the range helpers
refuse to run; the engine is the only practical tool there.
"""

import bisect
from dataclasses import dataclass

import numpy as np

RANGE_LIMIT = 10**6


# ----------------------------------------------------------------------
# primality by trial division
# ----------------------------------------------------------------------

def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    d = 3
    while d * d <= x:
        if x % d == 0:
            return False
        d += 2
    return True


_primes: list[int] = [2, 3]


def _primes_up_to(limit: int) -> list[int]:
    """Ascending primes <= limit; the shared list grows and is cached."""
    if _primes[-1] < limit:
        x = _primes[-1] + 2
        while x <= limit:
            if _is_prime(x):
                _primes.append(x)
            x += 2
    return _primes[: bisect.bisect_right(_primes, limit)]


# ----------------------------------------------------------------------
# single-n oracle
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    """Extremal partitions of one n, or the statement that none exist.

    p_star pairs with q_starstar (the partition minimizing p) and
    p_starstar pairs with q_star (the one minimizing q). All four are
    None when has_partition is False.
    """

    has_partition: bool
    p_star: int | None = None
    q_star: int | None = None
    p_starstar: int | None = None
    q_starstar: int | None = None


def _min_p_scan(m1: int, m2: int, n: int):
    """Least prime p with n = m1*p + m2*q, q prime; None if no p works.

    Walks candidate p upward (2, 3, 5, 7, ...) and rejects on the cheap
    divisibility test before spending trial divisions on primality.
    """
    p = 2
    while m1 * p + 2 * m2 <= n:
        r = n - m1 * p
        if r % m2 == 0 and _is_prime(p) and _is_prime(r // m2):
            return p, r // m2
        p = 3 if p == 2 else p + 2
    return None


def oracle_partition(m1: int, m2: int, n: int) -> OracleResult:
    """Extremal partitions of n by exhaustive scan.

    The p-minimal partition comes from scanning p upward; the q-minimal
    one is the same scan with the coefficients swapped, because q runs
    monotonically down as p runs up. Coprimality is not required, which
    lets scaled instances (d*m1, d*m2, d*n) go through the same code.

    >>> oracle_partition(1, 2, 9)
    OracleResult(has_partition=True, p_star=3, q_star=2, p_starstar=5, q_starstar=3)
    """
    if m1 < 1 or m2 < 1 or n < 1:
        raise ValueError("oracle_partition expects positive m1, m2, n")
    lo = _min_p_scan(m1, m2, n)
    hi = _min_p_scan(m2, m1, n)
    if lo is None:
        assert hi is None, f"scan disagreement at n={n}"
        return OracleResult(has_partition=False)
    assert hi is not None, f"scan disagreement at n={n}"
    p_star, q_ss = lo
    q_star, p_ss = hi
    return OracleResult(True, p_star=p_star, q_star=q_star,
                        p_starstar=p_ss, q_starstar=q_ss)


# ----------------------------------------------------------------------
# vectorized range sweeps
# ----------------------------------------------------------------------

def _qualifying(m1: int, m2: int, limit: int) -> np.ndarray:
    """All n in [1, limit) passing the parity and coprimality conditions."""
    n = np.arange(1, limit, dtype=np.int64)
    keep = (n & 1) == ((m1 + m2) & 1)
    if m1 > 1:
        keep &= np.gcd(n, m1) == 1
    if m2 > 1:
        keep &= np.gcd(n, m2) == 1
    return n[keep]


def _min_p_sweep(m1: int, m2: int, ns: np.ndarray):
    """Vectorized _min_p_scan over an ascending array of n.

    Returns (p, q) arrays aligned with ns; entries stay 0 where no
    partition exists. The prime list and the q lookup table are built
    from trial division only.
    """
    p_out = np.zeros(ns.size, dtype=np.int64)
    q_out = np.zeros(ns.size, dtype=np.int64)
    if ns.size == 0:
        return p_out, q_out
    top = int(ns[-1])
    if m1 * 2 + m2 * 2 > top:
        return p_out, q_out
    qmax = (top - 2 * m1) // m2
    qflags = np.zeros(qmax + 1, dtype=bool)
    qflags[np.array(_primes_up_to(qmax), dtype=np.int64)] = True
    open_idx = np.arange(ns.size)
    for p in _primes_up_to((top - 2 * m2) // m1):
        if open_idx.size == 0:
            break
        r = ns[open_idx] - m1 * p
        alive = r >= 2 * m2
        if not alive.all():
            # n below m1*p + 2*m2 stays unreachable for every later p
            open_idx = open_idx[alive]
            r = r[alive]
        div = r % m2 == 0
        q = np.where(div, r // m2, 0)
        hit = div & qflags[q]
        if hit.any():
            found = open_idx[hit]
            p_out[found] = p
            q_out[found] = q[hit]
            open_idx = open_idx[~hit]
    return p_out, q_out


def oracle_residual_range(m1: int, m2: int, limit: int) -> np.ndarray:
    """Ascending array of qualifying n < limit with no partition at all.

    >>> oracle_residual_range(1, 2, 100)
    array([1, 3, 5])
    """
    _check_range_args(m1, m2, limit)
    ns = _qualifying(m1, m2, limit)
    p_star, _ = _min_p_sweep(m1, m2, ns)
    return ns[p_star == 0]


def oracle_extremal_range(m1: int, m2: int, limit: int):
    """Extremal partitions for every qualifying n < limit, in bulk.

    Returns five aligned arrays (n, p_star, q_starstar, p_starstar,
    q_star) covering only the n that have a partition; the residual is
    exactly the qualifying set minus these n.
    """
    _check_range_args(m1, m2, limit)
    ns = _qualifying(m1, m2, limit)
    p_star, q_ss = _min_p_sweep(m1, m2, ns)
    q_star, p_ss = _min_p_sweep(m2, m1, ns)
    if not ((p_star > 0) == (q_star > 0)).all():
        raise AssertionError("sweep existence disagreement between orientations")
    got = p_star > 0
    return ns[got], p_star[got], q_ss[got], p_ss[got], q_star[got]


def _check_range_args(m1: int, m2: int, limit: int) -> None:
    if m1 < 1 or m2 < 1:
        raise ValueError("coefficients must be positive")
    if limit > RANGE_LIMIT:
        raise ValueError(
            f"oracle range sweeps are capped at {RANGE_LIMIT}; got {limit}")
