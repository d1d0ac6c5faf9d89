"""Primes, prime indices and factorization into dense exponent vectors.

Prime ``p_i`` is the ``i``-th prime, 1-based (``p_1 = 2``). Small primes come
from an in-memory sieve that grows on demand; indices of larger primes are
found from per-block prime counts of a segmented sieve, so looking up the
index of a prime near ``10**9`` costs one block sieve once the counts exist.
"""

import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from dyckrpf import kernels
from dyckrpf.errors import DomainError

SMALL_LIMIT = 1 << 24
BLOCK = 1 << 22
MAX_INDEXABLE = 1 << 40


def _sieve(limit):
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p :: p] = False
    return np.flatnonzero(is_p)


class PrimeTable:
    """Thread-safe, lazily extended prime table."""

    def __init__(self, initial=1 << 12):
        self._lock = threading.RLock()
        self._limit = initial
        self._primes = _sieve(initial)
        # _cum[b] = number of primes below SMALL_LIMIT + b * BLOCK
        self._cum = []

    # -- small range --------------------------------------------------------

    def _grow(self, limit):
        with self._lock:
            if limit > self._limit:
                new = min(max(limit, 2 * self._limit), SMALL_LIMIT)
                self._primes = _sieve(new)
                self._limit = new

    def small_primes(self, limit):
        """Primes ``<= limit`` (``limit`` at most ``SMALL_LIMIT``) as an array."""
        if limit > self._limit:
            self._grow(limit)
        primes = self._primes
        return primes[: np.searchsorted(primes, limit, side="right")]

    # -- segmented range ----------------------------------------------------

    def _block_primes(self, b):
        return _block_primes(self, b)

    def _sieve_block(self, b):
        lo = SMALL_LIMIT + b * BLOCK
        base = self.small_primes(isqrt(lo + BLOCK - 1)).astype(np.int64)
        flags = np.frombuffer(kernels.segment_flags(lo, BLOCK, base), dtype=np.uint8)
        return np.flatnonzero(flags) * 2 + (lo + 1)

    def _ensure_counts(self, b):
        self.small_primes(SMALL_LIMIT)
        with self._lock:
            if not self._cum:
                self._cum.append(len(self._primes))
            while len(self._cum) <= b:
                k = len(self._cum) - 1
                self._cum.append(self._cum[k] + len(self._sieve_block(k)))

    # -- queries -----------------------------------------------------------

    def nth(self, i):
        if i < 1:
            raise DomainError(f"prime index must be positive, got {i}")
        while i > len(self._primes) and self._limit < SMALL_LIMIT:
            self._grow(2 * self._limit)
        if i <= len(self._primes):
            return int(self._primes[i - 1])
        b = 0
        while True:
            self._ensure_counts(b + 1)
            if self._cum[b + 1] >= i:
                break
            b += 1
            if SMALL_LIMIT + b * BLOCK > MAX_INDEXABLE:
                raise DomainError(f"prime index {i} is beyond the supported range")
        return int(self._block_primes(b)[i - self._cum[b] - 1])

    def index(self, p):
        """1-based index of the prime ``p``."""
        if p <= SMALL_LIMIT:
            primes = self.small_primes(max(p, 2))
            k = int(np.searchsorted(primes, p))
            if k == len(primes) or primes[k] != p:
                raise DomainError(f"{p} is not prime")
            return k + 1
        if p > MAX_INDEXABLE:
            raise DomainError(f"prime {p} is too large for index lookup")
        b = (p - SMALL_LIMIT) // BLOCK
        self._ensure_counts(b)
        block = self._block_primes(b)
        k = int(np.searchsorted(block, p))
        if k == len(block) or block[k] != p:
            raise DomainError(f"{p} is not prime")
        return self._cum[b] + k + 1


@lru_cache(maxsize=16)
def _block_primes(table, b):
    return table._sieve_block(b)


TABLE = PrimeTable()


def nth_prime(i):
    return TABLE.nth(i)


def prime_index(p):
    return TABLE.index(p)


# -- primality and splitting -------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_TRIAL_LIMIT = 1 << 15


def is_prime(n):
    """Miller-Rabin; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_rho(n, rng=None):
    """A nontrivial factor of the odd composite ``n`` (Brent's variant)."""
    rng = rng or random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _strip(n, p):
    """``(n / p**e, e)`` for the multiplicity ``e`` of ``p`` in ``n``, dividing
    by ``p**(2**i)`` so huge prime powers cost O(log e) divisions."""
    powers = [p]
    while True:
        sq = powers[-1] * powers[-1]
        if sq.bit_length() > n.bit_length() or n % sq:
            break
        powers.append(sq)
    e = 0
    for i in range(len(powers) - 1, -1, -1):
        while n % powers[i] == 0:
            n //= powers[i]
            e += 1 << i
    return n, e


def prime_powers(n, splitter=pollard_rho):
    """``{p: e}`` for ``n >= 1``: trial division, then ``splitter`` on what remains."""
    out = {}
    for p in TABLE.small_primes(_TRIAL_LIMIT).tolist():
        if p * p > n:
            break
        if n % p == 0:
            n, out[p] = _strip(n, p)
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = splitter(m)
        stack += [d, m // d]
    return dict(sorted(out.items()))


# -- exponent vectors --------------------------------------------------------


@dataclass(frozen=True)
class FactorizationVector:
    """Dense exponent sequence ``(a_1, ..., a_m)`` with ``a_m != 0``.

    Storage is sparse (``support`` holds ``(index, exponent)`` pairs for the
    nonzero entries, ascending) because a prime factor near ``10**9`` would
    otherwise need tens of millions of zeros; iteration, ``len`` and
    indexing behave as the dense sequence.
    """

    support: tuple = ()
    sign: int = 1

    def __len__(self):
        return self.support[-1][0] if self.support else 0

    def __getitem__(self, i):
        """Exponent of ``p_i`` (1-based); zero outside the support."""
        for j, a in self.support:
            if j == i:
                return a
        if not 1 <= i <= len(self):
            raise IndexError(i)
        return 0

    def __iter__(self):
        pos = 1
        for j, a in self.support:
            while pos < j:
                yield 0
                pos += 1
            yield a
            pos += 1

    @property
    def exponents(self):
        return tuple(self)

    def value(self):
        q = Fraction(1)
        for j, a in self.support:
            q *= Fraction(nth_prime(j)) ** a
        return self.sign * q


def factor_natural(n):
    if n < 1:
        raise DomainError("0 has no prime factorization")
    return FactorizationVector(tuple((prime_index(p), e) for p, e in prime_powers(n).items()))


def factor_rational(q):
    q = Fraction(q)
    if q == 0:
        raise DomainError("0 has no prime factorization")
    exps = {prime_index(p): e for p, e in prime_powers(q.numerator if q > 0 else -q.numerator).items()}
    for p, e in prime_powers(q.denominator).items():
        exps[prime_index(p)] = -e
    return FactorizationVector(tuple(sorted(exps.items())), -1 if q < 0 else 1)


def gpb(q):
    """Greatest prime base: ``p_m`` for the last nonzero exponent, 2 for ``|q| = 1``."""
    v = factor_rational(q)
    return nth_prime(len(v)) if len(v) else 2
