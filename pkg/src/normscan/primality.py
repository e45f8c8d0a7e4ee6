"""Primality tests and small-factor utilities.

Verdicts are deterministic below 2**64 (trial division or Miller-Rabin
with a proven base set); above that a Baillie-PSW test is used and
passing values are reported as "probable", never "prime".
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt

from .arith import is_square, jacobi

__all__ = [
    "Method",
    "PrimalityVerdict",
    "Verdict",
    "is_prime",
    "is_squarefree_bounded",
    "primes_up_to",
    "small_factors",
    "squarefree_kernel",
]

DEFAULT_FACTOR_BOUND = 10**6


class Verdict(str, Enum):
    PRIME = "prime"
    PROBABLE_PRIME = "probable"
    COMPOSITE = "composite"


class Method(str, Enum):
    TRIAL_DIVISION = "trial-division"
    DETERMINISTIC_MR = "deterministic-miller-rabin"
    BPSW = "bpsw"


@dataclass(frozen=True)
class PrimalityVerdict:
    value: int
    verdict: Verdict
    method: Method

    def __bool__(self) -> bool:
        """Truthy when the value is prime or a probable prime."""
        return self.verdict is not Verdict.COMPOSITE


@lru_cache(maxsize=8)
def primes_up_to(n: int) -> tuple:
    """All primes <= n, as a tuple (cached; safe for concurrent readers)."""
    if n < 2:
        return ()
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : n + 1 : p] = b"\x00" * ((n - start) // p + 1)
    return tuple(i for i in range(2, n + 1) if sieve[i])


_SMALL_PRIMES = primes_up_to(100)
_SMALL_LIMIT = 101 * 101

# Smallest composites that fool Miller-Rabin on each base set (Jaeschke,
# Sinclair); the final set is deterministic for everything below 2**64.
_MR_TIERS = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (4759123141, (2, 7, 61)),
    (1122004669633, (2, 13, 23, 1662803)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)


def _mr_check(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _half_mod(x: int, n: int) -> int:
    # exact division by 2 in Z/nZ, n odd
    x %= n
    if x & 1:
        x += n
    return (x >> 1) % n


def _lucas_strong_prp(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameters."""
    # callers guarantee n odd, n > 2, not a perfect square
    d = 5
    while True:
        j = jacobi(d, n)
        if j == -1:
            break
        if j == 0:
            g = gcd(abs(d), n)
            if 1 < g < n:
                return False
            # n divides d: only possible for tiny n, which is prime here
            return True
        d = -d - 2 if d > 0 else -d + 2
    q = (1 - d) // 4

    m, s = n + 1, 0
    while m % 2 == 0:
        m //= 2
        s += 1

    # binary ladder for U_m, V_m, Q^m (P = 1)
    u, v, qk = 0, 2, 1
    for bit in bin(m)[2:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = _half_mod(u + v, n), _half_mod(d * u + v, n)
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _bpsw(n: int) -> bool:
    """Baillie-PSW: strong base-2 Miller-Rabin plus strong Lucas."""
    if is_square(n):
        return False
    return _mr_check(n, (2,)) and _lucas_strong_prp(n)


def is_prime(n: int) -> PrimalityVerdict:
    """Classify n as prime / probable prime / composite.

    Deterministic (Prime/Composite) for n < 2**64; Baillie-PSW above,
    reporting ProbablePrime on success.
    """
    if n < 2:
        return PrimalityVerdict(n, Verdict.COMPOSITE, Method.TRIAL_DIVISION)
    for p in _SMALL_PRIMES:
        if n == p:
            return PrimalityVerdict(n, Verdict.PRIME, Method.TRIAL_DIVISION)
        if n % p == 0:
            return PrimalityVerdict(n, Verdict.COMPOSITE, Method.TRIAL_DIVISION)
    if n < _SMALL_LIMIT:
        return PrimalityVerdict(n, Verdict.PRIME, Method.TRIAL_DIVISION)
    if n < (1 << 64):
        for limit, bases in _MR_TIERS:
            if n < limit:
                ok = _mr_check(n, bases)
                verdict = Verdict.PRIME if ok else Verdict.COMPOSITE
                return PrimalityVerdict(n, verdict, Method.DETERMINISTIC_MR)
    ok = _bpsw(n)
    verdict = Verdict.PROBABLE_PRIME if ok else Verdict.COMPOSITE
    return PrimalityVerdict(n, verdict, Method.BPSW)


def small_factors(n: int, bound: int = DEFAULT_FACTOR_BOUND):
    """Trial-divide n by every prime <= bound.

    Returns (factors, cofactor) where factors is a list of
    (prime, multiplicity) pairs and the cofactor carries no prime
    factor <= bound.  The product of the prime powers times the
    cofactor reconstructs n exactly.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if n < 0:
        raise ValueError("n must be positive")
    factors = []
    rest = n
    for p in primes_up_to(bound):
        if p * p > rest:
            break
        if rest % p == 0:
            k = 0
            while rest % p == 0:
                rest //= p
                k += 1
            factors.append((p, k))
    if 1 < rest <= bound:
        # remainder is prime: no factor up to its square root survived
        factors.append((rest, 1))
        rest = 1
    return factors, rest


def is_squarefree_bounded(n: int, bound: int = DEFAULT_FACTOR_BOUND):
    """True/False when decidable from trial division up to bound, else None.

    The undecided case is a cofactor > 1 that is neither 1, a proven or
    probable prime, nor a perfect square.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    factors, cofactor = small_factors(n, bound) if n > 1 else ([], 1)
    if any(k >= 2 for _, k in factors):
        return False
    if cofactor == 1:
        return True
    if is_square(cofactor):
        return False
    if is_prime(cofactor):
        return True
    return None


def squarefree_kernel(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> int:
    """Squarefree part of n: the product of primes with odd multiplicity.

    Sign is preserved.  Raises when the factorization is too incomplete
    to decide.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    sign = -1 if n < 0 else 1
    factors, cofactor = small_factors(abs(n), bound)
    kernel = 1
    for p, k in factors:
        if k % 2:
            kernel *= p
    if cofactor > 1:
        if is_square(cofactor):
            pass  # even multiplicities only; contributes nothing
        elif is_prime(cofactor):
            kernel *= cofactor
        else:
            raise ValueError(f"cannot extract squarefree part of {n}: "
                             f"unfactored cofactor {cofactor}")
    return sign * kernel
