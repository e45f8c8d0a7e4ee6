"""Shared brute-force oracles, kept independent of the library code paths
they cross-check."""

from math import gcd, isqrt


def sieve_primes(n):
    """Plain sieve of Eratosthenes, independent of the package sieve."""
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    return [i for i, f in enumerate(flags) if f]


def qr_set(p):
    """All nonzero quadratic residues mod p, by squaring everything."""
    return {x * x % p for x in range(1, p)}


def reduced_forms_oracle(disc):
    """Reduced-form enumeration with the opposite loop order (b outer,
    then divisor-split of (b*b - disc)/4), for cross-validation."""
    forms = set()
    bmax = isqrt(-disc // 3)
    for b in range(-bmax, bmax + 1):
        if (b - disc) % 2:
            continue
        m = b * b - disc
        if m % 4:
            continue
        m //= 4
        for a in range(max(abs(b), 1), isqrt(m) + 1):
            if m % a:
                continue
            c = m // a
            if b == -a:
                continue
            if (a == c or a == abs(b)) and b < 0:
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            forms.add((a, b, c))
    return sorted(forms)


def is_squarefree_slow(n):
    n = abs(n)
    for q in range(2, isqrt(n) + 1):
        if n % (q * q) == 0:
            return False
    return True
