"""Exact modular arithmetic on plain Python ints.

Everything in this module is pure integer arithmetic: no floats, no
rounding, valid at any operand size.
"""

from math import isqrt

__all__ = [
    "NoSquareRoot",
    "is_square",
    "isqrt",
    "jacobi",
    "kronecker",
    "mod_pow",
    "sqrt_mod_prime",
]


class NoSquareRoot(ValueError):
    """Asked for a modular square root of a non-residue."""


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent reduced into [0, modulus)."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    return pow(base, exponent, modulus)


def is_square(n: int) -> bool:
    """True iff n is a perfect square (exact isqrt test)."""
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd n >= 1; the Legendre symbol when n is prime.

    a is reduced mod n first, so negative a is fine.  Even or nonpositive
    n is a caller bug and raises.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and >= 1")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n): jacobi extended to even, zero and negative n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            sign = -sign
    return sign * jacobi(a, n)


def sqrt_mod_prime(a: int, p: int) -> int:
    """Square root of a mod an odd prime p, via Tonelli-Shanks.

    Of the two roots {t, p - t} the larger one is returned, which is the
    root the Cornacchia descent needs.  Raises NoSquareRoot when a is a
    non-residue.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) != 1:
        raise NoSquareRoot(f"{a} is not a square mod {p}")

    # p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    if s == 1:
        t = pow(a, (p + 1) // 4, p)
        return max(t, p - t)

    # Any quadratic non-residue serves as the generator z.
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    m = s
    while t != 1:
        t2i = t
        i = 0
        for i in range(1, m):
            t2i = t2i * t2i % p
            if t2i == 1:
                break
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return max(r, p - r)
