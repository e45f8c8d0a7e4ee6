"""Solving p = x**2 + d*y**2 exactly.

cornacchia() is the production path for primes; represent_bruteforce()
is the independent oracle used to cross-check it.  Both return the same
canonical solution: x >= 0, y >= 0, smallest y.
"""

from dataclasses import dataclass
from math import isqrt

from .arith import jacobi, sqrt_mod_prime
from .primality import is_prime

__all__ = ["Representation", "cornacchia", "represent_bruteforce"]


@dataclass(frozen=True)
class Representation:
    """A canonical solution of x**2 + d*y**2 = n."""

    d: int
    n: int
    x: int
    y: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if self.x < 0 or self.y < 0:
            raise ValueError("canonical representation has x, y >= 0")
        if self.x * self.x + self.d * self.y * self.y != self.n:
            raise ValueError(
                f"{self.x}**2 + {self.d}*{self.y}**2 != {self.n}")


def cornacchia(d: int, p: int):
    """Solve p = x**2 + d*y**2 for an odd prime p with p not dividing d.

    Takes the square root t of -d mod p with t > p/2, runs the Euclidean
    descent on (p, t) down to the first remainder r <= isqrt(p), and
    accepts iff (p - r**2)/d is a perfect square.  Returns the canonical
    Representation, or None when no solution exists.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    if not is_prime(p):
        raise ValueError(f"{p} is composite")
    if d % p == 0:
        raise ValueError(f"p = {p} divides d = {d}")

    a0 = -d % p
    if jacobi(a0, p) != 1:
        return None
    b = sqrt_mod_prime(a0, p)
    a = p
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    r = p - b * b
    if r % d:
        return None
    s = isqrt(r // d)
    if d * s * s != r:
        return None
    return Representation(d, p, b, s)


def represent_bruteforce(d: int, n: int):
    """Smallest-y solution of n = x**2 + d*y**2 by exhaustive search.

    Independent of cornacchia(): walks y upward, testing n - d*y**2 for
    perfect squareness.  Admits y = 0 and composite n.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    y = 0
    dy2 = 0
    while dy2 <= n:
        r = n - dy2
        s = isqrt(r)
        if s * s == r:
            return Representation(d, n, s, y)
        dy2 += d * (2 * y + 1)
        y += 1
    return None
