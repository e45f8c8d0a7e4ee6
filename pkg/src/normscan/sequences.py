"""The four prime families scanned by this package.

Each generator returns the exact norm value for a prime exponent p:

  mersenne:  2**p - 1
  gaussian:  norm of (1+i)**p - 1   = 2**p - (2|p)*2**((p+1)/2) + 1
  eisenstein: norm of (1-w)**p - 1  = 3**p - (3|p)*3**((p+1)/2) + 1
  analog:    |norm((a**p - 1)/(a - 1))| for a = 2 + sqrt(2)

The closed forms are cross-checked in the test suite against direct
powering in Z[i], Z[w] and Z[sqrt(2)].
"""

from dataclasses import dataclass
from enum import Enum

from .arith import jacobi
from .primality import is_prime

__all__ = [
    "NormSequenceKind",
    "QuadInt2",
    "eisenstein_mersenne_norm",
    "eisenstein_mersenne_norm_direct",
    "gaussian_mersenne_norm",
    "gaussian_mersenne_norm_direct",
    "mersenne",
    "sqrt2_analog_norm",
]


class NormSequenceKind(str, Enum):
    MERSENNE = "mersenne"
    GAUSSIAN_MERSENNE = "gaussian"
    EISENSTEIN_MERSENNE = "eisenstein"
    SQRT2_ANALOG = "analog"


@dataclass(frozen=True)
class QuadInt2:
    """a + b*sqrt(2) with exact integer coordinates."""

    a: int
    b: int

    def __add__(self, other: "QuadInt2") -> "QuadInt2":
        return QuadInt2(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadInt2") -> "QuadInt2":
        return QuadInt2(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "QuadInt2") -> "QuadInt2":
        # (a + b*s)(c + e*s) = (ac + 2be) + (ae + bc)*s  for s = sqrt(2)
        return QuadInt2(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __pow__(self, exponent: int) -> "QuadInt2":
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        result = QuadInt2(1, 0)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "QuadInt2":
        return QuadInt2(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def divide_exact(self, other: "QuadInt2") -> "QuadInt2":
        """self / other, valid only when the quotient is integral."""
        num = self * other.conjugate()
        den = other.norm()
        if den == 0:
            raise ZeroDivisionError("division by zero element")
        if num.a % den or num.b % den:
            raise ValueError(f"{self} is not divisible by {other}")
        return QuadInt2(num.a // den, num.b // den)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"exponent {p} is not prime")


def mersenne(p: int) -> int:
    """2**p - 1 for prime p."""
    _require_prime(p)
    return (1 << p) - 1


def gaussian_mersenne_norm(p: int) -> int:
    """Norm of (1+i)**p - 1 for an odd prime p, by the closed form."""
    _require_prime(p)
    if p == 2:
        raise ValueError("p = 2 is outside this family")
    return (1 << p) - jacobi(2, p) * (1 << ((p + 1) // 2)) + 1


def gaussian_mersenne_norm_direct(p: int) -> int:
    """Same value computed by actually powering 1+i in Z[i]."""
    x, y = 1, 0
    bx, by = 1, 1
    e = p
    while e:
        if e & 1:
            x, y = x * bx - y * by, x * by + y * bx
        bx, by = bx * bx - by * by, 2 * bx * by
        e >>= 1
    x -= 1
    return x * x + y * y


def eisenstein_mersenne_norm(p: int) -> int:
    """Norm of (1-w)**p - 1 for prime p >= 5, by the closed form."""
    _require_prime(p)
    if p in (2, 3):
        raise ValueError("p must be >= 5")
    return 3**p - jacobi(3, p) * 3 ** ((p + 1) // 2) + 1


def eisenstein_mersenne_norm_direct(p: int) -> int:
    """Same value by powering 1-w in Z[w], coordinates in basis {1, w}.

    w is a primitive cube root of unity, so w**2 = -1 - w and
    norm(a + b*w) = a**2 - a*b + b**2.
    """
    x, y = 1, 0
    bx, by = 1, -1
    e = p
    while e:
        if e & 1:
            x, y = x * bx - y * by, x * by + y * bx - y * by
        bx, by = bx * bx - by * by, 2 * bx * by - by * by
        e >>= 1
    x -= 1
    return x * x - x * y + y * y


def sqrt2_analog_norm(p: int) -> int:
    """|norm((a**p - 1)/(a - 1))| for a = 2 + sqrt(2) and prime p.

    a - 1 = 1 + sqrt(2) is a unit, so the quotient is always exact.
    """
    _require_prime(p)
    alpha = QuadInt2(2, 1)
    one = QuadInt2(1, 0)
    m = (alpha**p - one).divide_exact(alpha - one)
    return abs(m.norm())
