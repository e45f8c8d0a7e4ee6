"""Reduced binary quadratic forms of negative discriminant.

Class numbers and 2-torsion structure are read off the complete list of
primitive reduced forms (a, b, c), b*b - 4*a*c = D, enumerated over the
standard region -a < b <= a <= c (b >= 0 when a = c or b = a).
"""

from math import gcd, isqrt
from typing import List, Tuple

from .primality import is_squarefree_bounded

__all__ = [
    "ambiguous_class_count",
    "class_number",
    "fundamental_discriminant",
    "is_cyclic_quartic_classgroup",
    "reduced_forms",
]

ReducedForm = Tuple[int, int, int]


def fundamental_discriminant(m: int) -> int:
    """Discriminant of Q(sqrt(m)) for squarefree m not in {0, 1}:
    m itself when m = 1 (mod 4), else 4m."""
    if m in (0, 1):
        raise ValueError("m must not be 0 or 1")
    sf = is_squarefree_bounded(abs(m))
    if sf is None:
        raise ValueError(f"cannot verify that {m} is squarefree")
    if not sf:
        raise ValueError(f"{m} is not squarefree")
    return m if m % 4 == 1 else 4 * m


def _check_discriminant(d: int) -> None:
    if d >= 0:
        raise ValueError("discriminant must be negative")
    if d % 4 not in (0, 1):
        raise ValueError("discriminant must be 0 or 1 mod 4")


def reduced_forms(d: int) -> List[ReducedForm]:
    """All primitive reduced forms of discriminant d < 0, sorted by (a, b)."""
    _check_discriminant(d)
    forms = []
    for a in range(1, isqrt(-d // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            forms.append((a, b, c))
    return sorted(forms)


def class_number(d: int) -> int:
    """Form class number h(d) of a negative discriminant d."""
    return len(reduced_forms(d))


def ambiguous_class_count(d: int) -> int:
    """Number of ambiguous reduced forms (b = 0, a = b, or a = c).

    These are exactly the 2-torsion classes, identity included.
    """
    return sum(
        1 for a, b, c in reduced_forms(d) if b == 0 or a == b or a == c
    )


def is_cyclic_quartic_classgroup(d: int) -> bool:
    """True iff the class group of d is cyclic of order 4.

    h = 4 with exactly one nontrivial 2-torsion element is C4; three of
    them would be C2 x C2.
    """
    return class_number(d) == 4 and ambiguous_class_count(d) == 2
