"""Existence criteria for cyclic quartic unramified extensions.

Two searchable conditions on an imaginary quadratic field Q(sqrt(-N*d)):

  * admissible_factorizations: necessary-condition factorizations
    k = m*n with m = 1 (mod 4) and every prime of n splitting in
    Q(sqrt(m)) and vice versa;
  * vau2_search: a witness a**2 - m*b**2 = n*k**2 = 1 (mod 4), which is
    sufficient for the extension to exist when m = 2 (mod 4) and
    gcd(n, m) = 1.

h4_report() bundles both with the class-number data for the field.
"""

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import List, Optional, Tuple

from .arith import is_square, isqrt, kronecker
from .primality import (
    is_prime,
    is_squarefree_bounded,
    small_factors,
    squarefree_kernel,
)
from .quadforms import (
    ambiguous_class_count,
    class_number,
    fundamental_discriminant,
    is_cyclic_quartic_classgroup,
)

__all__ = [
    "H4Report",
    "SplitBehavior",
    "Vau2Witness",
    "h4_report",
    "split_behavior",
    "vau1_admissible_factorizations",
    "vau2_search",
]


class SplitBehavior(str, Enum):
    SPLITS = "splits"
    INERT = "inert"
    RAMIFIED = "ramified"


def split_behavior(q: int, m: int) -> SplitBehavior:
    """How the prime q behaves in Q(sqrt(m)), by the Kronecker symbol of
    the field discriminant."""
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    symbol = kronecker(fundamental_discriminant(m), q)
    if symbol == 1:
        return SplitBehavior.SPLITS
    if symbol == -1:
        return SplitBehavior.INERT
    return SplitBehavior.RAMIFIED


def _prime_divisors(n: int) -> List[int]:
    factors, cofactor = small_factors(abs(n))
    primes = [p for p, _ in factors]
    if cofactor > 1:
        if not is_prime(cofactor):
            raise ValueError(f"cannot fully factor {n}")
        primes.append(cofactor)
    return primes


def _all_split(primes: List[int], in_field: int) -> bool:
    disc = fundamental_discriminant(in_field)
    return all(kronecker(disc, q) == 1 for q in primes)


def vau1_admissible_factorizations(k: int, bound: int = 10**6) -> List[Tuple[int, int]]:
    """Factorizations k = m*n passing the necessary conditions for an
    unramified dihedral degree-8 field over Q(sqrt(k)).

    Requires squarefree k.  Both parts must differ from +-1, m must be
    1 (mod 4) on the signed integer, every prime of n must split in
    Q(sqrt(m)) and every prime of m must split in Q(sqrt(n)).  Output is
    sorted; these are necessary conditions only, never an existence proof.
    """
    sf = is_squarefree_bounded(abs(k), bound) if k not in (-1, 1) else True
    if sf is None:
        raise ValueError(f"cannot verify that {k} is squarefree")
    if not sf:
        raise ValueError(f"{k} is not squarefree")
    if k == 0:
        raise ValueError("k must be nonzero")
    primes = _prime_divisors(k) if k not in (-1, 1) else []
    results = []
    for mask in range(1 << len(primes)):
        m_abs = 1
        for i, p in enumerate(primes):
            if mask >> i & 1:
                m_abs *= p
        for m_sign in (1, -1):
            m = m_sign * m_abs
            n = k // m
            if abs(m) == 1 or abs(n) == 1:
                continue
            if m % 4 != 1:
                continue
            if not _all_split(_prime_divisors(n), m):
                continue
            if not _all_split(_prime_divisors(m), n):
                continue
            results.append((m, n))
    return sorted(results)


@dataclass(frozen=True)
class Vau2Witness:
    """Integers with a**2 - m*b**2 = n*k**2 = 1 (mod 4), witnessing a
    cyclic quartic unramified extension of Q(sqrt(n*m))."""

    m: int
    n: int
    a: int
    b: int
    k: int

    def __post_init__(self):
        if self.m % 4 != 2:
            raise ValueError("m must be 2 mod 4")
        if gcd(self.n, self.m) != 1:
            raise ValueError("n and m must be coprime")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        value = self.n * self.k * self.k
        if self.a * self.a - self.m * self.b * self.b != value:
            raise ValueError("a**2 - m*b**2 != n*k**2")
        if value % 4 != 1:
            raise ValueError("n*k**2 must be 1 mod 4")


def vau2_search(m: int, n: int, search_bound: int) -> Optional[Vau2Witness]:
    """Exhaustive witness search over 0 <= a, b <= search_bound.

    Returns the lexicographically smallest (a, b, k), or None when the
    grid holds no witness -- "no witness up to the bound", never a proof
    of nonexistence.
    """
    if m % 4 != 2:
        raise ValueError("m must be 2 mod 4")
    if n == 0 or gcd(n, m) != 1:
        raise ValueError("n must be nonzero and coprime to m")
    if is_squarefree_bounded(abs(n)) is not True:
        raise ValueError(f"n = {n} must be (verifiably) squarefree")
    if search_bound < 1:
        raise ValueError("search_bound must be >= 1")
    for a in range(search_bound + 1):
        for b in range(search_bound + 1):
            value = a * a - m * b * b
            if value == 0 or value % n or value % 4 != 1:
                continue
            q = value // n
            if q <= 0 or not is_square(q):
                continue
            k = isqrt(q)
            return Vau2Witness(m, n, a, b, k)
    return None


@dataclass(frozen=True)
class H4Report:
    """Aggregated quartic-extension data for x**2 + d*y**2 with modulus N."""

    d: int
    modulus: int
    field_m: int
    kernel: int
    discriminant: int
    class_number: int
    ambiguous_classes: int
    cyclic_quartic: bool
    four_divides_class_number: bool
    vau1_factorizations: List[Tuple[int, int]] = field(default_factory=list)
    vau2_checked: bool = False
    vau2_witness: Optional[Vau2Witness] = None

    def to_dict(self) -> dict:
        witness = None
        if self.vau2_witness is not None:
            w = self.vau2_witness
            witness = {"m": w.m, "n": w.n, "a": w.a, "b": w.b, "k": w.k}
        return {
            "d": self.d,
            "modulus": self.modulus,
            "field_m": self.field_m,
            "kernel": self.kernel,
            "discriminant": self.discriminant,
            "class_number": self.class_number,
            "ambiguous_classes": self.ambiguous_classes,
            "cyclic_quartic": self.cyclic_quartic,
            "four_divides_class_number": self.four_divides_class_number,
            "vau1_factorizations": [list(mn) for mn in self.vau1_factorizations],
            "vau2_checked": self.vau2_checked,
            "vau2_witness": witness,
        }


def h4_report(d: int, n_modulus: int, vau2_bound: int = 100) -> H4Report:
    """Quartic-extension dossier for primes x**2 + d*y**2 with N | x or N | y.

    The field parameters come from the squarefree kernels: the report is
    about Q(sqrt(-kernel(N*d))), while the congruence modulus N is kept
    verbatim.  The witness search runs with m = kernel(N), n = -d when
    m = 2 (mod 4) applies.
    """
    if d < 1 or n_modulus < 1:
        raise ValueError("d and N must be >= 1")
    kernel = squarefree_kernel(n_modulus * d)
    disc = fundamental_discriminant(-kernel)
    h = class_number(disc)
    field_m = squarefree_kernel(n_modulus)
    vau2_applicable = (
        field_m % 4 == 2
        and gcd(d, field_m) == 1
        and is_squarefree_bounded(d) is True
    )
    witness = vau2_search(field_m, -d, vau2_bound) if vau2_applicable else None
    return H4Report(
        d=d,
        modulus=n_modulus,
        field_m=field_m,
        kernel=-kernel,
        discriminant=disc,
        class_number=h,
        ambiguous_classes=ambiguous_class_count(disc),
        cyclic_quartic=is_cyclic_quartic_classgroup(disc),
        four_divides_class_number=h % 4 == 0,
        vau1_factorizations=vau1_admissible_factorizations(-kernel),
        vau2_checked=vau2_applicable,
        vau2_witness=witness,
    )
