"""Primes of the form x**2 + d*y**2 with divisibility constraints.

A library plus CLI that generates the Mersenne-style prime families
(classical, Gaussian, Eisenstein, and the 2+sqrt(2) analog), solves the
representation problem exactly via Cornacchia's algorithm, computes
class numbers of imaginary quadratic orders, decides the quartic
unramified-extension criteria, and batch-verifies the divisibility
claims over exponent ranges.
"""

from .arith import (
    NoSquareRoot,
    is_square,
    isqrt,
    jacobi,
    kronecker,
    mod_pow,
    sqrt_mod_prime,
)
from .classfield import (
    H4Report,
    SplitBehavior,
    Vau2Witness,
    h4_report,
    split_behavior,
    vau1_admissible_factorizations,
    vau2_search,
)
from .primality import (
    Method,
    PrimalityVerdict,
    Verdict,
    is_prime,
    is_squarefree_bounded,
    primes_up_to,
    small_factors,
    squarefree_kernel,
)
from .quadforms import (
    ambiguous_class_count,
    class_number,
    fundamental_discriminant,
    is_cyclic_quartic_classgroup,
    reduced_forms,
)
from .representation import Representation, cornacchia, represent_bruteforce
from .sequences import (
    NormSequenceKind,
    QuadInt2,
    eisenstein_mersenne_norm,
    eisenstein_mersenne_norm_direct,
    gaussian_mersenne_norm,
    gaussian_mersenne_norm_direct,
    mersenne,
    sqrt2_analog_norm,
)
from .verify import (
    Claim,
    Report,
    ScanRecord,
    check_equivalence,
    emit_report,
    report_exit_code,
    scan_eisenstein,
    scan_gaussian,
    scan_mersenne,
    scan_sqrt2_analog,
)

__version__ = "0.1.0"
