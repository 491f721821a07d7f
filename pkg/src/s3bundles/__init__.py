"""Homotopy, homeomorphism and diffeomorphism classification of the total
spaces M_{m,n} of S^3-bundles over S^4."""
from .classifier import (
    Category,
    Orientation,
    Verdict,
    decide_records,
    diffeomorphic,
    diffeomorphic_congruence,
    equivalent,
    homeomorphic,
    homeomorphic_congruence,
    homotopy_equivalent,
    symmetric_partner,
)
from .enumeration import (
    ClassPartition,
    CountsReport,
    diff_count,
    exotic_sphere_census,
    hom_count,
    homotopy_count,
    partition,
    section4_table,
    verify_section4,
)
from .invariants import (
    Bundle,
    InvariantRecord,
    RationalResidue,
    half_p1,
    invariant_record,
    mu,
    rr_add,
    rr_eq,
    rr_make,
    rr_neg,
    s1,
)
from .modular import factorize, gcd, minus_one_solvable, root_count, unit_square_roots

__version__ = "0.1.0"
