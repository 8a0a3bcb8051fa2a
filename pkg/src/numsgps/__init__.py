"""Exact toolkit for numerical semigroups.

Construction and membership, Apery sets, order functions, tangent-cone
Cohen-Macaulay/Gorenstein tests, Hilbert functions, Apery tables, gluing
machinery (nice / specific gluings, extensions, free semigroups), and a
seeded harness that stress-tests the transfer theorems on random
instances. See the README for the command-line interface.
"""

from .cone import (
    AperyTable,
    BetaProfile,
    HilbertFunction,
    Landing,
    PurityFlags,
    apery_of_ideal,
    apery_table,
    beta_profile,
    big_L,
    hilbert_function,
    is_cm_tangent_cone,
    is_gorenstein_tangent_cone,
    is_symmetric,
    l_value,
    max_apery,
    max_m_apery,
    purity,
    reduction_number,
    relative_m_pure_symmetric,
)
from .core import AperySet, NumericalSemigroup, OrderTable, from_generators, minimalize, naturals
from .errors import (
    BoundsTooSmallError,
    EmptyInputError,
    GluingError,
    IntegerWidthError,
    InvalidGeneratorError,
    InvariantViolation,
    NonCoprimeError,
    NotAMemberError,
    NotCoprimeError,
    NotRepresentableError,
    NotSpecificError,
    NotSymmetricError,
    PIsGeneratorError,
    PNotMemberError,
    QIsGeneratorError,
    QNotMemberError,
    SemigroupError,
    UnknownTheoremError,
)
from .gluing import (
    FreeBuild,
    GluingFlags,
    GluingSpec,
    Representation,
    apery_factorization,
    build_free,
    make_gluing,
    ord_transfer_check,
    unique_representation,
)
from .verify import (
    SamplerConfig,
    TheoremPredicate,
    TheoremReport,
    THEOREMS,
    brute_apery,
    brute_ord,
    mutated_t1_predicate,
    run_predicate,
    sample_gluings,
    sample_semigroups,
    sieve_members,
    verify_theorem,
)

__version__ = "0.1.0"
