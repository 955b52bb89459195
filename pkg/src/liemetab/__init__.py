"""Exact computations deciding whether the symmetric elements of an integral
group ring form a Lie metabelian set, cross-validated against the structural
classification, plus mechanical audits of the underlying ring identities."""

from .brute import (
    BruteReport,
    BudgetExceeded,
    GeneratorSet,
    active_kernel,
    audit_eq1,
    is_check_commutative,
    is_plus_commutative,
    is_plus_lie_metabelian,
    x_plus_generators,
)
from .classify import (
    ConditionReport,
    condition1,
    condition2,
    condition3,
    condition4,
    is_hamiltonian_2group,
    theorem1_verdict,
    theorem2_verdict,
)
from .groupring import MixedGroups, RingElement, lie_bracket
from .groups import (
    Group,
    NoIdentity,
    NotAPermutation,
    NotAssociative,
    NotLatinSquare,
    OrderLimitExceeded,
    Subgroup,
    ValidationError,
    direct_product,
    group_from_permutations,
    group_from_table,
)

__version__ = "0.1.0"
