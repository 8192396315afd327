"""Genus-zero actions of small finite groups on compact Riemann surfaces.

The package decides whether a group (given as an explicit multiplication
table) admits an action with genus-zero quotients by every prime-order
subgroup, enumerates all such actions up to a genus bound, and provides
mechanical verifiers for the classification of the admissible families.
"""

from .actions import (
    GeneratingVector,
    conjugation_orbit,
    count_conjugation_orbits,
    enumerate_vectors,
    exists,
    validate,
)
from .classify import (
    AdmissibleEntry,
    ClassificationReport,
    TheoremCheck,
    classify_group,
    default_catalogue,
    genus_zero_signatures,
    is_genus_zero_action,
    is_theorem_one_family,
    verify_cyclic_prime_power,
    verify_icosahedral,
    verify_no_positive_genus,
    verify_pq,
    verify_quaternion,
    verify_sphere_and_torus,
    verify_theorem_one,
    verify_zm,
)
from .fuchsian import (
    NegativeGenus,
    NonIntegralGenus,
    Signature,
    enumerate_signatures,
    geometry_type,
    parse_signature,
    rh_genus,
    rh_measure,
)
from .groups import (
    FiniteGroup,
    GroupConstructionError,
    Subgroup,
    build_binary_icosahedral,
    build_cyclic,
    build_dihedral,
    build_generalized_quaternion,
    build_polyhedral,
    build_type_ii,
    build_zm,
    check_conditions,
    dump_table,
    load_table,
    parse_group,
    prime_order_subgroups_up_to_conjugacy,
    subgroup_closure,
)
from .quotients import (
    NonIntegralQuotientGenus,
    QuotientReport,
    fixed_point_count,
    fixed_points_unique_subgroup,
    gamma_prime_signature,
    quotient_genus,
)

__version__ = "0.1.0"
