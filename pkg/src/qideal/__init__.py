"""Quantale-valued order theory toolkit.

Exact finite quantales and closed-form unit-interval backends, ordered
sets valued in them, fuzzy lower/upper sets, three ideal classes with
deciders and witnesses, ideal-space completions, Scott-style open and
closed structures, and a registry of named check suites behind a CLI.
"""

from .completion import (
    IdealSpace,
    check_completeness_continuity,
    check_saturation,
    ideal_space,
    weighted_join,
)
from .errors import (
    BudgetExceeded,
    GridTooCoarse,
    QidealError,
    UnknownSuite,
    ValidationError,
)
from .fuzzy import (
    FuzzySet,
    classify_fuzzy_set,
    classify_sampled,
    constant_fuzzy_set,
    enumerate_monotone_sets,
    fuzzy_set,
    intersection_inclusion_identities,
    kan_transport_identity,
    sub_degree,
    suprema,
    tensor_degree,
    transport,
    yoneda,
)
from .ideals import (
    EventuallyPeriodicSequence,
    IdealReport,
    approach_terms,
    classify_ideal,
    compare_fc_routes,
    enumerate_ideals,
    generate_interval_ideal,
    ideal_from_sequence,
    irreducible_interval_ideal,
    is_flat,
    is_forward_cauchy,
    is_irreducible,
    periodic_sequence,
    sequence_generated_ideals,
)
from .io import dump_instance, load_instance, save_instance
from .qorder import (
    QMap,
    QOrderedSet,
    all_qmaps,
    build_qmap,
    build_qorder,
    check_map_and_adjunction,
    crisp_qorder,
    interval_order,
    opposite,
    random_qorder,
    standard_qorder,
    validate_qorder,
)
from .quantale import (
    FiniteQuantale,
    IntervalQuantale,
    boolean4,
    build_finite_quantale,
    chain_quantale,
    godel_chain,
    interval_quantale,
    lukasiewicz_chain,
    nilpotent_minimum_chain,
    quantale_properties,
    standard_quantale,
)
from .scott import (
    ScottStructure,
    check_structure_axioms,
    cocontinuity_equivalence,
    generate_scott_structure,
    interval_dR_scott_closed,
    is_scott_member,
    verify_ordinal_sum_generation,
)
from .suites import SuiteResult, run_suite, search_counterexample, suite_names

__version__ = "0.1.0"
