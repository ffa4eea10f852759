"""Exact symbolic computation with generalized cluster algebras and
Laurent phenomenon algebras: seed mutation, coprimality and acyclicity
analysis, divisor class groups, class-group realization, and LP seed
mutation, with a CLI and a local HTTP service."""

from .classgroup import (
    ClassGroupResult,
    ClosedWitness,
    PrimeDivisor,
    class_group,
    classical_consistency,
    height_one_primes,
    is_factorial,
    valuation_matrix,
)
from .expressions import RationalExpression, evaluate_poly
from .genseed import (
    CoprimalityCriteria,
    DirectedGraph,
    ExplorationResult,
    GeneralizedSeed,
    InvalidSeedError,
    PreconditionError,
    coprimality_criteria,
    digraph,
    exchange_polynomials,
    expand_in_initial,
    explore_mutation_class,
    is_acyclic,
    is_coprime,
    rank2_mutation_identities,
    make_seed,
    mutate,
    validate_seed,
    verify_laurent,
)
from .lpalgebra import (
    LPSeed,
    LPSubstitutionError,
    LPValidationError,
    enumerate_lp_cluster_variables,
    exchange_laurent,
    is_sign_skew_symmetric,
    lp_mutate,
    make_lp_seed,
    seeds_equivalent,
    validate_lp_seed,
)
from .realize import AbelianGroupSpec, realize_seed, verify_realization

__version__ = "0.1.0"
