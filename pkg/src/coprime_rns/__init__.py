"""Optimal co-prime moduli sets for residue number system arithmetic."""
from .complexity import ComplexityEstimate, estimate
from .dynamic_range import DynamicRange, exact_range, segmented_bits
from .errors import (
    ContextError,
    CoprimeRnsError,
    DomainError,
    GuardError,
    RangeError,
    ShapeError,
)
from .generator import (
    CandidateRecord,
    ModuliSet,
    filter_evens,
    generate,
    greedy_select,
    identify_candidates,
    substitute_pass,
)
from .number_theory import PrimeFactorSet, are_coprime, factorize, is_prime, is_prime_power
from .oracle import OracleResult, optimal_set
from .rns import RnsContext, RnsVector, channel_op, from_rns, make_context, to_rns

__version__ = "0.1.0"
