"""Exact computations on the prime spectrum of a finite product of p-adic integers."""

from .config import Config
from .errors import (
    DenominatorInPrime,
    ImproperIdeal,
    InputError,
    MixedContext,
    NonPrimeModulus,
    NotACover,
    NotApproximateRoot,
    NotAUnit,
    NotOpen,
    PrecisionExhausted,
    SingularRoot,
    ZeroHasNoClass,
    ZhatError,
)
from .filters import Filter, Ultrafilter, delta_lower, delta_upper, enumerate_ultrafilters, ideal_filter
from .ideals import FinGenIdeal, membership
from .padic import AtLeastPrecision, PAdicInt, PAdicRational, from_integer, hensel_lift, rational_embed
from .product import Predicate, ProductElement, RingContext, division_witness, truth_set
from .quotient import localize, quotient
from .sheaf import OpenSet, all_opens, basic_open, sections, stalk
from .spectrum import Level, PrimeIdeal, is_prime, spec_enumerate

__all__ = [
    "AtLeastPrecision", "Config", "DenominatorInPrime", "Filter", "FinGenIdeal", "ImproperIdeal",
    "InputError", "Level", "MixedContext", "NonPrimeModulus", "NotACover", "NotApproximateRoot",
    "NotAUnit", "NotOpen", "OpenSet", "PAdicInt", "PAdicRational", "Predicate", "PrecisionExhausted",
    "PrimeIdeal", "ProductElement", "RingContext", "SingularRoot", "Ultrafilter", "ZeroHasNoClass",
    "ZhatError", "all_opens", "basic_open", "delta_lower", "delta_upper", "division_witness",
    "enumerate_ultrafilters", "from_integer", "hensel_lift", "ideal_filter", "is_prime", "localize",
    "membership", "quotient", "rational_embed", "sections", "spec_enumerate", "stalk", "truth_set",
]
