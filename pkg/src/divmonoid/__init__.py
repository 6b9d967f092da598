"""Divisibility monoids: word problem, lcm/gcd calculus, local deltas, Garside test, census."""

from .census import canonical_form, census, classify, enumerate_presentations
from .delta import is_quasi_central, local_delta, quasi_center, upsilon_iteration
from .element import ClassBudget, Element, Monoid
from .errors import (
    BudgetExceeded,
    ForeignElementError,
    LatticeError,
    MonoidError,
    MultipleMinimalMultiples,
    NoUniqueMaximum,
    NotADivisor,
    NotGarside,
    PresentationError,
    VerificationFailure,
)
from .garside import garside_divisor_properties, is_garside, minimal_garside_element
from .lattice import (
    DivisorLattice,
    FiniteLattice,
    divisor_lattice,
    export_hasse,
    height,
    is_distributive,
    is_hypercube,
    is_lattice,
)
from .presentation import PairClasses, Presentation, load_presentation, pair_classes, parse_presentation
from .validation import ValidationReport, Violation, validate_divisibility

__version__ = "0.1.0"
