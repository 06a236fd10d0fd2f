"""End-to-end constructions built on the reduction and genericity solvers."""

from .choice import SConsistentInstance, choice_function_poset, koenig_choice, s_consistent_choice
from .dyadic import DyadicInterval, dyadic_subintervals, leftmost_containing
from .hahn_banach import (
    FunctionalEnclosure,
    HahnBanachInstance,
    LinearFunctional,
    SublinearFunctional,
    base_interval,
    hahn_banach_solve,
    minkowski_eval,
    one_step_extension,
)
from .ordering import ordering_poset, ordering_principle, union_linear_order

__all__ = [
    "DyadicInterval",
    "FunctionalEnclosure",
    "HahnBanachInstance",
    "LinearFunctional",
    "SConsistentInstance",
    "SublinearFunctional",
    "base_interval",
    "choice_function_poset",
    "dyadic_subintervals",
    "hahn_banach_solve",
    "koenig_choice",
    "leftmost_containing",
    "minkowski_eval",
    "one_step_extension",
    "ordering_poset",
    "ordering_principle",
    "s_consistent_choice",
    "union_linear_order",
]
