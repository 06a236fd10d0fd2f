"""Finite orders, generic filters, binary messes and the transversal solver
that connects them."""

from .errors import *  # noqa: F401,F403
from .genericity import (
    DenseFamily,
    GenericFilter,
    check_lemma_2_2,
    compatibility_class,
    directedness_dense_set,
    find_generic_filter,
    fully_generic_filters,
    max_antichain,
    maximal_antichains,
    principal_upset,
)
from .mess import (
    CNF,
    BinaryMess,
    PartialBinaryFunction,
    TotalBinaryFunction,
    build_mess,
    mess_from_cnf,
    parse_dimacs,
)
from .order import ElementSubset, FinitePoset, FinitePreorder, build_order, order_from_predicate
from .reduction import (
    AntichainFamily,
    LinkedGenericSet,
    PosetMess,
    TransversalSolver,
    centred_witness,
    consistent_from_two_linked,
    is_centred,
    mess_from_poset,
    poset_from_mess,
    solve_two_linked_generic,
    two_linked_from_consistent,
)

__version__ = "0.1.0"
