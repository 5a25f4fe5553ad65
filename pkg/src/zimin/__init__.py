"""Zimin types of words, Zimin-pattern search, Fibonacci-word queries and
avoidance bounds for Zimin patterns."""

from .avoidance import (
    AvoidanceStats,
    enumerate_minimal,
    f2_closed,
    f3_general_bound,
    f_exact,
    f_upper_bound,
    is_minimal,
    m2_formula,
    table_cell,
)
from .borders import BorderTracker, border_array, new_tracker, scan, short_border_array
from .core import (
    ZiminPattern,
    apply_morphism,
    decompose,
    iterate_morphism,
    max_sequence_value,
    zimin_word,
    ztype,
    ztype_prefixes,
)
from .exceptions import BudgetExceeded, ResourceCapError
from .fibonacci import (
    FibEmbedding,
    FibRep,
    FibWordRef,
    fib_embedding,
    fib_prefix,
    fib_ratio,
    from_fib,
    psi,
    sb_fib,
    zeckendorf,
    zfib,
    zfib_array,
)
from .search import Occurrence, max_factor_ztype, search_zimin

__version__ = "0.1.0"

__all__ = [
    "AvoidanceStats",
    "BorderTracker",
    "BudgetExceeded",
    "FibEmbedding",
    "FibRep",
    "FibWordRef",
    "Occurrence",
    "ResourceCapError",
    "ZiminPattern",
    "apply_morphism",
    "border_array",
    "decompose",
    "enumerate_minimal",
    "f2_closed",
    "f3_general_bound",
    "f_exact",
    "f_upper_bound",
    "fib_embedding",
    "fib_prefix",
    "fib_ratio",
    "from_fib",
    "is_minimal",
    "iterate_morphism",
    "m2_formula",
    "max_factor_ztype",
    "max_sequence_value",
    "new_tracker",
    "psi",
    "sb_fib",
    "scan",
    "search_zimin",
    "short_border_array",
    "table_cell",
    "zeckendorf",
    "zfib",
    "zfib_array",
    "zimin_word",
    "ztype",
    "ztype_prefixes",
]
