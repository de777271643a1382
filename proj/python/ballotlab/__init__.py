"""Exact statistics, bijections, and generating functions for ballot permutations.

Thin wrapper around the compiled _core extension. Words are lists of the
integers 1..n in one-line notation; exact counts come back as Python ints
and series coefficients as fractions.Fraction.
"""

from ballotlab._core import (  # noqa: F401
    asc,
    ballot_count,
    ballot_permutations,
    binomial,
    bnd_multinomial,
    casc,
    cdes,
    conjecture,
    cycle_decomposition,
    cyclic_factor_count_odd,
    depth,
    des,
    enumeration_limit,
    eulerian,
    factor_count_ballot,
    height,
    identities,
    is_ballot,
    is_dyck,
    is_odd_order,
    lowest_positions,
    m_stat,
    odd_order_table,
    permutations,
    phi,
    pk,
    prefix_heights,
    reverse,
    series,
    spiro_recurrence_table,
    split_at_first_lowest,
    split_at_last_lowest,
    standardize,
    stat_table,
    verify,
)

__all__ = [
    "asc",
    "ballot_count",
    "ballot_permutations",
    "binomial",
    "bnd_multinomial",
    "casc",
    "cdes",
    "conjecture",
    "cycle_decomposition",
    "cyclic_factor_count_odd",
    "depth",
    "des",
    "enumeration_limit",
    "eulerian",
    "factor_count_ballot",
    "height",
    "identities",
    "is_ballot",
    "is_dyck",
    "is_odd_order",
    "lowest_positions",
    "m_stat",
    "odd_order_table",
    "permutations",
    "phi",
    "pk",
    "prefix_heights",
    "reverse",
    "series",
    "spiro_recurrence_table",
    "split_at_first_lowest",
    "split_at_last_lowest",
    "standardize",
    "stat_table",
    "verify",
]
