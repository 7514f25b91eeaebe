from .catalog import (
    GroupData,
    build_group,
    group_order,
    monomial_name,
    parse_group_name,
)
from .characters import CharacterTable, quotient_table
from .invariants import (
    InvarianceCheck,
    act,
    express_in,
    invariant_reduce,
    semi_invariant_factor,
    semi_invariant_project,
    verify_invariance,
)
