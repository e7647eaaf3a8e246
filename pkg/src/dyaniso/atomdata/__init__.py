from .ktensor import (
    TABLE1_VALUES,
    baked_table1,
    build_k_tensor,
    line_dipole_squared,
    reduced_dipole_sq_from_f,
)
from .parser import check_selection_rule, load_linelist, parse_linelist

__all__ = [
    "TABLE1_VALUES",
    "baked_table1",
    "build_k_tensor",
    "check_selection_rule",
    "line_dipole_squared",
    "load_linelist",
    "parse_linelist",
    "reduced_dipole_sq_from_f",
]
