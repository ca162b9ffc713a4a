"""Exact meta-nilpotent knot invariants over Z_(p).

Thin re-export of the compiled core; exact rationals cross the boundary as
"num/den" strings, matrices as nested lists.
"""

from ._core import (
    alexander,
    char_poly,
    dim_t,
    hall_dimension,
    hilbert_symbol,
    level1_monodromy,
    report_json,
    sgn,
    sgn_equal,
    smith_normal_form,
    spectral_genericity,
)

__all__ = [
    "alexander",
    "char_poly",
    "dim_t",
    "hall_dimension",
    "hilbert_symbol",
    "level1_monodromy",
    "report_json",
    "sgn",
    "sgn_equal",
    "smith_normal_form",
    "spectral_genericity",
]
