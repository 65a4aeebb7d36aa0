"""
girthlab
========

Finite fields, the bipartite graphs Lambda(k, q), backtrackless walks and
their closed forms, girth and cycle search, and closed-form families of
girth cycles.

>>> import girthlab as gl
>>> g = gl.make_graph(3, 3)
>>> str(gl.girth(g))
'8'
>>> gl.count_girth_cycles_total(g)
81
"""

from .errors import *  # noqa: F401,F403
from .families import (
    Family,
    closure_conditions_k5,
    delta4,
    f_bcd,
    family_types,
    lambda3_system_check,
    predicted_girth,
    predicted_girth_cycle_types,
    theorem3_types,
)
from .field import FieldSpec, make_field
from .formats import read_alist, write_alist, write_edgelist
from .graph import LEFT, RIGHT, GraphSpec, make_graph
from .search import (
    CycleRecord,
    GirthResult,
    SearchParams,
    canonical_key,
    count_girth_cycles_total,
    cycles_through_edge,
    enumerate_all_cycles,
    enumerate_cycles_through_anchor,
    enumerate_cycles_through_edge,
    girth,
    is_circuit_type,
    is_cycle_type,
)
from .walks import (
    Walk,
    check_type,
    closed_form_left,
    closed_form_left_alt,
    closed_form_vertices,
    rho,
    rho_sum_form,
    walk_from_type,
)

__version__ = "0.1.0"
