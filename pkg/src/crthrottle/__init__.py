"""Exact Cops-and-Robbers parameters: capture time, damage and throttling."""

from .graph import INF, Graph, emit_graph6, parse_edge_list, parse_graph6
from .solvers import (
    capture_time,
    cop_number,
    cop_throttling,
    damage_number,
    damage_throttling,
    domination_number,
    k_radius,
)

__all__ = [
    "INF",
    "Graph",
    "capture_time",
    "cop_number",
    "cop_throttling",
    "damage_number",
    "damage_throttling",
    "domination_number",
    "emit_graph6",
    "k_radius",
    "parse_edge_list",
    "parse_graph6",
]
