"""Strong odd and parity colorings of graphs and set systems."""

from ._core import (
    FormatError,
    Graph,
    SetSystem,
    ball_parity_chromatic,
    balls,
    color_graph,
    color_system,
    gaifman,
    generate,
    load,
    power,
    strong_odd_chromatic,
    structure_report,
    system_parity_chromatic,
    verify_graph,
    verify_strong_odd,
    verify_system,
)

__all__ = [
    "FormatError",
    "Graph",
    "SetSystem",
    "ball_parity_chromatic",
    "balls",
    "color_graph",
    "color_system",
    "gaifman",
    "generate",
    "load",
    "power",
    "strong_odd_chromatic",
    "structure_report",
    "system_parity_chromatic",
    "verify_graph",
    "verify_strong_odd",
    "verify_system",
]
