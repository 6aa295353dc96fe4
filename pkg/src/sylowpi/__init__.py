"""Decision oracle and verification engine for the Sylow pi-theorem (D_pi)
in finite groups: an arithmetic criterion for simple groups, composition
lifting for composite groups, embedded classification tables, and a
brute-force permutation-group oracle for cross-validation."""

from .catalog import SimpleGroupId, alt, lie, parse_group, sporadic
from .composition import CompositionSpec, CyclicFactor, decide_dpi_composite, parse_factors
from .criterion import Verdict, decide_dpi_simple
from .permbrute import PermGroup, is_dpi_brute, maximal_pi_subgroups, realize

__all__ = [
    "SimpleGroupId", "alt", "lie", "sporadic", "parse_group",
    "CompositionSpec", "CyclicFactor", "decide_dpi_composite", "parse_factors",
    "Verdict", "decide_dpi_simple",
    "PermGroup", "realize", "maximal_pi_subgroups", "is_dpi_brute",
]

__version__ = "1.0.0"
