"""Data models for graphs, colorings, constructions and reports."""

from .coloring import ColoredGraph, EdgeColoring
from .family import FAMILY_NAMES, Construction, FamilySpec, parse_family_spec
from .graph import CycleWitness, Edge, PathWitness, SimpleGraph
from .report import LemmaReport, NecessityReport, RainbowIffReport, SaturationReport, SufficiencyReport, WitnessOutcome
from .structure import BoundCheck, Degree2Classification, StructureFindings, SuspensionAudit, XiMembership

__all__ = [
    "BoundCheck",
    "ColoredGraph",
    "Construction",
    "CycleWitness",
    "Degree2Classification",
    "Edge",
    "EdgeColoring",
    "FAMILY_NAMES",
    "FamilySpec",
    "LemmaReport",
    "NecessityReport",
    "PathWitness",
    "RainbowIffReport",
    "SaturationReport",
    "SimpleGraph",
    "StructureFindings",
    "SufficiencyReport",
    "SuspensionAudit",
    "WitnessOutcome",
    "XiMembership",
    "parse_family_spec",
]
