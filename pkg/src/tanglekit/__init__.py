"""Combinatorial analysis and theorem-backed certification of link, 2-string
tangle and figure-eight spatial-graph diagrams."""

from .diagram import Diagram, DiagramError, Mode, ParseError, isomorphic, parse, serialize
from .certify import Certificate, certify, replay

__all__ = [
    "Certificate",
    "Diagram",
    "DiagramError",
    "Mode",
    "ParseError",
    "certify",
    "isomorphic",
    "parse",
    "replay",
    "serialize",
]
