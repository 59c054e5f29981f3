"""Named graph documents shipped with the package.

A CLI argument of the form ``@name`` refers to one of these; ``-`` is stdin,
anything else a file path.
"""

from __future__ import annotations

import sys
from importlib.resources import files

from .document import GraphDocument, parse_document, parse_graph

PLANAR = (
    "k4",
    "prism",
    "cube",
    "pentagonal_prism",
    "truncated_tetrahedron",
    "dodecahedron",
    "twin_pair",
    "tutte",
)
NONPLANAR = ("petersen", "k33_apex", "k33_doublecross")
NAMES = PLANAR + NONPLANAR


def load_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown corpus graph {name!r}; known: {', '.join(NAMES)}")
    return (files("spiralchain") / "data" / f"{name}.txt").read_text()


def load_document(name: str) -> GraphDocument:
    return parse_document(load_text(name))


def load_graph(name: str):
    return parse_graph(load_text(name))


def read_input(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.startswith("@"):
        return load_text(arg[1:])
    with open(arg, encoding="utf-8") as fh:
        return fh.read()
