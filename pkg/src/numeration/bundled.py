"""Example numeration systems shipped with the package."""
from __future__ import annotations

from importlib import resources

from .automata import Nfa, load_automaton
from .system import AnsSystem, new_ans

BUNDLED = {
    "even-b": "even_b.aut",
    "binary": "binary.aut",
    "fibonacci": "fibonacci.aut",
}


def bundled_text(name: str) -> str:
    try:
        filename = BUNDLED[name]
    except KeyError:
        raise ValueError(f"unknown bundled system {name!r}; choose from {', '.join(BUNDLED)}") from None
    return resources.files("numeration").joinpath("data", filename).read_text()


def bundled_automaton(name: str) -> Nfa:
    return load_automaton(bundled_text(name))


def bundled_system(name: str) -> AnsSystem:
    return new_ans(bundled_automaton(name))
