import itertools

import pytest

from cfkinf import build, dual, tensor
from cfkinf.checks import corpus_torus

CORPUS = [f"T({p},{q})" for p, q in corpus_torus()] + ["C(2,5;T(2,3))"]

# Lines recorded by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def atoms():
    return {name: build(name) for name in CORPUS}


@pytest.fixture(scope="session")
def pairs(atoms):
    """(label, left, right, sign, complex) for every corpus pair, both orientations."""
    out = []
    for a, b in itertools.combinations_with_replacement(CORPUS, 2):
        for sign in (1, -1):
            right = atoms[b] if sign == 1 else dual(atoms[b])
            label = f"{a} # {'' if sign == 1 else '-'}{b}"
            out.append((label, a, b, sign, tensor(atoms[a], right)))
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
