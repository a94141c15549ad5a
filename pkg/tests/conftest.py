import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from smallcover import prism, simplex, truncate_vertex

INPUTS = Path(__file__).parent.parent / "inputs"


def truncated_simplex(times):
    P = simplex()
    for v in range(times):
        P = truncate_vertex(P, v)
    return P


@pytest.fixture(scope="session")
def corpus():
    """The polytopes every property test ranges over."""
    from smallcover import cube

    return {
        "simplex": simplex(),
        "cube": cube(),
        "prism5": prism(5),
        "prism6": prism(6),
        "trunc1": truncated_simplex(1),
        "trunc2": truncated_simplex(2),
        "trunc3": truncated_simplex(3),
    }


@pytest.fixture(scope="session")
def inputs_dir():
    assert INPUTS.is_dir()
    return INPUTS
