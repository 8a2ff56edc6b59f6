from pathlib import Path

import pytest

from indexcoding import Instance

INSTANCE_DIR = Path(__file__).resolve().parent.parent / "instances"


@pytest.fixture
def example6() -> Instance:
    """Six unicast receivers whose cross-neighbor graph splits into
    a triangle, an edge, and an isolated vertex; optimal rate 3."""
    return Instance.of(
        6,
        [
            ({1}, {2, 3, 4}),
            ({2}, {5}),
            ({3}, {1, 4}),
            ({4}, {1, 3}),
            ({5}, {2, 6}),
            ({6}, {4}),
        ],
    )


@pytest.fixture
def groupcast3() -> Instance:
    """Three messages, two receivers, the second demanding two messages."""
    return Instance.of(3, [({1}, {2, 3}), ({2, 3}, {1})])


@pytest.fixture
def cycle3() -> Instance:
    """Directed 3-cycle of side information: clique cover rate 3 but
    scalar-linear rate 2, the canonical cover-vs-oracle gap."""
    return Instance.of(3, [({1}, {2}), ({2}, {3}), ({3}, {1})])
