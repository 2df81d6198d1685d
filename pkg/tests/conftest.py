import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphfix.fixing import enumerate_graphs


@pytest.fixture(scope="session")
def graphs_by_n():
    """Non-isomorphic graph lists for n = 1..6, shared across the session."""
    return {n: list(enumerate_graphs(n)) for n in range(1, 7)}
