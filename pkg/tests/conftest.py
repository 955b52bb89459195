import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from liemetab.catalog import catalog


@pytest.fixture(scope="session")
def groups():
    """All catalog groups keyed by name."""
    return {e.name: e.group for e in catalog()}
