# tests/conftest.py
import pytest

from skeintail import corpus
from skeintail.config import DEFAULT_LIMITS


@pytest.fixture
def load():
    """Load a bundled diagram by name."""
    return corpus.load


@pytest.fixture
def limits():
    return DEFAULT_LIMITS


@pytest.fixture
def manifest_entry():
    def _entry(name):
        return corpus.manifest()["diagrams"][name]
    return _entry
