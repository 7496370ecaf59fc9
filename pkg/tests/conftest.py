import sys
from pathlib import Path

import pytest

from bsdh.roots import RootSystem

sys.path.insert(0, str(Path(__file__).resolve().parent))

_CACHE: dict = {}


@pytest.fixture
def rs():
    """Factory fixture: rs('B3') -> cached RootSystem."""

    def get(name: str) -> RootSystem:
        if name not in _CACHE:
            _CACHE[name] = RootSystem.of(name)
        return _CACHE[name]

    return get
