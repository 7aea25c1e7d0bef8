import os
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, derandomize=True, max_examples=60)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

FIXTURES = Path(os.environ.get("RATHOM_FIXTURES", Path(__file__).parent / "fixtures"))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
