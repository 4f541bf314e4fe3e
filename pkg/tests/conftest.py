import pytest
from hypothesis import settings

settings.register_profile("brkz", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("brkz")


@pytest.fixture(scope="session")
def operads():
    from brkz.cyclic import BUILTIN_OPERADS
    return {name: make() for name, make in BUILTIN_OPERADS.items()}
