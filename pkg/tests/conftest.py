import pytest

from zetadensity.precision import PrecisionContext


@pytest.fixture(scope="session")
def ctx():
    """Default 60-digit working context."""
    return PrecisionContext()


@pytest.fixture(scope="session")
def ctx100():
    """High-precision context for refinement-consistency checks."""
    return PrecisionContext(digits=100)
