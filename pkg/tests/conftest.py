import pytest

from polyagraph import UrnParams

PARAM_GRID = (
    UrnParams(1.0, 1.0, 1.0),
    UrnParams(5.0, 5.0, 2.0),
    UrnParams(1.0, 9.0, 5.0),
)


@pytest.fixture
def ref_params() -> UrnParams:
    """The reference parameter set (R, B, reinforcement) = (5, 5, 2)."""
    return UrnParams(5.0, 5.0, 2.0)


@pytest.fixture(params=PARAM_GRID, ids=("1-1-1", "5-5-2", "1-9-5"))
def grid_params(request) -> UrnParams:
    return request.param
