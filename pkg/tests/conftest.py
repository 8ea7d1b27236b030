import pytest

from omforge.corpus import non_euclidean_848


@pytest.fixture(scope="session")
def non_euclidean_om():
    return non_euclidean_848()
