import pytest

from reebdeform import ProfileFamily


@pytest.fixture(scope="session")
def fam():
    return ProfileFamily()
