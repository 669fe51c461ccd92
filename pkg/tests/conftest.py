import pytest

from vfvacuum.constants import load_constants


@pytest.fixture(scope="session")
def constants():
    return load_constants()


@pytest.fixture(scope="session")
def electron(constants):
    return constants.lepton("electron")


@pytest.fixture(scope="session")
def muon(constants):
    return constants.lepton("muon")


@pytest.fixture(scope="session")
def tau(constants):
    return constants.lepton("tau")
