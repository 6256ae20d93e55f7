"""Shared fixtures: build each algebra once per test session."""

import pytest

from confsys.diffops import OperatorCalculus
from confsys.liealg import build_lie_algebra
from confsys.omega import OmegaSystem
from confsys.pbw import Enveloping
from confsys.roots import RootSystemSpec, build_root_system
from confsys.verma import VermaModule


def _make(label: str):
    return build_lie_algebra(build_root_system(RootSystemSpec.parse(label)),
                             check=False)


@pytest.fixture(scope="session")
def alg_d4():
    return _make("D4")


@pytest.fixture(scope="session")
def alg_a3():
    return _make("A3")


@pytest.fixture(scope="session")
def alg_d5():
    return _make("D5")


@pytest.fixture(scope="session")
def env_d4(alg_d4):
    return Enveloping(alg_d4)


@pytest.fixture(scope="session")
def verma_d4(env_d4):
    return VermaModule(env_d4)


@pytest.fixture(scope="session")
def omega_d4(env_d4):
    return OmegaSystem(env_d4)


@pytest.fixture(scope="session")
def calc_d4(alg_d4):
    return OperatorCalculus(alg_d4)
