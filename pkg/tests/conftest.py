import os

import numpy as np
import pytest

from pointless.arith.quad_ring import QuadDisc, QuadIntPoly
from pointless.forms import ConicQuartic
from pointless.model_builder import model_from_coefficients

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")

C2_G = [1, 0, 0, 1, 0, 1]
C2_F = [1, 0, -1, -2, -2, -1, 0, -1, -1, 1, -2, -1, -1, 0, 1]
C2_H_PAIRS = [3, 2, -2, -4, -4, 4, -2, -4, 2, 0, 2, -4, -4, -4, 2, -4, 3, -2]
C2_EXCEPTIONAL = {3, 5, 7, 13, 31, 269, 10169, 22229}


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name)


@pytest.fixture(scope="session")
def gaussian():
    return QuadDisc(-1)


@pytest.fixture(scope="session")
def c2_conic():
    return ConicQuartic.from_coefficients(C2_G, C2_F)


@pytest.fixture(scope="session")
def c2_h(gaussian):
    return QuadIntPoly.from_pairs(C2_H_PAIRS, gaussian)


@pytest.fixture(scope="session")
def c2_model(c2_conic):
    return model_from_coefficients(-1, C2_H_PAIRS, (0, 1, 2), conic=c2_conic)


@pytest.fixture(scope="session")
def c2_model_only():
    return model_from_coefficients(-1, C2_H_PAIRS, (0, 1, 2))


@pytest.fixture
def c2_toml():
    return fixture_path("c2.toml")


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
