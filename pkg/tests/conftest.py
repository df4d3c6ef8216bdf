import pathlib

import pytest

from chordalg.groupoids import build_three_type_system
from chordalg.homact import CONTRAVARIANT, COVARIANT, GroupoidChi
from chordalg.neo import MAJOR, MINOR, build_d24
from chordalg.pcs import ChordLabel, PitchClass

FIXDIR = pathlib.Path(__file__).parent / "fixtures"
BUNDLED = pathlib.Path(__file__).parent.parent / "src" / "chordalg" / "fixtures"


@pytest.fixture(scope="session")
def d24():
    return build_d24()


@pytest.fixture(scope="session")
def three_type():
    return build_three_type_system()


@pytest.fixture(scope="session")
def cov_chi(three_type):
    ext, types = three_type
    return GroupoidChi(ext, types, "M", COVARIANT)


@pytest.fixture(scope="session")
def contra_chi(three_type):
    ext, types = three_type
    return GroupoidChi(ext, types, "M", CONTRAVARIANT)


def chord(root, t):
    return ChordLabel(PitchClass(root, t.modulus), t)


@pytest.fixture
def mk_chord():
    return chord
