"""Test fixtures and configuration for glvar tests."""

from pathlib import Path

import pytest

from glvar.equimap import WeightedMap, phi_family
from glvar.glvariety import LevelFamily, rank_one_family
from glvar.polyalg import PolynomialRing

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir() -> Path:
    """Directory holding the shipped map, family and ideal files."""
    return DATA_DIR


@pytest.fixture
def xy_ring() -> PolynomialRing:
    """QQ[x, y]."""
    return PolynomialRing(("x", "y"))


@pytest.fixture
def xyz_ring() -> PolynomialRing:
    """QQ[x, y, z]."""
    return PolynomialRing(("x", "y", "z"))


@pytest.fixture
def rank_one() -> LevelFamily:
    """Pairs of linear forms of rank at most one."""
    return rank_one_family()


@pytest.fixture
def phi0() -> WeightedMap:
    """x^2 g + y^2 f - 2 x y h."""
    return phi_family(0)
