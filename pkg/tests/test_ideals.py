"""Tests for elimination, saturation, dimension and ideal files."""

import json

import pytest

from glvar.polyalg import (
    Ideal,
    IdealFormatError,
    PolynomialRing,
    RingMismatchError,
    dump_ideal,
    eliminate,
    ideal_contains,
    ideal_dimension,
    ideal_from_dict,
    ideals_equal,
    is_inconsistent,
    load_ideal,
    saturate,
)


def test_ideal_drops_zero_and_duplicates(xy_ring):
    """Test generator clean-up."""
    ideal = Ideal.from_strings(xy_ring, ["x*y", "0", "y*x"])
    assert len(ideal) == 1
    assert Ideal.zero(xy_ring).is_zero


def test_eliminate_twisted_cubic(xyz_ring):
    """Test the implicit equation of a parametrized curve."""
    ideal = Ideal.from_strings(xyz_ring, ["y - x^2", "z - x^3"])
    result = eliminate(ideal, ["x"])
    assert result.ring.variables == ("y", "z")
    assert [str(g) for g in result] == ["y^3 - z^2"]


def test_eliminate_nothing(xy_ring):
    """Test that eliminating no variables returns the ideal."""
    ideal = Ideal.from_strings(xy_ring, ["x - y"])
    assert eliminate(ideal, []) is ideal


def test_eliminate_image_of_rank_one_map():
    """Test that the image of (a, b) -> (a, a*b, b) is the surface y = x*z."""
    ring = PolynomialRing(("a", "b", "x", "y", "z"))
    ideal = Ideal.from_strings(ring, ["x - a", "y - a*b", "z - b"])
    assert [str(g) for g in eliminate(ideal, ["a", "b"])] == ["x*z - y"]


def test_saturate_removes_component(xy_ring):
    """Test (xy : x^∞) = (y)."""
    ideal = Ideal.from_strings(xy_ring, ["x*y"])
    assert [str(g) for g in saturate(ideal, xy_ring.gen("x"))] == ["y"]


def test_saturate_is_idempotent(xyz_ring):
    """Test that saturating twice changes nothing."""
    ideal = Ideal.from_strings(xyz_ring, ["x*y^2", "x*z", "y^3*z"])
    h = xyz_ring.gen("y")
    once = saturate(ideal, h)
    assert ideals_equal(saturate(once, h), once)
    assert ideal_contains(once, ideal)


def test_saturate_by_unit(xy_ring):
    """Test that saturating by a constant changes nothing."""
    ideal = Ideal.from_strings(xy_ring, ["x^2", "x*y"])
    assert ideals_equal(saturate(ideal, xy_ring.one()), ideal)


def test_saturate_rejects_zero_and_foreign(xy_ring, xyz_ring):
    """Test argument validation for saturation."""
    ideal = Ideal.from_strings(xy_ring, ["x"])
    with pytest.raises(ValueError):
        saturate(ideal, xy_ring.zero())
    with pytest.raises(RingMismatchError):
        saturate(ideal, xyz_ring.gen("z"))


def test_saturate_avoids_name_clash():
    """Test saturation in a ring that already has a variable t."""
    ring = PolynomialRing(("t", "x"))
    ideal = Ideal.from_strings(ring, ["t*x"])
    assert [str(g) for g in saturate(ideal, ring.gen("x"))] == ["t"]


@pytest.mark.parametrize(
    "variables,gens,expected",
    [
        (("x", "y"), ["x*y"], 1),
        (("x", "y", "z"), [], 3),
        (("x", "y"), ["x", "y"], 0),
        (("x", "y"), ["x", "x - 1"], -1),
        (("a", "b", "c", "d"), ["a*d - b*c", "a*c - b^2", "b*d - c^2"], 2),
        (("x", "y", "z"), ["x*y", "x*z"], 2),
    ],
)
def test_ideal_dimension(variables, gens, expected):
    """Test Krull dimensions of small varieties."""
    assert ideal_dimension(Ideal.from_strings(variables, gens)) == expected


def test_is_inconsistent(xy_ring):
    """Test detection of empty varieties over the algebraic closure."""
    assert is_inconsistent(Ideal.from_strings(xy_ring, ["x*y - 1", "x"]))
    assert not is_inconsistent(Ideal.from_strings(xy_ring, ["x^2 + 1"]))


def test_containment_and_equality(xy_ring):
    """Test comparisons between ideals."""
    big = Ideal.from_strings(xy_ring, ["x", "y"])
    small = Ideal.from_strings(xy_ring, ["x^2", "x*y + y^2"])
    assert ideal_contains(big, small)
    assert not ideal_contains(small, big)
    assert ideals_equal(big, Ideal.from_strings(xy_ring, ["x + y", "x - y"]))


def test_comparison_ring_mismatch(xy_ring, xyz_ring):
    """Test that ideals of different rings cannot be compared."""
    with pytest.raises(RingMismatchError):
        ideals_equal(Ideal.zero(xy_ring), Ideal.zero(xyz_ring))


def test_load_shipped_ideal(data_dir):
    """Test loading the level-2 shifted rank-one ideal."""
    ideal = load_ideal(data_dir / "ideals" / "shift_rank1_level2.json")
    assert ideal.ring.variables == ("x_1", "x_2", "y_1", "y_2", "xs_1", "ys_1")
    assert len(ideal) == 3


def test_ideal_dict_round_trip():
    """Test that a dumped ideal loads back unchanged."""
    ring = PolynomialRing(("x", "f"), (1, 2))
    ideal = Ideal.from_strings(ring, ["x^2 - f", "1/2*f^2"])
    assert ideal_from_dict(dump_ideal(ideal)) == ideal


def test_ideal_format_errors(tmp_path):
    """Test that malformed files raise IdealFormatError."""
    missing = tmp_path / "missing.json"
    with pytest.raises(IdealFormatError):
        load_ideal(missing)
    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{", encoding="utf-8")
    with pytest.raises(IdealFormatError):
        load_ideal(bad_json)
    bad_poly = tmp_path / "poly.json"
    bad_poly.write_text(json.dumps({"vars": ["x"], "gens": ["x +"]}), encoding="utf-8")
    with pytest.raises(IdealFormatError) as excinfo:
        load_ideal(bad_poly)
    assert "Original error" in str(excinfo.value)
    with pytest.raises(IdealFormatError):
        ideal_from_dict(["x"])
    with pytest.raises(IdealFormatError):
        ideal_from_dict({"gens": []})
