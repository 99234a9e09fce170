import pytest

from agkey.involution import (
    FMonomial, OClass, classify, companion_rectangle, f_statistic, orbit_check,
    orbit_trace, psi,
)
from agkey.partitions import Overpartition, enumerate_O_all, parse_overpartition
from agkey.qseries import ONE, ZERO

op = parse_overpartition


@pytest.mark.parametrize("text,cls", [
    ("4',3',2", OClass.O1),
    ("3',2", OClass.O2),
    ("0,0,0,0,0,0", OClass.O3_FIXED),
    ("2,2", OClass.O3_MOVABLE),
    ("-", OClass.O3_MOVABLE),
])
def test_classify_examples(text, cls):
    assert classify(op(text), 9, 6) is cls


def test_empty_partition_is_fixed_when_j_is_zero():
    assert classify(Overpartition(), 5, 0) is OClass.O3_FIXED
    assert psi(Overpartition(), 5, 0) == Overpartition()


@pytest.mark.parametrize("text", ["5,0,0", "0,0,0,0,0,0,0", "6"])
def test_classify_rejects_non_members(text):
    with pytest.raises(ValueError):
        classify(op(text), 9, 6)


@pytest.mark.parametrize("text,image", [
    ("4',3',2", "3',2"),
    ("3',2", "4',3',2"),
    ("2,2", "3',2,2"),
    ("0,0,0,0,0,0", "0,0,0,0,0,0"),
])
def test_psi_examples(text, image):
    assert str(psi(op(text), 9, 6)) == image


def test_psi_output_of_movable_is_in_O1():
    assert classify(psi(op("2,2"), 9, 6), 9, 6) is OClass.O1


def test_psi_places_overline_before_equal_plain_parts():
    # O3_movable with len 3, j = 6: inserts 2' ahead of the plain 2s
    assert str(psi(op("2,2,1"), 9, 6)) == "2',2,2,1"


def test_f_examples():
    assert f_statistic(op("4',3',2"), 9, 6) == FMonomial(1, 41)
    assert f_statistic(op("3',2"), 9, 6) == FMonomial(-1, 41)
    assert f_statistic(op("0,0,0,0,0,0"), 9, 6) == FMonomial(1, 0)
    assert str(FMonomial(-1, 41)) == "-q^41"
    assert FMonomial(1, 41).as_poly() + FMonomial(-1, 41).as_poly() == ZERO


def test_companion_rectangles_of_the_worked_example():
    lam = op("4',3',2")
    assert companion_rectangle(lam, 9, 6) == (6, 6, 6)
    assert companion_rectangle(psi(lam, 9, 6), 9, 6) == (7, 7, 7, 7)


def test_orbit_check_nine_six():
    rep = orbit_check(9, 6)
    assert rep.passed
    assert rep.counts["members"] == 729
    assert rep.counts["fixed_points"] == 1
    assert rep.counts["O1"] == rep.counts["O2"] + rep.counts["O3_movable"]


def test_orbit_check_trivial_and_small():
    assert orbit_check(5, 0).passed
    assert orbit_check(5, 0).counts["members"] == 1
    rep = orbit_check(2, 2)
    assert rep.passed and rep.counts["members"] == 9


def test_orbit_trace_two_two():
    rows = {r["lambda"]: r for r in orbit_trace(2, 2)}
    assert len(rows) == 9
    assert rows["0,0"]["psi"] == "0,0" and rows["0,0"]["class"] == "O3_fixed"
    assert rows["-"]["psi"] == "1'"
    for r in rows.values():
        back = rows[r["psi"]]
        assert back["psi"] == r["lambda"]
        if r["psi"] != r["lambda"]:
            assert (back["f_sign"], back["f_exponent"]) == (-r["f_sign"], r["f_exponent"])


@pytest.mark.parametrize("i", range(0, 8))
def test_involution_properties_directly(i):
    # restated without orbit_check so the two do not share a code path
    for j in range(i + 1):
        members = [o for _, o in enumerate_O_all(i, j)]
        fixed = []
        total = ZERO
        for lam in members:
            mu = psi(lam, i, j)
            assert psi(mu, i, j) == lam
            f = f_statistic(lam, i, j)
            total = total + f.as_poly()
            if mu == lam:
                fixed.append(lam)
                continue
            assert f_statistic(mu, i, j) == -f
            assert abs(len(mu) - len(lam)) == 1 and abs(mu.ol - lam.ol) == 1
            assert (classify(lam, i, j) is OClass.O1) != (classify(mu, i, j) is OClass.O1)
            if lam.ol:
                assert lam.largest_overlined <= j - len(lam) + lam.ol - 1
        assert fixed == [Overpartition.plain((0,) * j)]
        assert total == ONE
