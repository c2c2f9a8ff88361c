import random

import pytest

from valpoincare import (
    AmbientSpace,
    Box,
    InfiniteDimensionError,
    Instance,
    NonStabilizedError,
    PreconditionError,
    ValidationError,
    ValuationSet,
    ambient_profile,
    ambient_series,
    coeff_description1,
    coeff_description2,
    coeff_description3,
    coeff_description4,
    coeff_homological,
    cross_check,
    embedded_series,
    enumerate_fiber,
    equal_on_box,
    mul_one_minus_monomial,
)
from valpoincare.poincare import applicability, embedded_coefficient

import oracles
from conftest import poly

C2 = AmbientSpace.affine(2)
X_PLUS_Y = poly((1, (1, 0)), (1, (0, 1)))


def inst(ws, h=None, amb=C2):
    return Instance(amb, ValuationSet(ws), h)


def test_description1(centered, coords):
    assert coeff_description1(centered, (2, 3)) == 1
    assert coeff_description1(centered, (0, 0)) == 1
    with pytest.raises(InfiniteDimensionError) as info:
        coeff_description1(coords, (1, 1))
    assert info.value.subset == ()
    assert info.value.v == (1, 1)


def test_description1_by_brute_force(centered):
    # sum over I of (-1)^|I| dim M(v+e_I)/M(v+1), dims counted by scanning monomials
    ws = centered.valuations.weights()
    for v in [(2, 3), (3, 4), (1, 5), (4, 4)]:
        top = (v[0] + 1, v[1] + 1)
        total = 0
        for I in [(), (0,), (1,)]:
            lower = tuple(x + (j in I) for j, x in enumerate(v))
            total += (-1) ** len(I) * len(oracles.quotient_basis(ws, lower, top, 2))
        assert coeff_description1(centered, v) == total == len(oracles.fiber(ws, v, 2))


def test_description2(centered):
    only_last = inst([(1, 0), (1, 1)])
    assert coeff_description2(only_last, (1, 1)) == 1
    assert coeff_description2(centered, (2, 3)) == 1
    assert coeff_description2(only_last, (-1, 0)) == coeff_homological(only_last, (-1, 0))
    with pytest.raises(PreconditionError):
        coeff_description2(inst([(1, 1), (1, 0)]), (0, 0))


def test_description3(coords, centered):
    assert all(coeff_description3(coords, (a, b)) == 1 for a in range(4) for b in range(4))
    assert coeff_description3(coords, (-1, 2)) == 0
    assert coeff_description3(coords, (3, -2)) == 0
    assert coeff_description3(centered, (2, 3)) == 1
    with pytest.raises(PreconditionError):
        coeff_description3(inst([(1, 1)]), (0,))


def test_description4(coords):
    assert coeff_description4(coords, (2, 1)) == 1
    assert coeff_description4(coords, (-1, 1)) == 0
    assert coeff_description4(inst([(1, 1), (1, 2)]), (3, 4)) == 1
    with pytest.raises(InfiniteDimensionError):
        coeff_description4(inst([(1, 0), (2, 0)]), (1, 2))


def test_homological(coords, centered):
    for v in Box.cube(-2, 3, 2).points():
        assert coeff_homological(coords, v) == int(min(v) >= 0)
    assert coeff_homological(centered, (2, 3)) == coeff_homological(centered, (2, 3), "rank") == 1
    assert coeff_homological(centered, (-1, 4)) == 0


def test_rank_path_profile(coords):
    prof = ambient_profile(coords, (2, 1))
    assert prof.h == (1, 0, 0)
    assert ambient_profile(coords, (-1, 1)).h == (0, 0, 0)


def test_ambient_series():
    s = ambient_series(inst([(1, 1), (0, 1)]), Box.cube(0, 4, 2))
    assert all(s[v] == int(0 <= v[1] <= v[0]) for v in s.box.points())
    single = ambient_series(inst([(1, 1), (0, 1)]), Box((2, 1), (2, 1)))
    assert single.to_records() == [{"v": [2, 1], "c": 1}]


def test_embedded_product_formula_diagonal():
    i = inst([(1, 1), (0, 1)], X_PLUS_Y)
    s = embedded_series(i, Box.cube(0, 3, 2), "product")
    assert s.support() == [(k, k) for k in range(4)]
    assert all(s[(k, k)] == 1 for k in range(4))
    assert equal_on_box(s, embedded_series(i, Box.cube(0, 3, 2), "oracle")) == []


def test_embedded_coordinate_valuations_vanish(coords):
    i = inst([(1, 0), (0, 1)], X_PLUS_Y)
    box = Box.cube(-1, 3, 2)
    assert embedded_series(i, box, "product").coeffs == {}
    assert embedded_series(i, box, "oracle").coeffs == {}


def test_embedded_monomial_h():
    i = inst([(1, 1), (1, 2)], poly((1, (1, 1))))
    box = Box.cube(0, 5, 2)
    q = (2, 3)
    wide = ambient_series(i, Box.cube(-3, 5, 2))
    expected = mul_one_minus_monomial(wide, q).restrict(box)
    assert equal_on_box(embedded_series(i, box, "product"), expected) == []
    assert equal_on_box(embedded_series(i, box, "oracle"), expected) == []


@pytest.mark.parametrize(
    "ws, terms, box",
    [
        ([(1, 1), (1, 2)], [(1, (1, 0)), (1, (0, 2))], Box.cube(0, 4, 2)),
        ([(1, 0), (0, 1), (3, 2)], [(1, (2, 0)), (1, (0, 3))], Box((0, 0, 0), (2, 2, 7))),
        ([(2, 1), (0, 1)], [(1, (1, 0)), (-1, (0, 1)), (3, (1, 1))], Box.cube(0, 4, 2)),
        ([(1, 0), (1, 1)], [(1, (2, 0)), (2, (1, 1)), (1, (0, 2))], Box.cube(0, 4, 2)),
    ],
)
def test_product_formula_modes_agree(ws, terms, box):
    i = inst(ws, poly(*terms))
    assert equal_on_box(embedded_series(i, box, "product"), embedded_series(i, box, "oracle")) == []


def test_embedded_needs_h(centered):
    with pytest.raises(ValidationError):
        embedded_series(centered, Box.cube(0, 1, 2))


def test_embedded_non_stabilization_reports_v():
    i = inst([(1, 0), (0, 1)], X_PLUS_Y)
    with pytest.raises(NonStabilizedError) as info:
        embedded_coefficient(i, (4, 4), schedule=(0, 1))
    assert info.value.v == (4, 4)
    assert info.value.trace == [(0, (1, 0, 0)), (1, (1, 1, 0))]


def test_embedded_window_follows_v():
    # bounds are measured above the lowest degree of M(v), so traces agree for every v
    i = inst([(1, 0), (0, 1)], X_PLUS_Y)
    for v in [(0, 0), (3, 3), (4, 4), (6, 2)]:
        assert embedded_coefficient(i, v, (6, 8, 10), return_trace=True) == (0, [(6, (1, 1, 0)), (8, (1, 1, 0))])


def test_instance_validation():
    with pytest.raises(ValidationError):
        inst([(1, 0, 0)])
    with pytest.raises(ValidationError):
        inst([(1, 1)], poly((1, (1, 0, 0))))
    with pytest.raises(ValidationError):
        Instance(AmbientSpace.semigroup([(2, 0), (0, 2)]), ValuationSet([(1, 1)]), poly((1, (1, 0))))


def test_cross_check_all_centered(centered):
    report = cross_check(centered, Box.cube(0, 4, 2), rank_path=True)
    assert all(report.applicable.values())
    assert report.ok
    assert report.table[(2, 3)] == dict.fromkeys(report.table[(2, 3)], 1)


def test_cross_check_coordinate_valuations(coords):
    report = cross_check(coords, Box.cube(-2, 3, 2))
    assert report.applicable == {
        "description1": False,
        "description2": False,
        "description3": True,
        "description4": True,
        "homological": True,
    }
    assert report.ok


def test_cross_check_only_last_centered():
    report = cross_check(inst([(1, 0), (1, 1)]), Box.cube(0, 3, 2))
    assert not report.applicable["description1"]
    assert all(report.applicable[k] for k in ["description2", "description3", "description4", "homological"])
    assert report.ok


def test_cross_check_fault_injection(centered):
    report = cross_check(centered, Box.cube(0, 2, 2), fault=("description2", (1, 1), 1))
    assert not report.ok
    assert [v for v, _ in report.disagreements] == [(1, 1)]


def test_semigroup_instance():
    cone = AmbientSpace.semigroup([(1, 0), (1, 1), (1, 2)])
    i = Instance(cone, ValuationSet([(0, 1), (1, 0)]))
    report = cross_check(i, Box.cube(0, 3, 2), rank_path=True)
    assert report.applicable["description2"] and not report.applicable["description1"]
    assert report.ok
    # the fiber over (b, a) is the single point (a, b) of the cone when b <= 2a
    assert all(report.table[v]["homological"] == int(v[0] <= 2 * v[1]) for v in report.table)


def random_weights(rng, d, r, lo_last=1, lo_other=0):
    return [tuple(rng.randint(lo_other if j < r - 1 else lo_last, 3) for _ in range(d)) for j in range(r)]


def test_all_centered_definitions_agree_under_rotation():
    rng = random.Random(5)
    for _ in range(10):
        d, r = rng.choice([2, 3]), rng.choice([2, 3])
        ws = random_weights(rng, d, r, 1, 1)
        i = inst(ws, amb=AmbientSpace.affine(d))
        rot = inst(ws[1:] + ws[:1], amb=AmbientSpace.affine(d))
        for v in Box.cube(-1, 3, r).points():
            vr = v[1:] + v[:1]
            c = coeff_homological(i, v)
            assert coeff_description1(i, v) == coeff_description2(i, v) == coeff_description2(rot, vr) == c


def test_support_is_nonnegative():
    rng = random.Random(9)
    for _ in range(10):
        ws = random_weights(rng, 2, 2, 0, 0)
        i = inst(ws)
        if not applicability(i)[0]["homological"]:
            continue
        for v in Box.cube(-2, 3, 2).points():
            if min(v) < 0:
                assert coeff_homological(i, v) == 0


def test_monomial_identity_rank_path():
    rng = random.Random(21)
    for _ in range(15):
        ws = random_weights(rng, 2, rng.choice([2, 3]), 0, 0)
        i = inst(ws)
        if not applicability(i)[0]["homological"]:
            continue
        for v in Box.cube(-1, 3, len(ws)).points():
            prof = ambient_profile(i, v)
            assert prof.h[0] == len(enumerate_fiber(C2, i.valuations, v)) == coeff_description4(i, v)
            assert not any(prof.h[1:])
