from itertools import combinations

import pytest

from garside_growth.moebius import moebius_polynomial
from garside_growth.presentations import (
    ClassificationError,
    CoxeterDiagram,
    Family,
    MonoidSpec,
    SpecError,
    build_presentation,
    classify_component,
    coxeter_diagram,
    lcm_length,
    parse_spec,
)


@pytest.mark.parametrize("text, expected", [
    ("A5", MonoidSpec(Family.A, 5)),
    ("b3", MonoidSpec(Family.B, 3)),
    ("D4", MonoidSpec(Family.D, 4)),
    ("e7", MonoidSpec(Family.E7, 7)),
    ("F4", MonoidSpec(Family.F4, 4)),
    ("H3", MonoidSpec(Family.H3, 3)),
    ("I2(7)", MonoidSpec(Family.I2, 2, 7)),
    (" i2 ( 2 ) ", MonoidSpec(Family.I2, 2, 2)),
])
def test_parse_spec(text, expected):
    assert parse_spec(text) == expected


@pytest.mark.parametrize("text", ["Z9", "A0", "D1", "E5", "F3", "I2", "I3(4)", "A3(2)", "", "AA"])
def test_parse_spec_rejects(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_spec_str_round_trip():
    for text in ["A5", "B3", "D4", "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)"]:
        assert str(parse_spec(text)) == text


def test_fixed_rank_enforced():
    with pytest.raises(SpecError):
        MonoidSpec(Family.E6, 7)
    with pytest.raises(SpecError):
        MonoidSpec(Family.I2, 2, 1)
    with pytest.raises(SpecError):
        MonoidSpec(Family.A, 3, 4)


def test_presentation_a2():
    pres = build_presentation(parse_spec("A2"))
    assert pres.relations == (((1, 2, 1), (2, 1, 2)),)


def test_presentation_i2_2_commutes():
    pres = build_presentation(parse_spec("I2(2)"))
    assert pres.relations == (((1, 2), (2, 1)),)


def test_presentation_d4():
    pres = build_presentation(parse_spec("D4"))
    braids = {(lhs[0], lhs[1]) for lhs, _ in pres.relations if len(lhs) == 3}
    commutes = {(lhs[0], lhs[1]) for lhs, _ in pres.relations if len(lhs) == 2}
    assert braids == {(1, 2), (2, 3), (2, 4)}
    assert commutes == {(1, 3), (1, 4), (3, 4)}


def test_presentation_b_last_relation():
    pres = build_presentation(parse_spec("B3"))
    assert ((2, 3, 2, 3), (3, 2, 3, 2)) in pres.relations


def test_presentation_homogeneous():
    for text in ["A6", "B5", "D6", "E8", "F4", "H4", "I2(9)"]:
        for lhs, rhs in build_presentation(parse_spec(text)).relations:
            assert len(lhs) == len(rhs)
            assert set(lhs) == set(rhs)


def test_diagram_is_symmetric():
    d = coxeter_diagram(parse_spec("F4"))
    for i, j in combinations(range(1, 5), 2):
        assert d.label(i, j) == d.label(j, i)
    assert d.label(2, 3) == 4
    assert d.label(1, 4) == 2


@pytest.mark.parametrize("spec, subset, length", [
    ("A5", {1, 2, 3, 4, 5}, 15),
    ("B3", {2, 3}, 4),
    ("D4", {3, 4}, 2),
    ("A3", set(), 0),
    ("E8", {5}, 1),
    ("D4", {1, 2, 3, 4}, 12),
    ("E6", set(range(1, 7)), 36),
    ("E7", set(range(1, 8)), 63),
    ("E8", set(range(1, 9)), 120),
    ("F4", {1, 2, 3, 4}, 24),
    ("H3", {1, 2, 3}, 15),
    ("H4", {1, 2, 3, 4}, 60),
    ("I2(7)", {1, 2}, 7),
])
def test_lcm_length_examples(spec, subset, length):
    assert lcm_length(parse_spec(spec), subset).lcm_length == length


def test_lcm_length_components():
    info = lcm_length(parse_spec("E8"), {1, 3, 5, 6, 7, 8})
    assert info.components == (("A", 4, None), ("A", 2, None))
    assert info.lcm_length == 10 + 3


def test_lcm_length_bad_atom():
    with pytest.raises(SpecError):
        lcm_length(parse_spec("A3"), {4})


@pytest.mark.parametrize("n", range(1, 9))
def test_runs_in_a_and_b(n):
    for fam in (Family.A, Family.B):
        spec = MonoidSpec(fam, n)
        for i in range(1, n + 1):
            for j in range(i, n):
                assert lcm_length(spec, range(i, j + 1)).lcm_length == (j - i + 2) * (j - i + 1) // 2


@pytest.mark.parametrize("n", range(1, 9))
def test_runs_ending_at_last_atom_in_b(n):
    spec = MonoidSpec(Family.B, n)
    for i in range(1, n + 1):
        assert lcm_length(spec, range(i, n + 1)).lcm_length == (n - i + 1) ** 2


@pytest.mark.parametrize("n", range(2, 9))
def test_runs_ending_at_last_atom_in_d(n):
    spec = MonoidSpec(Family.D, n)
    for i in range(1, n):
        assert lcm_length(spec, range(i, n + 1)).lcm_length == (n - i + 1) * (n - i)


@pytest.mark.parametrize("text", ["A5", "B4", "D5", "E6", "F4", "H4"])
def test_lcm_length_monotone(text):
    spec = parse_spec(text)
    atoms = list(spec.atoms)
    lengths = {}
    for r in range(len(atoms) + 1):
        for s in combinations(atoms, r):
            lengths[frozenset(s)] = lcm_length(spec, s).lcm_length
    for s, v in lengths.items():
        for a in atoms:
            if a not in s:
                assert lengths[s | {a}] >= v


@pytest.mark.parametrize("text", ["A7", "B6", "D6", "E6", "E7", "E8", "F4", "H3", "H4", "I2(11)"])
def test_full_lcm_length_is_moebius_degree(text):
    spec = parse_spec(text)
    assert lcm_length(spec, spec.atoms).lcm_length == moebius_polynomial(spec).degree


def test_classify_rejects_affine_shape():
    # a triangle of 3-labels is affine A~2, not spherical
    tri = CoxeterDiagram(3, (((1, 2), 3), ((1, 3), 3), ((2, 3), 3)))
    with pytest.raises(ClassificationError):
        classify_component([1, 2, 3], tri)
    # a path with two 4-labels is affine C~2
    c2 = CoxeterDiagram(3, (((1, 2), 4), ((2, 3), 4)))
    with pytest.raises(ClassificationError):
        classify_component([1, 2, 3], c2)
