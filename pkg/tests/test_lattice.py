import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from dsolid.lattice import (
    DivisorClass,
    LatticeBasis,
    LatticeError,
    anticanonical_cycle_check,
    build_surface,
    exceptional_chain_relations,
    intersect,
    new_quadric_lattice,
    self_intersection_profile,
)


def test_quadric_lattice_form():
    basis = new_quadric_lattice()
    assert basis.form == ((0, 1), (1, 0))
    h1, h2 = basis.unit("H1"), basis.unit("H2")
    assert h1.dot(h1) == 0
    assert (h1 + h2).dot(h1 + h2) == 2


@pytest.mark.parametrize("n", range(4, 17))
def test_profile(n):
    tower = build_surface(n)
    assert self_intersection_profile(tower) == [1 - n] + [-2] * (n - 3) + [-1]
    assert tower.canonical.dot(tower.canonical) == 8 - 2 * n
    assert len(tower.steps) == 2 * n


@pytest.mark.parametrize("n", range(4, 17))
def test_cycle_adjacency_matrix(n):
    # oracle: expand every pair from the tracked classes and compare against
    # the cyclic adjacency pattern
    tower = build_surface(n)
    names = tower.cycle_names()
    m = len(names)
    for a in range(m):
        for b in range(m):
            d = tower.tracked[names[a]].dot(tower.tracked[names[b]])
            if a == b:
                continue
            expected = 1 if (abs(a - b) == 1 or abs(a - b) == m - 1) else 0
            assert d == expected, (names[a], names[b])


@pytest.mark.parametrize("n", [4, 5, 6, 9])
def test_anticanonical_cycle(n):
    tower = build_surface(n)
    assert anticanonical_cycle_check(tower)


def test_perturbed_cycle_fails():
    tower = build_surface(5)
    total = tower.basis.zero()
    for nm in tower.cycle_names():
        if nm != "Cb2":
            total = total + tower.tracked[nm]
    assert total != -tower.canonical


@pytest.mark.parametrize("n", range(4, 17))
def test_unimodular_every_stage(n):
    tower = build_surface(n)
    assert all(abs(d) == 1 for d in tower.stage_determinants())


def test_exceptional_relations_n5():
    tower = build_surface(5)
    b = tower.basis
    # e4 equals the sum of the last two barred chain components
    assert tower.tracked["Cb3"] + tower.tracked["Cb4"] == b.unit("e4")
    assert tower.tracked["Cb4"] == b.unit("e5")
    assert tower.tracked["C4"] == b.unit("eb5")


@pytest.mark.parametrize("n", range(4, 13))
def test_exceptional_relations(n):
    assert exceptional_chain_relations(build_surface(n))


@pytest.mark.parametrize("n", [4, 5, 8, 11])
def test_adjacent_components_pair_to_one(n):
    tower = build_surface(n)
    assert intersect(tower.tracked["C1"], tower.tracked["C2"]) == 1


def test_intersection_examples():
    tower = build_surface(6)
    c1 = tower.tracked["C1"]
    assert intersect(c1, c1) == -5
    assert intersect(tower.basis.zero(), c1) == 0


def test_basis_mismatch_rejected():
    t4, t5 = build_surface(4), build_surface(5)
    with pytest.raises(LatticeError):
        intersect(t4.tracked["C1"], t5.tracked["C1"])


def test_small_n_rejected():
    with pytest.raises(LatticeError):
        build_surface(3)


def test_serialization_keys():
    tower = build_surface(4)
    js = tower.tracked["C1"].to_json()
    assert set(js) == set(tower.basis.names)
    assert js["H1"] == 1 and js["e1"] == -1


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_pairing_bilinear_symmetric(data):
    tower = build_surface(5)
    rank = tower.basis.rank
    vec = st.lists(st.integers(-4, 4), min_size=rank, max_size=rank)
    a = DivisorClass(tower.basis, tuple(data.draw(vec)))
    b = DivisorClass(tower.basis, tuple(data.draw(vec)))
    c = DivisorClass(tower.basis, tuple(data.draw(vec)))
    assert a.dot(b) == b.dot(a)
    assert (a + b).dot(c) == a.dot(c) + b.dot(c)


def test_form_must_be_symmetric():
    with pytest.raises(LatticeError):
        LatticeBasis(("x", "y"), ((0, 1), (0, 0)))
