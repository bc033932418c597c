import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from dsolid.poly import MultiPoly
from dsolid.scroll import (
    InstanceError,
    ProbeExcluded,
    QuarticInstance,
    RidgeDegenerate,
    ScrollParam,
    build_instance,
    double_conic_verify,
    double_curve_degree,
    fiber_restrict,
    hankel_generators,
    ideal_member,
    instance_from_json,
    instance_to_json,
    linear_form_from_roots,
    moduli_formulas,
    random_instance,
    smoothness_probe,
    splitting_conic_rank,
)


def _unit(nv, j, c=1):
    e = [0] * nv
    e[j] = 1
    return MultiPoly.from_terms(nv, [(tuple(e), c)])


def test_linear_form_n4():
    f = linear_form_from_roots(4, [(1, 0), (1, 1)])
    # product u1(u1 - u0) = z2 - z1 under the monomial correspondence
    want = _unit(5, 2) - _unit(5, 1)
    assert f == want or f == want.scale(-1)


def test_linear_form_roots_recovered_n5():
    roots = [(1, 1), (1, -1), (1, 2)]
    f = linear_form_from_roots(5, roots)
    comp = ScrollParam(5).compose(f)
    # oracle: composition vanishes exactly at the chosen fiber points
    for p, q in roots:
        val = comp.substitute_monomials(
            3, {0: (Fraction(p), (0, 0, 0)), 1: (Fraction(q), (0, 0, 0)),
                2: (Fraction(1), (1, 0, 0)), 3: (Fraction(1), (0, 1, 0)),
                4: (Fraction(1), (0, 0, 1))},
        )
        assert val.is_zero()
    off = comp.substitute_monomials(
        3, {0: (Fraction(1), (0, 0, 0)), 1: (Fraction(5), (0, 0, 0)),
            2: (Fraction(1), (1, 0, 0)), 3: (Fraction(1), (0, 1, 0)),
            4: (Fraction(1), (0, 0, 1))},
    )
    assert not off.is_zero()


def test_linear_form_rejects_reserved_point():
    with pytest.raises(InstanceError):
        linear_form_from_roots(4, [(0, 1), (1, 1)])


def test_linear_form_rejects_repeats():
    with pytest.raises(InstanceError):
        linear_form_from_roots(4, [(1, 2), (2, 4)])


def test_ideal_member_hankel_identity():
    z0z2 = _unit(5, 0) * _unit(5, 2)
    z1sq = _unit(5, 1) * _unit(5, 1)
    assert ideal_member(z0z2 - z1sq, 4)
    z0zn1 = _unit(5, 0) * _unit(5, 3)
    assert not ideal_member(z0zn1, 4)


def test_ideal_member_n6():
    nv = 7
    p = _unit(nv, 1) * _unit(nv, 3) - _unit(nv, 2) * _unit(nv, 2)
    assert ideal_member(p, 6)


def test_ideal_member_requires_homogeneous():
    nv = 5
    with pytest.raises(InstanceError):
        ideal_member(_unit(nv, 0) + MultiPoly.const(nv, 1), 4)


@pytest.mark.parametrize("n,count", [(4, 1), (5, 3), (7, 10)])
def test_hankel_counts(n, count):
    gens = hankel_generators(n)
    assert len(gens) == count
    assert all(ideal_member(g, n) for g in gens)


def _valid_instance(n, seed=0):
    return random_instance(n, random.Random(seed))


def test_build_instance_shape():
    inst = _valid_instance(4, 1)
    assert inst.big_f.nvars == 5
    assert inst.big_f.is_homogeneous() and inst.big_f.total_degree() == 4


def test_build_instance_rejects_rank3():
    n = 4
    nv = 5
    # full-rank restriction: z2^2 + z3^2 + z4^2
    q = (
        _unit(nv, 2) * _unit(nv, 2)
        + _unit(nv, 3) * _unit(nv, 3)
        + _unit(nv, 4) * _unit(nv, 4)
    )
    with pytest.raises(InstanceError, match="rank 3"):
        build_instance(n, [(1, 0), (1, 1)], q)


def test_build_instance_rejects_double_line():
    n = 4
    nv = 5
    q = _unit(nv, 4) * _unit(nv, 4) + _unit(nv, 0) * _unit(nv, 1)
    with pytest.raises(InstanceError, match="double line"):
        build_instance(n, [(1, 0), (1, 1)], q)


def test_build_instance_rejects_scroll_member():
    n = 5
    nv = 6
    q = _unit(nv, 0) * _unit(nv, 2) - _unit(nv, 1) * _unit(nv, 1)
    with pytest.raises(InstanceError, match="vanishes identically"):
        build_instance(n, [(1, 1), (1, 2), (1, 3)], q)


def test_fiber_restrict_basics():
    n = 5
    nv = 6
    z0 = _unit(nv, 0)
    zl = _unit(nv, n - 2)
    at_inf = (Fraction(0), Fraction(1))
    assert fiber_restrict(z0, n, at_inf).is_zero()
    assert fiber_restrict(zl, n, at_inf) == MultiPoly.from_terms(3, [((1, 0, 0), 1)])


def test_fiber_restrict_quartic_at_root():
    inst = _valid_instance(5, 3)
    lam = inst.roots[0]
    fr = fiber_restrict(inst.big_f, inst.n, lam)
    qr = fiber_restrict(inst.q, inst.n, lam)
    assert fr == (qr * qr).scale(-1)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_double_conic_verify_instances(n):
    rng = random.Random(100 + n)
    for _ in range(10):
        inst = random_instance(n, rng)
        assert double_conic_verify(inst, rng)
        assert splitting_conic_rank(inst) == 2


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10**6), k=st.integers(0, 2))
def test_member_invariance(seed, k):
    # adding an ideal member leaves every fiber restriction unchanged
    n = 5
    inst = _valid_instance(n, seed % 17)
    member = hankel_generators(n)[k]
    lam = inst.roots[0]
    scaled = member * _unit(n + 1, 0) * _unit(n + 1, 1)  # degree-4 member multiple
    assert fiber_restrict(inst.big_f + scaled, n, lam) == fiber_restrict(inst.big_f, n, lam)


@pytest.mark.parametrize("n", [4, 5])
def test_double_curve_degree(n):
    rng = random.Random(7)
    inst = random_instance(n, rng)
    assert double_curve_degree(inst, "n", rng) == 2 * (n - 2)
    assert double_curve_degree(inst, "n+1", rng) == 2 * (n - 2)


def test_double_curve_degree_ridge_flagged():
    n = 4
    nv = 5
    # rank-2 splitting but Q vanishes on the ridge z0=..=z_{n-2}=0
    q = _unit(nv, 2) * (_unit(nv, 3) + _unit(nv, 4)) + _unit(nv, 0) * _unit(nv, 1)
    inst = build_instance(n, [(1, 0), (1, 1)], q)
    with pytest.raises(RidgeDegenerate):
        double_curve_degree(inst, "n", random.Random(0))


@pytest.mark.parametrize("n", [4, 6])
def test_smoothness_probe_generic(n):
    rng = random.Random(55)
    inst = random_instance(n, rng)
    for r in range(n - 2):
        assert smoothness_probe(inst, r, samples=8, rng=rng)


def test_smoothness_probe_detects_double_root():
    # assemble an instance with a doubled root by hand (the constructor
    # rejects it, so the probe must see the degeneracy)
    n = 5
    nv = 6
    lam = (Fraction(1), Fraction(2))
    double_factor = MultiPoly.from_terms(2, [((0, 1), lam[0]), ((1, 0), -lam[1])])
    form = double_factor * double_factor * MultiPoly.from_terms(2, [((0, 1), 1), ((1, 0), -1)])
    coeffs = {exp[1]: c for exp, c in form.terms.items()}
    f = MultiPoly.from_terms(nv, [(tuple(1 if t == j else 0 for t in range(nv)), c) for j, c in coeffs.items()])
    good = random_instance(n, random.Random(9))
    z0zn1zn = _unit(nv, 0) * _unit(nv, n - 1) * _unit(nv, n)
    bad = QuarticInstance(
        n=n,
        roots=(lam, lam, (Fraction(1), Fraction(1))),
        f=f,
        q=good.q,
        big_f=z0zn1zn * f - good.q * good.q,
    )
    assert smoothness_probe(bad, 0, samples=4, rng=random.Random(3)) is False


def test_smoothness_probe_excludes_splitting_fiber():
    inst = _valid_instance(4, 11)
    with pytest.raises(ProbeExcluded):
        smoothness_probe(inst, 5, rng=random.Random(0))
    bad = QuarticInstance(
        n=inst.n,
        roots=((Fraction(0), Fraction(1)),) + inst.roots[1:],
        f=inst.f,
        q=inst.q,
        big_f=inst.big_f,
    )
    with pytest.raises(ProbeExcluded):
        smoothness_probe(bad, 0, rng=random.Random(0))


def test_instance_roundtrip_identical():
    inst = _valid_instance(6, 21)
    blob = instance_to_json(inst)
    again = instance_from_json(blob)
    assert again == inst
    assert instance_to_json(again) == blob


def test_moduli_formulas():
    r = moduli_formulas(6, 4)
    assert r.h1_tangent_threefold == 27
    assert r.moduli_dim == 9
    assert r.consistent
    assert moduli_formulas(7, 5).stratum_dim == 9
    assert moduli_formulas(5, 5).stratum_dim == 4


@pytest.mark.parametrize("n", range(4, 33))
def test_moduli_consistency_sweep(n):
    for k in range(2, n + 1):
        assert moduli_formulas(n, k).consistent


def test_moduli_k_range():
    with pytest.raises(ValueError):
        moduli_formulas(6, 1)
    with pytest.raises(ValueError):
        moduli_formulas(6, 7)
