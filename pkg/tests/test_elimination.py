import pytest

from dsolid.axioms import MissingAxiom, default_registry
from dsolid.elimination import (
    base_curve_scan,
    double_curve_degree_ladder,
    run_elimination,
    twistor_line_degree,
    _initial_state,
)


def _scan_names(state):
    return [frozenset(comp) for comp in base_curve_scan(state)]


def test_stage1_scan_n7():
    comps = _scan_names(_initial_state(7))
    expected = set()
    for i in range(3, 6):
        expected.add(frozenset(("C", i, j) for j in range(3, i + 1)))
        expected.add(frozenset(("Cb", i, j) for j in range(3, i + 1)))
    expected.add(frozenset([("C", 6, 1)]))
    expected.add(frozenset([("Cb", 6, 1)]))
    assert set(comps) == expected


def test_stage1_scan_n4_only_isolated_pair():
    comps = _scan_names(_initial_state(4))
    assert set(comps) == {frozenset([("C", 3, 1)]), frozenset([("Cb", 3, 1)])}


def test_stage2_scan_n7():
    trace = run_elimination(7)
    # the second scan (before the stage-3 blowup) consists of the shortened
    # chains plus the isolated seeds
    comps = {frozenset(tuple(c) for c in comp) for comp in
             [[_parse(nm) for nm in comp] for comp in trace.stages[1].components]}
    expected = set()
    for i in range(4, 6):
        expected.add(frozenset(("C", i, j) for j in range(4, i + 1)))
        expected.add(frozenset(("Cb", i, j) for j in range(4, i + 1)))
    expected.add(frozenset([("C", 6, 1)]))
    expected.add(frozenset([("Cb", 6, 1)]))
    assert comps == expected


def _parse(name):
    kind, rest = name.split("[")
    nums = rest.rstrip("]").split(",")
    if len(nums) == 2:
        return (kind, int(nums[0]), int(nums[1]))
    return (kind, int(nums[0]))


def test_stage2_degrees_n6():
    trace = run_elimination(6)
    after = trace.stages[0].degrees_after
    for i in range(4, 5):
        assert after[f"C[{i},3]"] == 1
        assert after[f"C[{i},{i}]"] == -1
    assert after["C[5,1]"] == 4 - 6


@pytest.mark.parametrize("n", range(4, 13))
def test_termination_and_counts(n):
    trace = run_elimination(n)
    assert trace.terminated
    assert len(trace.stages) == n - 3
    counts = trace.component_counts + [0]
    assert all(counts[k] - counts[k + 1] == 2 for k in range(len(counts) - 1))
    assert trace.multiplicity_one
    # blowup tallies: the longest chain family is hit n-4 times, the seeds n-3
    if n >= 6:
        assert trace.blow_counts[f"C[{n-2},{n-2}]"] == n - 4
    assert trace.blow_counts[f"C[{n-1},1]"] == n - 3


@pytest.mark.parametrize("n,stop_stage", [(4, 2), (5, 3)])
def test_small_n_stop_stages(n, stop_stage):
    trace = run_elimination(n)
    assert trace.stages[-1].stage == stop_stage


def test_ladder_components_n8():
    trace = run_elimination(8, default_registry())
    assert trace.ladder.count == 5
    assert trace.ladder.components == tuple(f"D{k}[7,1]" for k in range(2, 7))
    assert trace.ladder.adjacent_sections == 4
    assert trace.ladder_conjugate.count == 5


def test_ladder_requires_type_axiom():
    with pytest.raises(MissingAxiom):
        run_elimination(6, default_registry().stripped())


@pytest.mark.parametrize("n", range(4, 13))
def test_odp_census(n):
    trace = run_elimination(n)
    census = dict(trace.odp_census)
    assert census["initial"] == 2 * (n - 1)
    for stage in range(2, n - 1):
        # oracle: enumerate the stated index ranges for the chain nodes
        want = 0
        for i in range(stage + 2, n - 1):
            for j in range(stage + 1, i):
                want += 1
        assert census[f"stage{stage}"] == 2 * want, (stage, census)
    assert (census.get("stage2", 0) > 0) == (n > 5)
    assert (census.get("stage3", 0) > 0) == (n > 6)


def test_odp_example_n7_stage2():
    # quadruple points at ranges 4 <= i <= 5, 3 <= j <= i-1: three per half
    trace = run_elimination(7)
    census = dict(trace.odp_census)
    pairs = [(i, j) for i in range(4, 6) for j in range(3, i)]
    assert len(pairs) == 3
    assert census["stage2"] == 2 * len(pairs)


def test_twistor_line_degrees():
    d = twistor_line_degree(9, 5)
    assert d.initial == 8 and d.final == 2
    assert d.decrement_stages == (2, 3, 4)
    d = twistor_line_degree(6, 2)
    assert d.initial == 2 and d.decrement_stages == () and d.final == 2


def test_twistor_first_line_flagged_value():
    d = twistor_line_degree(4, 1)
    assert d.initial == 2  # computed from the table
    assert d.formula_value == 0  # the closed form misses the first line
    assert not d.matches_formula
    assert d.final == 2


def test_twistor_line_rejects_end_index():
    with pytest.raises(ValueError):
        twistor_line_degree(6, 5)


def test_decrement_stages_match_machine():
    n = 9
    trace = run_elimination(n)
    for i in range(2, n - 1):
        stages_hit = [
            rec.stage
            for rec in trace.stages
            if f"C[{i},{i}]" in rec.centers
        ]
        assert tuple(stages_hit) == twistor_line_degree(n, i).decrement_stages


@pytest.mark.parametrize("n,want", [(5, 6), (4, 4), (10, 16)])
def test_cone_degree_ladder(n, want):
    assert double_curve_degree_ladder(n) == want


def test_trace_serializes_to_json():
    import json

    trace = run_elimination(6)
    blob = json.dumps(trace.to_json(), sort_keys=True)
    data = json.loads(blob)
    assert data["n"] == 6 and data["terminated"]
    assert data["ladder"]["components"] == ["D2[5,1]", "D3[5,1]", "D4[5,1]"]
    assert [s["stage"] for s in data["stages"]] == [2, 3, 4]


@pytest.mark.parametrize("n", [5, 8, 11])
def test_ladder_degree_sequence(n):
    # the isolated seed's degree climbs by one per stage: (4-n) + (stage-2)
    trace = run_elimination(n)
    seed = f"C[{n-1},1]"
    for rec in trace.stages:
        assert rec.degrees_after[seed] == (4 - n) + (rec.stage - 2)
    assert trace.stages[-1].degrees_after[seed] == 0
