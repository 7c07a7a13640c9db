import random

import pytest

from hyperqec.detection import (
    LinearSystem,
    build_detection_system,
    build_homomorphism,
    detection_radius,
    enumerate_detected,
    is_detected,
    kernel_mod_d,
)
from hyperqec.hypergraph import GraphError, Hypergraph, RING_CONFIGURATIONS, relabel

from helpers import (
    brute_force_detected,
    brute_force_solutions,
    generated_subgroup,
    random_graph,
)

TWO_VERTEX = Hypergraph((0,), (1,), ((0, 1),))


def test_homomorphism_rows(ring):
    h = build_homomorphism(ring, (0, 1, 2, 3, 4), (5, 10), 2)
    assert h.support(5) == (0, 1, 2, 3, 4)
    assert h.support(10) == (0,)
    empty = build_homomorphism(ring, (), (1, 2), 2)
    assert empty.matrix.shape == (2, 0)
    with pytest.raises(GraphError):
        build_homomorphism(ring, (0, 99), (1,), 2)


def test_detection_system_alternating(ring):
    s = build_detection_system(ring, {1, 3, 5, 7}, 2)
    assert s.columns == (0, 1, 3, 5, 7)
    assert [r for r, _ in s.rows] == [2, 4, 6, 8, 9, 10, 11, 12, 13, 14, 15]
    assert s.support(2) == (0, 1, 3, 5)
    assert s.support(10) == (0, 7)


def test_detection_system_edge_cases(ring):
    s = build_detection_system(ring, set(), 2)
    assert s.columns == (0,)
    assert [r for r, _ in s.rows] == list(range(1, 16))
    assert build_detection_system(ring, {2, 5, 8, 11}, 2).support(1) == (0, 2, 5)
    with pytest.raises(GraphError):
        build_detection_system(ring, {0}, 2)


def test_kernel_examples():
    k = kernel_mod_d(LinearSystem.from_matrix([[2]], 4))
    assert generated_subgroup([g.values for g in k.generators], 1, 4) == {0, 2}
    k = kernel_mod_d(LinearSystem.from_matrix([[1, 1]], 2))
    assert [g.values for g in k.generators] == [(1, 1)]


def test_kernel_of_all_in_one_edge_system(ring):
    s = build_detection_system(ring, {1, 2, 3, 4}, 2)
    k = kernel_mod_d(s)
    expected = brute_force_solutions(s.matrix, 2)
    # d_0 = 0, d_4 = 0 (check vertex 7) and d_1 + d_2 + d_3 = 0: four assignments
    assert len(expected) == 4
    assert expected == {0b00110, 0b01010, 0b01100, 0}
    assert generated_subgroup([g.values for g in k.generators], 5, 2) == expected
    for gen in k.generators:
        assert not s.residual(gen.values).any()


def test_linear_system_validation():
    with pytest.raises(ValueError):
        LinearSystem(((0, (1, 2)),), (0,), kernel_mod_d(LinearSystem.from_matrix([[1]], 2)).modulus)


@pytest.mark.parametrize("config", RING_CONFIGURATIONS)
def test_ring_configurations_detected(ring, config):
    v = is_detected(ring, config, 2)
    assert v.detected and v.witness is None
    assert v.forced_relations == ((1, 1, 1, 1),)


def test_two_vertex_undetected():
    v = is_detected(TWO_VERTEX, {1}, 2)
    assert not v.detected
    assert v.witness.as_dict() == {0: 1, 1: 0}
    assert is_detected(TWO_VERTEX, set(), 2).detected


def test_witness_violates_condition():
    rng = random.Random(8)
    seen = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 2), rng.randint(1, 4))
        e = [y for y in g.outputs if rng.random() < 0.5]
        d = rng.choice([2, 3, 4])
        v = is_detected(g, e, d)
        if v.detected:
            continue
        seen += 1
        s = build_detection_system(g, e, d)
        assert not s.residual(v.witness.values).any()
        back = build_homomorphism(g, sorted(e), g.inputs, d)
        ve = v.witness.restrict(sorted(e)).values
        assert any(v.witness.restrict(g.inputs).values) or back.residual(ve).any()
    assert seen > 20


def test_enumerate_examples(ring):
    r0 = enumerate_detected(ring, 0, 2)
    assert (r0.total, r0.detected) == (1, 1)
    r4 = enumerate_detected(ring, 4, 2)
    assert r4.total == 1365
    assert set(RING_CONFIGURATIONS) <= set(r4.detected_configs)
    # regression value from the first exhaustive run
    assert r4.detected == 1365
    assert r4.detected_configs == sorted(r4.detected_configs)
    with pytest.raises(ValueError):
        enumerate_detected(ring, 16, 2)


def test_enumerate_parallel_matches_serial(ring):
    serial = enumerate_detected(ring, 5, 2)
    parallel = enumerate_detected(ring, 5, 2, workers=2)
    assert serial.to_dict() == parallel.to_dict()
    assert serial.undetected


def test_radius_examples(ring):
    assert detection_radius(TWO_VERTEX, 2) == 0
    assert detection_radius(Hypergraph((0,), (1, 2), ()), 2) == -1
    assert detection_radius(ring, 2) == 4
    assert detection_radius(Hypergraph((), (1, 2), ()), 2) == 2


def test_size5_counterexample(ring):
    v = enumerate_detected(ring, 5, 2).undetected[0]
    assert v.error_vertices == (1, 2, 3, 4, 13)
    assert not brute_force_detected(ring, (1, 2, 3, 4, 13), 2)
    assert v.witness.as_dict() == {0: 1, 1: 0, 2: 0, 3: 0, 4: 1, 13: 1}


def test_verdict_matches_brute_force():
    rng = random.Random(21)
    for _ in range(250):
        g = random_graph(rng, rng.randint(0, 2), rng.randint(1, 4), implicit=rng.random() < 0.3)
        d = rng.choice([2, 3, 4, 6])
        e = [y for y in g.outputs if rng.random() < 0.4]
        assert is_detected(g, e, d).detected == brute_force_detected(g, e, d), (g, e, d)


def test_subset_monotonicity():
    rng = random.Random(4)
    checked = 0
    while checked < 500:
        g = random_graph(rng, rng.randint(1, 2), rng.randint(2, 6), p=0.25, implicit=rng.random() < 0.5)
        d = rng.choice([2, 3, 4])
        e = [y for y in g.outputs if rng.random() < 0.5]
        if not is_detected(g, e, d).detected:
            continue
        sub = [y for y in e if rng.random() < 0.5]
        assert is_detected(g, sub, d).detected
        checked += 1


def test_relabeling_invariance(ring):
    rng = random.Random(9)
    for trial in range(150):
        g = ring if trial % 10 == 0 else random_graph(rng, rng.randint(0, 2), rng.randint(1, 5), implicit=rng.random() < 0.5)
        mapping = dict(zip(g.vertices, rng.sample(range(200), len(g.vertices))))
        h = relabel(g, mapping)
        e = [y for y in g.outputs if rng.random() < 0.4]
        d = rng.choice([2, 3])
        assert is_detected(g, e, d).detected == is_detected(h, [mapping[y] for y in e], d).detected
