import numpy as np
import pytest

from _brute import (
    brute_max_densest,
    brute_max_k_sum,
    brute_max_matching,
    brute_max_tour,
)
from ordmatch import (
    BudgetError,
    GeneratorSpec,
    OracleBudget,
    WeightedInstance,
    cluster_weight,
    generate,
    matching_weight,
    opt_densest,
    opt_k_sum,
    opt_matching,
    opt_tsp,
    subset_weight,
    tour_weight,
)

EPS = 0.01
W1 = [
    [0.0, 1.0, 1.0, 1.0],
    [1.0, 0.0, 1.0, 1.0],
    [1.0, 1.0, 0.0, EPS],
    [1.0, 1.0, EPS, 0.0],
]
W2 = [
    [0.0, 2.0, 1.0, 1.0],
    [2.0, 0.0, 1.0, 1.0],
    [1.0, 1.0, 0.0, 1.0],
    [1.0, 1.0, 1.0, 0.0],
]

# values frozen from the exhaustive enumerators in _brute.py
FROZEN = [
    ("euclidean-uniform", 8, 0, {
        ("mwm", 4): 3.100372277783928,
        ("mwm", 2): 2.154339726477609,
        ("ksum", 2): 8.002293062417902,
        ("ksum", 4): 3.100372277783928,
        ("densest", 4): 5.157013468856721,
        ("tsp", None): 6.163969852601046,
    }),
    ("random-metric-closure", 8, 1, {
        ("mwm", 4): 1.9600215654249666,
        ("mwm", 2): 1.343635908125966,
        ("ksum", 2): 4.867232373536429,
        ("ksum", 4): 1.9600215654249666,
        ("densest", 4): 3.2928970977741496,
        ("tsp", None): 3.812907155395701,
    }),
    ("clustered-gaussian", 8, 2, {
        ("mwm", 4): 2.2751413387771025,
        ("mwm", 2): 1.3697112699696237,
        ("ksum", 2): 5.875227409553846,
        ("ksum", 4): 2.2751413387771025,
        ("densest", 4): 3.37018229060054,
        ("tsp", None): 4.497214990670755,
    }),
    ("euclidean-uniform", 6, 5, {
        ("mwm", 3): 2.328666242515169,
        ("mwm", 1): 1.0194715319796894,
        ("ksum", 3): 2.328666242515169,
        ("densest", 3): 2.6591111866600246,
        ("tsp", None): 4.538643074363615,
    }),
]


def oracle_value(inst, problem, k):
    if problem == "mwm":
        return matching_weight(opt_matching(inst, k), inst)
    if problem == "ksum":
        return cluster_weight(opt_k_sum(inst, k), inst)
    if problem == "densest":
        return subset_weight(opt_densest(inst, k), inst)
    return tour_weight(opt_tsp(inst), inst)


class TestOptMatching:
    def test_tie_breaker_instance(self):
        inst = WeightedInstance(W1)
        m = opt_matching(inst, 2)
        assert m.sorted_edges() == [(0, 2), (1, 3)]
        assert matching_weight(m, inst) == 2.0

    def test_favorite_pair_instance(self):
        inst = WeightedInstance(W2)
        m = opt_matching(inst, 2)
        assert m.sorted_edges() == [(0, 1), (2, 3)]
        assert matching_weight(m, inst) == 3.0

    def test_single_edge_budget(self):
        m = opt_matching(WeightedInstance(W2), 1)
        assert m.sorted_edges() == [(0, 1)]

    def test_zero_matrix_gives_empty_matching(self):
        inst = WeightedInstance([[0.0] * 4 for _ in range(4)])
        assert opt_matching(inst, 2).sorted_edges() == []

    def test_k_above_capacity_equals_perfect(self):
        inst = generate(GeneratorSpec("euclidean-uniform", 8, seed=7))
        assert opt_matching(inst, 4) == opt_matching(inst, 40)

    def test_monotone_in_k(self):
        inst = generate(GeneratorSpec("clustered-gaussian", 10, seed=3))
        vals = [matching_weight(opt_matching(inst, k), inst) for k in range(1, 6)]
        assert vals == sorted(vals)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            opt_matching(WeightedInstance(W1), 0)

    def test_budget_cap(self):
        big = WeightedInstance([[0.0] * 21 for _ in range(21)])
        with pytest.raises(BudgetError):
            opt_matching(big, 10)

    def test_time_budget(self):
        inst = generate(GeneratorSpec("euclidean-uniform", 14, seed=0))
        with pytest.raises(BudgetError):
            opt_matching(inst, 7, OracleBudget(time_limit=0.0))


class TestOptKSum:
    def test_known_partition(self):
        inst = WeightedInstance(W2)
        c = opt_k_sum(inst, 2)
        assert c.parts == ((0, 1), (2, 3))
        assert cluster_weight(c, inst) == 3.0

    def test_rejects_bad_k(self):
        inst = WeightedInstance(W1)
        with pytest.raises(ValueError):
            opt_k_sum(inst, 3)  # 3 does not divide 4
        with pytest.raises(ValueError):
            opt_k_sum(inst, 0)

    def test_budget_cap(self):
        big = WeightedInstance([[0.0] * 12 for _ in range(12)])
        with pytest.raises(BudgetError):
            opt_k_sum(big, 3)

    def test_pair_clusters_match_perfect_matching(self):
        # size-2 clusters are exactly a perfect matching
        for seed in range(5):
            inst = generate(GeneratorSpec("euclidean-uniform", 8, seed=seed))
            ks = cluster_weight(opt_k_sum(inst, 4), inst)
            mm = matching_weight(opt_matching(inst, 4), inst)
            assert ks == pytest.approx(mm, rel=1e-12)


class TestOptDensest:
    def test_known_subsets(self):
        inst = WeightedInstance(W2)
        s2 = opt_densest(inst, 2)
        assert s2.nodes == (0, 1)
        assert subset_weight(s2, inst) == 2.0
        s3 = opt_densest(inst, 3)
        assert s3.nodes == (0, 1, 2)
        assert subset_weight(s3, inst) == 4.0

    def test_full_set(self):
        inst = WeightedInstance(W1)
        assert opt_densest(inst, 4).nodes == (0, 1, 2, 3)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            opt_densest(WeightedInstance(W1), 0)
        with pytest.raises(ValueError):
            opt_densest(WeightedInstance(W1), 5)

    def test_budget_cap(self):
        big = WeightedInstance([[0.0] * 21 for _ in range(21)])
        with pytest.raises(BudgetError):
            opt_densest(big, 4)


class TestOptTsp:
    def test_known_tour(self):
        inst = WeightedInstance(W1)
        t = opt_tsp(inst)
        assert t.order == (0, 2, 1, 3)
        assert tour_weight(t, inst) == 4.0

    def test_canonical_orientation(self):
        for seed in range(6):
            t = opt_tsp(generate(GeneratorSpec("euclidean-uniform", 7, seed=seed)))
            assert t.order[0] == 0
            assert t.order[1] < t.order[-1]

    def test_rejects_tiny_n(self):
        with pytest.raises(ValueError):
            opt_tsp(WeightedInstance([[0.0, 1.0], [1.0, 0.0]]))

    def test_budget_cap(self):
        big = WeightedInstance([[0.0] * 16 for _ in range(16)])
        with pytest.raises(BudgetError):
            opt_tsp(big)

    def test_time_budget(self):
        inst = generate(GeneratorSpec("euclidean-uniform", 12, seed=0))
        with pytest.raises(BudgetError):
            opt_tsp(inst, OracleBudget(time_limit=0.0))


class TestAgainstFrozenBruteValues:
    @pytest.mark.parametrize("family,n,seed,values", FROZEN)
    def test_frozen_values(self, family, n, seed, values):
        inst = generate(GeneratorSpec(family, n, seed=seed))
        for (problem, k), expected in values.items():
            assert oracle_value(inst, problem, k) == pytest.approx(expected, abs=1e-12)

    def test_fresh_instances_match_brute_force(self):
        rng = np.random.default_rng(2024)
        for trial in range(10):
            n = int(rng.integers(4, 9))
            fam = ["euclidean-uniform", "random-metric-closure", "clustered-gaussian"][trial % 3]
            inst = generate(GeneratorSpec(fam, n, seed=int(rng.integers(0, 10_000))))
            w = inst.weights.tolist()
            for k in range(1, n // 2 + 1):
                assert matching_weight(opt_matching(inst, k), inst) == pytest.approx(
                    brute_max_matching(w, k), abs=1e-12
                )
            for k in range(1, n + 1):
                if n % k == 0 and k < n:
                    assert cluster_weight(opt_k_sum(inst, k), inst) == pytest.approx(
                        brute_max_k_sum(w, k), abs=1e-12
                    )
            assert subset_weight(opt_densest(inst, max(2, n // 2)), inst) == pytest.approx(
                brute_max_densest(w, max(2, n // 2)), abs=1e-12
            )
            assert tour_weight(opt_tsp(inst), inst) == pytest.approx(brute_max_tour(w), abs=1e-12)
