import json
from fractions import Fraction

import pytest

from homdom.graphs import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    encode_graph,
    path_graph,
)
from homdom.homcount import hom_density
from homdom.constructions import simple_family
from homdom.formulas import even_cycle_exponent, odd_cycle_bounds, path_exponent
from homdom.verifier import (
    GNP_CONTRACT,
    Corpus,
    CorpusSpec,
    build_corpus,
    check_eq_main,
    check_inequality,
    cross_power_holds,
    gnp_graph,
    problem6_exponents,
    ratio_certified_lower,
    search_problem6,
    tensor_amplify,
)


class TestGnp:
    def test_contract_name(self):
        assert GNP_CONTRACT == "gnp-pcg64-v1"

    def test_reproducible(self):
        a = gnp_graph(12, Fraction(1, 2), seed=7, index=3)
        b = gnp_graph(12, Fraction(1, 2), seed=7, index=3)
        assert a == b
        assert a != gnp_graph(12, Fraction(1, 2), seed=7, index=4)
        assert a != gnp_graph(12, Fraction(1, 2), seed=8, index=3)

    def test_extremes(self):
        assert gnp_graph(6, 0, 1, 0).num_edges == 0
        assert gnp_graph(6, 1, 1, 0).num_edges == 15


class TestCorpus:
    def test_counts(self):
        corpus = build_corpus(CorpusSpec(exhaustive_n=4))
        # 1 + 2 + 4 + 11 deduplicated graphs on 1..4 vertices
        assert len(corpus) == 18
        corpus = build_corpus(CorpusSpec(exhaustive_n=3, gnp_count=5))
        assert len(corpus) == 7 + 5

    def test_deterministic(self):
        spec = CorpusSpec(exhaustive_n=3, gnp_count=4, gnp_seed=9)
        a = build_corpus(spec)
        b = build_corpus(spec)
        assert [(t, g) for t, g in a] == [(t, g) for t, g in b]

    def test_cap(self):
        from homdom.homcount import ResourceLimitError
        with pytest.raises(ResourceLimitError):
            build_corpus(CorpusSpec(exhaustive_n=8))

    def test_constructions_included(self):
        corpus = build_corpus(CorpusSpec(include_constructions=True))
        tags = [t for t, _ in corpus]
        assert "red_line(p=5,k=2)" in tags
        assert "behrend(30)" in tags
        assert "single_edge(8)" in tags


class TestCrossPower:
    def test_exact_verdicts(self):
        assert cross_power_holds(Fraction(1, 4), Fraction(1, 2), 2)
        # t_h < 1, so shrinking c below the critical 2 breaks the inequality
        assert not cross_power_holds(Fraction(1, 4), Fraction(1, 2),
                                     Fraction(2) - Fraction(1, 100))
        assert cross_power_holds(Fraction(1, 8), Fraction(1, 4),
                                 Fraction(3, 2))


class TestCheckInequality:
    def setup_method(self):
        self.corpus = build_corpus(CorpusSpec(exhaustive_n=5))

    def test_true_inequality_passes(self):
        c = path_exponent(5, 13)
        report = check_inequality(path_graph(5), path_graph(13), c, self.corpus)
        assert report.ok and report.exit_code == 0
        assert not report.skipped
        assert report.min_slack is not None

    def test_violation_found(self):
        # C(K_2, K_3) = 2/3, so c = 1/2 fails on K_n plus isolated vertices:
        # t(K_2)=1/25 < t(K_3)^(1/2) with t(K_3)=6/1000 at n=5... use exact
        target = simple_family("clique_plus_isolated", 5)
        corpus = Corpus((("witness", target),))
        report = check_inequality(complete_graph(2), complete_graph(3),
                                  Fraction(1, 2), corpus)
        assert not report.ok and report.exit_code == 1
        assert report.violations[0]["target"] == "witness"

    def test_sharp_constant_passes(self):
        # the exact exponent passes on the very family that witnesses it
        target = simple_family("clique_plus_isolated", 8)
        corpus = Corpus((("w", target),))
        report = check_inequality(complete_graph(2), complete_graph(3),
                                  Fraction(2, 3), corpus)
        assert report.ok

    def test_json_shape(self):
        report = check_inequality(cycle_graph(4), complete_graph(2),
                                  4, self.corpus)
        doc = json.loads(report.to_json())
        assert doc["ok"] is True and doc["complete"] is True
        assert doc["num_targets"] == len(self.corpus)

    def test_skip_policy(self):
        # an oversized simple target cannot be densified exactly: skipped,
        # exit code 4
        big = simple_family("two_cliques", 40)  # 80 vertices
        corpus = Corpus((("big", big),))
        report = check_inequality(complete_graph(3), complete_graph(2),
                                  1, corpus, max_steps=10)
        assert report.skipped and report.exit_code == 4


class TestRatioCertifiedLower:
    def test_edge_vs_triangle(self):
        target = simple_family("clique_plus_isolated", 8)
        bound = ratio_certified_lower(complete_graph(2), complete_graph(3),
                                      target)
        assert bound is not None
        assert Fraction(1, 2) < bound <= Fraction(2, 3)
        # certified: t_g^q <= t_h^p exactly
        tg = hom_density(complete_graph(2), target)
        th = hom_density(complete_graph(3), target)
        assert tg ** bound.denominator <= th ** bound.numerator

    def test_degenerate_none(self):
        # t(K_3, C_4) = 0: no usable ratio
        assert ratio_certified_lower(complete_graph(2), complete_graph(3),
                                     cycle_graph(4)) is None


class TestTensorAmplify:
    def test_constant_slack_and_materialized(self):
        out = tensor_amplify(cycle_graph(4), complete_graph(2),
                             even_cycle_exponent(2, 2), complete_graph(3))
        slacks = out["slacks"]
        assert len(slacks) == 5
        assert all(abs(s - slacks[0]) < 1e-9 for s in slacks)
        assert out["materialized_square_ok"] is True

    def test_needs_positive_density(self):
        with pytest.raises(ValueError):
            tensor_amplify(complete_graph(3), complete_graph(2), 1,
                           complete_graph(2))


class TestProblem6:
    def test_exponents(self):
        assert problem6_exponents(2, 1) == (2, 1, 3)
        assert problem6_exponents(3, 1) == (2, 3, 5)
        assert problem6_exponents(3, 2) == (2, 1, 3)
        with pytest.raises(ValueError):
            problem6_exponents(1, 1)

    def test_search_no_counterexample_small(self):
        corpus = build_corpus(CorpusSpec(exhaustive_n=5))
        for i, j in ((2, 1), (3, 1), (3, 2)):
            report = search_problem6(i, j, corpus)
            assert report.ok, (i, j, report.violations)
            assert not report.skipped

    def test_weighted_targets_skipped(self):
        from homdom.homcount import WeightedTarget
        w = WeightedTarget((Fraction(1),), ((Fraction(1, 2),),))
        corpus = Corpus((("w", w),))
        report = search_problem6(2, 1, corpus)
        assert report.skipped and report.exit_code == 4


class TestChordedCycleIdentity:
    @pytest.mark.parametrize("k,ell", [(2, 1), (3, 1), (3, 2), (4, 2)])
    def test_identity_on_cliques(self, k, ell):
        for n in (3, 4, 5):
            assert check_eq_main(k, ell, complete_graph(n))

    def test_identity_on_corpus(self):
        corpus = build_corpus(CorpusSpec(exhaustive_n=5))
        for tag, target in corpus:
            assert check_eq_main(2, 1, target), tag

    def test_bad_params(self):
        with pytest.raises(ValueError):
            check_eq_main(1, 1, complete_graph(3))
