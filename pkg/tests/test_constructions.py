import itertools
from fractions import Fraction

import pytest

from homdom.graphs import GraphError, SimpleGraph, complete_graph, cycle_graph, k4_minus_e
from homdom.homcount import hom_count, hom_density, weighted_hom_density
from homdom.constructions import (
    ProjectivePlaneSpec,
    ScalingFamily,
    ap3_free_set,
    behrend_graph,
    behrend_triangle_hom_count,
    bipartite_power_target,
    estimate_ratio,
    instantiate_weighted,
    log_fraction,
    path_blowup_pattern,
    projective_plane,
    red_line_graph,
    simple_family,
)


class TestPathBlowupPattern:
    def test_smallest_instance(self):
        pat = path_blowup_pattern(1, 1, 1)
        assert pat.base.n == 4
        assert pat.vexp == (Fraction(3), Fraction(1), Fraction(1), Fraction(3))
        assert [pat.eexp[(i, i + 1)] for i in range(3)] == [3, 2, 3]

    def test_golden_321(self):
        pat = path_blowup_pattern(3, 2, 1)
        assert tuple(int(e) for e in pat.vexp) == (
            5, 1, 3, 1, 3, 1, 3, 3, 1, 3, 1, 3, 1, 5)
        assert [int(pat.eexp[(i, i + 1)]) for i in range(13)] == [
            5, 4, 4, 4, 4, 4, 5, 4, 4, 4, 4, 4, 5]

    def test_mirror_symmetry(self):
        for k, l in ((2, 1), (2, 2), (3, 2), (4, 3)):
            pat = path_blowup_pattern(k, l, 1)
            nv = pat.base.n
            for i in range(nv):
                assert pat.vexp[i] == pat.vexp[nv - 1 - i]
            for i in range(nv - 1):
                assert pat.eexp[(i, i + 1)] == pat.eexp[(nv - 2 - i, nv - 1 - i)]

    def test_bad_params(self):
        with pytest.raises(GraphError):
            path_blowup_pattern(2, 1, 3)
        with pytest.raises(GraphError):
            path_blowup_pattern(2, 0, 1)

    def test_instantiate(self):
        pat = path_blowup_pattern(1, 1, 1)
        w = instantiate_weighted(pat, 10)
        assert w.weights == (1000, 10, 10, 1000)
        # edge (1,2): exponent 2 - 1 - 1 = 0 -> density 1
        assert w.density[1][2] == 1
        # edge (0,1): exponent 3 - 3 - 1 = -1 -> density 1/10
        assert w.density[0][1] == Fraction(1, 10)
        assert w.density[0][2] == 0

    def test_instantiate_guard(self):
        with pytest.raises(GraphError):
            instantiate_weighted(path_blowup_pattern(1, 1, 1), 1)


class TestProjectivePlane:
    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_axioms(self, p):
        points, lines = projective_plane(p)
        n = p * p + p + 1
        assert len(points) == n and len(lines) == n
        assert all(len(line) == p + 1 for line in lines)
        # every pair of points lies on exactly one line
        for a, b in itertools.combinations(range(n), 2):
            count = sum(1 for line in lines if a in line and b in line)
            assert count == 1
        # every point lies on exactly p+1 lines
        for a in range(n):
            assert sum(1 for line in lines if a in line) == p + 1

    def test_non_prime(self):
        with pytest.raises(GraphError):
            projective_plane(4)

    def test_red_line_count(self):
        # floor(n^alpha) with alpha = k/(2k-1)
        assert ProjectivePlaneSpec(2, 2).red_line_count == 3  # floor(7^(2/3))
        assert ProjectivePlaneSpec(5, 2).red_line_count == 9  # floor(31^(2/3))

    def test_red_line_graph_two_lines(self):
        spec = ProjectivePlaneSpec(2, 2)
        g = red_line_graph(spec, seed=1, num_lines=2)
        # two lines of the Fano plane are triangles sharing one point
        assert g.n == 7 and g.num_edges == 6
        assert hom_count(complete_graph(3), g) == 12

    def test_determinism(self):
        spec = ProjectivePlaneSpec(3, 2)
        assert red_line_graph(spec, seed=5) == red_line_graph(spec, seed=5)
        assert red_line_graph(spec, seed=5) != red_line_graph(spec, seed=6)


class TestBipartitePower:
    def test_weighted_cycle_density(self):
        for i in (1, 2):
            for n in (3, 5):
                w = bipartite_power_target(i, n, mode="weighted")
                d = Fraction(1, n ** i)
                assert weighted_hom_density(cycle_graph(4), w) == d ** 4 / 8
                assert weighted_hom_density(cycle_graph(6), w) == d ** 6 / 32

    def test_random_edge_count_within_3_sigma(self):
        i, n = 1, 60
        g = bipartite_power_target(i, n, mode="random", seed=2)
        part = n ** (i + 1)
        assert g.n == 2 * part
        mean = part * part / n ** i
        sigma = (mean * (1 - 1 / n ** i)) ** 0.5
        assert abs(g.num_edges - mean) < 3 * sigma

    def test_random_determinism(self):
        a = bipartite_power_target(1, 10, mode="random", seed=3)
        b = bipartite_power_target(1, 10, mode="random", seed=3)
        assert a == b

    def test_size_guard(self):
        from homdom.homcount import ResourceLimitError
        with pytest.raises(ResourceLimitError):
            bipartite_power_target(2, 100, mode="random", max_vertices=1000)


class TestBehrend:
    @pytest.mark.parametrize("n", [10, 30, 60])
    def test_ap3_free(self, n):
        s = ap3_free_set(n)
        assert all(1 <= x <= n for x in s)
        assert len(set(s)) == len(s)
        for a, b, c in itertools.combinations(s, 3):
            assert a + c != 2 * b

    def test_triangle_identity(self):
        for n in (5, 8, 12):
            g = behrend_graph(n)
            expected = behrend_triangle_hom_count(n)
            assert hom_count(complete_graph(3), g) == expected
            # triangles are edge-disjoint, so K_4 - e has no extra room
            assert hom_count(k4_minus_e(), g) == expected

    def test_sizes(self):
        g = behrend_graph(30)
        assert g.n == 180
        s = ap3_free_set(30)
        assert g.num_edges == 3 * 30 * len(s)  # edge-disjoint triangles


class TestSimpleFamilies:
    def test_alias(self):
        assert simple_family("half_clique", 5) == simple_family(
            "clique_plus_isolated", 5)

    def test_shapes(self):
        g = simple_family("two_cliques", 4)
        assert g.n == 8 and g.num_edges == 12
        g = simple_family("single_edge", 6)
        assert g.n == 6 and g.num_edges == 1
        g = simple_family("half_clique", 4)
        assert g.n == 8 and g.num_edges == 6

    def test_single_edge_cycle_density(self):
        # t(C_2j, single_edge(n)) = 2 / n^2j
        for n in (4, 7):
            g = simple_family("single_edge", n)
            for j in (1, 2, 3):
                assert hom_density(cycle_graph(2 * j), g) == Fraction(2, n ** (2 * j))

    def test_unknown_kind(self):
        with pytest.raises(GraphError):
            simple_family("mystery", 3)


class TestEstimator:
    def test_identity_ratio(self):
        fam = ScalingFamily("two_cliques")
        result = estimate_ratio(cycle_graph(4), cycle_graph(4), fam, [3, 5, 8])
        assert all(r == 1.0 for _, r in result["ratios"])
        assert result["monotone"]

    def test_clique_plus_isolated_ratio(self):
        # t(K_2)/t(K_3) ratio on K_n + n isolated vertices tends to 2/3
        fam = ScalingFamily("clique_plus_isolated")
        result = estimate_ratio(complete_graph(2), complete_graph(3), fam,
                                [4, 8, 16, 32])
        assert result["monotone"]
        assert abs(result["extrapolated"] - 2 / 3) < 0.1

    def test_degenerate_raises(self):
        fam = ScalingFamily("single_edge")
        with pytest.raises(GraphError):
            estimate_ratio(complete_graph(3), complete_graph(2), fam, [4])

    def test_scaling_family_dispatch(self):
        fam = ScalingFamily("path_blowup", {"k": 1, "l": 1, "m": 1})
        w = fam.build(10)
        assert w.weights == (1000, 10, 10, 1000)
        with pytest.raises(GraphError):
            ScalingFamily("nope").build(3)

    def test_log_fraction(self):
        import math
        assert abs(log_fraction(Fraction(1, 2)) + math.log(2)) < 1e-12
        big = Fraction(10 ** 400, 3 ** 500)
        assert abs(log_fraction(big) - (400 * math.log(10) - 500 * math.log(3))) < 1e-9
        with pytest.raises(ValueError):
            log_fraction(Fraction(0))
