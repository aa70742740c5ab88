import json
from fractions import Fraction

import pytest

from primspec.aug_poset import (
    counts,
    enumerate_X,
    exceptional_coverings,
    irreducible_components,
    minimal_elements,
    odd_reflection_ad,
    strata,
    to_dot,
    to_json_dict,
)
from primspec.errors import BoundExceededError
from primspec.super_inclusion import covers, frame, inclusion
from primspec.tableaux import involution_count, tau_of_weight
from primspec.weights import SuperWeight
from test_tableaux import egf_series

W = SuperWeight.parse


@pytest.fixture(scope="module")
def posets():
    return {m: enumerate_X(m) for m in range(1, 6)}


@pytest.fixture(scope="module")
def assignments(posets):
    return {m: strata(posets[m]) for m in posets}


class TestRankThreeDiagram:
    def test_classes_and_equalities(self, posets):
        poset = posets[3]
        members = {
            str(c.representative): sorted(str(w) for w in c.members)
            for c in poset.classes
        }
        assert members == {
            "2,1,0|0": ["2,1,0|0"],
            "2,0,1|0": ["0,2,1|0", "2,0,1|0"],
            "1,2,0|0": ["1,0,2|0", "1,2,0|0"],
            "0,1,2|0": ["0,1,2|0"],
            "2,1,1|1": ["1,2,1|1", "2,1,1|1"],
            "1,1,2|1": ["1,1,2|1"],
            "2,2,1|2": ["2,1,2|2", "2,2,1|2"],
            "1,2,2|2": ["1,2,2|2"],
        }

    def test_hasse_edges(self, posets):
        poset = posets[3]
        name = {c.index: str(c.representative) for c in poset.classes}
        edges = {(name[a], name[b]) for a, b in poset.hasse}
        assert edges == {
            ("2,0,1|0", "2,1,0|0"),
            ("1,2,0|0", "2,1,0|0"),
            ("2,1,1|1", "2,1,0|0"),
            ("2,2,1|2", "2,1,0|0"),
            ("0,1,2|0", "2,0,1|0"),
            ("0,1,2|0", "1,2,0|0"),
            ("1,1,2|1", "1,2,0|0"),
            ("1,1,2|1", "2,1,1|1"),
            ("1,2,2|2", "2,1,1|1"),
            ("1,2,2|2", "2,2,1|2"),
        }

    def test_strata_match_prose(self, posets, assignments):
        poset, assign = posets[3], assignments[3]
        by_j = {}
        for c in poset.classes:
            by_j.setdefault(assign[c.index].j_index, set()).add(str(c.representative))
        assert by_j[0] == {"2,1,0|0", "2,1,1|1", "2,2,1|2", "1,2,2|2"}
        assert by_j[1] == {"1,2,0|0", "1,1,2|1"}
        assert by_j[2] == {"2,0,1|0", "0,1,2|0"}
        # X_i is read off the last entry
        for c in poset.classes:
            assert assign[c.index].i_index == c.representative.right[0]
        # maximal ideals of the singular strata
        maxima = {
            i: max(
                (c for c in poset.classes if c.i_index == i),
                key=lambda c: sum(
                    1 for x in range(len(poset.classes)) if (x, c.index) in poset.strict
                ),
            )
            for i in (1, 2)
        }
        assert str(maxima[1].representative) == "2,1,1|1"
        assert str(maxima[2].representative) == "2,2,1|2"


class TestCounts:
    def test_small_ranks(self, posets):
        for m, expected in [(1, 1), (2, 3), (3, 8), (4, 25), (5, 78)]:
            assert len(posets[m].classes) == expected

    def test_stratum_sizes(self, posets):
        for m in range(1, 6):
            report = counts(posets[m])
            assert report.total == (m + 1) * report.involutions // 2
            assert report.stratum_sizes[0] == report.involutions
            for i in range(1, m):
                assert report.stratum_sizes[i] == report.involutions // 2

    def test_formula_against_series(self):
        series = egf_series(order=11)
        fact = 1
        for m in range(11):
            if m:
                fact *= m
            assert series[m] * fact == involution_count(m)

    def test_count_function_series(self):
        # sum_{m>=1} t_m x^m / m! agrees with (1 + x + x^2) exp(x + x^2/2) / 2
        # as exact coefficients through degree 10 (the degree-0 term of the
        # product is the formal 1/2, where no poset exists)
        f = egf_series(order=11)
        fact = 1
        for m in range(1, 11):
            fact *= m
            t_m = (m + 1) * involution_count(m) // 2
            g_m = f[m] + f[m - 1] + (f[m - 2] if m >= 2 else 0)
            assert Fraction(g_m, 2) * fact == t_m

    def test_bound_refusal(self):
        with pytest.raises(BoundExceededError):
            enumerate_X(9)

    def test_rank_six_structure(self):
        # beyond the proven range: the enumeration still satisfies every
        # counting identity and the covering scan stays empty
        poset = enumerate_X(6)
        report = counts(poset)
        assert report.total == 266
        assert report.stratum_sizes == {0: 76, 1: 38, 2: 38, 3: 38, 4: 38, 5: 38}
        assert exceptional_coverings(poset) == []


class TestMinimalAndComponents:
    def test_minimal_elements(self, posets):
        for m in range(1, 6):
            mins = minimal_elements(posets[m])
            assert len(mins) == m  # one per stratum, settling the count
            for a in mins:
                for b in mins:
                    if a.index != b.index:
                        assert not inclusion(
                            a.representative, b.representative
                        ) and not inclusion(b.representative, a.representative)

    def test_minimal_elements_sit_in_dual_strata(self, posets, assignments):
        # the minimal ideal of stratum i lives in dual stratum m - i - 1
        for m in range(1, 6):
            for c in minimal_elements(posets[m]):
                assign = assignments[m][c.index]
                assert assign.j_index == m - assign.i_index - 1
                assert assign.p_value == 0

    def test_components(self, posets, assignments):
        for m in range(1, 6):
            reports = irreducible_components(posets[m], assignments[m])
            s_m = involution_count(m)
            for r in reports:
                assert len(r.class_indices) == s_m
                assert r.order_isomorphic
            # Z_0 is exactly the regular stratum
            z0 = {posets[m].classes[c].i_index for c in reports[0].class_indices}
            assert z0 == {0}

    def test_union_identity(self, posets, assignments):
        # the union of the first s+1 strata equals the union of the first
        # s+1 components
        for m in range(2, 6):
            poset, assign = posets[m], assignments[m]
            reports = irreducible_components(poset, assign)
            for s in range(m):
                strata_union = {
                    c.index for c in poset.classes if c.i_index <= s
                }
                comp_union = set()
                for k in range(s + 1):
                    comp_union |= set(reports[k].class_indices)
                assert strata_union == comp_union

    def test_local_closure(self, posets, assignments):
        # X_k = Z_k minus (Z_{k-1} intersect Z_k)
        for m in range(2, 6):
            poset, assign = posets[m], assignments[m]
            reports = {r.k: set(r.class_indices) for r in irreducible_components(poset, assign)}
            for k in range(1, m):
                xk = {c.index for c in poset.classes if c.i_index == k}
                assert xk == reports[k] - (reports[k - 1] & reports[k])


class TestOrderProperties:
    def test_strata_monotone_and_p_gap(self, posets, assignments):
        for m in range(2, 6):
            poset, assign = posets[m], assignments[m]
            for (lo, hi) in poset.strict:
                alo, ahi = assign[lo], assign[hi]
                assert alo.i_index >= ahi.i_index
                assert alo.j_index >= ahi.j_index
                assert ahi.p_value - alo.p_value >= alo.i_index - ahi.i_index >= 0

    def test_tau_grows_across_strata(self, posets, assignments):
        # crossing strata adds the wall of the lower stratum to the
        # invariant
        from primspec.tableaux import gamma_index_to_position

        for m in range(2, 6):
            poset, assign = posets[m], assignments[m]
            for (lo, hi) in poset.strict:
                i_lo = assign[lo].i_index
                i_hi = assign[hi].i_index
                if i_lo > i_hi:
                    t_lo = tau_of_weight(poset.classes[lo].representative.left)
                    t_hi = tau_of_weight(poset.classes[hi].representative.left)
                    assert t_lo >= t_hi | {gamma_index_to_position(i_lo, m)}

    def test_no_exceptional_coverings_small_ranks(self, posets, assignments):
        for m in range(1, 6):
            assert exceptional_coverings(posets[m], assignments[m]) == []

    def test_hasse_connected(self, posets):
        for m in range(2, 6):
            poset = posets[m]
            nodes = {c.index for c in poset.classes}
            reach = {0}
            frontier = [0]
            adj = {}
            for a, b in poset.hasse:
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)
            while frontier:
                node = frontier.pop()
                for nxt in adj.get(node, ()):
                    if nxt not in reach:
                        reach.add(nxt)
                        frontier.append(nxt)
            assert reach == nodes

    def test_nothing_outside_compares(self, posets):
        # neighbors from adjacent central characters never compare with
        # members of the component
        poset = posets[3]
        outsiders = [W("3,1,0|0"), W("2,1,0|1"), W("4,2,1|2"), W("3,2,1|3")]
        for out in outsiders:
            for c in poset.classes:
                rep = c.representative
                assert not inclusion(out, rep) and not inclusion(rep, out)

    def test_pointwise_covers_match_hasse(self, posets):
        # the covering decision (classical-side reduction) agrees with the
        # transitive reduction of the enumerated order
        for m in (2, 3, 4):
            poset = posets[m]
            hasse = set(poset.hasse)
            for a in poset.classes:
                for b in poset.classes:
                    if a.index == b.index:
                        continue
                    expected = (b.index, a.index) in hasse
                    got = covers(a.representative, b.representative)
                    assert got == expected, (a.representative, b.representative)

    def test_q_k_cross_orbit_cover(self, posets):
        # the only covering of a minimal ideal from the previous stratum
        for m in (3, 4, 5):
            for k in range(1, m):
                q_k = SuperWeight(
                    tuple(range(1, k)) + (k, k) + tuple(range(k + 1, m)), (k,)
                )
                labels = (
                    tuple(range(1, k)) + (k, k - 1) + tuple(range(k + 1, m))
                )
                predicted = SuperWeight(labels, (k - 1,))
                assert covers(predicted, q_k)
                # and it is the only cross-orbit cover from stratum k-1
                others = [
                    c.representative
                    for c in posets[m].classes
                    if c.i_index == k - 1 and covers(c.representative, q_k)
                ]
                from primspec.kl_classical import classical_equal

                assert all(classical_equal(o, predicted) for o in others)
                assert others


class TestOddReflections:
    def test_identity_between_d_and_p(self, posets):
        for m in range(1, 6):
            for c in posets[m].classes:
                for w in c.members:
                    result = odd_reflection_ad(w)
                    assert result.d_value + frame(w).p_value == m - 1

    def test_phi_index_matches_j(self, posets, assignments):
        for m in range(1, 6):
            for c in posets[m].classes:
                assign = assignments[m][c.index]
                for w in c.members:
                    assert odd_reflection_ad(w).phi_index == assign.j_index

    def test_unchanged_positions_match_ladder(self, posets):
        # the stationary walls of the walk are the left ladder positions
        for m in range(2, 6):
            for c in posets[m].classes:
                for w in c.members:
                    result = odd_reflection_ad(w)
                    ladder_left = {
                        p for p in frame(w).i_set if p <= w.m
                    }
                    assert set(result.unchanged_positions) == ladder_left

    def test_gl31_prose(self):
        result = odd_reflection_ad(W("1,2,0|0"))
        assert result.phi_index == 1
        assert str(result.ad_weight) == "1,1,0|-1"
        assert odd_reflection_ad(W("2,0,1|0")).phi_index == 2
        assert odd_reflection_ad(W("2,1,0|0")).phi_index == 0

    def test_antidominant_forces_full_walk(self):
        for m in (2, 3, 4):
            anti = SuperWeight(tuple(range(m)), (0,))
            result = odd_reflection_ad(anti)
            assert result.d_value == m - 1


class TestExport:
    def test_json_schema(self, posets, assignments):
        doc = to_json_dict(posets[3], assignments[3])
        assert set(doc) == {"m", "classes", "hasse"}
        assert all(set(c) == {"repr", "members", "i", "j", "z"} for c in doc["classes"])
        json.dumps(doc)

    def test_dot_deterministic_and_wellformed(self, posets, assignments):
        a = to_dot(posets[3], assignments[3])
        b = to_dot(posets[3], assignments[3])
        assert a == b
        assert a.startswith("graph ideals {") and a.endswith("}\n")
        assert a.count(" -- ") == len(posets[3].hasse)
        clustered = to_dot(posets[3], assignments[3], cluster="x")
        assert "cluster_x0" in clustered and "cluster_x2" in clustered
