"""Tests for the pattern miners, checked against fixtures and brute-force oracles."""

from fractions import Fraction
from itertools import combinations

import pytest

from database import loads_basket
from errors import MiningParameterError
from helpers import (
    TOL,
    bf_closed,
    bf_frequent,
    bf_indirect,
    bf_maximal,
    bf_support_counts,
    label_set,
    label_sets,
    pat,
    random_db,
    wide_random_db,
)
from measures import lift
from miners import (
    MiningParams,
    compression_contributors,
    frequent_pair_graph,
    mine_all_correlation,
    mine_biclique,
    mine_clique,
    mine_closed,
    mine_frequent,
    mine_indirect,
    mine_maximal,
    mine_star,
    mine_unexpected_correlation,
    reconstruct_support,
)

SEEDS = range(50)


def patterns(found):
    return [f.pattern for f in found]


class TestFrequent:

    def test_db1(self, db1):
        found = mine_frequent(db1, 0.5)
        assert [sorted(db1.labels_of(f.pattern)) for f in found] == [
            ["a"], ["b"], ["c"], ["a", "b"], ["a", "c"], ["b", "c"],
        ]
        assert [f.support for f in found] == [Fraction(3, 4)] * 3 + [Fraction(1, 2)] * 3

    def test_threshold_above_one(self, db1):
        assert mine_frequent(db1, 1.1) == []

    def test_db6(self, db6):
        found = mine_frequent(db6, 0.5)
        assert label_sets(db6, patterns(found)) == {frozenset("a"), frozenset("b"), frozenset("ab")}
        assert all(f.support == 1 for f in found)

    def test_max_len(self, db1):
        assert all(len(f.pattern) == 1 for f in mine_frequent(db1, 0.25, max_len=1))

    def test_threshold_must_be_positive(self, db1):
        with pytest.raises(MiningParameterError):
            mine_frequent(db1, 0)

    def test_empty_database(self):
        assert mine_frequent(loads_basket(""), 0.5) == []

    def test_oracle(self):
        for seed in SEEDS:
            db = random_db(seed)
            for minsup in (0.2, 0.5):
                assert label_sets(db, patterns(mine_frequent(db, minsup))) == bf_frequent(db, minsup)

    @pytest.mark.parametrize("seed", range(200))
    def test_oracle_wide_corpus(self, seed):
        db = wide_random_db(seed)
        counts = bf_support_counts(db)
        for minsup in (0.05, 0.2, 0.5):
            threshold = Fraction(str(minsup))
            expected = {s: Fraction(c, db.n) for s, c in counts.items() if Fraction(c, db.n) >= threshold}
            assert {label_set(db, f.pattern): f.support for f in mine_frequent(db, minsup)} == expected

    def test_record(self, db1):
        record = mine_frequent(db1, 0.5)[3].to_record(db1)
        assert record == {
            "kind": "frequent",
            "items": ["a", "b"],
            "measures": {"support": 0.5, "support_fraction": "2/4"},
        }


class TestClosedAndMaximal:

    def test_closed_examples(self, db1, db6):
        closed = mine_closed(db6, 0.5)
        assert label_sets(db6, patterns(closed)) == {frozenset("ab")}
        assert closed[0].support == 1
        assert len(mine_closed(db1, 0.5)) == 6
        assert mine_closed(loads_basket(""), 0.5) == []

    def test_maximal_examples(self, db1, db6):
        assert label_sets(db1, patterns(mine_maximal(db1, 0.5))) == {
            frozenset("ab"), frozenset("ac"), frozenset("bc"),
        }
        assert label_sets(db6, patterns(mine_maximal(db6, 0.5))) == {frozenset("ab")}
        assert label_sets(db1, patterns(mine_maximal(db1, 0.7))) == {
            frozenset("a"), frozenset("b"), frozenset("c"),
        }

    def test_oracles(self):
        for seed in SEEDS:
            db = random_db(seed)
            assert label_sets(db, patterns(mine_closed(db, 0.2))) == bf_closed(db, 0.2)
            assert label_sets(db, patterns(mine_maximal(db, 0.2))) == bf_maximal(db, 0.2)

    def test_closed_is_lossless(self):
        for seed in SEEDS:
            db = random_db(seed)
            frequent = mine_frequent(db, 0.2)
            closed = mine_closed(db, 0.2)
            assert len(closed) <= len(frequent)
            for found in frequent:
                assert reconstruct_support(closed, found.pattern) == found.support

    def test_closed_is_strictly_smaller_on_db6(self, db6):
        assert len(mine_closed(db6, 0.5)) < len(mine_frequent(db6, 0.5))

    @pytest.mark.parametrize("seed", range(0, 200, 4))
    def test_containment_chain(self, seed):
        db = wide_random_db(seed)
        for minsup in (0.1, 0.3):
            frequent = mine_frequent(db, minsup)
            closed = mine_closed(db, minsup)
            maximal = label_sets(db, patterns(mine_maximal(db, minsup)))
            assert maximal <= label_sets(db, patterns(closed)) <= label_sets(db, patterns(frequent))
            if minsup == 0.3:
                for found in frequent:
                    assert reconstruct_support(closed, found.pattern) == found.support


    def test_reconstruct_infrequent(self, db6):
        assert reconstruct_support(mine_closed(db6, 0.5), pat(db6, "c")) is None

    def test_compression_contributors(self, db1, db6):
        contributors = compression_contributors(db6, mine_closed(db6, 0.5))
        assert [(label_set(db6, f.pattern), shared) for f, shared in contributors] == [(frozenset("ab"), 2)]
        assert compression_contributors(db1, mine_closed(db1, 0.5)) == []


class TestIndirect:

    def test_db2(self, db2):
        found = mine_indirect(db2, MiningParams(t_s=0.1, t_f=0.4, t_d=1.0))
        assert len(found) == 1
        assoc = found[0]
        assert {db2.label_of(assoc.a), db2.label_of(assoc.b)} == {"a", "b"}
        assert label_set(db2, assoc.mediator) == {"c"}
        assert assoc.pair_support == 0
        assert assoc.mediator_supports == (Fraction(1, 2), Fraction(1, 2))

    def test_no_rare_pairs(self, db1):
        assert mine_indirect(db1, MiningParams(t_s=0.1, t_f=0.4, t_d=1.0)) == []

    def test_zero_pair_threshold(self, db2):
        assert mine_indirect(db2, MiningParams(t_s=0, t_f=0.4, t_d=1.0)) == []

    def test_oracle(self):
        for seed in SEEDS:
            db = random_db(seed)
            params = MiningParams(t_s=0.2, t_f=0.3, t_d=1.0, max_mediator_len=3)
            mined = {
                (db.label_of(x.a), db.label_of(x.b), label_set(db, x.mediator))
                for x in mine_indirect(db, params)
            }
            canonical = {(min(a, b), max(a, b), m) for a, b, m in mined}
            assert canonical == bf_indirect(db, 0.2, 0.3, 1.0, 3)

    def test_record(self, db2):
        record = mine_indirect(db2, MiningParams(t_s=0.1, t_f=0.4, t_d=1.0))[0].to_record(db2)
        assert record["mediator"] == ["c"]
        assert record["measures"]["pair_support_fraction"] == "0/6"
        assert record["measures"]["dependence_a"] == pytest.approx(1.0, abs=TOL)


class TestStar:

    PARAMS = MiningParams(t_s=0.1, t_f=0.25, t_d=1.0)

    def test_three_leaves(self, db7):
        stars = mine_star(db7, self.PARAMS)
        assert len(stars) == 1
        assert label_set(db7, stars[0].center) == {"c"}
        assert label_set(db7, stars[0].leaves) == {"a", "b", "e"}

    def test_degenerate_star(self, db2):
        stars = mine_star(db2, self.PARAMS)
        assert [(label_set(db2, s.center), label_set(db2, s.leaves)) for s in stars] == [
            (frozenset("c"), frozenset("ab")),
        ]

    def test_no_stars(self, db1):
        assert mine_star(db1, self.PARAMS) == []

    def test_leaf_pairs_are_indirect(self):
        for seed in SEEDS:
            db = random_db(seed)
            params = MiningParams(t_s=0.2, t_f=0.3, t_d=1.0)
            indirect = {x.key for x in mine_indirect(db, params)}
            for star in mine_star(db, params):
                for a, b in combinations(star.leaves, 2):
                    assert (a, b, star.center) in indirect


class TestCliques:

    def test_clique_need_not_be_frequent(self, db3):
        found = mine_clique(db3, 0.3)
        assert label_sets(db3, patterns(found)) == {frozenset("abc")}
        assert found[0].support_count == 0
        assert found[0].measures["min_pair_support"].exact == Fraction(1, 3)

    def test_complete_graph(self, db1):
        assert label_sets(db1, patterns(mine_clique(db1, 0.5))) == {frozenset("abc")}

    def test_four_cycle(self, db4):
        assert label_sets(db4, patterns(mine_clique(db4, 0.2))) == {
            frozenset("ac"), frozenset("ad"), frozenset("bc"), frozenset("bd"),
        }

    def test_frequent_patterns_are_subsumed(self):
        for seed in SEEDS:
            db = random_db(seed)
            cliques = [set(p) for p in patterns(mine_clique(db, 0.3))]
            for found in mine_frequent(db, 0.3):
                if len(found.pattern) >= 2:
                    assert any(set(found.pattern) <= clique for clique in cliques)

    def test_pair_graph_counts(self, db1):
        graph = frequent_pair_graph(db1, 0.5)
        a, b = pat(db1, "ab")
        assert graph.edges[a, b]["count"] == 2


def _valid_biclique(db, w, v, minsup):
    n = db.n
    cross = all(Fraction(db.support_count(tuple(sorted((x, y)))), n) >= minsup for x in w for y in v)
    within = all(
        Fraction(db.support_count(pair), n) < minsup
        for side in (w, v) for pair in combinations(side, 2)
    )
    return cross and within and not set(w) & set(v)


class TestBiclique:

    def test_db4(self, db4):
        found = mine_biclique(db4, 0.2, min_side=2)
        assert [(label_set(db4, b.w), label_set(db4, b.v)) for b in found] == [
            (frozenset("ab"), frozenset("cd")),
        ]
        assert _valid_biclique(db4, found[0].w, found[0].v, Fraction(1, 5))
        record = found[0].to_record(db4)
        assert (record["w"], record["v"]) == (["a", "b"], ["c", "d"])
        assert record["measures"]["support_fraction"] == "0/4"
        assert record["measures"]["min_cross_support"] == 0.25

    def test_all_pairs_frequent(self, db1):
        assert mine_biclique(db1, 0.5, min_side=2) == []

    def test_single_item_side(self, db2):
        found = mine_biclique(db2, 0.4, min_side=1)
        assert [{label_set(db2, b.w), label_set(db2, b.v)} for b in found] == [
            {frozenset("ab"), frozenset("c")},
        ]

    def test_sides_follow_label_order(self):
        db = loads_basket("d a\nd b\nc a\nc b\n")
        found = mine_biclique(db, 0.2)
        assert len(found) == 1
        record = found[0].to_record(db)
        assert (record["w"], record["v"]) == (["a", "b"], ["c", "d"])

    def test_random_results_are_valid(self):
        for seed in SEEDS:
            db = random_db(seed)
            for b in mine_biclique(db, 0.3, min_side=1):
                assert _valid_biclique(db, b.w, b.v, Fraction(3, 10))
                assert sorted(db.labels_of(b.w)) < sorted(db.labels_of(b.v))

    def test_min_side_range(self, db1):
        with pytest.raises(MiningParameterError):
            mine_biclique(db1, 0.5, min_side=0)


class TestCorrelation:

    def test_all_correlation_db2(self, db2):
        found = mine_all_correlation(db2, 1.0, 3)
        assert label_sets(db2, patterns(found)) == {frozenset("ac"), frozenset("bc")}

    def test_all_correlation_db5(self, db5):
        assert mine_all_correlation(db5, 1.5, 3) == []
        found = mine_all_correlation(db5, 0.5, 3)
        assert len(found) == 4
        assert label_sets(db5, patterns(found)) == {
            frozenset("ab"), frozenset("ac"), frozenset("bc"), frozenset("abc"),
        }

    def test_all_correlation_is_anti_monotone(self):
        for seed in SEEDS:
            db = random_db(seed)
            for found in mine_all_correlation(db, 1.2, 4):
                for size in range(2, len(found.pattern) + 1):
                    for sub in combinations(found.pattern, size):
                        assert lift(db, sub).value >= 1.2 - TOL

    def test_unexpected_db5(self, db5):
        found = mine_unexpected_correlation(db5, 1.5, 3)
        assert label_sets(db5, patterns(found)) == {frozenset("abc")}
        assert found[0].measures["lift"].value == pytest.approx(512 / 216, abs=TOL)

    def test_unexpected_empty(self, db1, db2):
        assert mine_unexpected_correlation(db2, 1.0, 3) == []
        assert mine_unexpected_correlation(db1, 99, 3) == []

    def test_unexpected_pairs(self, db2):
        found = mine_unexpected_correlation(db2, 1.0, 3, include_pairs=True)
        assert label_sets(db2, patterns(found)) == {frozenset("ac"), frozenset("bc")}

    def test_threshold_must_be_positive(self, db1):
        with pytest.raises(MiningParameterError):
            mine_all_correlation(db1, 0)
        with pytest.raises(MiningParameterError):
            mine_unexpected_correlation(db1, -1)


class TestParams:

    def test_defaults_validate(self):
        assert MiningParams().validate().max_pattern_len is None

    @pytest.mark.parametrize("kwargs", [
        {"t_s": 0.3, "t_f": 0.2},
        {"minisupport": -0.1},
        {"max_mediator_len": 0},
        {"dependence_measure": "confidence"},
    ])
    def test_rejected(self, kwargs):
        with pytest.raises(MiningParameterError):
            MiningParams(**kwargs).validate()
