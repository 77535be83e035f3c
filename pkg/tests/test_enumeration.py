import csv
import io
import json
import random

import pytest

from crthrottle import families
from crthrottle.canon import canonical_form
from crthrottle.enumeration import (
    CacheIntegrityError,
    FilterError,
    Filter,
    GraphFields,
    ResultCache,
    SolverCounter,
    classify,
    generate_connected,
    generate_trees,
    read_graph6_lines,
    report,
)
from crthrottle.graph import emit_graph6, is_connected, labeled_graphs


def test_connected_counts():
    assert [len(generate_connected(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_order4_against_labeled_oracle():
    forms = {canonical_form(g) for g in labeled_graphs(4) if is_connected(g)}
    assert sorted(forms) == [emit_graph6(g) for g in generate_connected(4)]


def test_no_duplicates_and_sorted():
    for n in range(1, 7):
        forms = [canonical_form(g) for g in generate_connected(n)]
        assert forms == sorted(set(forms))


def test_order_range():
    with pytest.raises(ValueError):
        generate_connected(0)
    with pytest.raises(ValueError):
        generate_connected(9)


def test_tree_counts():
    assert [len(generate_trees(n)) for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_order7_domination_three():
    recs = classify(generate_connected(7), "gamma=3")
    assert len(recs) == 42
    assert sum(r.is_tree for r in recs) == 5


def test_small_orders_have_gap_one():
    for n in range(2, 7):
        assert classify(generate_connected(n), "gap!=1") == []


@pytest.mark.parametrize("text", ["gamma>=2, gap=1", "dmg1 = n - maxdeg - 1", "th_c <= 2*gamma && c=1",
                                  "capt_1 = inf", "dmg_2 < dmg1 and tree=0"])
def test_filter_parses(text):
    Filter.parse(text)


@pytest.mark.parametrize("text", ["bogus=1", "gamma", "gamma=3,,c=1", "gamma=__import__('os')", "1<2<3"])
def test_filter_errors(text):
    with pytest.raises(FilterError):
        Filter.parse(text)


def test_filter_arithmetic():
    g = families.gear(4)
    f = GraphFields(g)
    assert Filter.parse("dmg1 = n - maxdeg - 4")(f)
    assert Filter.parse("th_c - th_d = 2")(f)


def test_classification_order_independent():
    graphs = generate_connected(5)
    shuffled = list(graphs)
    random.Random(7).shuffle(shuffled)
    shuffled = [g.relabel(list(reversed(range(g.n)))) for g in shuffled]
    assert report(classify(graphs)) == report(classify(shuffled))


def test_parallel_matches_sequential():
    graphs = generate_connected(5)
    assert report(classify(graphs, "gamma=2", workers=2)) == report(classify(graphs, "gamma=2"))


class TestCache:
    def test_put_get(self, tmp_path):
        c = ResultCache(tmp_path / "c.jsonl")
        key = canonical_form(families.petersen())
        assert c.get(key, "dmg:2") is None
        c.put(key, "dmg:2", 2)
        c.put(key, "dmg:2", 2)
        assert ResultCache(tmp_path / "c.jsonl").get(key, "dmg:2") == 2
        assert len((tmp_path / "c.jsonl").read_text().splitlines()) == 1

    def test_conflict(self, tmp_path):
        c = ResultCache(tmp_path / "c.jsonl")
        c.put("Bw", "gamma", 1)
        with pytest.raises(CacheIntegrityError):
            c.put("Bw", "gamma", 2)

    def test_corrupt_line_named(self, tmp_path):
        p = tmp_path / "c.jsonl"
        p.write_text('{"g6": "Bw", "param": "gamma", "value": 1}\nnot json\n')
        with pytest.raises(CacheIntegrityError, match=":2:"):
            ResultCache(p)

    def test_infinity_round_trip(self, tmp_path):
        c = ResultCache(tmp_path / "c.jsonl")
        c.put("C]", "capt:1", float("inf"))
        assert '"inf"' in (tmp_path / "c.jsonl").read_text()
        assert ResultCache(tmp_path / "c.jsonl").get("C]", "capt:1") == float("inf")

    def test_warm_replay_skips_solvers(self, tmp_path):
        graphs = generate_connected(5)
        path = tmp_path / "c.jsonl"
        first = report(classify(graphs, cache=ResultCache(path)))
        before = SolverCounter.calls
        second = report(classify(graphs, cache=ResultCache(path)))
        assert first == second
        assert SolverCounter.calls == before


class TestReport:
    def test_empty_is_header_only(self):
        assert report([]).strip() == "g6,n,c,gamma,th_c,th_d,gap"

    def test_k2_row(self):
        rows = list(csv.DictReader(io.StringIO(report(classify([families.complete(2)])))))
        assert len(rows) == 1
        assert (rows[0]["th_c"], rows[0]["th_d"], rows[0]["capt_2"]) == ("2", "1", "0")

    def test_column_order(self):
        header = report(classify([families.path(3)])).splitlines()[0].split(",")
        assert header == ["g6", "n", "c", "gamma", "th_c", "th_d", "gap",
                          "capt_1", "capt_2", "capt_3", "dmg_1", "dmg_2", "dmg_3",
                          "rad_1", "rad_2", "rad_3"]

    def test_json_round_trip(self):
        recs = classify([families.cycle(4), families.complete(3)])
        data = json.loads(report(recs, "json"))
        assert [d["g6"] for d in data] == [r.g6 for r in recs]
        c4 = next(d for d in data if d["n"] == 4)
        assert c4["capt"]["1"] == "inf" and c4["c"] == 2

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            report([], "xml")


def test_read_graph6_lines():
    gs = read_graph6_lines("Bw\n\nBg\n")
    assert [emit_graph6(g) for g in gs] == ["Bw", "Bg"]
