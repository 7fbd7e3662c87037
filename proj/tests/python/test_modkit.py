import json
import random

import networkx as nx
import pytest

import modkit


def test_graph6_matches_networkx():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randint(1, 12)
        h = nx.gnp_random_graph(n, 0.4, seed=rng.randint(0, 10**6))
        text = nx.to_graph6_bytes(h, header=False).decode().strip()
        g = modkit.Graph.from_graph6(text)
        assert g.n == n
        assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in h.edges())
        assert g.to_graph6() == text


def test_decomposition():
    tree = modkit.decompose(modkit.cycle(5))
    assert tree["kind"] == "Prime"
    assert len(tree["children"]) == 5
    assert modkit.modular_width(modkit.hn_graph(2)) == 7


def test_parameters():
    k33 = modkit.complete_bipartite(3, 3)
    assert len(modkit.cluster_mc(k33)) == 2
    assert len(modkit.interval_mc(modkit.cycle(4))) == 2
    k, order, classes = modkit.thinness(modkit.cycle(4))
    assert k == 2 and sorted(order) == [0, 1, 2, 3] and len(classes) == 2
    assert modkit.neighborhood_diversity(modkit.c_copies_k2(4)) == 4
    assert len(modkit.twin_cover(k33)) == 3
    assert modkit.chromatic_number(modkit.cycle(5)) == 3


def test_interval_recognition_against_networkx():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 10)
        spans = [tuple(sorted((rng.randint(0, 20), rng.randint(0, 20)))) for _ in range(n)]
        h = nx.convert_node_labels_to_integers(nx.interval_graph(list(dict.fromkeys(spans))))
        g = modkit.Graph(h.number_of_nodes(), list(h.edges()))
        assert modkit.is_interval(g)
    for _ in range(60):
        h = nx.gnp_random_graph(rng.randint(1, 9), 0.5, seed=rng.randint(0, 10**6))
        g = modkit.Graph(h.number_of_nodes(), list(h.edges()))
        if modkit.is_interval(g):
            assert nx.is_chordal(h)
    assert not modkit.is_interval(modkit.cycle(4))


def test_simultaneous_interval():
    si, rep = modkit.si_exact(modkit.complete_bipartite(2, 3))
    assert si == 2
    assert len(rep["intervals"]) == 5
    assert modkit.si_decide(modkit.cycle(4), 1) is None
    assert modkit.si_decide(modkit.cycle(4), 2)["d"] == 2


def test_mim_width():
    assert modkit.lmimw(modkit.hn_graph(1))[0] == 1
    for n in range(4):
        assert modkit.layout_mimw(modkit.hn_graph(n), modkit.hn_canonical_layout(n)) == n
    assert modkit.cut_mim(modkit.c_copies_k2(2), [0, 2]) == 2


def test_errors():
    with pytest.raises(modkit.ParseError):
        modkit.Graph.from_graph6("D?")
    with pytest.raises(modkit.GuardError):
        modkit.thinness(modkit.Graph(12))
    with pytest.raises(modkit.ModkitError):
        modkit.is_module(modkit.path(3), [5])


def test_cli_round_trip():
    code, out, _ = modkit.cli("sim-interval", "--exact", "--graph", modkit.complete_bipartite(3, 3).to_graph6())
    assert code == 0 and out["si"] == 3
    code, verdict, _ = modkit.cli(
        "verify", "--kind", "sim-rep", "--graph", modkit.complete_bipartite(3, 3).to_graph6(), "--witness", "-",
        input=json.dumps(out),
    )
    assert code == 0 and verdict["valid"] is True
