import random

import pytest

from conftest import FIG1A, FIG5
from oracles import brute_min_cut, random_network

from infodist.errors import (
    CutNotSaturable,
    CycleDetected,
    DuplicateEdge,
    SinkHasOutEdge,
    SourceHasInEdge,
)
from infodist.graph import (
    Network,
    alpha,
    edge_disjoint_paths,
    enumerate_min_cutsets,
    enumerate_paths,
    min_cut,
    routing_domain,
    validate_network,
)


def test_validate_accepts_corpus_fig1a(nets):
    net = nets["fig1a"]
    assert net.num_sessions == 2
    assert net.topo_pos["s1"] < net.topo_pos["d1"]


def test_validate_single_edge():
    net = validate_network(
        {"nodes": ["s", "d"], "edges": [["s", "d"]], "sessions": [["s", "d"]]}
    )
    assert len(net.edges) == 1


def test_validate_rejects_two_cycle():
    with pytest.raises(CycleDetected) as exc:
        validate_network(
            {
                "nodes": ["u", "v", "s", "d"],
                "edges": [["u", "v"], ["v", "u"], ["s", "u"], ["v", "d"]],
                "sessions": [["s", "d"]],
            }
        )
    assert exc.value.edge is not None


def test_validate_rejects_duplicate_edge():
    with pytest.raises(DuplicateEdge):
        validate_network(
            {"nodes": ["s", "d"], "edges": [["s", "d", 0], ["s", "d", 0]],
             "sessions": [["s", "d"]]}
        )


def test_validate_rejects_terminal_degree_violations():
    with pytest.raises(SourceHasInEdge) as exc:
        Network(["a", "s", "d"], [("a", "s", 0), ("s", "d", 0)], [("s", "d")])
    assert exc.value.session == 1
    with pytest.raises(SinkHasOutEdge):
        Network(["s", "d", "b"], [("s", "d", 0), ("d", "b", 0)], [("s", "d")])


def test_routing_domain_fig1a_session2(nets):
    dom = routing_domain(nets["fig1a"], 2)
    assert FIG1A["e1"] not in dom.edges
    assert FIG1A["e2"] in dom.edges and FIG1A["e3"] in dom.edges
    # edges reaching only d1 are excluded: (w4,d1)=7, (v3,d1)=12
    assert 7 not in dom.edges and 12 not in dom.edges


def test_routing_domain_single_edge(nets):
    assert routing_domain(nets["single-edge"], 1).edges == frozenset({0})


def test_routing_domain_disconnected_is_empty_flag():
    net = Network(["s", "d", "x"], [("s", "x", 0)], [("s", "d")])
    dom = routing_domain(net, 1)
    assert dom.empty


def test_min_cut_examples(nets):
    fig1a = nets["fig1a"]
    dom = routing_domain(fig1a, 1)
    assert min_cut(fig1a, "s1", "d1", within=dom.edges).value == 3
    assert min_cut(nets["single-edge"], "s", "d").value == 1
    assert min_cut(nets["parallel-m"], "s", "d").value == 3


def test_min_cut_unreachable_is_zero():
    net = Network(["s", "d", "x"], [("s", "x", 0)], [("s", "d")])
    assert min_cut(net, "s", "d").value == 0


def test_enumerate_min_cutsets_trivial_cases(nets):
    two = Network(["s", "d"], [("s", "d", 0), ("s", "d", 1)], [("s", "d")])
    sets, trunc = enumerate_min_cutsets(two, "s", "d")
    assert sets == [frozenset({0, 1})] and not trunc

    chain = Network(["s", "x", "d"], [("s", "x", 0), ("x", "d", 0)], [("s", "d")])
    sets, _ = enumerate_min_cutsets(chain, "s", "d")
    assert sets == [frozenset({0}), frozenset({1})]


def test_enumerate_min_cutsets_fig1a_matches_bruteforce(nets):
    net = nets["fig1a"]
    dom = routing_domain(net, 1)
    sets, trunc = enumerate_min_cutsets(net, "s1", "d1", within=dom.edges)
    assert not trunc
    assert frozenset({FIG1A["e1"], FIG1A["e2"], FIG1A["e3"]}) in sets
    value, expected = brute_min_cut(net, "s1", "d1", within=dom.edges)
    assert value == 3
    assert sorted(map(sorted, sets)) == sorted(map(sorted, expected))


def test_min_cutsets_are_minimal_and_disconnect(nets):
    from infodist.graph import has_path

    net = nets["fig1a"]
    dom = routing_domain(net, 2)
    sets, _ = enumerate_min_cutsets(net, "s2", "d2", within=dom.edges)
    for cut in sets:
        assert not has_path(net, "s2", "d2", removed=cut)
        for eid in cut:
            assert has_path(net, "s2", "d2", removed=cut - {eid})


def test_edge_disjoint_paths_parallel(nets):
    net = nets["parallel-m"]
    paths = edge_disjoint_paths(net, "s", "d", {0, 1, 2})
    assert paths == [(0,), (1,), (2,)]


def test_edge_disjoint_paths_fig1a_cut_alignment(nets):
    net = nets["fig1a"]
    cut = sorted({FIG1A["e1"], FIG1A["e2"], FIG1A["e3"]})
    paths = edge_disjoint_paths(net, "s1", "d1", cut)
    assert len(paths) == 3
    seen = set()
    for eid, path in zip(cut, paths):
        assert eid in path
        assert not (seen & set(path))
        seen |= set(path)


def test_edge_disjoint_paths_single_chain():
    chain = Network(["s", "x", "d"], [("s", "x", 0), ("x", "d", 0)], [("s", "d")])
    assert edge_disjoint_paths(chain, "s", "d", {0}) == [(0, 1)]


def test_edge_disjoint_paths_rejects_non_cut(nets):
    net = nets["fig1a"]
    with pytest.raises(CutNotSaturable):
        edge_disjoint_paths(net, "s1", "d1", {FIG1A["e1"]})


def test_menger_consistency_over_all_min_cutsets(nets):
    for name in ("fig1a", "fig1b", "fig5", "butterfly"):
        net = nets[name]
        for i in range(1, net.num_sessions + 1):
            s, d = net.sessions[i - 1]
            dom = routing_domain(net, i)
            if dom.empty:
                continue
            value = min_cut(net, s, d, within=dom.edges).value
            sets, _ = enumerate_min_cutsets(net, s, d, within=dom.edges)
            for cut in sets:
                assert len(edge_disjoint_paths(net, s, d, cut, within=dom.edges)) == value


def test_enumerate_paths_examples(nets):
    assert enumerate_paths(nets["single-edge"], "s", "d") == ([(0,)], False)
    diamond = Network(
        ["s", "a", "b", "d"],
        [("s", "a", 0), ("s", "b", 0), ("a", "d", 0), ("b", "d", 0)],
        [("s", "d")],
    )
    paths, _ = enumerate_paths(diamond, "s", "d")
    assert paths == [(0, 2), (1, 3)]


def test_enumerate_paths_fig5_session2(nets):
    paths, trunc = enumerate_paths(nets["fig5"], "s2", "d2")
    assert not trunc
    expected = {
        (FIG5["a3"], FIG5["e3"], FIG5["b3"]),
        (FIG5["a3"], FIG5["e4"], FIG5["b4"]),
        (FIG5["a4"], FIG5["e5"], FIG5["b4"]),
    }
    assert set(paths) == expected


def test_enumerate_paths_truncation_flag(nets):
    paths, trunc = enumerate_paths(nets["fig1a"], "s1", "d1", limit=2)
    assert len(paths) == 2 and trunc
    paths, trunc = enumerate_paths(nets["fig1a"], "s1", "d1", limit=3)
    assert len(paths) == 3 and not trunc


def test_paths_cross_every_min_cutset(nets):
    net = nets["fig1b"]
    for i in range(1, 4):
        s, d = net.sessions[i - 1]
        dom = routing_domain(net, i)
        paths, _ = enumerate_paths(net, s, d, within=dom.edges)
        sets, _ = enumerate_min_cutsets(net, s, d, within=dom.edges)
        for cut in sets:
            for path in paths:
                assert cut & set(path)


def test_alpha_examples(nets):
    net = nets["fig1a"]
    assert alpha(net, FIG1A["e1"]) == 1
    assert alpha(net, FIG1A["e2"]) == 2
    assert alpha(net, FIG1A["e4"]) == 2
    # an edge out of the last source takes that session index
    assert alpha(net, 4) == 2  # (s2, u2)
    assert alpha(net, 0) == 1  # (s1, x1)


def test_alpha_zero_for_source_unreachable_edge():
    net = Network(
        ["s", "d", "x", "y"],
        [("s", "d", 0), ("x", "y", 0)],
        [("s", "d")],
    )
    assert alpha(net, 1) == 0


def test_alpha_monotone_along_edges():
    rng = random.Random(5)
    for _ in range(40):
        net = random_network(rng)
        for eid, e in enumerate(net.edges):
            for nxt in net.out_edges[e.head]:
                assert alpha(net, nxt) >= alpha(net, eid)


def test_min_cut_matches_bruteforce_on_random_networks():
    rng = random.Random(11)
    for _ in range(30):
        net = random_network(rng, max_internal=4, max_sessions=2)
        if len(net.edges) > 12:
            continue
        for i in range(1, net.num_sessions + 1):
            s, d = net.sessions[i - 1]
            value, _ = brute_min_cut(net, s, d)
            assert min_cut(net, s, d).value == value
