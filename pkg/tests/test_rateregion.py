import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import vertex_enum_max

from infodist import simplex
from infodist.errors import PathEnumerationTruncated, UnknownPath
from infodist.graph import Network, require_paths
from infodist.rateregion import (
    RoutingScheme,
    check_rate_feasible,
    max_scaled_rate,
    scheme_from_json,
    verify_routing_scheme,
)


def test_single_edge_feasibility(nets):
    net = nets["single-edge"]
    assert check_rate_feasible(net, [1]).feasible
    assert not check_rate_feasible(net, [Fraction(3, 2)]).feasible


def test_two_disjoint_sessions_feasible():
    net = Network(
        ["s1", "d1", "s2", "d2"],
        [("s1", "d1", 0), ("s2", "d2", 0)],
        [("s1", "d1"), ("s2", "d2")],
    )
    res = check_rate_feasible(net, [1, 1])
    assert res.feasible
    assert verify_routing_scheme(net, res.scheme, [1, 1]).ok


def test_butterfly_unit_rates_infeasible(nets):
    assert not check_rate_feasible(nets["butterfly"], [1, 1]).feasible


def test_feasible_witness_schemes_verify(nets):
    for name, rates in [("fig1a", [1, 1]), ("fig1a", [2, 1]), ("fig5", [1, 1, 1])]:
        res = check_rate_feasible(nets[name], rates)
        assert res.feasible
        assert verify_routing_scheme(nets[name], res.scheme, rates).ok


def test_max_scaled_rate_examples(nets):
    assert max_scaled_rate(nets["single-edge"], [1]).lam == 1
    assert max_scaled_rate(nets["parallel-m"], [1]).lam == 3
    bf = max_scaled_rate(nets["butterfly"], [1, 1])
    assert bf.lam == Fraction(1, 2)
    assert 0 < bf.lam < 1
    assert max_scaled_rate(nets["fig1a"], [1, 1]).lam == Fraction(3, 2)


def test_max_scaled_rate_zero_direction_entry(nets):
    res = max_scaled_rate(nets["fig1a"], [0, 1])
    assert res.lam == 2


def test_max_scaled_rate_rejects_zero_direction(nets):
    with pytest.raises(ValueError):
        max_scaled_rate(nets["fig1a"], [0, 0])


def _lp_for_direction(net, direction):
    """The (c, A, b) triple max_scaled_rate solves, for oracle comparison."""
    session_paths = [require_paths(net, s, d) for s, d in net.sessions]
    nvars = sum(map(len, session_paths)) + 1
    offsets, col = [], 0
    for paths in session_paths:
        offsets.append(col)
        col += len(paths)
    A, b = [], []
    for i, paths in enumerate(session_paths):
        if direction[i] == 0:
            continue
        row = [Fraction(0)] * nvars
        row[-1] = Fraction(direction[i])
        for k in range(len(paths)):
            row[offsets[i] + k] = Fraction(-1)
        A.append(row)
        b.append(Fraction(0))
    used = sorted({e for paths in session_paths for p in paths for e in p})
    for eid in used:
        row = [Fraction(0)] * nvars
        for i, paths in enumerate(session_paths):
            for k, p in enumerate(paths):
                if eid in p:
                    row[offsets[i] + k] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    c = [Fraction(0)] * nvars
    c[-1] = Fraction(1)
    return c, A, b


def test_lp_optimum_matches_vertex_enumeration(nets):
    for name in ("single-edge", "parallel-m", "butterfly"):
        net = nets[name]
        direction = [1] * net.num_sessions
        got = max_scaled_rate(net, direction).lam
        c, A, b = _lp_for_direction(net, direction)
        assert got == vertex_enum_max(c, A, b)


def test_lp_duality_certificate(nets):
    # weak duality exactly: y >= 0, yA >= c componentwise, y.b == optimum
    for name in ("butterfly", "fig1a", "parallel-m"):
        net = nets[name]
        direction = [1] * net.num_sessions
        c, A, b = _lp_for_direction(net, direction)
        res = simplex.solve(c, A, b)
        assert res.status == simplex.OPTIMAL
        y = res.dual
        assert all(v >= 0 for v in y)
        for j in range(len(c)):
            assert sum(y[i] * A[i][j] for i in range(len(A))) >= c[j]
        assert sum(yi * bi for yi, bi in zip(y, b)) == res.value


@settings(max_examples=40, deadline=None)
@given(
    r1=st.fractions(min_value=0, max_value=2),
    r2=st.fractions(min_value=0, max_value=2),
    shrink1=st.fractions(min_value=0, max_value=1),
    shrink2=st.fractions(min_value=0, max_value=1),
)
def test_feasibility_downward_closed(nets, r1, r2, shrink1, shrink2):
    net = nets["fig1a"]
    if check_rate_feasible(net, [r1, r2]).feasible:
        assert check_rate_feasible(net, [r1 * shrink1, r2 * shrink2]).feasible


def test_verify_zero_scheme_against_zero_rates(nets):
    net = nets["fig1a"]
    scheme = RoutingScheme((dict(), dict()))
    assert verify_routing_scheme(net, scheme, [0, 0]).ok
    assert not verify_routing_scheme(net, scheme, [1, 0]).ok


def test_verify_overload_names_first_edge(nets):
    net = nets["single-edge"]
    scheme = RoutingScheme(({(0,): Fraction(2)},))
    res = verify_routing_scheme(net, scheme, [2])
    assert not res.ok
    assert res.violation == ("capacity", 0)


def test_verify_rate_violation_names_session(nets):
    net = nets["fig1a"]
    scheme = RoutingScheme(({(0, 1, 2): Fraction(1)}, dict()))
    res = verify_routing_scheme(net, scheme, [1, 1])
    assert res.violation == ("rate", 2)


def test_verify_rejects_unknown_path(nets):
    net = nets["fig1a"]
    scheme = RoutingScheme(({(0, 2): Fraction(1)}, dict()))
    with pytest.raises(UnknownPath):
        verify_routing_scheme(net, scheme, [0, 0])


def test_scheme_json_roundtrip(nets):
    net = nets["fig1a"]
    res = check_rate_feasible(net, [1, 1])
    data = res.scheme.to_json_dict()
    back = scheme_from_json(data, net.num_sessions)
    assert back.flows == tuple(
        {p: v for p, v in fl.items() if v} for fl in res.scheme.flows
    )
    for entry in data["flows"]:
        Fraction(entry["value"])  # parses exactly


def test_path_truncation_raises(nets):
    with pytest.raises(PathEnumerationTruncated):
        check_rate_feasible(nets["fig1a"], [1, 1], path_limit=1)


def test_random_feasibility_monotonic_in_scaling():
    rng = random.Random(17)
    from oracles import random_network

    for _ in range(10):
        net = random_network(rng, max_internal=4, max_sessions=2)
        direction = [1] * net.num_sessions
        lam = max_scaled_rate(net, direction).lam
        assert check_rate_feasible(net, [lam] * net.num_sessions).feasible
        bump = [lam + Fraction(1, 7)] * net.num_sessions
        assert not check_rate_feasible(net, bump).feasible
