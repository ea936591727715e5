import random

import pytest

from conftest import (
    FIG1A,
    FIG1A_CUTS,
    FIG1A_PATHS,
    FIG1A_PERMS,
    FIG1B_CUTS,
    FIG1B_PATHS,
    FIG1B_PERMS,
    FIG5,
)
from oracles import brute_decide, random_network

from infodist.errors import BijectionViolated, NotExtendable, PermutationMismatch
from infodist.graph import Network
from infodist.witnesses import (
    SearchBudget,
    Witness,
    decide_information_distributive,
    find_cumulative_order,
    find_permutation_sequence,
    is_cumulative,
    is_distributive,
    is_extendable,
    menger_witness_for_single_session,
    representatives,
    validate_cut_sequence,
    verify_witness,
    witness_from_json,
)


def no_perm_gadget():
    """Six edges, one shared source: the cut-set sequence ({g,h},{g},{h})
    admits no ordering because each singleton cut pins the other shared edge
    behind an impossible bound."""
    net = Network(
        ["s", "hg", "hh", "d1", "d2", "d3"],
        [("s", "hg", 0), ("s", "hh", 0), ("hg", "d1", 0), ("hh", "d1", 0),
         ("hg", "d2", 0), ("hh", "d3", 0)],
        [("s", "d1"), ("s", "d2"), ("s", "d3")],
    )
    cuts = (frozenset({0, 1}), frozenset({0}), frozenset({1}))
    return net, cuts


def test_cumulative_fig1a(nets):
    assert is_cumulative(nets["fig1a"], FIG1A_CUTS).ok


def test_cumulative_single_session_vacuous(nets):
    assert is_cumulative(nets["parallel-m"], (frozenset({0, 1, 2}),)).ok


def test_cumulative_butterfly_bottleneck_cuts(nets):
    # Per-session bottleneck cuts: the side path s2 -> a2 -> d1 avoids the
    # session-1 bottleneck, so the pair (1, 2) fails with that witness path.
    net = nets["butterfly"]
    cuts = (frozenset({4}), frozenset({4}))
    res = is_cumulative(net, cuts)
    assert not res.ok
    j, i, path = res.violation
    assert (j, i) == (2, 1)
    assert set(path) == {1, 8}  # s2->a2, a2->d1


def test_distributive_fig1a_printed_orderings(nets):
    assert is_distributive(nets["fig1a"], FIG1A_CUTS, FIG1A_PERMS).ok


def test_distributive_vacuous_when_no_shared_edges(nets):
    net = nets["fig1b"]
    cuts = (frozenset({0, 2, 5}), frozenset({8, 10}), frozenset({12, 15}))
    validate_cut_sequence(net, cuts)
    for perms in [tuple(tuple(sorted(c)) for c in cuts)]:
        assert is_distributive(net, cuts, perms).ok


def test_distributive_fig5_printed_witness(nets):
    net = nets["fig5"]
    cuts = (
        frozenset({FIG5["e1"], FIG5["e2"], FIG5["e3"]}),
        frozenset({FIG5["e3"], FIG5["e4"], FIG5["e5"]}),
        frozenset({FIG5["e5"], FIG5["e6"], FIG5["e7"]}),
    )
    perms = (
        (FIG5["e1"], FIG5["e2"], FIG5["e3"]),
        (FIG5["e3"], FIG5["e4"], FIG5["e5"]),
        (FIG5["e5"], FIG5["e6"], FIG5["e7"]),
    )
    assert is_cumulative(net, cuts).ok
    assert is_distributive(net, cuts, perms).ok


def test_distributive_rejects_mismatched_permutation(nets):
    with pytest.raises(PermutationMismatch):
        is_distributive(nets["fig1a"], FIG1A_CUTS, ((1, 5, 11), (5, 5)))


def test_distributive_violation_tuple(nets):
    # Putting e1 (alpha=1) after e2 in T_1 while T_2 starts at e2 forces e3's
    # prefix difference to contain e2 (alpha=2), violating the second bound.
    net = nets["fig1a"]
    perms = ((FIG1A["e2"], FIG1A["e1"], FIG1A["e3"]), (FIG1A["e3"], FIG1A["e2"]))
    res = is_distributive(net, FIG1A_CUTS, perms)
    assert not res.ok
    eid, _j, other, cond = res.violation
    assert cond in ("eq20", "eq21")


def test_find_permutation_sequence_fig1a_first_found(nets):
    perms = find_permutation_sequence(nets["fig1a"], FIG1A_CUTS)
    assert perms is not None
    assert is_distributive(nets["fig1a"], FIG1A_CUTS, perms).ok
    # lexicographically first: session-1 cut {1,5,11} can open with (1, 5, 11)
    assert perms[0] == (1, 5, 11)


def test_find_permutation_sequence_singletons_unique(nets):
    net = nets["single-edge"]
    assert find_permutation_sequence(net, (frozenset({0}),)) == ((0,),)


def test_find_permutation_sequence_absent_on_gadget():
    net, cuts = no_perm_gadget()
    validate_cut_sequence(net, cuts)
    assert is_cumulative(net, cuts).ok
    assert find_permutation_sequence(net, cuts) is None


def test_extendable_fig1a(nets):
    assert is_extendable(nets["fig1a"], FIG1A_CUTS, FIG1A_PATHS).ok


def test_extendable_disjoint_paths_trivially(nets):
    net = nets["fig1b"]
    assert is_extendable(net, FIG1B_CUTS, FIG1B_PATHS).ok


def test_extendable_fig5_counterexample(nets):
    net = nets["fig5"]
    cuts = (
        frozenset({FIG5["a1"], FIG5["e3"]}),
        frozenset({FIG5["e3"], FIG5["b4"]}),
        frozenset({FIG5["e5"], FIG5["b6"]}),
    )
    validate_cut_sequence(net, cuts)
    assert is_cumulative(net, cuts).ok
    assert find_permutation_sequence(net, cuts) is not None
    p22 = (FIG5["a4"], FIG5["e5"], FIG5["b4"])
    p31 = (FIG5["a5"], FIG5["e5"], FIG5["b5"])
    paths = (
        ((FIG5["a1"], FIG5["e1"], FIG5["b1"]), (FIG5["a2"], FIG5["e3"], FIG5["b2"])),
        ((FIG5["a3"], FIG5["e3"], FIG5["b3"]), p22),
        (p31, (FIG5["a6"], FIG5["e6"], FIG5["b6"])),
    )
    res = is_extendable(net, cuts, paths)
    assert not res.ok
    a, b, shared = res.violation
    assert {a, b} == {p22, p31}
    assert shared == FIG5["e5"]


def test_extendable_bijection_violation(nets):
    net = nets["fig1a"]
    bad = (FIG1A_PATHS[0], ((4, 5, 6, 8), (4, 5, 6, 8)))
    with pytest.raises(BijectionViolated):
        is_extendable(net, FIG1A_CUTS, bad)


def test_representatives_fig1a(nets):
    rep = representatives(nets["fig1a"], FIG1A_CUTS, FIG1A_PATHS)
    assert rep[FIG1A["e4"]] == FIG1A["e2"]
    assert rep[FIG1A["e2"]] == FIG1A["e2"]
    assert rep[2] == FIG1A["e1"]  # (y1,d1) sits on the unique path through e1
    # every path through an edge contains that edge's representative
    for pset in FIG1A_PATHS:
        for path in pset:
            for eid in path:
                assert rep[eid] in path


def test_representatives_raise_when_not_extendable(nets):
    net = nets["fig5"]
    cuts = (
        frozenset({FIG5["a1"], FIG5["e3"]}),
        frozenset({FIG5["e3"], FIG5["b4"]}),
        frozenset({FIG5["e5"], FIG5["b6"]}),
    )
    paths = (
        ((FIG5["a1"], FIG5["e1"], FIG5["b1"]), (FIG5["a2"], FIG5["e3"], FIG5["b2"])),
        ((FIG5["a3"], FIG5["e3"], FIG5["b3"]), (FIG5["a4"], FIG5["e5"], FIG5["b4"])),
        ((FIG5["a5"], FIG5["e5"], FIG5["b5"]), (FIG5["a6"], FIG5["e6"], FIG5["b6"])),
    )
    with pytest.raises(NotExtendable):
        representatives(net, cuts, paths)


def test_decide_fig1a_yes_and_roundtrip(nets):
    verdict = decide_information_distributive(nets["fig1a"])
    assert verdict.status == "yes"
    assert verify_witness(nets["fig1a"], verdict.witness).ok


def test_decide_fig1b_yes(nets):
    verdict = decide_information_distributive(nets["fig1b"])
    assert verdict.status == "yes"
    assert verify_witness(nets["fig1b"], verdict.witness).ok
    # the printed (reconstructed) witness itself re-verifies too
    printed = Witness((1, 2, 3), FIG1B_CUTS, FIG1B_PERMS, FIG1B_PATHS)
    assert verify_witness(nets["fig1b"], printed).ok


def test_decide_fig5_no_exhausted(nets):
    verdict = decide_information_distributive(nets["fig5"])
    assert verdict.status == "no"
    assert verdict.stats.exhausted


def test_decide_butterfly_no(nets):
    verdict = decide_information_distributive(nets["butterfly"])
    assert verdict.status == "no"
    assert verdict.stats.exhausted


def test_decide_budget_exhaustion_reports_unknown(nets):
    verdict = decide_information_distributive(
        nets["fig5"], SearchBudget(max_candidates=2)
    )
    assert verdict.status == "unknown"
    assert not verdict.stats.exhausted


def test_decide_single_session_always_yes():
    rng = random.Random(23)
    for _ in range(25):
        net = random_network(rng, max_internal=5, max_sessions=1)
        verdict = decide_information_distributive(net)
        assert verdict.status == "yes"
        wit = menger_witness_for_single_session(net)
        assert verify_witness(net, wit).ok


def test_decide_handles_degenerate_session():
    net = Network(
        ["s1", "d1", "s2", "d2", "x"],
        [("s1", "x", 0), ("x", "d1", 0), ("s2", "x", 0)],
        [("s1", "d1"), ("s2", "d2")],
    )
    verdict = decide_information_distributive(net)
    assert verdict.status == "yes"
    pos = verdict.witness.session_order.index(2)
    assert verdict.witness.cuts[pos] == frozenset()


def test_decide_yes_invariant_under_session_relabeling(nets):
    for name in ("fig1a", "fig1b"):
        net = nets[name]
        K = net.num_sessions
        order = tuple(range(K, 0, -1))
        relabeled = net.reindex_sessions(order)
        assert decide_information_distributive(relabeled).status == "yes"


def test_decide_matches_bruteforce_on_small_networks():
    rng = random.Random(3)
    checked = 0
    while checked < 12:
        net = random_network(rng, max_internal=3, max_sessions=2, edge_prob=0.7)
        if len(net.edges) > 8:
            continue
        checked += 1
        verdict = decide_information_distributive(net)
        assert verdict.status in ("yes", "no")
        assert (verdict.status == "yes") == brute_decide(net)


def test_find_cumulative_order_gadget():
    net, cuts = no_perm_gadget()
    assert find_cumulative_order(net, list(cuts)) is not None


def test_witness_json_roundtrip(nets):
    verdict = decide_information_distributive(nets["fig1a"])
    data = verdict.witness.to_json_dict()
    back = witness_from_json(data)
    assert back == verdict.witness


def test_strict_def5_flag_tightens_first_condition():
    # e sits in C_1 and C_2; w (alpha=2) precedes e in T_2 only.  The printed
    # bound compares against the last containing index (2) and passes; the
    # symmetric reading compares against n_{j+1}-1 = 1 and fails.
    net = Network(
        ["s1", "s2", "s3", "me", "he", "mx", "hx", "mw", "hw", "d1", "d2", "d3"],
        [
            ("s1", "me", 0), ("me", "he", 0), ("he", "d1", 0),
            ("s1", "mx", 0), ("mx", "hx", 0), ("hx", "d1", 0),
            ("s2", "me", 0), ("he", "d2", 0),
            ("s2", "mw", 0), ("mw", "hw", 0), ("hw", "d2", 0),
            ("s3", "d3", 0),
        ],
        [("s1", "d1"), ("s2", "d2"), ("s3", "d3")],
    )
    E, X, W = 1, 4, 9
    cuts = (frozenset({E, X}), frozenset({E, W}), frozenset({11}))
    validate_cut_sequence(net, cuts)
    perms = ((E, X), (W, E), (11,))
    assert is_distributive(net, cuts, perms, strict=False).ok
    res = is_distributive(net, cuts, perms, strict=True)
    assert not res.ok
    assert res.violation[3] == "eq20"
