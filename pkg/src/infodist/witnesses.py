"""The three topological certificates and the information-distributive verdict.

A witness is a per-session triple: minimum cut-sets (one per session), a
permutation of each cut-set, and a path set crossing each cut-set bijectively.
The checkers validate the three defining properties (cumulative, distributive,
extendable); the decision procedure searches for a witness exhaustively and
only reports "no" when the whole candidate space was covered.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Optional, Sequence

from .errors import BijectionViolated, NotExtendable, PermutationMismatch
from .graph import (
    Network,
    Path,
    alpha,
    edge_disjoint_paths,
    enumerate_min_cutsets,
    enumerate_paths,
    find_path,
    has_path,
    min_cut,
    routing_domain,
    validate_path,
)

CutSetSequence = tuple[frozenset[int], ...]
PermutationSequence = tuple[tuple[int, ...], ...]
PathSetSequence = tuple[tuple[Path, ...], ...]


@dataclass(frozen=True)
class Witness:
    """A full certificate, interpreted against sessions in ``session_order``.

    Position p of cuts/perms/paths belongs to original session
    ``session_order[p]`` (1-based).  For the identity order this is simply
    the network's own session numbering.
    """

    session_order: tuple[int, ...]
    cuts: CutSetSequence
    perms: PermutationSequence
    paths: PathSetSequence

    def to_json_dict(self) -> dict:
        return {
            "session_order": list(self.session_order),
            "cuts": [sorted(c) for c in self.cuts],
            "perms": [list(p) for p in self.perms],
            "paths": [[list(p) for p in ps] for ps in self.paths],
        }


def witness_from_json(data) -> Witness:
    cuts = tuple(frozenset(c) for c in data["cuts"])
    order = tuple(data.get("session_order", range(1, len(cuts) + 1)))
    return Witness(
        session_order=order,
        cuts=cuts,
        perms=tuple(tuple(p) for p in data["perms"]),
        paths=tuple(tuple(tuple(p) for p in ps) for ps in data["paths"]),
    )


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    violation: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def validate_cut_sequence(net: Network, cuts: CutSetSequence) -> None:
    """Enforce the cut-set sequence invariants; raises ValueError on failure."""
    if len(cuts) != net.num_sessions:
        raise ValueError("one cut-set per session required")
    for i, cut in enumerate(cuts, start=1):
        s, d = net.sessions[i - 1]
        dom = routing_domain(net, i)
        if dom.empty:
            if cut:
                raise ValueError(f"session {i} has no path; its cut-set must be empty")
            continue
        if not cut <= dom.edges:
            raise ValueError(f"cut-set of session {i} leaves its routing domain")
        value, _ = min_cut(net, s, d, within=dom.edges)
        if len(cut) != value:
            raise ValueError(
                f"cut-set of session {i} has size {len(cut)}, min-cut is {value}"
            )
        if has_path(net, s, d, removed=cut):
            raise ValueError(f"cut-set of session {i} does not disconnect {s!r}->{d!r}")


def is_cumulative(net: Network, cuts: CutSetSequence) -> CheckResult:
    """Every path from a later source s_j to an earlier sink d_i meets C_i.

    Checked by reachability after removing C_i; the violation, if any, is one
    offending (j, i, path).
    """
    K = net.num_sessions
    for i in range(1, K):
        removed = cuts[i - 1]
        d_i = net.sink(i)
        for j in range(i + 1, K + 1):
            path = find_path(net, net.source(j), d_i, removed=removed)
            if path is not None:
                return CheckResult(False, (j, i, path))
    return CheckResult(True)


def _prefix(perm: tuple[int, ...], eid: int) -> frozenset[int]:
    return frozenset(perm[: perm.index(eid)])


def is_distributive(
    net: Network,
    cuts: CutSetSequence,
    perms: PermutationSequence,
    strict: bool = False,
) -> CheckResult:
    """Check the alpha-bounded ordering conditions of the permutation sequence.

    For each edge e in several cut-sets C_{n_1} < ... < C_{n_k} and each
    consecutive pair (n_j, n_{j+1}):

      * edges before e in T_{n_{j+1}} but not in T_{n_j} need alpha <= n_k
        (strict=True tightens the bound to n_{j+1} - 1, the symmetric reading);
      * edges before e in T_{n_j} but not in T_{n_{j+1}} need alpha <= n_{j+1} - 1.

    Violation is (e, pair index j, offending edge, condition id).
    """
    if len(perms) != len(cuts):
        raise PermutationMismatch("one permutation per cut-set required")
    for i, (cut, perm) in enumerate(zip(cuts, perms), start=1):
        if frozenset(perm) != cut or len(perm) != len(cut):
            raise PermutationMismatch(f"permutation {i} does not order its cut-set")

    shared: dict[int, list[int]] = {}
    for i, cut in enumerate(cuts, start=1):
        for eid in cut:
            shared.setdefault(eid, []).append(i)
    for eid, occ in sorted(shared.items()):
        k = len(occ)
        if k == 1:
            continue
        n_k = occ[-1]
        for j in range(k - 1):
            a, b = occ[j], occ[j + 1]
            before_a = _prefix(perms[a - 1], eid)
            before_b = _prefix(perms[b - 1], eid)
            bound20 = (b - 1) if strict else n_k
            for other in sorted(before_b - before_a):
                if alpha(net, other) > bound20:
                    return CheckResult(False, (eid, j + 1, other, "eq20"))
            for other in sorted(before_a - before_b):
                if alpha(net, other) > b - 1:
                    return CheckResult(False, (eid, j + 1, other, "eq21"))
    return CheckResult(True)


def find_permutation_sequence(
    net: Network, cuts: CutSetSequence, strict: bool = False
) -> Optional[PermutationSequence]:
    """First permutation sequence (lexicographic) passing the ordering check."""
    pools = [list(permutations(sorted(cut))) for cut in cuts]
    for perms in product(*pools):
        if is_distributive(net, cuts, perms, strict=strict):
            return perms
    return None


def _crossing(path: Path, cut: frozenset[int]) -> list[int]:
    return [eid for eid in path if eid in cut]


def is_extendable(
    net: Network, cuts: CutSetSequence, paths: PathSetSequence
) -> CheckResult:
    """All paths sharing an edge must cross one common cut edge.

    The printed condition quantifies over session pairs i<j; the proof's
    representative argument needs it for same-session pairs too, so every
    pair is checked.  The bijection invariant (each path crosses its own
    cut-set exactly once, bijectively) is enforced first.
    """
    if len(paths) != len(cuts):
        raise ValueError("one path set per session required")
    owner: dict[int, tuple[int, Path, int]] = {}
    for i, (cut, pset) in enumerate(zip(cuts, paths), start=1):
        if len(pset) != len(cut):
            raise BijectionViolated(i, None, set())
        seen_cut_edges = set()
        for path in pset:
            crossed = _crossing(path, cut)
            if len(crossed) != 1 or crossed[0] in seen_cut_edges:
                raise BijectionViolated(i, path, set(crossed))
            seen_cut_edges.add(crossed[0])
    for i, (cut, pset) in enumerate(zip(cuts, paths), start=1):
        for path in pset:
            rep = _crossing(path, cut)[0]
            for eid in path:
                prev = owner.get(eid)
                if prev is not None and prev[2] != rep:
                    return CheckResult(False, (prev[1], path, eid))
                if prev is None:
                    owner[eid] = (i, path, rep)
    return CheckResult(True)


def representatives(
    net: Network, cuts: CutSetSequence, paths: PathSetSequence
) -> dict[int, int]:
    """Map edge -> the unique cut edge crossed by every path through it."""
    result = is_extendable(net, cuts, paths)
    if not result:
        raise NotExtendable(f"shared edge without common cut edge: {result.violation}")
    rep: dict[int, int] = {}
    for cut, pset in zip(cuts, paths):
        for path in pset:
            cut_edge = _crossing(path, cut)[0]
            for eid in path:
                rep[eid] = cut_edge
    return rep


def verify_witness(net: Network, wit: Witness, strict: bool = False) -> CheckResult:
    """Round-trip check: re-verify all three properties (and the invariants)."""
    if sorted(wit.session_order) != list(range(1, net.num_sessions + 1)):
        return CheckResult(False, ("session_order", wit.session_order))
    ordered = net.reindex_sessions(wit.session_order)
    try:
        validate_cut_sequence(ordered, wit.cuts)
    except ValueError as exc:
        return CheckResult(False, ("cuts", str(exc)))
    cum = is_cumulative(ordered, wit.cuts)
    if not cum:
        return CheckResult(False, ("cumulative", cum.violation))
    try:
        dis = is_distributive(ordered, wit.cuts, wit.perms, strict=strict)
    except PermutationMismatch as exc:
        return CheckResult(False, ("perms", str(exc)))
    if not dis:
        return CheckResult(False, ("distributive", dis.violation))
    try:
        ext = is_extendable(ordered, wit.cuts, wit.paths)
    except BijectionViolated as exc:
        return CheckResult(False, ("paths", str(exc)))
    if not ext:
        return CheckResult(False, ("extendable", ext.violation))
    for pos, pset in enumerate(wit.paths):
        s, d = ordered.sessions[pos]
        for path in pset:
            if not validate_path(ordered, path, s, d):
                return CheckResult(False, ("paths", path))
    return CheckResult(True)


@dataclass
class SearchBudget:
    max_candidates: int = 10**6
    max_seconds: Optional[float] = None
    path_limit: int = 10**5
    cutset_limit: int = 10**5
    reindex_sessions: bool = True
    strict_def5: bool = False


@dataclass
class SearchStats:
    orders_tried: int = 0
    candidates: int = 0
    permutation_checks: int = 0
    path_assignments: int = 0
    truncated: bool = False
    exhausted: bool = False
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "orders_tried": self.orders_tried,
            "candidates": self.candidates,
            "permutation_checks": self.permutation_checks,
            "path_assignments": self.path_assignments,
            "truncated": self.truncated,
            "exhausted": self.exhausted,
        }


@dataclass
class Verdict:
    status: str  # "yes" | "no" | "unknown"
    witness: Optional[Witness]
    stats: SearchStats
    representative_map: dict[int, int] = field(default_factory=dict)


class _BudgetExceeded(Exception):
    pass


class _Searcher:
    def __init__(self, net: Network, budget: SearchBudget):
        self.net = net
        self.budget = budget
        self.stats = SearchStats()
        self.deadline = (
            time.monotonic() + budget.max_seconds if budget.max_seconds else None
        )
        # Per original session: routing domain, min-cut sets, session paths.
        self.domains = [routing_domain(net, i) for i in range(1, net.num_sessions + 1)]
        self.cutsets: list[list[frozenset[int]]] = []
        self.paths_by_cut_edge: list[dict[frozenset[int], dict[int, list[Path]]]] = []
        for i, dom in enumerate(self.domains, start=1):
            s, d = net.sessions[i - 1]
            if dom.empty:
                self.cutsets.append([frozenset()])
                self.paths_by_cut_edge.append({frozenset(): {}})
                continue
            sets, trunc = enumerate_min_cutsets(
                net, s, d, within=dom.edges, limit=budget.cutset_limit
            )
            if trunc:
                self.stats.truncated = True
            sets.sort(key=sorted)
            self.cutsets.append(sets)
            all_paths, trunc = enumerate_paths(
                net, s, d, within=dom.edges, limit=budget.path_limit
            )
            if trunc:
                self.stats.truncated = True
            table: dict[frozenset[int], dict[int, list[Path]]] = {}
            for cut in sets:
                per_edge: dict[int, list[Path]] = {eid: [] for eid in sorted(cut)}
                for path in all_paths:
                    crossed = _crossing(path, cut)
                    if len(crossed) == 1:
                        per_edge[crossed[0]].append(path)
                table[cut] = per_edge
            self.paths_by_cut_edge.append(table)
        self._bad_cache: dict[tuple[int, frozenset[int], int], bool] = {}

    def _tick(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _BudgetExceeded

    def _cumulative_ok(self, sess_i: int, cut: frozenset[int], sess_j: int) -> bool:
        """No s_j -> d_i path survives the removal of session i's cut."""
        key = (sess_i, cut, sess_j)
        hit = self._bad_cache.get(key)
        if hit is None:
            hit = not has_path(
                self.net, self.net.source(sess_j), self.net.sink(sess_i), removed=cut
            )
            self._bad_cache[key] = hit
        return hit

    def _find_paths(self, order, cuts) -> Optional[PathSetSequence]:
        """Backtracking over per-cut-edge path choices with a shared-edge
        representative map; exhaustive, so failure means no extendable set."""
        slots: list[tuple[int, int, list[Path]]] = []  # (position, cut edge, choices)
        for pos, sess in enumerate(order):
            table = self.paths_by_cut_edge[sess - 1][cuts[pos]]
            for eid in sorted(cuts[pos]):
                choices = table[eid]
                if not choices:
                    return None
                slots.append((pos, eid, choices))
        chosen: list[Path] = []
        rep: dict[int, int] = {}

        def place(idx: int) -> bool:
            if idx == len(slots):
                return True
            self._tick()
            _pos, cut_edge, choices = slots[idx]
            for path in choices:
                self.stats.path_assignments += 1
                added = []
                ok = True
                for eid in path:
                    prev = rep.get(eid)
                    if prev is None:
                        rep[eid] = cut_edge
                        added.append(eid)
                    elif prev != cut_edge:
                        ok = False
                        break
                if ok:
                    chosen.append(path)
                    if place(idx + 1):
                        return True
                    chosen.pop()
                for eid in added:
                    del rep[eid]
            return False

        if not place(0):
            return None
        result: list[list[Path]] = [[] for _ in order]
        for (pos, _eid, _), path in zip(slots, chosen):
            result[pos].append(path)
        return tuple(tuple(ps) for ps in result)

    def run(self) -> Verdict:
        K = self.net.num_sessions
        orders = (
            list(permutations(range(1, K + 1)))
            if self.budget.reindex_sessions
            else [tuple(range(1, K + 1))]
        )
        try:
            for order in orders:
                self.stats.orders_tried += 1
                ordered_net = self.net.reindex_sessions(order)
                pools: list[list[frozenset[int]]] = []
                for pos, sess in enumerate(order):
                    later = order[pos + 1:]
                    pool = [
                        cut
                        for cut in self.cutsets[sess - 1]
                        if all(self._cumulative_ok(sess, cut, j) for j in later)
                    ]
                    pools.append(pool)
                if any(not pool for pool in pools):
                    continue
                for cuts in product(*pools):
                    self._tick()
                    self.stats.candidates += 1
                    if self.stats.candidates > self.budget.max_candidates:
                        raise _BudgetExceeded
                    self.stats.permutation_checks += 1
                    perms = find_permutation_sequence(
                        ordered_net, cuts, strict=self.budget.strict_def5
                    )
                    if perms is None:
                        continue
                    paths = self._find_paths(order, cuts)
                    if paths is None:
                        continue
                    wit = Witness(order, cuts, perms, paths)
                    check = verify_witness(
                        self.net, wit, strict=self.budget.strict_def5
                    )
                    assert check.ok, f"witness failed re-verification: {check.violation}"
                    rep = representatives(ordered_net, cuts, paths)
                    return Verdict("yes", wit, self.stats, rep)
        except _BudgetExceeded:
            return Verdict("unknown", None, self.stats)
        if self.stats.truncated:
            return Verdict("unknown", None, self.stats)
        self.stats.exhausted = True
        return Verdict("no", None, self.stats)


def decide_information_distributive(
    net: Network, budget: Optional[SearchBudget] = None
) -> Verdict:
    """Search cut-set sequences x permutations x path sets for a witness.

    "yes" returns a re-verified witness; "no" is only reported when every
    candidate (under all session orders, if enabled) was examined; budget or
    enumeration-cap exhaustion yields "unknown".
    """
    searcher = _Searcher(net, budget or SearchBudget())
    start = time.monotonic()
    verdict = searcher.run()
    verdict.stats.elapsed = time.monotonic() - start
    return verdict


def find_cumulative_order(
    net: Network, cuts_by_session: Sequence[frozenset[int]]
) -> Optional[tuple[int, ...]]:
    """A session order making the given per-session cut-sets cumulative.

    cuts_by_session is indexed by original session (0-based list, session i
    at position i-1); the returned order is 1-based original session ids.
    """
    K = net.num_sessions
    bad: dict[tuple[int, int], bool] = {}

    def conflict(j: int, i: int) -> bool:
        # True when some s_j -> d_i path avoids session i's cut-set.
        key = (j, i)
        if key not in bad:
            bad[key] = has_path(
                net, net.source(j), net.sink(i), removed=cuts_by_session[i - 1]
            )
        return bad[key]

    chosen: list[int] = []
    remaining = set(range(1, K + 1))

    def place() -> bool:
        if not remaining:
            return True
        for cand in sorted(remaining):
            if any(conflict(cand, earlier) for earlier in chosen):
                continue
            chosen.append(cand)
            remaining.remove(cand)
            if place():
                return True
            chosen.pop()
            remaining.add(cand)
        return False

    if place():
        return tuple(chosen)
    return None


def menger_witness_for_single_session(net: Network) -> Witness:
    """The Menger certificate for a single-unicast network (always exists)."""
    assert net.num_sessions == 1
    s, d = net.sessions[0]
    dom = routing_domain(net, 1)
    if dom.empty:
        return Witness((1,), (frozenset(),), ((),), ((),))
    value, cut = min_cut(net, s, d, within=dom.edges)
    paths = edge_disjoint_paths(net, s, d, cut, within=dom.edges)
    return Witness((1,), (frozenset(cut),), (tuple(sorted(cut)),), (tuple(paths),))
