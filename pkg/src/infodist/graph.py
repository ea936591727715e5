"""Acyclic directed multigraph model for multi-unicast networks.

Edges are (tail, head, index) triples with implicit unit capacity and are
referred to everywhere by their 0-based position in the input edge list.
Sessions are (source, sink) pairs numbered 1..K in input order.  Everything
here is exact integer/set arithmetic; no floating point.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from .errors import (
    CutNotSaturable,
    CycleDetected,
    DuplicateEdge,
    NetworkFormatError,
    PathEnumerationTruncated,
    SinkHasOutEdge,
    SourceHasInEdge,
)

# A path is the ordered tuple of edge ids it traverses.
Path = tuple[int, ...]

DEFAULT_PATH_LIMIT = 10**6


class EdgeTriple(NamedTuple):
    tail: str
    head: str
    index: int


class Network:
    """Validated immutable network with cached adjacency and topological order.

    Construct through :func:`validate_network`; the constructor assumes the
    invariants already hold except for the ones it checks itself (acyclicity,
    duplicate triples, terminal degrees).
    """

    def __init__(self, nodes, edges, sessions):
        self.nodes: tuple[str, ...] = tuple(nodes)
        self.edges: tuple[EdgeTriple, ...] = tuple(EdgeTriple(*e) for e in edges)
        self.sessions: tuple[tuple[str, str], ...] = tuple(
            (str(s), str(d)) for s, d in sessions
        )

        node_set = set(self.nodes)
        if len(node_set) != len(self.nodes):
            raise NetworkFormatError("duplicate node id", field="nodes")
        seen = set()
        for eid, e in enumerate(self.edges):
            if e.tail not in node_set:
                raise NetworkFormatError(f"edge {eid} tail {e.tail!r} not a node", field="edges")
            if e.head not in node_set:
                raise NetworkFormatError(f"edge {eid} head {e.head!r} not a node", field="edges")
            if e in seen:
                raise DuplicateEdge(e)
            seen.add(e)

        self.out_edges: dict[str, tuple[int, ...]] = {v: () for v in self.nodes}
        self.in_edges: dict[str, tuple[int, ...]] = {v: () for v in self.nodes}
        out: dict[str, list[int]] = {v: [] for v in self.nodes}
        inc: dict[str, list[int]] = {v: [] for v in self.nodes}
        for eid, e in enumerate(self.edges):
            out[e.tail].append(eid)
            inc[e.head].append(eid)
        self.out_edges = {v: tuple(ids) for v, ids in out.items()}
        self.in_edges = {v: tuple(ids) for v, ids in inc.items()}

        for i, (s, d) in enumerate(self.sessions, start=1):
            if s not in node_set:
                raise NetworkFormatError(f"session {i} source {s!r} not a node", field="sessions")
            if d not in node_set:
                raise NetworkFormatError(f"session {i} sink {d!r} not a node", field="sessions")
            if self.in_edges[s]:
                raise SourceHasInEdge(i, s)
            if self.out_edges[d]:
                raise SinkHasOutEdge(i, d)

        self.topo_order: tuple[str, ...] = self._toposort()
        self.topo_pos: dict[str, int] = {v: p for p, v in enumerate(self.topo_order)}
        # eager so instances stay strictly immutable (thread-transferable)
        self._source_reach: tuple[frozenset[str], ...] = tuple(
            frozenset(reachable_from(self, s)) for s, _ in self.sessions
        )

    def _toposort(self) -> tuple[str, ...]:
        indeg = {v: len(self.in_edges[v]) for v in self.nodes}
        queue = deque(v for v in self.nodes if indeg[v] == 0)
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for eid in self.out_edges[v]:
                w = self.edges[eid].head
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if len(order) != len(self.nodes):
            # Some edge inside the leftover (cyclic) part witnesses the cycle.
            leftover = {v for v in self.nodes if indeg[v] > 0}
            for eid, e in enumerate(self.edges):
                if e.tail in leftover and e.head in leftover:
                    raise CycleDetected(e)
            raise CycleDetected(None)
        return tuple(order)

    @property
    def num_sessions(self) -> int:
        return len(self.sessions)

    def source(self, i: int) -> str:
        return self.sessions[i - 1][0]

    def sink(self, i: int) -> str:
        return self.sessions[i - 1][1]

    def reindex_sessions(self, order: Sequence[int]) -> "Network":
        """New network whose session p is the old session order[p-1] (1-based)."""
        if sorted(order) != list(range(1, self.num_sessions + 1)):
            raise ValueError(f"not a session permutation: {order}")
        return Network(self.nodes, self.edges, [self.sessions[i - 1] for i in order])

    def source_reach(self) -> tuple[frozenset[str], ...]:
        """Per session, the nodes reachable from its source."""
        return self._source_reach

    def edge_str(self, eid: int) -> str:
        e = self.edges[eid]
        return f"#{eid}({e.tail}->{e.head}/{e.index})"

    def to_json_dict(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "edges": [
                {"tail": e.tail, "head": e.head, "index": e.index} for e in self.edges
            ],
            "sessions": [{"source": s, "sink": d} for s, d in self.sessions],
        }


def validate_network(raw) -> Network:
    """Build a :class:`Network` from a mapping, JSON text, or pass one through.

    Raises :class:`NetworkFormatError` subclasses naming the offending field.
    """
    if isinstance(raw, Network):
        return raw
    if isinstance(raw, (str, bytes)):
        raw = json.loads(raw)
    if not isinstance(raw, Mapping):
        raise NetworkFormatError("network description must be a JSON object")
    for key in ("nodes", "edges", "sessions"):
        if key not in raw:
            raise NetworkFormatError(f"missing key {key!r}", field=key)
    nodes = [str(v) for v in raw["nodes"]]
    edges = []
    for pos, item in enumerate(raw["edges"]):
        if isinstance(item, Mapping):
            try:
                tail, head = str(item["tail"]), str(item["head"])
            except KeyError as exc:
                raise NetworkFormatError(f"edge {pos} missing {exc}", field="edges")
            index = int(item.get("index", 0))
        else:
            seq = list(item)
            if len(seq) == 2:
                tail, head, index = str(seq[0]), str(seq[1]), 0
            elif len(seq) == 3:
                tail, head, index = str(seq[0]), str(seq[1]), int(seq[2])
            else:
                raise NetworkFormatError(f"edge {pos} malformed", field="edges")
        edges.append((tail, head, index))
    sessions = []
    for pos, item in enumerate(raw["sessions"]):
        if isinstance(item, Mapping):
            try:
                sessions.append((str(item["source"]), str(item["sink"])))
            except KeyError as exc:
                raise NetworkFormatError(f"session {pos} missing {exc}", field="sessions")
        else:
            seq = list(item)
            if len(seq) != 2:
                raise NetworkFormatError(f"session {pos} malformed", field="sessions")
            sessions.append((str(seq[0]), str(seq[1])))
    if not sessions:
        raise NetworkFormatError("at least one session required", field="sessions")
    return Network(nodes, edges, sessions)


@dataclass(frozen=True)
class Subgraph:
    """An edge-induced subgraph of a parent network (e.g. a routing domain)."""

    net: Network
    edges: frozenset[int]

    @property
    def empty(self) -> bool:
        return not self.edges


def _bfs(net: Network, start: str, within: Optional[frozenset[int]], removed, forward: bool):
    """Nodes reachable from start (forward) or co-reaching start (backward)."""
    adj = net.out_edges if forward else net.in_edges
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for eid in adj[v]:
            if within is not None and eid not in within:
                continue
            if eid in removed:
                continue
            e = net.edges[eid]
            w = e.head if forward else e.tail
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def reachable_from(net: Network, node: str, within=None, removed=frozenset()) -> set[str]:
    return _bfs(net, node, within, removed, forward=True)


def co_reachable(net: Network, node: str, within=None, removed=frozenset()) -> set[str]:
    return _bfs(net, node, within, removed, forward=False)


def has_path(net, u, v, within=None, removed=frozenset()) -> bool:
    return v in reachable_from(net, u, within, removed)


def find_path(net: Network, u: str, v: str, within=None, removed=frozenset()) -> Optional[Path]:
    """One u->v path (BFS order) as an edge-id tuple, or None."""
    if u == v:
        return ()
    pred: dict[str, int] = {}
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for eid in net.out_edges[x]:
            if within is not None and eid not in within:
                continue
            if eid in removed:
                continue
            w = net.edges[eid].head
            if w in seen:
                continue
            seen.add(w)
            pred[w] = eid
            if w == v:
                path = []
                while w != u:
                    path.append(pred[w])
                    w = net.edges[pred[w]].tail
                return tuple(reversed(path))
            queue.append(w)
    return None


def routing_domain(net: Network, i: int) -> Subgraph:
    """Edges lying on some source->sink path of session i (1-based)."""
    s, d = net.sessions[i - 1]
    fwd = reachable_from(net, s)
    bwd = co_reachable(net, d)
    eids = frozenset(
        eid
        for eid, e in enumerate(net.edges)
        if e.tail in fwd and e.head in bwd
    )
    return Subgraph(net, eids)


class MinCut(NamedTuple):
    value: int
    cut: tuple[int, ...]


def _max_flow(net: Network, u: str, v: str, within):
    """Unit-capacity max flow via BFS augmentation. Returns (value, flow set)."""
    flow: set[int] = set()
    value = 0
    while True:
        pred: dict[str, tuple[int, bool]] = {}
        seen = {u}
        queue = deque([u])
        found = False
        while queue and not found:
            x = queue.popleft()
            for eid in net.out_edges[x]:
                if within is not None and eid not in within:
                    continue
                if eid in flow:
                    continue
                w = net.edges[eid].head
                if w not in seen:
                    seen.add(w)
                    pred[w] = (eid, True)
                    if w == v:
                        found = True
                        break
                    queue.append(w)
            if found:
                break
            for eid in net.in_edges[x]:
                if within is not None and eid not in within:
                    continue
                if eid not in flow:
                    continue
                w = net.edges[eid].tail
                if w not in seen:
                    seen.add(w)
                    pred[w] = (eid, False)
                    queue.append(w)
        if not found:
            return value, flow, seen
        x = v
        while x != u:
            eid, forward = pred[x]
            if forward:
                flow.add(eid)
                x = net.edges[eid].tail
            else:
                flow.remove(eid)
                x = net.edges[eid].head
        value += 1


def min_cut(net: Network, u: str, v: str, within=None) -> MinCut:
    """Max number of edge-disjoint u->v paths and one minimum edge cut-set."""
    if u == v:
        raise ValueError("min_cut endpoints must differ")
    value, _flow, residual_reach = _max_flow(net, u, v, within)
    cut = tuple(
        sorted(
            eid
            for eid, e in enumerate(net.edges)
            if (within is None or eid in within)
            and e.tail in residual_reach
            and e.head not in residual_reach
        )
    )
    return MinCut(value, cut)


def is_cutset(net: Network, u: str, v: str, cut: Iterable[int], within=None) -> bool:
    return not has_path(net, u, v, within=within, removed=frozenset(cut))


def enumerate_min_cutsets(
    net: Network, u: str, v: str, within=None, limit: Optional[int] = None
) -> tuple[list[frozenset[int]], bool]:
    """All minimum-cardinality u->v edge cut-sets in lexicographic order.

    Exhaustive over edge subsets at cardinality = min-cut; fine at desk scale.
    Returns (cutsets, truncated).
    """
    value, _ = min_cut(net, u, v, within)
    if value == 0:
        return [frozenset()], False
    pool = sorted(within) if within is not None else range(len(net.edges))
    found: list[frozenset[int]] = []
    for combo in combinations(pool, value):
        if is_cutset(net, u, v, combo, within=within):
            found.append(frozenset(combo))
            if limit is not None and len(found) >= limit:
                return found, True
    return found, False


def edge_disjoint_paths(net: Network, u: str, v: str, cut: Iterable[int], within=None) -> list[Path]:
    """Menger paths through a minimum cut-set.

    Returns pairwise edge-disjoint u->v paths aligned with sorted(cut): the
    j-th path crosses the j-th cut edge (and no other cut edge).
    """
    cut = frozenset(cut)
    value, _ = min_cut(net, u, v, within)
    if len(cut) != value or not is_cutset(net, u, v, cut, within=within):
        raise CutNotSaturable(f"{sorted(cut)} is not a minimum {u!r}->{v!r} cut-set")
    _, flow, _ = _max_flow(net, u, v, within)
    # Decompose the flow: walk from u along flow edges, consuming them.
    succ: dict[str, list[int]] = {}
    for eid in flow:
        succ.setdefault(net.edges[eid].tail, []).append(eid)
    for lst in succ.values():
        lst.sort(reverse=True)
    paths = []
    for _ in range(value):
        path = []
        x = u
        while x != v:
            eid = succ[x].pop()
            path.append(eid)
            x = net.edges[eid].head
        paths.append(tuple(path))
    by_cut_edge = {}
    for path in paths:
        crossings = [eid for eid in path if eid in cut]
        assert len(crossings) == 1, "max flow crosses a minimum cut more than once"
        by_cut_edge[crossings[0]] = path
    return [by_cut_edge[eid] for eid in sorted(cut)]


def enumerate_paths(
    net: Network, u: str, v: str, within=None, limit: int = DEFAULT_PATH_LIMIT
) -> tuple[list[Path], bool]:
    """All simple directed u->v paths in lexicographic edge-id order.

    Returns (paths, truncated); truncated means the cap was hit and the list
    is incomplete.
    """
    if u == v:
        return [()], False
    # Prune branches that cannot reach v; enumerate one past the cap so an
    # exactly-full result is not misreported as truncated.
    alive = co_reachable(net, v, within=within)
    paths: list[Path] = []
    stack: list[int] = []

    def walk(x: str) -> bool:
        if x == v:
            paths.append(tuple(stack))
            return len(paths) <= limit
        for eid in net.out_edges[x]:
            if within is not None and eid not in within:
                continue
            if net.edges[eid].head not in alive:
                continue
            stack.append(eid)
            more = walk(net.edges[eid].head)
            stack.pop()
            if not more:
                return False
        return True

    if u not in alive:
        return [], False
    walk(u)
    if len(paths) > limit:
        return paths[:limit], True
    return paths, False


def require_paths(net, u, v, within=None, limit=DEFAULT_PATH_LIMIT) -> list[Path]:
    paths, truncated = enumerate_paths(net, u, v, within=within, limit=limit)
    if truncated:
        raise PathEnumerationTruncated(u, v, limit)
    return paths


def alpha(net: Network, eid: int) -> int:
    """Largest session index whose source reaches tail(e); 0 if none.

    An edge whose tail no source reaches carries a constant symbol, so 0
    makes every alpha-bounded condition on it vacuous.
    """
    tail = net.edges[eid].tail
    best = 0
    for i, reach in enumerate(net.source_reach(), start=1):
        if tail in reach:
            best = i
    return best


def validate_path(net: Network, path: Sequence[int], u: str, v: str) -> bool:
    """True iff path is a duplicate-free u->v walk over existing edge ids."""
    if len(set(path)) != len(path):
        return False
    at = u
    for eid in path:
        if not 0 <= eid < len(net.edges):
            return False
        e = net.edges[eid]
        if e.tail != at:
            return False
        at = e.head
    return at == v
