"""Exact path-flow LP for the routing rate region.

The formulation is path-based, mirroring the two constraint families the
routing model imposes: per-session delivered traffic at least the demanded
rate, and per-edge total load at most the unit capacity.  All arithmetic is
Fraction-exact; a feasibility verdict comes with a witness scheme.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import simplex
from .errors import UnknownPath
from .graph import DEFAULT_PATH_LIMIT, Network, Path, require_paths, validate_path

RateVector = tuple[Fraction, ...]


@dataclass
class RoutingScheme:
    """Per-session map from path (edge-id tuple) to nonnegative flow."""

    flows: tuple[dict[Path, Fraction], ...]

    def rate(self, i: int) -> Fraction:
        return sum(self.flows[i - 1].values(), Fraction(0))

    def edge_load(self, eid: int) -> Fraction:
        total = Fraction(0)
        for per_session in self.flows:
            for path, value in per_session.items():
                if eid in path:
                    total += value
        return total

    def to_json_dict(self) -> dict:
        entries = []
        for i, per_session in enumerate(self.flows, start=1):
            for path in sorted(per_session):
                value = per_session[path]
                if value:
                    entries.append(
                        {"session": i, "path": list(path), "value": str(value)}
                    )
        return {"flows": entries}


def scheme_from_json(data, num_sessions: int) -> RoutingScheme:
    flows: list[dict[Path, Fraction]] = [dict() for _ in range(num_sessions)]
    for entry in data["flows"]:
        i = int(entry["session"])
        if not 1 <= i <= num_sessions:
            raise ValueError(f"session {i} out of range")
        path = tuple(int(e) for e in entry["path"])
        flows[i - 1][path] = flows[i - 1].get(path, Fraction(0)) + Fraction(
            str(entry["value"])
        )
    return RoutingScheme(tuple(flows))


def parse_rates(values: Sequence) -> RateVector:
    rates = tuple(Fraction(str(v)) for v in values)
    if any(r < 0 for r in rates):
        raise ValueError("rates must be nonnegative")
    return rates


def _session_paths(net: Network, limit: int) -> list[list[Path]]:
    out = []
    for s, d in net.sessions:
        out.append(require_paths(net, s, d, limit=limit))
    return out


def _loaded_edges(net: Network, session_paths) -> list[int]:
    used = set()
    for paths in session_paths:
        for path in paths:
            used.update(path)
    return sorted(used)


@dataclass
class FeasibilityResult:
    feasible: bool
    scheme: Optional[RoutingScheme] = None


def _build_scheme(net, session_paths, x) -> RoutingScheme:
    flows: list[dict[Path, Fraction]] = [dict() for _ in net.sessions]
    col = 0
    for i, paths in enumerate(session_paths):
        for path in paths:
            if x[col]:
                flows[i][path] = x[col]
            col += 1
    return RoutingScheme(tuple(flows))


def check_rate_feasible(
    net: Network, rates: Sequence, path_limit: int = DEFAULT_PATH_LIMIT
) -> FeasibilityResult:
    """Decide whether nonnegative path flows deliver the rates within unit
    edge capacities; returns one witness scheme when feasible.

    Raises PathEnumerationTruncated when the path cap was hit (result would
    be indeterminate).
    """
    rates = parse_rates(rates)
    if len(rates) != net.num_sessions:
        raise ValueError("one rate per session required")
    session_paths = _session_paths(net, path_limit)
    nvars = sum(len(p) for p in session_paths)
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    offsets = []
    col = 0
    for paths in session_paths:
        offsets.append(col)
        col += len(paths)
    # Session rows: -sum(f) <= -R_i.
    for i, paths in enumerate(session_paths):
        row = [Fraction(0)] * nvars
        for k in range(len(paths)):
            row[offsets[i] + k] = Fraction(-1)
        A.append(row)
        b.append(-rates[i])
    # Edge rows: load <= 1.
    for eid in _loaded_edges(net, session_paths):
        row = [Fraction(0)] * nvars
        for i, paths in enumerate(session_paths):
            for k, path in enumerate(paths):
                if eid in path:
                    row[offsets[i] + k] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    result = simplex.solve([Fraction(0)] * nvars, A, b)
    if result.status == simplex.INFEASIBLE:
        return FeasibilityResult(False)
    assert result.status == simplex.OPTIMAL
    return FeasibilityResult(True, _build_scheme(net, session_paths, result.x))


@dataclass
class ScalingResult:
    lam: Fraction
    scheme: RoutingScheme
    dual: list[Fraction]


def max_scaled_rate(
    net: Network, direction: Sequence, path_limit: int = DEFAULT_PATH_LIMIT
) -> ScalingResult:
    """Largest lambda with lambda*direction routable (exact LP)."""
    direction = parse_rates(direction)
    if len(direction) != net.num_sessions:
        raise ValueError("one direction entry per session required")
    if all(d == 0 for d in direction):
        raise ValueError("direction must be nonzero")
    session_paths = _session_paths(net, path_limit)
    nvars = sum(len(p) for p in session_paths) + 1  # flows then lambda
    lam_col = nvars - 1
    offsets = []
    col = 0
    for paths in session_paths:
        offsets.append(col)
        col += len(paths)
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    # lambda * d_i - sum(f) <= 0
    for i, paths in enumerate(session_paths):
        if direction[i] == 0:
            continue
        row = [Fraction(0)] * nvars
        row[lam_col] = direction[i]
        for k in range(len(paths)):
            row[offsets[i] + k] = Fraction(-1)
        A.append(row)
        b.append(Fraction(0))
    for eid in _loaded_edges(net, session_paths):
        row = [Fraction(0)] * nvars
        for i, paths in enumerate(session_paths):
            for k, path in enumerate(paths):
                if eid in path:
                    row[offsets[i] + k] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    c = [Fraction(0)] * nvars
    c[lam_col] = Fraction(1)
    result = simplex.solve(c, A, b)
    assert result.status == simplex.OPTIMAL, result.status
    scheme = _build_scheme(net, session_paths, result.x[:-1])
    return ScalingResult(result.value, scheme, result.dual)


@dataclass
class VerifyResult:
    ok: bool
    violation: Optional[tuple] = None  # ("rate", session) | ("capacity", edge)

    def __bool__(self) -> bool:
        return self.ok


def verify_routing_scheme(net: Network, scheme: RoutingScheme, rates: Sequence) -> VerifyResult:
    """Substitute the scheme into both constraint families exactly."""
    rates = parse_rates(rates)
    if len(scheme.flows) != net.num_sessions or len(rates) != net.num_sessions:
        raise ValueError("scheme/rates must cover every session")
    for i, per_session in enumerate(scheme.flows, start=1):
        s, d = net.sessions[i - 1]
        for path, value in per_session.items():
            if value < 0 or not validate_path(net, path, s, d):
                raise UnknownPath(i, path)
    for i in range(1, net.num_sessions + 1):
        if scheme.rate(i) < rates[i - 1]:
            return VerifyResult(False, ("rate", i))
    loads: dict[int, Fraction] = {}
    for per_session in scheme.flows:
        for path, value in per_session.items():
            for eid in path:
                loads[eid] = loads.get(eid, Fraction(0)) + value
    for eid in sorted(loads):
        if loads[eid] > 1:
            return VerifyResult(False, ("capacity", eid))
    return VerifyResult(True)
