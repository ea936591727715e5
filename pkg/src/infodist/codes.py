"""Scalar linear network codes over a prime field.

Each edge carries one field symbol: a fixed linear function of the stacked
source symbols, derived from per-edge local encoders by propagation along a
topological order.  Entropies and conditional mutual informations of any mix
of edge and session variables are matrix ranks over GF(q), which makes every
information inequality here checkable exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from . import gfmatrix
from .errors import FieldTooSmall, MissingEncoder, WitnessInvalid
from .graph import Network, Path
from .rateregion import RoutingScheme
from .witnesses import Witness, verify_witness

# Variable references: ("edge", edge id) or ("session", session index 1..K).
VarRef = tuple[str, int]


def edge_var(eid: int) -> VarRef:
    return ("edge", eid)


def session_var(i: int) -> VarRef:
    return ("session", i)


@dataclass(frozen=True)
class EntropyQuery:
    """Three variable collections: I(a ; b | given)."""

    a: tuple[VarRef, ...]
    b: tuple[VarRef, ...] = ()
    given: tuple[VarRef, ...] = ()


# Local encoder terms:
#   ("session", i, symbol index, coefficient)   for edges leaving a source
#   ("edge", in-edge id, coefficient)           for interior edges
LocalTerm = tuple
LocalTable = dict[int, list[LocalTerm]]


@dataclass
class LinearCode:
    net: Network
    q: int
    rates: tuple[int, ...]
    rows: np.ndarray  # shape (num_edges, total symbols); row e is G_e

    @property
    def dim(self) -> int:
        return int(self.rows.shape[1])

    def offset(self, i: int) -> int:
        return sum(self.rates[: i - 1])

    def session_rows(self, i: int) -> np.ndarray:
        sel = np.zeros((self.rates[i - 1], self.dim), dtype=np.int64)
        for k in range(self.rates[i - 1]):
            sel[k, self.offset(i) + k] = 1
        return sel

    def edge_row(self, eid: int) -> np.ndarray:
        return self.rows[eid : eid + 1]

    def to_json_dict(self, locals_table: Optional[LocalTable] = None) -> dict:
        data = {"field": self.q, "rates": list(self.rates)}
        if locals_table is not None:
            data["locals"] = locals_to_json(locals_table)
        data["global"] = [[int(v) for v in row] for row in self.rows]
        return data


def sources_at(net: Network, node: str) -> list[int]:
    return [i for i, (s, _) in enumerate(net.sessions, start=1) if s == node]


def propagate(net: Network, rates: Sequence[int], locals_table: LocalTable, q: int) -> LinearCode:
    """Compose local encoders along the topological order into global rows.

    Edges out of a source may reference only sessions sourced at their tail;
    interior edges only in-edges of their tail.
    """
    if not gfmatrix.is_prime(q):
        raise ValueError(f"field size {q} is not prime")
    rates = tuple(int(r) for r in rates)
    if len(rates) != net.num_sessions or any(r < 0 for r in rates):
        raise ValueError("one nonnegative rate per session required")
    dim = sum(rates)
    offsets = [sum(rates[:i]) for i in range(len(rates))]
    rows = np.zeros((len(net.edges), max(dim, 1)), dtype=np.int64)
    order = sorted(range(len(net.edges)), key=lambda e: (net.topo_pos[net.edges[e].tail], e))
    for eid in order:
        if eid not in locals_table:
            raise MissingEncoder(net.edge_str(eid))
        tail = net.edges[eid].tail
        tail_sessions = sources_at(net, tail)
        row = np.zeros(max(dim, 1), dtype=np.int64)
        for term in locals_table[eid]:
            kind = term[0]
            if kind == "session":
                _, i, sym, coeff = term
                if i not in tail_sessions:
                    raise ValueError(
                        f"edge {net.edge_str(eid)} does not leave the source of session {i}"
                    )
                if not 0 <= sym < rates[i - 1]:
                    raise ValueError(f"session {i} has no symbol {sym}")
                row[offsets[i - 1] + sym] = (row[offsets[i - 1] + sym] + coeff) % q
            elif kind == "edge":
                _, ref, coeff = term
                if net.edges[ref].head != tail:
                    raise ValueError(
                        f"edge {net.edge_str(ref)} is not an in-edge of {tail!r}"
                    )
                row = (row + coeff * rows[ref]) % q
            else:
                raise ValueError(f"unknown local term {term!r}")
        rows[eid] = row
    if dim == 0:
        rows = rows[:, :0]
    return LinearCode(net, q, rates, rows % q)


def locals_to_json(table: LocalTable) -> list[dict]:
    out = []
    for eid in sorted(table):
        coeffs = []
        for term in table[eid]:
            if term[0] == "session":
                _, i, sym, coeff = term
                src = f"session {i}" if sym == 0 else f"session {i}:{sym}"
                coeffs.append({"from": src, "value": int(coeff)})
            else:
                _, ref, coeff = term
                coeffs.append({"from": int(ref), "value": int(coeff)})
        out.append({"edge": eid, "coeffs": coeffs})
    return out


def locals_from_json(entries: Iterable[dict]) -> LocalTable:
    table: LocalTable = {}
    for entry in entries:
        eid = int(entry["edge"])
        terms: list[LocalTerm] = []
        for coeff in entry.get("coeffs", ()):
            src = coeff["from"]
            value = int(coeff["value"])
            if isinstance(src, str) and src.startswith("session"):
                body = src[len("session"):].strip()
                if ":" in body:
                    i, sym = body.split(":")
                    terms.append(("session", int(i), int(sym), value))
                else:
                    terms.append(("session", int(body), 0, value))
            else:
                terms.append(("edge", int(src), value))
        table[eid] = terms
    return table


def code_from_json(net: Network, data) -> LinearCode:
    return propagate(net, data["rates"], locals_from_json(data["locals"]), int(data["field"]))


def _collect(code: LinearCode, refs: Iterable[VarRef]) -> np.ndarray:
    parts = []
    for kind, idx in refs:
        if kind == "edge":
            parts.append(code.edge_row(idx))
        elif kind == "session":
            parts.append(code.session_rows(idx))
        else:
            raise ValueError(f"unknown variable kind {kind!r}")
    return gfmatrix.stack(parts, code.dim)


def entropy(code: LinearCode, refs: Iterable[VarRef], extra: Optional[np.ndarray] = None) -> int:
    """H(refs) in field symbols = rank of the stacked matrices."""
    mat = _collect(code, refs)
    if extra is not None:
        mat = gfmatrix.stack([mat, extra], code.dim)
    return gfmatrix.rank(mat, code.q)


def cond_mutual_info(
    code: LinearCode,
    a: Iterable[VarRef],
    b: Iterable[VarRef],
    given: Iterable[VarRef] = (),
) -> int:
    """I(a ; b | given) = rk(a,c) + rk(b,c) - rk(a,b,c) - rk(c)."""
    a, b, given = tuple(a), tuple(b), tuple(given)
    return (
        entropy(code, a + given)
        + entropy(code, b + given)
        - entropy(code, a + b + given)
        - entropy(code, given)
    )


def query(code: LinearCode, q: EntropyQuery) -> int:
    if q.b:
        return cond_mutual_info(code, q.a, q.b, q.given)
    return entropy(code, q.a + q.given) - entropy(code, q.given)


def check_decodable(code: LinearCode) -> tuple[bool, ...]:
    """Session i decodes iff its selector rows lie in the row space of In(d_i)."""
    out = []
    for i in range(1, code.net.num_sessions + 1):
        incoming = _collect(code, [edge_var(e) for e in code.net.in_edges[code.net.sink(i)]])
        out.append(gfmatrix.in_rowspace(incoming, code.session_rows(i), code.q))
    return tuple(out)


def extract_routing(code: LinearCode, wit: Witness, strict: bool = False) -> RoutingScheme:
    """The constructive routing scheme of the main theorem.

    Each witness path carries the information share its cut edge contributes:
    f = I(Y_i ; U_e | Y_(earlier sessions), U_(cut edges before e)), evaluated
    in the witness's session order.  Flows are keyed by original session.
    """
    check = verify_witness(code.net, wit, strict=strict)
    if not check:
        raise WitnessInvalid(f"witness fails {check.violation}")
    flows: list[dict[Path, Fraction]] = [dict() for _ in code.net.sessions]
    prior: list[VarRef] = []
    for pos, sess in enumerate(wit.session_order):
        cut = wit.cuts[pos]
        perm = wit.perms[pos]
        for path in wit.paths[pos]:
            eid = next(e for e in path if e in cut)
            before = perm[: perm.index(eid)]
            value = cond_mutual_info(
                code,
                [session_var(sess)],
                [edge_var(eid)],
                prior + [edge_var(x) for x in before],
            )
            if value:
                flows[sess - 1][path] = Fraction(value)
        prior.append(session_var(sess))
    return RoutingScheme(tuple(flows))


@dataclass
class AuditEntry:
    check: str
    lhs: int
    rhs: int
    relation: str  # "<=" or "=="

    @property
    def ok(self) -> bool:
        return self.lhs <= self.rhs if self.relation == "<=" else self.lhs == self.rhs

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "ok": self.ok,
        }


@dataclass
class AuditReport:
    entries: list[AuditEntry]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "entries": [e.to_json_dict() for e in self.entries]}


def _random_refs(rng: random.Random, code: LinearCode, k: int) -> tuple[VarRef, ...]:
    pool = [edge_var(e) for e in range(len(code.net.edges))] + [
        session_var(i) for i in range(1, code.net.num_sessions + 1)
    ]
    return tuple(rng.sample(pool, min(k, len(pool))))


def _random_function_of(rng: random.Random, code: LinearCode, refs) -> np.ndarray:
    """One random row in the row space of the stacked refs."""
    mat = _collect(code, refs)
    if mat.shape[0] == 0:
        return np.zeros((1, code.dim), dtype=np.int64)
    coeffs = np.array([[rng.randrange(code.q) for _ in range(mat.shape[0])]], dtype=np.int64)
    return (coeffs @ mat) % code.q


def audit(
    code: LinearCode,
    wit: Witness,
    seed: int = 0,
    prop_samples: int = 20,
    strict: bool = False,
) -> AuditReport:
    """Exact runtime checks of the witness inequalities and the rank calculus.

    Per session: the cut-set bound on the sink information, the chain-rule
    distribution identity, and the functional dependence of the sink inputs
    on earlier sources plus the cut.  Per cut edge: the unit-capacity
    aggregation bound.  Plus randomized identities/inequalities for
    conditioning on functions and for data-processing under Markov chains.
    """
    check = verify_witness(code.net, wit, strict=strict)
    if not check:
        raise WitnessInvalid(f"witness fails {check.violation}")
    net = code.net
    entries: list[AuditEntry] = []
    prior: list[VarRef] = []
    share_terms: dict[int, list[int]] = {}
    for pos, sess in enumerate(wit.session_order):
        cut = sorted(wit.cuts[pos])
        perm = wit.perms[pos]
        y = [session_var(sess)]
        incoming = [edge_var(e) for e in net.in_edges[net.sink(sess)]]
        cut_vars = [edge_var(e) for e in cut]
        lhs18 = cond_mutual_info(code, y, incoming, prior)
        rhs18 = cond_mutual_info(code, y, cut_vars, prior)
        entries.append(AuditEntry(f"eq18/session{sess}", lhs18, rhs18, "<="))
        total = 0
        for eid in perm:
            before = perm[: perm.index(eid)]
            share = cond_mutual_info(
                code, y, [edge_var(eid)], prior + [edge_var(x) for x in before]
            )
            share_terms.setdefault(eid, []).append(share)
            total += share
        entries.append(AuditEntry(f"eq19/session{sess}", total, rhs18, "=="))
        base = entropy(code, cut_vars + prior)
        joint = entropy(code, cut_vars + prior + incoming)
        entries.append(AuditEntry(f"lemma1-function/session{sess}", joint, base, "=="))
        prior.append(session_var(sess))
    for eid in sorted(share_terms):
        entries.append(
            AuditEntry(
                f"eq22/edge{eid}",
                sum(share_terms[eid]),
                entropy(code, [edge_var(eid)]),
                "<=",
            )
        )

    rng = random.Random(seed)
    for n in range(prop_samples):
        x = _random_refs(rng, code, rng.randrange(1, 3))
        yv = _random_refs(rng, code, rng.randrange(1, 3))
        z = _random_refs(rng, code, rng.randrange(0, 3))
        w = _random_refs(rng, code, rng.randrange(0, 3))
        f_y = _random_function_of(rng, code, yv)
        f_z = _random_function_of(rng, code, z)
        f_yz = _random_function_of(rng, code, yv + z)
        f_xw = _random_function_of(rng, code, x + w)
        # H(X|Y) == H(X|Y,f(Y))
        lhs = entropy(code, x + yv) - entropy(code, yv)
        rhs = entropy(code, x + yv, extra=f_y) - entropy(code, yv, extra=f_y)
        entries.append(AuditEntry(f"prop1.1/{n}", lhs, rhs, "=="))
        # I(X;Y|Z) == I(X;Y|Z,f(Z))
        lhs = cond_mutual_info(code, x, yv, z)
        rhs = (
            entropy(code, x + z, extra=f_z)
            + entropy(code, yv + z, extra=f_z)
            - entropy(code, x + yv + z, extra=f_z)
            - entropy(code, z, extra=f_z)
        )
        entries.append(AuditEntry(f"prop1.2/{n}", lhs, rhs, "=="))
        # H(X|f(Y)) >= H(X|Y)  (flip into lhs <= rhs form)
        lhs = entropy(code, x + yv) - entropy(code, yv)
        rhs = entropy(code, x, extra=f_y) - gfmatrix.rank(f_y, code.q)
        entries.append(AuditEntry(f"prop1.3/{n}", lhs, rhs, "<="))
        # I(X;Y|Z,W) >= I(X;f(Y,Z)|Z,W)
        lhs = cond_mutual_info(code, x, yv, z + w)
        rhs = (
            entropy(code, x + z + w)
            + entropy(code, z + w, extra=f_yz)
            - entropy(code, x + z + w, extra=f_yz)
            - entropy(code, z + w)
        )
        entries.append(AuditEntry(f"prop2.4/{n}", rhs, lhs, "<="))
        # Markov special case: I(X;Y|W) >= I(X;Y|W,f(X,W)) and >= I(f(X,W);Y|W)
        lhs = cond_mutual_info(code, x, yv, w)
        rhs = (
            entropy(code, x + w, extra=f_xw)
            + entropy(code, yv + w, extra=f_xw)
            - entropy(code, x + yv + w, extra=f_xw)
            - entropy(code, w, extra=f_xw)
        )
        entries.append(AuditEntry(f"prop2a/{n}", rhs, lhs, "<="))
        rhs = (
            entropy(code, w, extra=f_xw)
            + entropy(code, yv + w)
            - entropy(code, yv + w, extra=f_xw)
            - entropy(code, w)
        )
        entries.append(AuditEntry(f"prop2b/{n}", rhs, lhs, "<="))
    return AuditReport(entries)


def random_local_table(
    net: Network, rates: Sequence[int], q: int, rng: random.Random
) -> LocalTable:
    """Uniform local coefficients; source edges draw over their session symbols."""
    if q < 2:
        raise FieldTooSmall(f"field size {q} < 2")
    if not gfmatrix.is_prime(q):
        raise ValueError(f"field size {q} is not prime")
    table: LocalTable = {}
    for eid, e in enumerate(net.edges):
        terms: list[LocalTerm] = []
        tail_sessions = sources_at(net, e.tail)
        if tail_sessions:
            for i in tail_sessions:
                for sym in range(rates[i - 1]):
                    terms.append(("session", i, sym, rng.randrange(q)))
        else:
            for ref in net.in_edges[e.tail]:
                terms.append(("edge", ref, rng.randrange(q)))
        table[eid] = terms
    return table


def random_decodable_code(
    net: Network,
    rates: Sequence[int],
    q: int,
    rng: random.Random,
    attempts: int = 2000,
) -> Optional[tuple[LinearCode, LocalTable]]:
    """Rejection-sample random codes until every session decodes."""
    for _ in range(attempts):
        table = random_local_table(net, rates, q, rng)
        code = propagate(net, rates, table, q)
        if all(check_decodable(code)):
            return code, table
    return None
