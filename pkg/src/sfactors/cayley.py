"""Connection sets, Cayley graphs and the graph Delta(F) on a connection set."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import ContainsIdentity, EmptySubset, NotSymmetric


@dataclass(frozen=True)
class SymSet:
    """Finite inverse-closed subset of a group not containing the identity."""

    group: object
    elements: tuple

    def __post_init__(self):
        G = self.group
        members = set(self.elements)
        if len(members) != len(self.elements):
            raise ValueError("duplicate elements in SymSet")
        if G.identity in members:
            raise ContainsIdentity(f"{G.format(G.identity)} is the identity")
        for a in self.elements:
            if G.inv(a) not in members:
                raise NotSymmetric(f"{G.format(a)} is present but its inverse {G.format(G.inv(a))} is not")

    @classmethod
    def of(cls, G, elements: Iterable, *, keep_order: bool = False) -> "SymSet":
        elements = list(dict.fromkeys(elements))
        if not keep_order:
            elements.sort(key=G.sort_key)
        return cls(G, tuple(elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.as_set()

    def as_set(self) -> frozenset:
        return frozenset(self.elements)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbourhood bitset of ``v``."""

    adj: tuple
    labels: tuple

    def __post_init__(self):
        n = len(self.adj)
        if len(self.labels) != n:
            raise ValueError("one label per vertex required")
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if nb >> n:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            rest = nb
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")
                rest ^= low

    @classmethod
    def _trusted(cls, adj: tuple, labels: tuple) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "labels", labels)
        return g

    @property
    def n(self) -> int:
        return len(self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.adj[u] >> v & 1]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            nb = 0
            for u in vs:
                if self.adj[v] >> u & 1:
                    nb |= 1 << pos[u]
            adj.append(nb)
        return Graph._trusted(tuple(adj), tuple(self.labels[v] for v in vs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return cls(tuple(adj), tuple(labels) if labels is not None else tuple(range(n)))

    def to_json(self, name: Callable = str) -> dict:
        return {"n": self.n, "labels": [name(x) for x in self.labels], "edges": [list(e) for e in self.edges()]}

    def to_dot(self, name: Callable = str, graph_name: str = "G") -> str:
        lines = [f"graph {json.dumps(graph_name)} {{"]
        for v, lab in enumerate(self.labels):
            lines.append(f"  {v} [label={json.dumps(name(lab))}];")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _nonempty(A) -> list:
    A = list(dict.fromkeys(A))
    if not A:
        raise EmptySubset("subset must be non-empty")
    return A


def boundary_set(G, A: Iterable) -> SymSet:
    """The set of quotients a^-1 b over distinct a, b in A."""
    A = _nonempty(A)
    out = {G.mul(G.inv(a), b) for a in A for b in A if a != b}
    return SymSet.of(G, out)


def difference_set(G, A: Iterable) -> frozenset:
    """A^-1 A, identity included."""
    A = _nonempty(A)
    return frozenset(G.mul(G.inv(a), b) for a in A for b in A)


def complement_set(G, A: Iterable) -> SymSet:
    """F = G minus A^-1 A, for finite G."""
    D = difference_set(G, A)
    return SymSet.of(G, (g for g in G.elements() if g not in D))


def cayley_graph(G, S: SymSet) -> Graph:
    """Cay(G, S) on a finite group: g ~ h iff g h^-1 lies in S."""
    n = G.order
    rows = [G._rows[s] for s in S.elements]
    adj = []
    for h in range(n):
        nb = 0
        for row in rows:
            nb |= 1 << row[h]  # s*h
        adj.append(nb)
    return Graph._trusted(tuple(adj), tuple(range(n)))


def complement_graph(graph: Graph) -> Graph:
    full = (1 << graph.n) - 1
    adj = tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(graph.adj))
    return Graph._trusted(adj, graph.labels)


def delta_graph(G, F: SymSet) -> Graph:
    """Graph on the elements of F with u ~ v iff u v^-1 is in F.

    Vertices follow the listed order of ``F``; works for finite and
    enumerable groups alike since only products inside F are formed.
    """
    if not isinstance(F, SymSet):
        F = SymSet.of(G, F, keep_order=True)
    elems = F.elements
    members = F.as_set()
    adj = []
    for u in elems:
        nb = 0
        for j, v in enumerate(elems):
            if v != u and G.mul(u, G.inv(v)) in members:
                nb |= 1 << j
        adj.append(nb)
    return Graph._trusted(tuple(adj), elems)


def induced_subgraph_check(G, A: Iterable) -> bool:
    """Delta(F) coincides with the subgraph of Cay(G, F) induced on F, F = G - A^-1 A."""
    F = complement_set(G, A)
    big = cayley_graph(G, F)
    return delta_graph(G, F) == big.induced(F.elements)
