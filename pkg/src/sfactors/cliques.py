"""Exact maximal clique / maximal independent set enumeration over bitsets.

Bron-Kerbosch with Tomita pivoting (pivot maximises |P & N(u)|), run with
an explicit stack so deep cliques do not hit the recursion limit.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .cayley import Graph, complement_graph
from .errors import CapExceeded, TooLarge

DEFAULT_CAP = 10**6
BRUTE_FORCE_LIMIT = 20


class Kind(str, Enum):
    CLIQUE = "clique"
    INDEPENDENT = "independent"


class Mode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    EARLY_EXIT = "early_exit"


def members(bits: int) -> tuple[int, ...]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


def to_bits(vertices) -> int:
    b = 0
    for v in vertices:
        b |= 1 << v
    return b


def _pivot(adj, P: int, X: int) -> int:
    best, best_count = -1, -1
    rest = P | X
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        c = (P & adj[u]).bit_count()
        if c > best_count:
            best, best_count = u, c
        rest ^= low
    return best


def _expand(adj, R: int, P: int, X: int) -> Iterator[int]:
    if not P:
        if not X:
            yield R
        return
    stack = [[R, P, X, P & ~adj[_pivot(adj, P, X)]]]
    while stack:
        frame = stack[-1]
        R, P, X, cand = frame
        if not cand:
            stack.pop()
            continue
        low = cand & -cand
        v = low.bit_length() - 1
        frame[1] = P & ~low
        frame[2] = X | low
        frame[3] = cand ^ low
        nb = adj[v]
        P2, X2 = P & nb, X & nb
        if not P2:
            if not X2:
                yield R | low
            continue
        stack.append([R | low, P2, X2, P2 & ~adj[_pivot(adj, P2, X2)]])


def root_branches(graph: Graph) -> list[tuple[int, int, int]]:
    """Independent subproblems (R, P, X) below the top-level pivot."""
    adj = graph.adj
    P, X = (1 << graph.n) - 1, 0
    if not P:
        return [(0, 0, 0)]
    cand = P & ~adj[_pivot(adj, P, X)]
    out = []
    for v in members(cand):
        low = 1 << v
        out.append((low, P & adj[v], X & adj[v]))
        P &= ~low
        X |= low
    return out


def iter_maximal_cliques(graph: Graph) -> Iterator[int]:
    """Yield every maximal clique of ``graph`` once, as a vertex bitset."""
    return _expand(graph.adj, 0, (1 << graph.n) - 1, 0)


def _branch_worker(args):
    adj, (R, P, X), cap = args
    out = []
    for s in _expand(adj, R, P, X):
        out.append(s)
        if len(out) > cap:
            break
    return out


def _lex_key(bits: int) -> tuple[int, ...]:
    return members(bits)


@dataclass
class MaximalSetFamily:
    graph: Graph
    kind: Kind
    sets: list[int] = field(default_factory=list)

    def __len__(self):
        return len(self.sets)

    def as_tuples(self) -> list[tuple[int, ...]]:
        return [members(s) for s in self.sets]

    def as_frozensets(self) -> set[frozenset]:
        return {frozenset(members(s)) for s in self.sets}

    def sizes(self) -> list[int]:
        return [s.bit_count() for s in self.sets]


def enumerate_maximal_cliques(graph: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> MaximalSetFamily:
    """All maximal cliques, sorted lexicographically by member tuple.

    ``workers > 1`` farms the top-level branches out to a process pool; the
    sorted output does not depend on the worker count.
    """
    if workers > 1 and graph.n > 1:
        branches = root_branches(graph)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_branch_worker, [(graph.adj, b, cap) for b in branches])
            sets = []
            for part in parts:
                sets.extend(part)
                if len(sets) > cap:
                    raise CapExceeded(cap, len(sets))
    else:
        sets = []
        for s in iter_maximal_cliques(graph):
            sets.append(s)
            if len(sets) > cap:
                raise CapExceeded(cap, len(sets))
    sets.sort(key=_lex_key)
    return MaximalSetFamily(graph, Kind.CLIQUE, sets)


def enumerate_maximal_independent_sets(graph: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> MaximalSetFamily:
    fam = enumerate_maximal_cliques(complement_graph(graph), cap=cap, workers=workers)
    return MaximalSetFamily(graph, Kind.INDEPENDENT, fam.sets)


def brute_force_maximal_sets(graph: Graph, kind: Kind = Kind.CLIQUE) -> MaximalSetFamily:
    """Reference oracle: test all 2^n vertex subsets directly."""
    n = graph.n
    if n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {n}")
    adj = graph.adj
    full = (1 << n) - 1
    if kind == Kind.CLIQUE:
        nbr = [adj[v] | (1 << v) for v in range(n)]
    else:
        nbr = [(full & ~adj[v]) for v in range(n)]  # v plus its non-neighbours
    good = []
    for s in range(1 << n):
        ok = True
        for v in members(s):
            if s & ~nbr[v]:
                ok = False
                break
        if not ok:
            continue
        # maximal: no outside vertex is compatible with every member
        maximal = True
        for w in range(n):
            if not s >> w & 1 and s & ~nbr[w] == 0:
                maximal = False
                break
        if maximal:
            good.append(s)
    good.sort(key=_lex_key)
    return MaximalSetFamily(graph, kind, good)


@dataclass
class ExtremalReport:
    kind: Kind
    max_size: int
    min_maximal_size: int
    witness_max: tuple[int, ...]
    witness_min: tuple[int, ...]
    exhaustive: bool
    count: int

    @property
    def uniform(self) -> bool:
        return self.max_size == self.min_maximal_size

    def to_json(self, name=None) -> dict:
        fmt = (lambda v: name(v)) if name else (lambda v: v)
        return {
            "kind": self.kind.value,
            "max_size": self.max_size,
            "min_maximal_size": self.min_maximal_size,
            "witness_max": [fmt(v) for v in self.witness_max],
            "witness_min": [fmt(v) for v in self.witness_min],
            "exhaustive": self.exhaustive,
            "count": self.count,
        }


def _extremal(stream, kind: Kind, mode: Mode, cap: int) -> ExtremalReport:
    best: dict[int, tuple[int, ...]] = {}  # size -> lexicographically smallest set
    count = 0
    stopped = False
    for s in stream:
        count += 1
        if count > cap:
            raise CapExceeded(cap, count)
        k = s.bit_count()
        key = members(s)
        if k not in best or key < best[k]:
            best[k] = key
        if mode == Mode.EARLY_EXIT and len(best) > 1:
            stopped = True
            break
    hi, lo = max(best), min(best)
    return ExtremalReport(kind, hi, lo, best[hi], best[lo], not stopped, count)


def extremal_clique_numbers(graph: Graph, mode: Mode = Mode.EXHAUSTIVE, cap: int = DEFAULT_CAP, workers: int = 1) -> ExtremalReport:
    """omega and iota with lexicographically smallest witnesses.

    EARLY_EXIT stops at the first pair of maximal cliques of different
    sizes; the witnesses are then valid but the numbers may not be extremal.
    """
    if workers > 1 and mode == Mode.EXHAUSTIVE:
        stream = iter(enumerate_maximal_cliques(graph, cap=cap, workers=workers).sets)
    else:
        stream = iter_maximal_cliques(graph)
    return _extremal(stream, Kind.CLIQUE, mode, cap)


def extremal_independent_numbers(graph: Graph, mode: Mode = Mode.EXHAUSTIVE, cap: int = DEFAULT_CAP, workers: int = 1) -> ExtremalReport:
    """alpha and i (independent domination number) with witnesses."""
    rep = extremal_clique_numbers(complement_graph(graph), mode=mode, cap=cap, workers=workers)
    rep.kind = Kind.INDEPENDENT
    return rep


def is_well_covered(graph: Graph, mode: Mode = Mode.EXHAUSTIVE, cap: int = DEFAULT_CAP) -> tuple[bool, ExtremalReport]:
    rep = extremal_independent_numbers(graph, mode=mode, cap=cap)
    return rep.uniform, rep


def is_clique(graph: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(graph.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def is_maximal_clique(graph: Graph, vertices) -> bool:
    s = to_bits(vertices)
    if not is_clique(graph, vertices):
        return False
    return not any(not s >> w & 1 and s & ~graph.adj[w] == 0 for w in range(graph.n))


def is_maximal_independent(graph: Graph, vertices) -> bool:
    return is_maximal_clique(complement_graph(graph), vertices)
