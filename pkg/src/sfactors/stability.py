"""s-factors and stability of subsets and finite groups.

A right s-factor of A is a maximal U with AU direct (every product au
arises from one pair only). The s-factors of A are exactly the maximal
independent sets of Cay(G, dA), so the lower/upper s-indices are the
independent domination number and independence number of that graph.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .cayley import boundary_set, cayley_graph
from .cliques import DEFAULT_CAP, Mode, enumerate_maximal_independent_sets, extremal_independent_numbers, members
from .errors import BudgetExceeded, EmptySubset, TooLarge
from .groups import FiniteGroup

EXHAUSTIVE_SCAN_LIMIT = 24
CROSS_VALIDATE_LIMIT = 16


@dataclass
class SFactorCheck:
    subset_A: tuple
    candidate_U: tuple
    sf1: bool
    sf2: bool
    violation: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.sf1 and self.sf2


def check_sfactor(G: FiniteGroup, A: Iterable[int], U: Iterable[int]) -> SFactorCheck:
    """Test the two s-factor conditions straight from their definition.

    On an SF1 failure ``violation`` is ``(a, u, b, v)`` with ``au == bv``;
    on an SF2 failure it is ``(x,)`` with ``A(U + {x})`` still direct.
    """
    A = tuple(dict.fromkeys(A))
    U = tuple(dict.fromkeys(U))
    if not A or not U:
        raise EmptySubset("A and U must be non-empty")
    seen = {}
    for a in A:
        for u in U:
            x = G.mul(a, u)
            if x in seen:
                b, v = seen[x]
                return SFactorCheck(A, U, False, False, (b, v, a, u))
            seen[x] = (a, u)
    Uset = set(U)
    for x in G.elements():
        if x in Uset:
            continue
        if all(G.mul(a, x) not in seen for a in A):
            return SFactorCheck(A, U, True, False, (x,))
    return SFactorCheck(A, U, True, True, None)


def sfactor_family(G: FiniteGroup, A: Iterable[int]) -> set[frozenset]:
    """Every right s-factor of A, found by searching subsets U for which the
    products au are pairwise distinct. Independent of any graph machinery."""
    A = list(dict.fromkeys(A))
    if not A:
        raise EmptySubset("A must be non-empty")
    n = G.order
    if n > CROSS_VALIDATE_LIMIT:
        raise TooLarge(f"definition-level search limited to order {CROSS_VALIDATE_LIMIT}, got {n}")
    prod = [0] * n  # bitset of the products a*x over a in A
    for x in range(n):
        for a in A:
            prod[x] |= 1 << G.mul(a, x)
    out = set()

    def grow(i, used, chosen):
        if i == n:
            if all(chosen >> x & 1 or prod[x] & used for x in range(n)):
                out.add(frozenset(members(chosen)))
            return
        if not prod[i] & used:
            grow(i + 1, used | prod[i], chosen | 1 << i)
        grow(i + 1, used, chosen)

    grow(0, 0, 0)
    return out


@dataclass
class SIndexReport:
    lower: int
    upper: int
    stable: bool
    witness_min: tuple
    witness_max: tuple

    def to_json(self, G) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "stable": self.stable,
            "witness_min": [G.name(x) for x in self.witness_min],
            "witness_max": [G.name(x) for x in self.witness_max],
        }


def s_indices(G: FiniteGroup, A: Iterable[int], cap: int = DEFAULT_CAP, workers: int = 1) -> SIndexReport:
    gamma = cayley_graph(G, boundary_set(G, A))
    rep = extremal_independent_numbers(gamma, cap=cap, workers=workers)
    return SIndexReport(rep.min_maximal_size, rep.max_size, rep.uniform, rep.witness_min, rep.witness_max)


def normalize_subset(G, A: Iterable) -> list:
    """Left-translate A by the inverse of its smallest element so that e is in A."""
    A = sorted(dict.fromkeys(A), key=G.sort_key)
    if not A:
        raise EmptySubset("A must be non-empty")
    x_inv = G.inv(A[0])
    return sorted((G.mul(x_inv, a) for a in A), key=G.sort_key)


def is_stable_subset(G: FiniteGroup, A: Iterable[int], cap: int = DEFAULT_CAP) -> bool:
    return s_indices(G, normalize_subset(G, A), cap=cap).stable


def cross_validate_correspondence(G: FiniteGroup, A: Iterable[int]) -> bool:
    """Definition-level s-factors of A == maximal independent sets of Cay(G, dA)."""
    A = list(A)
    by_definition = sfactor_family(G, A)
    gamma = cayley_graph(G, boundary_set(G, A))
    return by_definition == enumerate_maximal_independent_sets(gamma).as_frozensets()


class Verdict(str, Enum):
    STABLE = "STABLE"
    UNSTABLE = "UNSTABLE"
    UNKNOWN = "UNKNOWN"


@dataclass
class GroupStabilityReport:
    group: str
    verdict: Verdict
    witness_A: tuple | None
    subsets_scanned: int
    elapsed_ms: float
    indices: SIndexReport | None = None

    def to_json(self, G) -> dict:
        idx = self.indices
        return {
            "group": self.group,
            "verdict": self.verdict.value,
            "witness_A": None if self.witness_A is None else [G.name(x) for x in self.witness_A],
            "lower": idx.lower if idx else None,
            "upper": idx.upper if idx else None,
            "witness_min": [G.name(x) for x in idx.witness_min] if idx else None,
            "witness_max": [G.name(x) for x in idx.witness_max] if idx else None,
            "scanned": self.subsets_scanned,
            "elapsed_ms": self.elapsed_ms,
        }


def _unstable(G, A, cap) -> bool:
    gamma = cayley_graph(G, boundary_set(G, A))
    return not extremal_independent_numbers(gamma, mode=Mode.EARLY_EXIT, cap=cap).uniform


def _scan_range(args):
    G, k, start, stop, cap = args
    combos = itertools.islice(itertools.combinations(range(1, G.order), k - 1), start, stop)
    for i, rest in enumerate(combos):
        A = (0,) + rest
        if _unstable(G, A, cap):
            return start + i, A, i + 1
    return None, None, stop - start


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    step = max(1, math.ceil(total / parts))
    return [(s, min(total, s + step)) for s in range(0, total, step)]


def scan_group_stability(
    G: FiniteGroup,
    budget: int | None = None,
    workers: int = 1,
    cap: int = DEFAULT_CAP,
    seed: int = 0,
) -> GroupStabilityReport:
    """Decide stability of G by testing subsets A containing e.

    Orders up to 24 are scanned exhaustively by |A| then lexicographically
    (singletons and A = G are always stable and skipped); the result is the
    first unstable subset in that order whatever ``workers`` is. Larger
    orders need ``budget`` and sample subsets at random. BudgetExceeded
    carries an UNKNOWN report.
    """
    t0 = time.perf_counter()
    n = G.order
    label = G.label
    scanned = 0

    def finish(verdict, A=None):
        idx = s_indices(G, A, cap=cap) if A is not None else None
        ms = round((time.perf_counter() - t0) * 1000, 3)
        return GroupStabilityReport(label, verdict, A, scanned, ms, idx)

    if n > EXHAUSTIVE_SCAN_LIMIT:
        if budget is None:
            raise TooLarge(f"order {n} > {EXHAUSTIVE_SCAN_LIMIT} needs a subset budget for a randomized scan")
        rng = random.Random(seed)
        others = list(range(1, n))
        for _ in range(budget):
            k = rng.randint(1, n - 2)
            A = (0,) + tuple(sorted(rng.sample(others, k)))
            scanned += 1
            if _unstable(G, A, cap):
                return finish(Verdict.UNSTABLE, A)
        raise BudgetExceeded(finish(Verdict.UNKNOWN))

    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for k in range(2, n):
            total = math.comb(n - 1, k - 1)
            if budget is not None:
                total = min(total, budget - scanned)
            if total <= 0:
                break
            jobs = [(G, k, s, e, cap) for s, e in _ranges(total, workers)]
            results = list(pool.map(_scan_range, jobs)) if pool else [_scan_range(jobs[0])]
            hits = [r for r in results if r[0] is not None]
            if hits:
                pos, A, _ = min(hits, key=lambda r: r[0])
                scanned += pos + 1
                return finish(Verdict.UNSTABLE, A)
            scanned += total
            if budget is not None and scanned >= budget and k < n - 1:
                raise BudgetExceeded(finish(Verdict.UNKNOWN))
    finally:
        if pool:
            pool.shutdown()
    return finish(Verdict.STABLE)
