"""Constructive pieces of the instability argument.

* ``greedy_construct_A`` builds A with A^-1 A avoiding a finite symmetric F
  while covering an enumeration of G - F, one pair {a, a g} per step.
* ``witness_*`` build the four finite configurations F whose graph
  Delta(F) has maximal cliques of two different sizes.
* ``case_analysis`` routes a concrete infinite group to one of them.
* ``verify_*`` check the 2-group lemmas on concrete finite groups.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .cayley import Graph, SymSet, delta_graph
from .cliques import ExtremalReport, Mode, extremal_clique_numbers, is_maximal_clique
from .errors import (
    ContainsIdentity,
    FNotValid,
    NotASubgroup,
    NotSymmetric,
    OrderInfinite,
    PreconditionViolated,
    SearchExhausted,
    StepsExhausted,
    UnsupportedGroup,
)
from .groups import INFINITE, cyclic_subgroup, generated_subgroup, involutions, is_subgroup, squares_set
from . import groups as _g

# --- greedy construction of A ---------------------------------------------


@dataclass
class GreedyState:
    group: object
    F: SymSet
    A: list = field(default_factory=list)  # distinct chosen elements, in order of choice
    pairs: list = field(default_factory=list)  # (a_xi, a_xi * g_xi) per step
    covered: list = field(default_factory=list)  # g_xi handled so far
    step: int = 0
    invariant_log: list = field(default_factory=list)

    @property
    def invariant_ok(self) -> bool:
        return all(self.invariant_log) and check_greedy_invariants(self.group, self.F, self.A, self.covered)

    def to_json(self) -> dict:
        fmt = self.group.format
        return {
            "steps": self.step,
            "A": [fmt(a) for a in self.A],
            "covered": [fmt(g) for g in self.covered],
            "invariant_ok": self.invariant_ok,
        }


def check_greedy_invariants(G, F: Iterable, A: Iterable, covered: Iterable) -> bool:
    """Brute force over A x A: A and AF are disjoint and every covered g is some a^-1 b."""
    F = set(F)
    A = list(A)
    quotients = {G.mul(G.inv(a), b) for a in A for b in A}
    # a = b f for a, b in A and f in F  <=>  b^-1 a in F
    return not (quotients & F) and all(g in quotients for g in covered)


def _as_symset(G, F) -> SymSet:
    if isinstance(F, SymSet):
        return F
    try:
        return SymSet.of(G, F, keep_order=True)
    except (NotSymmetric, ContainsIdentity) as exc:
        raise FNotValid(str(exc)) from None


def greedy_construct_A(G, F, steps: int, *, skip_covered: bool = False, check_each_step: bool = False) -> GreedyState:
    """Run ``steps`` stages of the greedy construction.

    Stage xi takes the next element g of G - F (in enumeration order) and the
    first enumerated a outside A F and A F g^-1, then adds a and a g to A.
    ``skip_covered`` leaves a stage empty when g is already in A^-1 A; it
    keeps finite runs small. Finite groups can run out of admissible a,
    which raises StepsExhausted.
    """
    F = _as_symset(G, F)
    if steps < 1:
        raise ValueError("steps must be >= 1")
    Fset = F.as_set()
    state = GreedyState(G, F)
    in_A: set = set()
    AF: set = set()
    targets = (g for g in G.enumerate() if g not in Fset)

    def add(x):
        if x not in in_A:
            in_A.add(x)
            state.A.append(x)
            AF.update(G.mul(x, f) for f in F.elements)

    quotients: set = set()
    for _ in range(steps):
        g = next(targets, None)
        if g is None:
            break
        if skip_covered and g in quotients:
            state.covered.append(g)
            state.step += 1
            continue
        g_inv = G.inv(g)
        forbidden = AF | {G.mul(x, g_inv) for x in AF}
        a = next((x for x in G.enumerate() if x not in forbidden), None)
        if a is None:
            raise StepsExhausted(f"no admissible element at step {state.step} (target {G.format(g)})")
        ag = G.mul(a, g)
        for x in (a, ag):
            if x not in in_A:
                quotients.update(G.mul(G.inv(x), y) for y in in_A)
                quotients.update(G.mul(G.inv(y), x) for y in in_A)
                quotients.add(G.identity)
                add(x)
        state.pairs.append((a, ag))
        state.covered.append(g)
        state.step += 1
        if check_each_step:
            state.invariant_log.append(check_greedy_invariants(G, Fset, state.A, state.covered))
    return state


# --- witness configurations -----------------------------------------------


class Case(str, Enum):
    INVOLUTION = "involution"
    NONCUBE = "noncube"
    CUBE = "cube"
    INFINITE_CYCLIC = "infinite-cyclic"


@dataclass
class WitnessF:
    group: str
    case: Case
    params: dict
    F: SymSet
    delta: Graph
    report: ExtremalReport
    isolated_vertex: object = None
    route: str = ""

    @property
    def iota(self) -> int:
        return self.report.min_maximal_size

    @property
    def omega(self) -> int:
        return self.report.max_size

    def to_json(self) -> dict:
        G = self.F.group
        out = {
            "group": self.group,
            "case": self.case.value,
            "params": self.params,
            "F": [G.format(x) for x in self.F.elements],
            "iota": self.iota,
            "omega": self.omega,
            "isolated_vertex": None if self.isolated_vertex is None else G.format(self.isolated_vertex),
        }
        if self.route:
            out["route"] = self.route
        return out


def _require(cond: bool, hypothesis: str):
    if not cond:
        raise PreconditionViolated(hypothesis)


def _finite_subgroup(G, H: Iterable) -> list:
    H = sorted(set(H), key=G.sort_key)
    _require(is_subgroup(G, H), "H is a subgroup")
    return H


def _finish(G, case, params, F_elems, isolated=None, clique=None) -> WitnessF:
    F = SymSet.of(G, F_elems, keep_order=True)
    delta = delta_graph(G, F)
    report = extremal_clique_numbers(delta, mode=Mode.EXHAUSTIVE)
    pos = {x: i for i, x in enumerate(F.elements)}
    if isolated is not None and delta.degree(pos[isolated]) != 0:
        raise AssertionError(f"{G.format(isolated)} is not isolated in Delta(F)")
    if clique is not None and not is_maximal_clique(delta, [pos[x] for x in clique]):
        raise AssertionError("{f, f^-1} is not a maximal clique of Delta(F)")
    if not report.min_maximal_size < report.max_size:
        raise AssertionError(f"iota={report.min_maximal_size} is not below omega={report.max_size}")
    fmt = G.format
    params = {k: (fmt(v) if k in ("f", "s", "h") else ([fmt(x) for x in v] if k == "H" else v)) for k, v in params.items()}
    return WitnessF(getattr(G, "label", "?"), case, params, F, delta, report, isolated)


def witness_involution(G, H: Iterable, f) -> WitnessF:
    """F = {f} + H*, for a finite subgroup H with |H| > 2 and an involution f outside H."""
    H = _finite_subgroup(G, H)
    _require(len(H) > 2, "|H| > 2")
    _require(f not in H, "f not in H")
    _require(G.mul(f, f) == G.identity, "f^2 = e")
    F = [f] + [h for h in H if h != G.identity]
    return _finish(G, Case.INVOLUTION, {"H": H, "f": f}, F, isolated=f)


def witness_noncube(G, H: Iterable, f) -> WitnessF:
    """F = {f, f^-1} + H*, with f outside H, f^2 outside H and f^3 != e."""
    H = _finite_subgroup(G, H)
    _require(len(H) > 2, "|H| > 2")
    _require(f not in H, "f not in H")
    _require(G.mul(f, f) not in H, "f^2 not in H")
    _require(G.power(f, 3) != G.identity, "f^3 != e")
    F = [f, G.inv(f)] + [h for h in H if h != G.identity]
    return _finish(G, Case.NONCUBE, {"H": H, "f": f}, F, isolated=f)


def witness_cube(G, H: Iterable, f) -> WitnessF:
    """F = {f, f^-1} + H*, with |H| > 3 and f of order 3 outside H; iota = 2."""
    H = _finite_subgroup(G, H)
    _require(len(H) > 3, "|H| > 3")
    _require(f not in H, "f not in H")
    _require(G.power(f, 3) == G.identity, "f^3 = e")
    T = [f, G.inv(f)]
    F = T + [h for h in H if h != G.identity]
    w = _finish(G, Case.CUBE, {"H": H, "f": f}, F, clique=T)
    if w.iota != 2:
        raise AssertionError(f"expected iota = 2, got {w.iota}")
    return w


def witness_infinite_cyclic(G, s, n: int = 3, m: int = 7) -> WitnessF:
    """F = {s^m, s^-m} + {s^i : 0 < |i| <= n} for s of infinite order, n > 2, m >= 2n + 1."""
    _require(G.order_of(s) == INFINITE, "s has infinite order")
    _require(n > 2, "n > 2")
    _require(m >= 2 * n + 1, "m >= 2n + 1")
    F = [G.power(s, m), G.power(s, -m)]
    for i in range(1, n + 1):
        F += [G.power(s, i), G.power(s, -i)]
    return _finish(G, Case.INFINITE_CYCLIC, {"s": s, "n": n, "m": m}, F, isolated=F[0])


# --- case analysis --------------------------------------------------------


def _odd_part_power(G, g):
    """A power of g of odd order > 1, or None."""
    k = G.order_of(g)
    if k == INFINITE:
        return None
    two = 1
    while k % 2 == 0:
        k //= 2
        two *= 2
    return G.power(g, two) if k > 1 else None


def _route(G, elems: list) -> WitnessF:
    e = G.identity
    exhausted = SearchExhausted if not G.is_finite else UnsupportedGroup

    # Case 1: an element of infinite order.
    s = next((g for g in elems if G.order_of(g) == INFINITE), None)
    if s is not None:
        w = witness_infinite_cyclic(G, s, 3, 7)
        w.route = "1"
        return w

    # Case 2A: a nontrivial element of odd order.
    h = next((x for x in (_odd_part_power(G, g) for g in elems) if x is not None), None)
    if h is not None:
        H = cyclic_subgroup(G, h)
        outside = [g for g in elems if g not in H]
        if not outside:
            raise exhausted("no element outside <h> in the searched prefix")
        f = next((g for g in outside if G.mul(g, g) in H), None)
        if f is not None:
            if G.mul(f, f) == e:
                w = witness_involution(G, H, f)
            else:
                # <f> = <f^m> x <f^2> with |f| = 2m, m odd
                mm = G.order_of(f) // 2
                w = witness_involution(G, cyclic_subgroup(G, G.mul(f, f)), G.power(f, mm))
            w.route = "2A/square-in-H"
            return w
        f = next((g for g in outside if G.power(g, 3) != e), None)
        if f is not None:
            w = witness_noncube(G, H, f)
            w.route = "2A/noncube"
            return w
        # every searched element outside H has order 3
        if len(H) > 3:
            w = witness_cube(G, H, outside[0])
            w.route = "2A/cube"
            return w
        for g in outside:
            try:
                K = generated_subgroup(G, [h, g], limit=len(elems))
            except OrderInfinite:
                continue
            f = next((x for x in elems if x not in K), None)
            if len(K) > 3 and f is not None:
                w = witness_cube(G, K, f)
                w.route = "2A/cube-in-K"
                return w
        raise exhausted("no finite subgroup K > H with an element outside it in the prefix")

    # Case 2B: a 2-group.
    nontrivial = [g for g in elems if g != e]
    if not nontrivial:
        raise exhausted("trivial prefix")
    if all(G.order_of(g) == 2 for g in nontrivial):
        x = nontrivial[0]
        y = next((g for g in nontrivial if g != x), None)
        if y is None:
            raise exhausted("need two distinct involutions")
        H = {e, x, y, G.mul(x, y)}
        f = next((g for g in elems if g not in H), None)
        if f is None:
            raise exhausted("no element outside the Klein subgroup")
        w = witness_involution(G, H, f)
        w.route = "2B/exponent-2"
        return w
    g = next(g for g in nontrivial if G.order_of(g) > 2)
    h = G.power(g, G.order_of(g) // 4)
    H = cyclic_subgroup(G, h)
    outside = [x for x in elems if x not in H]
    f = next((x for x in outside if G.mul(x, x) not in H), None)
    if f is not None:
        w = witness_noncube(G, H, f)
        w.route = "2B/noncube"
        return w
    f = next((x for x in outside if G.mul(x, x) == e), None)
    if f is not None:
        w = witness_involution(G, H, f)
        w.route = "2B/involution"
        return w
    raise exhausted("every searched element outside H squares into H* (forces a finite group)")


def case_analysis(G, prefix: int = 512, max_prefix: int = 1 << 15) -> WitnessF:
    """Pick the branch of the instability argument that applies to G and
    return its witness configuration, searching a growing enumeration prefix."""
    while True:
        elems = list(itertools.islice(G.enumerate(), prefix))
        try:
            return _route(G, elems)
        except SearchExhausted:
            if prefix >= max_prefix:
                raise
            prefix *= 2


# --- finite 2-group lemmas ------------------------------------------------


class Outcome(str, Enum):
    VERIFIED = "VERIFIED"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    VIOLATED = "VIOLATED"


def verify_exponent2_quotient(G, H: Iterable[int]) -> Outcome:
    """If every square lies in H, check that H is normal and G/H is abelian of exponent 2."""
    H = set(H)
    if not is_subgroup(G, H):
        raise NotASubgroup("H is not a subgroup")
    elems = list(G.elements())
    if any(G.mul(g, g) not in H for g in elems):
        return Outcome.NOT_APPLICABLE
    normal = all(G.mul(G.mul(g, h), G.inv(g)) in H for g in elems for h in H)
    exp2 = all(G.mul(g, g) in H for g in elems)
    # gH * kH = kH * gH  <=>  (kg)^-1 gk in H
    abelian = all(G.mul(G.inv(G.mul(k, g)), G.mul(g, k)) in H for g in elems for k in elems)
    return Outcome.VERIFIED if normal and exp2 and abelian else Outcome.VIOLATED


@dataclass
class Order32Entry:
    group: str
    involutions: list
    squares: int
    squares_subgroup: bool


def verify_order32_lemma() -> dict:
    """The two groups of order 32 with a unique involution have too many squares."""
    entries = []
    C = _g.cyclic(32)
    Q = _g.quaternion(32)
    for G, gen in ((C, 2), (Q, 2)):  # index 2 is x^2 in C32 and a^2 in Q32
        S = squares_set(G)
        entries.append(
            Order32Entry(G.label, sorted(G.name(x) for x in involutions(G)), len(S), S == cyclic_subgroup(G, gen))
        )
    conclusion = all(len(e.involutions) == 1 and e.squares > 4 for e in entries)
    return {
        "groups": [
            {"group": e.group, "involutions": e.involutions, "squares": e.squares, "squares_cyclic_subgroup": e.squares_subgroup}
            for e in entries
        ],
        "holds": conclusion,
    }
