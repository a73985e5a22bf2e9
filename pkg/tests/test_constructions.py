import itertools
import random

import pytest

from sfactors.catalog import build_group, enumerable_catalog, finite_catalog
from sfactors.cayley import complement_set, delta_graph, difference_set
from sfactors.cliques import is_maximal_clique
from sfactors.constructions import (
    Case,
    Outcome,
    case_analysis,
    check_greedy_invariants,
    greedy_construct_A,
    verify_exponent2_quotient,
    verify_order32_lemma,
    witness_cube,
    witness_infinite_cyclic,
    witness_involution,
    witness_noncube,
)
from sfactors.errors import FNotValid, NotASubgroup, PreconditionViolated, StepsExhausted, UnsupportedGroup
from sfactors.groups import cyclic_subgroup, generated_subgroup
from conftest import el

Z_F = [1, -1, 2, -2, 3, -3, 7, -7]


def brute_delta_numbers(G, F):
    """(iota, omega) of Delta(F) from group arithmetic over all subsets of F."""
    F = list(F)
    Fs = set(F)

    def clique(Q):
        return all(G.mul(u, G.inv(v)) in Fs for u, v in itertools.permutations(Q, 2))

    cliques = [set(Q) for k in range(len(F) + 1) for Q in itertools.combinations(F, k) if clique(Q)]
    maximal = [Q for Q in cliques if not any(clique(Q | {x}) for x in F if x not in Q)]
    return min(map(len, maximal)), max(map(len, maximal))


def brute_invariants(G, F, A, covered):
    A, F = list(A), set(F)
    disjoint = all(G.mul(b, f) != a for a in A for b in A for f in F)
    cover = all(any(G.mul(G.inv(a), b) == g for a in A for b in A) for g in covered)
    return disjoint and cover


# --- greedy ---------------------------------------------------------------


def test_greedy_z_pm1(Z):
    state = greedy_construct_A(Z, [1, -1], 6)
    assert state.step == 6
    assert brute_invariants(Z, [1, -1], state.A, state.covered)
    assert state.covered == [0, 2, -2, 3, -3, 4]


def test_greedy_empty_f_is_prefix(Z):
    state = greedy_construct_A(Z, [], 7)
    assert state.A == Z.prefix(7)
    G = build_group("dihedral:4")
    assert sorted(greedy_construct_A(G, [], 8).A) == list(range(8))


def test_greedy_z_witness_set(Z):
    state = greedy_construct_A(Z, Z_F, 10, check_each_step=True)
    assert state.invariant_log == [True] * 10
    assert brute_invariants(Z, Z_F, state.A, state.covered)


@pytest.mark.parametrize("text", ["z", "z2", "free:2", "dinf", "pruefer:2", "pruefer:3", "eab2inf"])
def test_greedy_invariants_each_step(text):
    G = build_group(text)
    F = case_analysis(G).F.elements
    state = None
    for steps in range(1, 51):
        state = greedy_construct_A(G, F, steps)
        assert brute_invariants(G, F, state.A, state.covered)
    assert len(state.covered) == 50


def test_greedy_rejects_bad_f(Z):
    with pytest.raises(FNotValid):
        greedy_construct_A(Z, [1, 2, -1], 3)
    with pytest.raises(FNotValid):
        greedy_construct_A(Z, [0], 3)


def test_greedy_finite_closure():
    """When a finite run completes, A^-1 A is exactly G - F."""
    rng = random.Random(8)
    completed = 0
    for _, G in finite_catalog(24):
        for _ in range(10):
            A0 = [0] + rng.sample(range(1, G.order), rng.randint(0, G.order - 1))
            F = complement_set(G, A0)
            try:
                state = greedy_construct_A(G, F, G.order, skip_covered=True)
            except StepsExhausted:
                continue
            completed += 1
            assert difference_set(G, state.A) == frozenset(G.elements()) - F.as_set()
    assert completed >= 400


@pytest.mark.parametrize("text,A0", [("cyclic:4", [0, 1]), ("dihedral:5", [0, 1, 5]), ("cyclic:12", [0, 1, 3])])
def test_greedy_finite_closure_fixed(text, A0):
    G = build_group(text)
    F = complement_set(G, A0)
    state = greedy_construct_A(G, F, G.order, skip_covered=True)
    assert difference_set(G, state.A) == frozenset(G.elements()) - F.as_set()


def test_check_greedy_invariants_detects(Z):
    assert not check_greedy_invariants(Z, [1, -1], [0, 1], [])
    assert not check_greedy_invariants(Z, [1, -1], [0, 3], [5])


def test_greedy_json(Z):
    doc = greedy_construct_A(Z, [1, -1], 3).to_json()
    assert doc == {"steps": 3, "A": ["0", "2", "-2"], "covered": ["0", "2", "-2"], "invariant_ok": True}


def test_end_to_end_z(Z):
    state = greedy_construct_A(Z, Z_F, 40)
    window = [a for a in state.A if abs(a) <= 200]
    quotients = {b - a for a in window for b in window}
    assert not quotients & set(Z_F)
    assert all(g in quotients for g in state.covered)
    w = witness_infinite_cyclic(Z, 1, 3, 7)
    assert w.iota < w.omega


# --- witnesses ------------------------------------------------------------


def test_involution_s3(s3):
    H = cyclic_subgroup(s3, s3.parse_element("(123)"))
    f = s3.parse_element("(12)")
    w = witness_involution(s3, H, f)
    assert len(w.F) == 3
    assert (w.iota, w.omega) == brute_delta_numbers(s3, w.F.elements) == (1, 2)
    assert w.isolated_vertex == f


def test_involution_eab2inf():
    G = build_group("eab2inf")
    w = witness_involution(G, [0, 1, 2, 3], 4)
    assert w.iota == 1 and w.omega >= 3
    assert (w.iota, w.omega) == brute_delta_numbers(G, w.F.elements) == (1, 3)


def test_involution_preconditions(s3):
    H = cyclic_subgroup(s3, s3.parse_element("(123)"))
    with pytest.raises(PreconditionViolated, match="f not in H"):
        witness_involution(s3, H, s3.parse_element("(123)"))
    with pytest.raises(PreconditionViolated, match=r"\|H\| > 2"):
        witness_involution(s3, el(s3, "e", "(12)"), s3.parse_element("(13)"))
    with pytest.raises(PreconditionViolated, match="subgroup"):
        witness_involution(s3, el(s3, "e", "(12)", "(13)"), s3.parse_element("(23)"))


def test_noncube_pruefer3():
    G = build_group("pruefer:3")
    H, f = cyclic_subgroup(G, G.parse_element("1/3")), G.parse_element("1/9")
    w = witness_noncube(G, H, f)
    assert w.iota == 1
    assert (w.iota, w.omega) == brute_delta_numbers(G, w.F.elements) == (1, 2)


def test_noncube_pruefer2():
    G = build_group("pruefer:2")
    H, f = cyclic_subgroup(G, G.parse_element("1/4")), G.parse_element("1/16")
    assert G.order_of(f) == 16
    w = witness_noncube(G, H, f)
    assert w.iota == 1 and w.omega >= 3
    assert (w.iota, w.omega) == brute_delta_numbers(G, w.F.elements) == (1, 3)


def test_noncube_preconditions():
    G = build_group("cyclic:9")
    H = cyclic_subgroup(G, 3)
    with pytest.raises(PreconditionViolated, match="f\\^3 != e"):
        witness_noncube(build_group("product:cyclic:3xcyclic:3"), [0, 1, 2], 3)
    with pytest.raises(PreconditionViolated, match="f\\^2 not in H"):
        witness_noncube(build_group("pruefer:2"), [0, 0.25, 0.5, 0.75], build_group("pruefer:2").parse_element("1/8"))
    assert len(H) == 3


def test_cube_a4():
    G = build_group("alt:4")
    H = generated_subgroup(G, el(G, "(12)(34)", "(13)(24)"))
    f = G.parse_element("(123)")
    w = witness_cube(G, H, f)
    assert w.iota == 2 and w.omega >= 3
    assert (w.iota, w.omega) == brute_delta_numbers(G, w.F.elements) == (2, 3)
    pos = {x: i for i, x in enumerate(w.F.elements)}
    assert is_maximal_clique(w.delta, [pos[f], pos[G.inv(f)]])


def test_cube_preconditions():
    G = build_group("alt:4")
    with pytest.raises(PreconditionViolated, match=r"\|H\| > 3"):
        witness_cube(G, cyclic_subgroup(G, G.parse_element("(123)")), G.parse_element("(124)"))
    H = generated_subgroup(G, el(G, "(12)(34)", "(13)(24)"))
    with pytest.raises(PreconditionViolated):
        witness_cube(G, H, G.parse_element("(12)(34)"))
    with pytest.raises(PreconditionViolated, match="f\\^3 = e"):
        witness_cube(build_group("cyclic:12"), [0, 3, 6, 9], 1)


def test_infinite_cyclic_z(Z):
    w = witness_infinite_cyclic(Z, 1, 3, 7)
    assert set(w.F.elements) == set(Z_F) and len(w.F) == 8
    assert (w.iota, w.omega) == brute_delta_numbers(Z, w.F.elements) == (1, 3)
    X = [w.F.elements.index(x) for x in (1, 2)]
    assert w.delta.has_edge(*X)


def test_infinite_cyclic_free_group():
    G = build_group("free:2")
    w = witness_infinite_cyclic(G, G.parse_element("a"), 3, 7)
    assert (w.iota, w.omega) == (1, 3)


@pytest.mark.parametrize("n,m", [(3, 7), (4, 9), (5, 11), (6, 20)])
def test_infinite_cyclic_bounds(Z, n, m):
    w = witness_infinite_cyclic(Z, 1, n, m)
    assert len(w.F) == 2 * n + 2
    assert w.iota == 1 and w.omega >= n - 1


def test_infinite_cyclic_preconditions(Z):
    with pytest.raises(PreconditionViolated, match="2n"):
        witness_infinite_cyclic(Z, 1, 3, 6)
    with pytest.raises(PreconditionViolated, match="n > 2"):
        witness_infinite_cyclic(Z, 1, 2, 9)
    with pytest.raises(PreconditionViolated, match="infinite order"):
        witness_infinite_cyclic(build_group("dinf"), (0, 1), 3, 7)


@pytest.mark.parametrize("text,G", enumerable_catalog())
def test_witness_invariants(text, G):
    w = case_analysis(G)
    assert w.iota < w.omega
    assert (w.iota, w.omega) == brute_delta_numbers(G, w.F.elements)
    if w.isolated_vertex is not None:
        assert w.delta.degree(w.F.elements.index(w.isolated_vertex)) == 0
    assert delta_graph(G, w.F) == w.delta


# --- case analysis --------------------------------------------------------


def test_case_analysis_routes():
    routes = {text: (case_analysis(G).route, case_analysis(G).case) for text, G in enumerable_catalog()}
    assert routes["z"] == ("1", Case.INFINITE_CYCLIC)
    assert routes["free:2"] == ("1", Case.INFINITE_CYCLIC)
    assert routes["dinf"] == ("1", Case.INFINITE_CYCLIC)
    assert routes["z2"] == ("1", Case.INFINITE_CYCLIC)
    assert routes["pruefer:3"] == ("2A/noncube", Case.NONCUBE)
    assert routes["pruefer:2"] == ("2B/noncube", Case.NONCUBE)
    assert routes["eab2inf"] == ("2B/exponent-2", Case.INVOLUTION)


def test_case_analysis_z_params(Z):
    w = case_analysis(Z)
    assert w.params == {"s": "1", "n": 3, "m": 7}


def test_case_analysis_pruefer3_orders():
    G = build_group("pruefer:3")
    w = case_analysis(G)
    H = [G.parse_element(x) for x in w.params["H"]]
    f = G.parse_element(w.params["f"])
    assert len(H) == 3 and G.order_of(f) == 9


def test_case_analysis_finite_fragments():
    # square-in-H branch with the <f> = <f^m> x <f^2> split
    w = case_analysis(build_group("cyclic:6"))
    assert w.route == "2A/square-in-H" and w.case == Case.INVOLUTION
    assert w.params == {"H": ["e", "g^2", "g^4"], "f": "g^3"}
    w = case_analysis(build_group("dihedral:3"))
    assert w.case == Case.INVOLUTION and w.iota < w.omega
    with pytest.raises(UnsupportedGroup):
        case_analysis(build_group("cyclic:3"))
    with pytest.raises(UnsupportedGroup):
        case_analysis(build_group("quaternion:8"))


def test_case_analysis_json(Z):
    doc = case_analysis(Z).to_json()
    assert doc["iota"] == 1 and doc["isolated_vertex"] == "7" and doc["case"] == "infinite-cyclic"


# --- 2-group lemmas -------------------------------------------------------


def test_exponent2_quotient_examples():
    Q8 = build_group("quaternion:8")
    assert verify_exponent2_quotient(Q8, el(Q8, "e", "a^2")) == Outcome.VERIFIED
    D4 = build_group("dihedral:4")
    assert verify_exponent2_quotient(D4, el(D4, "e", "a^2")) == Outcome.VERIFIED
    S4 = build_group("sym:4")
    assert verify_exponent2_quotient(S4, range(24)) == Outcome.VERIFIED
    assert verify_exponent2_quotient(build_group("cyclic:4"), [0]) == Outcome.NOT_APPLICABLE
    with pytest.raises(NotASubgroup):
        verify_exponent2_quotient(S4, [0, 1, 2])


@pytest.mark.parametrize("text,G", finite_catalog(24))
def test_exponent2_quotient_never_violated(text, G):
    subgroups = {frozenset([0]), frozenset(G.elements())}
    subgroups |= {cyclic_subgroup(G, g) for g in G.elements()}
    subgroups.add(generated_subgroup(G, [G.mul(g, g) for g in G.elements()]))
    for H in subgroups:
        assert verify_exponent2_quotient(G, H) != Outcome.VIOLATED


def test_order32_lemma():
    rep = verify_order32_lemma()
    (c, q) = rep["groups"]
    assert (c["group"], len(c["involutions"]), c["squares"]) == ("C32", 1, 16)
    assert (q["group"], len(q["involutions"]), q["squares"]) == ("Q32", 1, 8)
    assert c["squares_cyclic_subgroup"] and q["squares_cyclic_subgroup"]
    assert rep["holds"]
