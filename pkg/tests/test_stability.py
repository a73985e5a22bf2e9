import itertools
import random

import pytest

from sfactors.catalog import build_group, finite_catalog
from sfactors.errors import BudgetExceeded, EmptySubset, TooLarge
from sfactors.stability import (
    Verdict,
    check_sfactor,
    cross_validate_correspondence,
    is_stable_subset,
    normalize_subset,
    s_indices,
    scan_group_stability,
    sfactor_family,
)
from conftest import el


def subsets_with_e(G):
    for k in range(G.order):
        for rest in itertools.combinations(range(1, G.order), k):
            yield (0,) + rest


def test_check_sfactor_c4(c4):
    A, U = [0, 1], [0, 2]
    products = [c4.mul(a, u) for a in A for u in U]
    assert len(set(products)) == 4
    for x in (1, 3):  # every extension collides
        assert set(c4.mul(a, x) for a in A) & set(products)
    chk = check_sfactor(c4, A, U)
    assert chk.sf1 and chk.sf2 and chk.violation is None


def test_check_sfactor_identity(s3):
    assert check_sfactor(s3, [0], range(6)).ok


def test_check_sfactor_collision(c4):
    chk = check_sfactor(c4, [0, 1], [0, 1])
    assert not chk.sf1
    a, u, b, v = chk.violation
    assert c4.mul(a, u) == c4.mul(b, v) and (a, u) != (b, v)
    assert {(a, u), (b, v)} == {(1, 0), (0, 1)}


def test_check_sfactor_extendable(c4):
    chk = check_sfactor(c4, [0, 1], [0])
    assert chk.sf1 and not chk.sf2
    (x,) = chk.violation
    assert check_sfactor(c4, [0, 1], [0, x]).sf1


def test_check_sfactor_empty(c4):
    with pytest.raises(EmptySubset):
        check_sfactor(c4, [], [0])


def test_s_indices_examples(s3, c4):
    r = s_indices(s3, range(6))
    assert (r.lower, r.upper) == (1, 1)
    r = s_indices(s3, [0])
    assert (r.lower, r.upper) == (6, 6)
    r = s_indices(c4, [0, 1])
    assert (r.lower, r.upper, r.stable) == (2, 2, True)


def test_is_stable_subset_examples(c4, s3):
    assert normalize_subset(c4, [1, 2]) == [0, 1]
    assert is_stable_subset(c4, [1, 2]) == is_stable_subset(c4, [0, 1]) is True
    assert is_stable_subset(s3, [4])
    assert not is_stable_subset(build_group("cyclic:6"), [0, 1])


def test_unstable_subset_from_delta_sizes():
    # Delta(G - A^-1 A) has maximal cliques of sizes 1 and 2 -> A unstable
    from sfactors.cayley import complement_set, delta_graph
    from sfactors.cliques import enumerate_maximal_cliques

    G = build_group("cyclic:6")
    A = [0, 1]
    sizes = set(enumerate_maximal_cliques(delta_graph(G, complement_set(G, A))).sizes())
    assert sizes == {1, 2}
    assert not is_stable_subset(G, A)


def _definition_verdict(G):
    for A in subsets_with_e(G):
        if len({len(U) for U in sfactor_family(G, A)}) > 1:
            return Verdict.UNSTABLE
    return Verdict.STABLE


@pytest.mark.parametrize("text,G", finite_catalog(10))
def test_scan_matches_definition_oracle(text, G):
    rep = scan_group_stability(G)
    assert rep.verdict == _definition_verdict(G)


@pytest.mark.parametrize("text", ["cyclic:1", "cyclic:2", "cyclic:3"])
def test_small_cyclic_stable(text):
    assert scan_group_stability(build_group(text)).verdict == Verdict.STABLE


def test_c4_scan(c4):
    rep = scan_group_stability(c4)
    assert rep.verdict == Verdict.STABLE and rep.subsets_scanned == 6


def test_unstable_report_revalidates():
    G = build_group("dihedral:5")
    rep = scan_group_stability(G)
    assert rep.verdict == Verdict.UNSTABLE
    idx = rep.indices
    assert idx.lower < idx.upper
    for U, size in ((idx.witness_min, idx.lower), (idx.witness_max, idx.upper)):
        assert len(U) == size and check_sfactor(G, rep.witness_A, U).ok


def test_scan_order_is_size_then_lex():
    G = build_group("dihedral:5")
    rep = scan_group_stability(G)
    A = rep.witness_A
    first = next(B for B in sorted(subsets_with_e(G), key=lambda B: (len(B), B)) if len(B) >= 2 and not s_indices(G, B).stable)
    assert A == first


def test_parallel_scan_same_verdict():
    for text in ("dihedral:5", "elemabelian:2,3", "alt:4"):
        G = build_group(text)
        a, b = scan_group_stability(G), scan_group_stability(G, workers=2)
        assert (a.verdict, a.witness_A) == (b.verdict, b.witness_A)


def test_budget_exceeded():
    G = build_group("elemabelian:2,3")
    with pytest.raises(BudgetExceeded) as exc:
        scan_group_stability(G, budget=10)
    assert exc.value.report.verdict == Verdict.UNKNOWN
    assert exc.value.report.subsets_scanned == 10


def test_randomized_scan_above_24():
    G = build_group("cyclic:32")
    with pytest.raises(TooLarge):
        scan_group_stability(G)
    rep = scan_group_stability(G, budget=50)
    assert rep.verdict == Verdict.UNSTABLE
    assert not s_indices(G, rep.witness_A).stable


def test_cross_validate_examples(c4, s3):
    assert cross_validate_correspondence(c4, [0, 1])
    assert cross_validate_correspondence(s3, el(s3, "e", "(12)"))
    assert cross_validate_correspondence(s3, [0])
    assert sfactor_family(s3, [0]) == {frozenset(range(6))}
    with pytest.raises(TooLarge):
        cross_validate_correspondence(build_group("cyclic:17"), [0, 1])


@pytest.mark.parametrize("text,G", finite_catalog(12))
def test_correspondence_exhaustive(text, G):
    assert all(cross_validate_correspondence(G, A) for A in subsets_with_e(G))


@pytest.mark.parametrize("text,G", [(t, G) for t, G in finite_catalog(16) if G.order >= 13])
def test_correspondence_random(text, G):
    rng = random.Random(text)
    for _ in range(100):
        A = [0] + rng.sample(range(1, G.order), rng.randint(0, G.order - 1))
        assert cross_validate_correspondence(G, A)


@pytest.mark.parametrize("text,G", finite_catalog(12))
def test_translation_invariance(text, G):
    for A in subsets_with_e(G):
        base = s_indices(G, A)
        for x in range(1, G.order):
            moved = s_indices(G, [G.mul(x, a) for a in A])
            assert (moved.lower, moved.upper) == (base.lower, base.upper)


@pytest.mark.parametrize("text,G", finite_catalog(12))
def test_index_bounds(text, G):
    for A in subsets_with_e(G):
        r = s_indices(G, A)
        assert 1 <= r.lower <= r.upper <= G.order
        assert (r.upper == G.order) == (len(A) == 1)
        assert r.stable == (r.lower == r.upper)
