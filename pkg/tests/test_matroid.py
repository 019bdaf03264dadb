import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehrmat import corpus
from ehrmat.matroid import (
    BudgetExceeded, RankFunction, check_matroid_axioms,
    check_polymatroid_axioms, guard_n,
)


def test_uniform_rank():
    f = RankFunction.uniform(6, 3)
    assert f.rank({1, 2, 3, 4}) == 3
    assert f.rank({1, 2}) == 2
    assert f.rank(frozenset()) == 0


def test_graphic_k4_full_rank():
    f = RankFunction.graphic(6, corpus.K4_EDGES)
    assert f.rank(set(range(1, 7))) == 3


def test_bases_rank_k4():
    f = corpus.rank_function("K4")
    assert f.rank({1, 2, 3}) == 3       # a basis
    assert f.rank({1, 2, 4}) == 2       # a triangle (circuit)
    assert f.is_independent({1, 2})
    assert not f.is_independent({1, 2, 4})


def test_graphic_agrees_with_bases_oracle():
    g = RankFunction.graphic(6, corpus.K4_EDGES)
    b = corpus.rank_function("K4")
    for mask in range(1 << 6):
        a = frozenset(i + 1 for i in range(6) if mask >> i & 1)
        assert g.rank(a) == b.rank(a)


def test_rank_rejects_out_of_range():
    f = RankFunction.uniform(3, 2)
    with pytest.raises(ValueError):
        f.rank({4})


def test_axioms_uniform_pass():
    ok, why = check_matroid_axioms(RankFunction.uniform(4, 2))
    assert ok, why


def test_axioms_graphic_k4_pass():
    ok, why = check_matroid_axioms(RankFunction.graphic(6, corpus.K4_EDGES))
    assert ok, why


def test_axioms_all_bundled_matroids_pass():
    for name in corpus.names():
        ok, why = check_matroid_axioms(corpus.rank_function(name))
        assert ok, f"{name}: {why}"


def test_axioms_reject_cardinality_violation():
    f = RankFunction.from_table(1, {frozenset({1}): 2})
    ok, why = check_matroid_axioms(f)
    assert not ok and "cardinality" in why


def test_polymatroid_axioms_accept_matroid_rank():
    ok, _ = check_polymatroid_axioms(RankFunction.uniform(4, 2))
    assert ok


def test_polymatroid_axioms_accept_modular():
    table = {}
    for mask in range(1, 1 << 3):
        a = frozenset(i + 1 for i in range(3) if mask >> i & 1)
        table[a] = 2 * len(a)
    ok, _ = check_polymatroid_axioms(RankFunction.from_table(3, table))
    assert ok


def test_polymatroid_axioms_reject_supermodular():
    table = {frozenset({1}): 1, frozenset({2}): 1, frozenset({1, 2}): 3}
    ok, why = check_polymatroid_axioms(RankFunction.from_table(2, table))
    assert not ok and "submodularity" in why


@settings(max_examples=30)
@given(st.integers(1, 6), st.data())
def test_rank_monotone_on_random_chains(n, data):
    r = data.draw(st.integers(0, n))
    f = RankFunction.uniform(n, r)
    chain = data.draw(st.permutations(sorted(
        data.draw(st.sets(st.integers(1, n))))))
    acc = set()
    prev = 0
    for e in chain:
        acc.add(e)
        cur = f.rank(frozenset(acc))
        assert cur >= prev
        prev = cur


def test_dual_uniform():
    f = RankFunction.uniform(5, 2).dual()
    g = RankFunction.uniform(5, 3)
    for mask in range(1 << 5):
        a = frozenset(i + 1 for i in range(5) if mask >> i & 1)
        assert f.rank(a) == g.rank(a)


def test_dual_involution():
    f = corpus.rank_function("K4")
    ff = f.dual().dual()
    for mask in range(1 << 6):
        a = frozenset(i + 1 for i in range(6) if mask >> i & 1)
        assert f.rank(a) == ff.rank(a)


def test_dual_of_k4_has_rank_3():
    d = corpus.rank_function("K4").dual()
    assert d.rank(set(range(1, 7))) == 3


def test_dual_rejects_polymatroid():
    f = RankFunction.from_table(1, {frozenset({1}): 1})
    with pytest.raises(ValueError):
        f.dual()


def test_direct_sum_rank_and_axioms():
    s = RankFunction.uniform(1, 1).direct_sum(RankFunction.uniform(1, 1))
    assert s.n == 2
    assert s.rank({1, 2}) == 2
    assert s.rank({1}) == 1
    ok, why = check_matroid_axioms(s)
    assert ok, why


def test_direct_sum_bases_count_multiplies():
    from ehrmat.vertices import enumerate_bases
    f1 = RankFunction.uniform(4, 2)
    f2 = RankFunction.uniform(3, 1)
    s = f1.direct_sum(f2)
    assert len(enumerate_bases(s)) == (
        len(enumerate_bases(f1)) * len(enumerate_bases(f2)))


def test_budget_guard(monkeypatch):
    monkeypatch.delenv("EHRMAT_BUDGET", raising=False)
    with pytest.raises(BudgetExceeded):
        guard_n(25, 20, "test")
    monkeypatch.setenv("EHRMAT_BUDGET", "30")
    guard_n(25, 20, "test")  # override lifts the limit
    with pytest.raises(BudgetExceeded):
        guard_n(31, 20, "test")
