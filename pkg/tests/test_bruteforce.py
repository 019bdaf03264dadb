import random
from fractions import Fraction
from itertools import product

import pytest

from ehrmat import corpus
from ehrmat.bruteforce import count_direct, ehrhart_by_interpolation
from ehrmat.exactmath import poly_eval
from ehrmat.matroid import BudgetExceeded, RankFunction
from ehrmat.vertices import (
    BASES_POLYTOPE, INDEPENDENCE_POLYTOPE, POLYMATROID, PolytopeSpec,
)

K4_EHRHART = tuple(Fraction(x) for x in
                   ("1", "107/30", "21/4", "49/12", "7/4", "7/20"))


def _count_naive(spec, k):
    caps = [k * spec.f.rank(frozenset({i + 1})) for i in range(spec.n)]
    return sum(1 for pt in product(*(range(c + 1) for c in caps))
               if spec.contains_scaled(pt, k))


def test_count_k4():
    spec = PolytopeSpec(BASES_POLYTOPE, corpus.rank_function("K4"))
    assert count_direct(spec, 1) == 16


def test_count_u24():
    spec = PolytopeSpec(BASES_POLYTOPE, RankFunction.uniform(4, 2))
    assert count_direct(spec, 1) == 6


def test_count_independence_u12_dilated():
    spec = PolytopeSpec(INDEPENDENCE_POLYTOPE, RankFunction.uniform(2, 1))
    assert count_direct(spec, 2) == 6  # triangle 2*conv{0, e1, e2}


def test_count_k0_is_one():
    spec = PolytopeSpec(BASES_POLYTOPE, RankFunction.uniform(4, 2))
    assert count_direct(spec, 0) == 1


def test_count_rejects_negative_k():
    spec = PolytopeSpec(BASES_POLYTOPE, RankFunction.uniform(4, 2))
    with pytest.raises(ValueError):
        count_direct(spec, -1)


def test_count_matches_naive_scan():
    rng = random.Random(20240823)
    for _ in range(12):
        n = rng.randint(2, 5)
        r = rng.randint(1, n)
        family = rng.choice([BASES_POLYTOPE, INDEPENDENCE_POLYTOPE])
        spec = PolytopeSpec(family, RankFunction.uniform(n, r))
        k = rng.randint(1, 3)
        assert count_direct(spec, k) == _count_naive(spec, k)


def test_count_matches_naive_scan_polymatroid():
    rng = random.Random(77)
    for _ in range(8):
        n = rng.randint(2, 4)
        # random submodular table: truncated weighted coverage
        weights = [rng.randint(1, 3) for _ in range(n)]
        cap = rng.randint(2, 5)
        table = {}
        for mask in range(1, 1 << n):
            a = frozenset(i + 1 for i in range(n) if mask >> i & 1)
            table[a] = min(cap, sum(weights[i - 1] for i in a))
        spec = PolytopeSpec(POLYMATROID, RankFunction.from_table(n, table))
        k = rng.randint(1, 3)
        assert count_direct(spec, k) == _count_naive(spec, k)


def test_interpolation_k4():
    spec = PolytopeSpec(BASES_POLYTOPE, corpus.rank_function("K4"))
    assert ehrhart_by_interpolation(spec) == K4_EHRHART


def test_interpolation_point_polytope():
    spec = PolytopeSpec(BASES_POLYTOPE, RankFunction.uniform(3, 3))
    assert ehrhart_by_interpolation(spec) == (Fraction(1),)


def test_interpolation_extrapolates():
    # the fitted polynomial predicts a count not used in the fit
    spec = PolytopeSpec(BASES_POLYTOPE, RankFunction.uniform(5, 2))
    p = ehrhart_by_interpolation(spec)
    k = len(p) + 1
    assert poly_eval(p, k) == count_direct(spec, k)


def test_budget_guard(monkeypatch):
    monkeypatch.delenv("EHRMAT_BUDGET", raising=False)
    spec = PolytopeSpec(BASES_POLYTOPE, RankFunction.uniform(13, 2))
    with pytest.raises(BudgetExceeded):
        count_direct(spec, 1)
