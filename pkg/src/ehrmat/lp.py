"""Exact rational linear programming: two-phase simplex with Bland's
rule on Fraction scalars. Termination is guaranteed by Bland's rule and
every result is exact, which is what the triangulation and adjacency
code needs from its feasibility and optimality queries.
"""

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def simplex_max(a_eq, b_eq, c):
    """Maximize c.x subject to a_eq x = b_eq, x >= 0.

    Returns (status, value, x) where status is OPTIMAL, INFEASIBLE or
    UNBOUNDED; value and x are None unless OPTIMAL.
    """
    m = len(a_eq)
    n = len(c)
    a = [[Fraction(x) for x in row] for row in a_eq]
    b = [Fraction(x) for x in b_eq]
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]

    # phase 1: artificial variables, minimize their sum
    tab = [a[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
           + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        obj[n + i] = Fraction(1)  # artificials cost 1 in the minimization
    for i in range(m):
        for j in range(n + m + 1):
            obj[j] -= tab[i][j]
    status = _iterate(tab, basis, obj, n + m)
    assert status == OPTIMAL  # phase 1 is always bounded
    if -obj[-1] != 0:
        return INFEASIBLE, None, None

    # drive remaining artificials out of the basis, then drop them
    for i in range(m):
        if basis[i] >= n:
            piv = next((j for j in range(n) if tab[i][j] != 0), None)
            if piv is None:
                continue  # redundant row
            _pivot(tab, basis, None, i, piv)
    keep = [i for i in range(m) if basis[i] < n]
    tab = [tab[i][:n] + [tab[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # phase 2
    obj = [-Fraction(x) for x in c] + [Fraction(0)]
    for i, bi in enumerate(basis):
        if obj[bi] != 0:
            f = obj[bi]
            for j in range(n + 1):
                obj[j] -= f * tab[i][j]
    status = _iterate(tab, basis, obj, n)
    if status != OPTIMAL:
        return status, None, None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = tab[i][-1]
    return OPTIMAL, obj[-1], x


def _iterate(tab, basis, obj, n):
    while True:
        enter = next((j for j in range(n) if obj[j] < 0), None)  # Bland
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i in range(len(tab)):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED
        _pivot(tab, basis, obj, leave, enter)


def _pivot(tab, basis, obj, row, col):
    piv = tab[row][col]
    tab[row] = [x / piv for x in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
    if obj is not None and obj[col] != 0:
        f = obj[col]
        for j in range(len(obj)):
            obj[j] -= f * tab[row][j]
    basis[row] = col


def feasible(a_eq, b_eq, n_vars):
    """Is {x >= 0 : a_eq x = b_eq} non-empty?"""
    status, _, _ = simplex_max(a_eq, b_eq, [0] * n_vars)
    return status == OPTIMAL


def in_cone(target, generators):
    """Is `target` a non-negative combination of `generators`?

    Vectors are integer/rational sequences of equal length.
    """
    if not generators:
        return all(x == 0 for x in target)
    a = [[g[i] for g in generators] for i in range(len(target))]
    return feasible(a, list(target), len(generators))
