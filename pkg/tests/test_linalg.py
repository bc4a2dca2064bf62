from fractions import Fraction as F
from random import Random

import pytest
from hypothesis import given, strategies as st

from ratsep import Surd
from ratsep.linalg import simplex_max, solve_linear_system

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def test_solve_2x2():
    x = solve_linear_system([[2, 1], [1, -1]], [5, 1])
    assert x == [Surd(2), Surd(1)]


def test_solve_singular_consistent():
    # rank 1: second equation is a multiple of the first
    x = solve_linear_system([[1, 1], [2, 2]], [3, 6])
    assert x == [Surd(3), Surd(0)]  # free variable pinned to zero


def test_solve_inconsistent():
    with pytest.raises(ValueError):
        solve_linear_system([[1, 1], [2, 2]], [3, 7])


def test_solve_surd_entries():
    r2 = Surd.root(2)
    x = solve_linear_system([[r2, 0], [0, 1]], [Surd(2), r2])
    assert x == [r2, r2]


def test_simplex_box_optimum():
    res = simplex_max([1, 1], A_ub=[[1, 0], [0, 1]], b_ub=[1, 1])
    assert res.status == "optimal"
    assert res.value == 2
    assert res.x == (Surd(1), Surd(1))


def test_simplex_infeasible():
    res = simplex_max([0], A_eq=[[1]], b_eq=[-1])
    assert res.status == "infeasible"


def test_simplex_unbounded():
    res = simplex_max([1], A_ub=[[-1]], b_ub=[0])
    assert res.status == "unbounded"
    assert simplex_max([1]).status == "unbounded"


def test_simplex_no_constraints_bounded():
    res = simplex_max([-1, 0])
    assert res.status == "optimal"
    assert res.value == 0


def test_simplex_degenerate_at_origin():
    res = simplex_max([1], A_ub=[[1], [1]], b_ub=[0, 0])
    assert res.status == "optimal"
    assert res.value == 0


def test_simplex_beale_cycling_instance():
    # the classic cycling example; Bland's rule must terminate at 1/20
    c = [F(3, 4), -150, F(1, 50), -6]
    A = [
        [F(1, 4), -60, F(-1, 25), 9],
        [F(1, 2), -90, F(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    b = [0, 0, 1]
    res = simplex_max(c, A_ub=A, b_ub=b)
    assert res.status == "optimal"
    assert res.value == F(1, 20)
    assert res.x == (Surd(F(1, 25)), Surd(0), Surd(1), Surd(0))


def test_simplex_equality_mix():
    # max x + 2y  s.t.  x + y = 1, y <= 3/4
    res = simplex_max([1, 2], A_ub=[[0, 1]], b_ub=[F(3, 4)], A_eq=[[1, 1]], b_eq=[1])
    assert res.status == "optimal"
    assert res.value == F(7, 4)
    assert res.x == (Surd(F(1, 4)), Surd(F(3, 4)))


def test_simplex_surd_data():
    # max t  s.t.  sqrt(2) * x + t <= 0 is bounded by x >= 0 at t = 0
    r2 = Surd.root(2)
    res = simplex_max([0, 1], A_ub=[[r2, 1]], b_ub=[0])
    assert res.status == "optimal"
    assert res.value == 0


@given(st.lists(rationals, min_size=3, max_size=3), st.data())
def test_feasibility_by_construction(x0, data):
    # A x0 = b is feasible whenever x0 >= 0 by construction
    x0 = [abs(v) for v in x0]
    A = [
        [data.draw(rationals) for _ in range(3)],
        [data.draw(rationals) for _ in range(3)],
    ]
    b = [sum(a * v for a, v in zip(row, x0)) for row in A]
    res = simplex_max([0, 0, 0], A_eq=A, b_eq=b)
    assert res.status == "optimal"


def test_redundant_equality_rows():
    res = simplex_max([1, 1], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert res.status == "optimal"
    assert res.value == 1


def test_solution_satisfies_constraints_exactly():
    rng = Random(7)
    for _ in range(25):
        A = [[F(rng.randint(-3, 3)) for _ in range(3)] for _ in range(2)]
        x0 = [F(rng.randint(0, 3)) for _ in range(3)]
        b = [sum(a * v for a, v in zip(row, x0)) for row in A]
        res = simplex_max([1, 1, 1], A_ub=A, b_ub=b, A_eq=(), b_eq=())
        if res.status != "optimal":
            assert res.status == "unbounded"
            continue
        for row, bb in zip(A, b):
            lhs = Surd(0)
            for a, xv in zip(row, res.x):
                lhs = lhs + Surd(a) * xv
            assert (lhs - Surd(bb)).sign() <= 0
