import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from generators import random_candidate, random_rank_two
from oracles import jacobi_ok, structure_table

from lialg import catalog
from lialg.algebra import GradedNilpotentAlgebra, basis_element
from lialg.lattice import WeightSystem

A1, A2, A3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def _n7_with(value):
    pairs = [(A1, A2, 1), (A1, A3, 1), (A2, A3, 1), ((1, 1, 0), A3, value), ((1, 0, 1), A2, 1)]
    weights = [A1, A2, A3, (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    return GradedNilpotentAlgebra.from_brackets(3, weights, pairs)


def test_n7_validates():
    assert _n7_with(1).validate().ok


def test_n7_mutation_is_reported():
    report = _n7_with(2).validate()
    assert not report.ok
    [(a, b, g, value)] = report.jacobi_failures
    assert {a, b, g} == {A1, A2, A3}
    # the triple is listed in canonical order (a3, a2, a1), an odd permutation
    assert value == -1
    assert "Jacobi fails" in report.lines()[0]


def test_abelian_validates():
    assert catalog.abelian(3).validate().ok


def test_bad_target_is_reported():
    A = GradedNilpotentAlgebra.from_brackets(2, [(1, 0), (0, 1), (1, 1), (2, 1)],
                                             [((1, 0), (1, 1), 1), ((0, 1), (2, 1), 1)])
    report = A.validate()
    assert report.bad_targets == [((0, 1), (2, 1))]
    assert report.to_dict()["ok"] is False


def test_antisymmetry_of_constants():
    A = catalog.n9()
    for a in A.W:
        assert A.c(a, a) == 0
        for b in A.W:
            assert A.c(a, b) == -A.c(b, a)


def test_constructor_rejects_bad_input():
    W = WeightSystem(2, [(1, 0), (0, 1), (1, 1)])
    with pytest.raises(ValueError):
        GradedNilpotentAlgebra(W, {((1, 0), (1, 0)): 1})
    with pytest.raises(ValueError):
        GradedNilpotentAlgebra(W, {((1, 0), (2, 0)): 1})
    with pytest.raises(ValueError):
        GradedNilpotentAlgebra(W, {((1, 0), (0, 1)): 1, ((0, 1), (1, 0)): 1})


def test_bracket_examples():
    A = catalog.n7()
    assert A.bracket(basis_element(A1), basis_element(A2)) == {(1, 1, 0): 1}
    x = {A1: 2, A3: Fraction(1, 3)}
    assert A.bracket(x, x) == {}
    assert A.bracket(basis_element((0, 1, 1)), basis_element(A1)) == {}


def test_lower_central_series():
    H = catalog.heisenberg()
    assert H.lower_central_series() == [frozenset(H.W), frozenset({(1, 1)}), frozenset()]
    F = catalog.model_filiform(5)
    assert [len(t) for t in F.lower_central_series()] == [5, 3, 2, 1, 0]
    assert catalog.abelian(3).lower_central_series() == [frozenset(catalog.abelian(3).W), frozenset()]


@pytest.mark.parametrize("builder,expected", [
    (catalog.heisenberg, 3), (catalog.n9, 6), (lambda: catalog.abelian(4), 2),
    (catalog.n10, 7), (catalog.n7, 4), (catalog.n12, 9),
])
def test_nilindex(builder, expected):
    assert builder().nilindex() == expected


def test_center():
    assert catalog.heisenberg().center() == {(1, 1)}
    assert catalog.abelian(3).center() == frozenset(catalog.abelian(3).W)
    # (0,1,1) never appears in a non-zero constant of N7, so it is central too
    assert catalog.n7().center() == {(0, 1, 1), (1, 1, 1)}


def test_maximal_rank():
    assert catalog.n9().is_maximal_rank()
    assert catalog.n7().is_maximal_rank()
    isolated = GradedNilpotentAlgebra.from_brackets(2, [(1, 0), (0, 1), (1, 1), (2, 1)],
                                                    [((1, 0), (0, 1), 1)])
    ok, diag = isolated.check_maximal_rank()
    assert not ok and any("2a1+a2" in d for d in diag)


def test_generation():
    assert catalog.n10().check_generation() == (True, [])
    assert catalog.heisenberg().check_generation() == (True, [])
    bare = GradedNilpotentAlgebra(WeightSystem(2, [(1, 0), (0, 1), (1, 1)]), {})
    assert bare.check_generation() == (False, [(1, 1)])


def _table(A):
    return structure_table(list(A.W), {(a, b): v for a, b, v in A.nonzero_pairs()}, torus=False)


@given(st.integers(0, 10**9))
def test_validate_agrees_with_dense_jacobi(seed):
    A = random_candidate(random.Random(seed))
    assert A.validate().ok == jacobi_ok(_table(A))


@given(st.integers(0, 10**9))
def test_nilindex_bounds_for_generated(seed):
    A = random_rank_two(random.Random(seed))
    s = A.nilindex()
    series = A.lower_central_series()
    assert series[-1] == frozenset() and all(series[:-1])
    assert max(sum(w) for w in A.W) < s <= 5
    for k in range(1, len(series)):
        assert series[k] <= series[k - 1]
