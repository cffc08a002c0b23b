"""Tests for Hermite and Smith normal forms over the integers."""

from fractions import Fraction

from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from hahnlab.groups.lattice import (
    hermite_form,
    integer_relations,
    lattice_basis,
    lattice_coordinates,
    rational_relations,
    reduce_modulo,
    smith_form,
)

# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _combination(coeffs, rows):
    width = len(rows[0])
    return [sum(c * row[k] for c, row in zip(coeffs, rows)) for k in range(width)]


def _sympy_divisors(matrix):
    """Nonzero diagonal of sympy's Smith normal form, ascending."""
    snf = smith_normal_form(Matrix(matrix), domain=ZZ)
    return sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i])


matrices = st.integers(min_value=1, max_value=3).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-6, 6), min_size=cols, max_size=cols), min_size=1, max_size=3)
)


class TestHermiteForm:
    """Row Hermite form, relations and lattice coordinates."""

    def test_relation_between_proportional_rows(self):
        relations = integer_relations([[2, 4], [3, 6]])
        assert len(relations) == 1
        assert _combination(relations[0], [[2, 4], [3, 6]]) == [0, 0]
        assert sorted(abs(v) for v in relations[0]) == [2, 3]

    def test_basis_is_echelon(self):
        form = hermite_form([[4, 6], [2, 3], [0, 5]])
        assert form.rank == 2
        assert form.basis[0][0] > 0
        assert form.basis[1][0] == 0

    def test_coordinates(self):
        basis = lattice_basis([[2, 0], [0, 3]], 2)
        assert lattice_coordinates(basis, [4, -3]) == [2, -1]
        assert lattice_coordinates(basis, [1, 0]) is None

    def test_rational_relations(self):
        relations = rational_relations([[Fraction(1, 2)], [Fraction(-1, 3)]])
        assert len(relations) == 1
        a, b = relations[0]
        assert Fraction(a, 2) - Fraction(b, 3) == 0

    def test_reduce_modulo(self):
        assert reduce_modulo([[2, 0], [0, 3]], [5, 7]) == [1, 1]

    @settings(max_examples=150, deadline=None)
    @given(matrix=matrices)
    def test_transform_reproduces_rows(self, matrix):
        form = hermite_form(matrix)
        assert _matmul([list(r) for r in form.transform], matrix) == [list(r) for r in form.rows]
        for relation in form.relations:
            assert not any(_combination(relation, matrix))


class TestSmithForm:
    """Smith form against sympy's elementary divisors."""

    def test_known_divisors(self):
        assert [d for d in smith_form([[2, 4], [6, 8]]).divisors if d] == [2, 4]

    def test_sympy_agrees(self):
        assert _sympy_divisors([[2, 4], [6, 8]]) == [2, 4]

    @settings(max_examples=200, deadline=None)
    @given(matrix=matrices)
    def test_diagonal_matches_sympy(self, matrix):
        assume(any(any(row) for row in matrix))
        assert sorted(abs(d) for d in smith_form(matrix).divisors if d) == _sympy_divisors(matrix)

    @settings(max_examples=150, deadline=None)
    @given(matrix=matrices)
    def test_decomposition(self, matrix):
        assume(any(any(row) for row in matrix))
        snf = smith_form(matrix)
        left, right = [list(r) for r in snf.left], [list(r) for r in snf.right]
        diagonal = _matmul(_matmul(left, matrix), right)
        for i, row in enumerate(diagonal):
            for j, value in enumerate(row):
                assert value == (snf.divisors[i] if i == j else 0)
        identity = _matmul(right, [list(r) for r in snf.right_inverse])
        assert identity == [[1 if i == j else 0 for j in range(len(right))] for i in range(len(right))]
        nonzero = [d for d in snf.divisors if d]
        assert nonzero == _sympy_divisors(matrix)
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
