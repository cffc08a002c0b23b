"""Tests for value groups, group elements and finitely generated subgroups."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hahnlab.exceptions import DomainMismatchError, ParseError
from hahnlab.groups import FgSubgroup, GroupKind, ValueGroup

Z = ValueGroup.integers()
Q = ValueGroup.rationals()
HALF = ValueGroup.fractional(2)
Z2 = ValueGroup.lex(2)


def _lattice_points(generators, radius):
    """Integer combinations of the generators reachable by unit steps inside the box of the given radius."""
    steps = list(generators) + [(-a, -b) for a, b in generators]
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        following = []
        for a, b in frontier:
            for da, db in steps:
                point = (a + da, b + db)
                if max(abs(point[0]), abs(point[1])) <= radius and point not in seen:
                    seen.add(point)
                    following.append(point)
        frontier = following
    return seen


class TestParsing:
    """Value-group and element literals."""

    @pytest.mark.parametrize(
        "text,kind,rank,denominator",
        [
            ("Z", GroupKind.Z, 1, 1),
            ("Q", GroupKind.Q, 1, 1),
            ("Z/2", GroupKind.FRAC, 1, 2),
            (" Z / 3 ", GroupKind.FRAC, 1, 3),
            ("Z^3lex", GroupKind.LEX, 3, 1),
        ],
    )
    def test_group_literals(self, text, kind, rank, denominator):
        group = ValueGroup.parse(text)
        assert group.kind == kind
        assert group.rank == rank
        assert group.denominator == denominator

    def test_z_over_one_is_z(self):
        assert ValueGroup.parse("Z/1") == Z

    def test_round_trip_str(self):
        for text in ("Z", "Q", "Z/2", "Z^2lex"):
            assert str(ValueGroup.parse(text)) == text

    def test_unknown_group(self):
        with pytest.raises(ParseError) as exc_info:
            ValueGroup.parse("R")
        assert "Z" in exc_info.value.expected

    def test_element_literals(self):
        assert HALF.parse_element("-3/2").value == Fraction(-3, 2)
        assert HALF.parse_element("(1/2)").value == Fraction(1, 2)
        assert Z2.parse_element("(1,-4)").value == (1, -4)

    def test_element_not_in_group(self):
        with pytest.raises(DomainMismatchError):
            Z.element(Fraction(1, 2))
        with pytest.raises(DomainMismatchError):
            HALF.element(Fraction(1, 3))

    def test_wrong_tuple_length(self):
        with pytest.raises(ParseError):
            Z2.parse_element("(1,2,3)")

    def test_lex_rejects_scalars(self):
        with pytest.raises(DomainMismatchError):
            Z2.element(1)
        assert ValueGroup.lex(1).element(3).value == (3,)


class TestArithmetic:
    """Addition, ordering and scaling inside one group."""

    def test_lex_order(self):
        assert Z2.element((1, -5)) > Z2.element((0, 100))
        assert Z2.element((0, 1)).is_positive()
        assert not Z2.element((-1, 7)).is_positive()

    def test_rank_one_order(self):
        assert HALF.element(Fraction(1, 2)) < HALF.element(1)

    def test_mixing_groups_is_rejected(self):
        with pytest.raises(DomainMismatchError):
            Z.element(1) + HALF.element(1)

    def test_divided_by(self):
        assert Z2.element((2, 4)).divided_by(2) == Z2.element((1, 2))
        with pytest.raises(DomainMismatchError):
            Z2.element((1, 0)).divided_by(2)

    def test_literal(self):
        assert Z.element(3).literal() == "3"
        assert HALF.element(Fraction(-1, 2)).literal() == "(-1/2)"
        assert Z2.element((1, 1)).literal() == "(1,1)"

    @settings(max_examples=200, deadline=None)
    @given(
        a=st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
        b=st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
        c=st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
    )
    def test_lex_order_is_compatible_with_addition(self, a, b, c):
        x, y, z = Z2.element(a), Z2.element(b), Z2.element(c)
        if x < y:
            assert x + z < y + z
        assert (x + y) - y == x


class TestSubgroups:
    """Membership, torsion and purity of finitely generated subgroups."""

    def test_canonical_basis(self):
        assert FgSubgroup(Z, [Z.element(4), Z.element(6)]).basis == (Z.element(2),)
        assert FgSubgroup(Z, [Z.element(2), Z.element(3)]) == FgSubgroup.whole(Z)

    def test_contains(self):
        subgroup = FgSubgroup(Z2, [Z2.element((2, 0)), Z2.element((0, 3))])
        assert subgroup.contains(Z2.element((4, -3)))
        assert Z2.element((1, 0)) not in subgroup

    def test_torsion_index(self):
        integers_in_half = FgSubgroup(HALF, [HALF.element(1)])
        assert integers_in_half.torsion_index(HALF.element(Fraction(1, 2))) == 2
        assert integers_in_half.torsion_index(HALF.element(3)) == 1
        one_in_q = FgSubgroup(Q, [Q.element(1)])
        assert one_in_q.torsion_index(Q.element(Fraction(2, 3))) == 3

    def test_torsion_index_outside_span(self):
        subgroup = FgSubgroup(Z2, [Z2.element((1, 0))])
        assert subgroup.torsion_index(Z2.element((0, 1))) is None

    def test_integers_are_not_pure_in_halves(self):
        verdict = FgSubgroup(HALF, [HALF.element(1)]).is_pure()
        assert not verdict
        assert verdict.witness == (HALF.element(Fraction(1, 2)), 2)

    def test_pure_subgroups(self):
        assert FgSubgroup.whole(Z2).is_pure()
        assert FgSubgroup(Z2, [Z2.element((1, 1))]).is_pure()
        assert FgSubgroup.trivial(HALF).is_pure()

    def test_lex_impure_witness(self):
        verdict = FgSubgroup(Z2, [Z2.element((2, 0)), Z2.element((0, 1))]).is_pure()
        assert not verdict
        gamma, n = verdict.witness
        assert n == 2
        assert gamma == Z2.element((1, 0))

    def test_q_subgroups_are_never_pure(self):
        verdict = FgSubgroup(Q, [Q.element(1)]).is_pure()
        assert not verdict
        gamma, n = verdict.witness
        assert n * gamma in FgSubgroup(Q, [Q.element(1)])

    @settings(max_examples=100, deadline=None)
    @given(
        generators=st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=3),
    )
    def test_purity_witness_is_genuine(self, generators):
        subgroup = FgSubgroup(Z2, [Z2.element(g) for g in generators])
        verdict = subgroup.is_pure()
        if verdict.witness is not None:
            gamma, n = verdict.witness
            assert n > 1
            assert n * gamma in subgroup
            assert gamma not in subgroup

    @settings(max_examples=100, deadline=None)
    @given(
        generators=st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=3),
    )
    def test_membership_matches_enumeration(self, generators):
        subgroup = FgSubgroup(Z2, [Z2.element(g) for g in generators])
        reachable = _lattice_points(generators, radius=40)
        for a in range(-5, 6):
            for b in range(-5, 6):
                assert subgroup.contains(Z2.element((a, b))) == ((a, b) in reachable)

    def test_generator_from_other_group(self):
        with pytest.raises(DomainMismatchError):
            FgSubgroup(Z, [HALF.element(1)])
