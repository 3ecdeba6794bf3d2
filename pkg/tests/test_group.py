from fractions import Fraction

import pytest

from conftest import pt
from lib.exceptions import GroupError, GroupParseError, StabilityError
from lib.group import Character, GroupAction, StabilityCondition, SubgroupSpec, action_from_vectors, \
    character_from_json, junior_elements, lifted_characters, mckay_quiver, parse_chain, parse_group, \
    parse_subgroup_gens, subgroup_action, subgroup_by_order, subgroups, zero_generated_theta


def chi(k, r=6):
    return Character((k,), (r,))


def test_parse_cyclic(g6):
    assert str(g6) == '6:1,2,3'
    assert g6.order == 6
    assert g6.is_cyclic
    assert g6.coordinate_characters == (chi(1), chi(2), chi(3))


def test_parse_errors():
    with pytest.raises(GroupParseError):
        parse_group('6:1,2')
    with pytest.raises(GroupParseError):
        parse_group('six')
    with pytest.raises(GroupParseError):
        parse_group('6:1,2,4')


def test_sl3_condition():
    with pytest.raises(GroupError):
        GroupAction(((6, (1, 2, 4)),))


def test_non_faithful_presentation_is_canonicalized():
    group = parse_group('6:2,4,0')
    assert group.order == 3
    assert str(group) == '3:1,2,0'


def test_product_group(z3z3):
    assert z3z3.order == 9
    assert not z3z3.is_cyclic
    assert len(z3z3.characters) == 9
    assert z3z3.exponent == 3


def test_junior_points(g6):
    assert g6.junior_points() == [pt(1, 2, 3, d=6), pt(2, 4, 0, d=6), pt(3, 0, 3, d=6), pt(4, 2, 0, d=6)]
    assert g6.age(pt(5, 4, 3, d=6)) == 2


def test_junior_points_of_product(z3z3):
    assert len(z3z3.junior_points()) == 7
    assert pt(1, 1, 1, d=3) in z3z3.junior_points()


def test_characters_and_evaluation(g6):
    assert g6.characters == tuple(chi(k) for k in range(6))
    assert g6.monomial_character((2, 0, 0)) == chi(2)
    assert g6.monomial_character((0, 1, 1)) == chi(5)
    assert g6.evaluate(chi(5), (3,)) == Fraction(1, 2)


def test_character_json():
    assert chi(4).to_json() == 4
    assert character_from_json(10, (6,)) == chi(4)
    assert character_from_json([1, 2], (3, 3)) == Character((1, 2), (3, 3))


def test_action_from_vectors_cyclic():
    group = action_from_vectors([pt(4, 2, 0, d=6)])
    assert group.order == 3
    assert str(group) == '3:1,2,0'


def test_subgroups_of_cyclic(g6):
    orders = [a.order for a in subgroups(g6)]
    assert orders == [1, 2, 3, 6]


def test_subgroups_of_product(z3z3):
    orders = [a.order for a in subgroups(z3z3)]
    assert orders == [1, 3, 3, 3, 3, 9]


def test_subgroup_by_order(g6):
    a = subgroup_by_order(g6, 2)
    assert a.elements == frozenset([pt(0, 0, 0), pt(1, 0, 1, d=2)])
    assert a.describe() == '2:1,0,1'
    assert a.index == 3
    with pytest.raises(GroupError):
        subgroup_by_order(g6, 4)


def test_subgroup_by_order_needs_cyclic(z3z3):
    with pytest.raises(GroupError):
        subgroup_by_order(z3z3, 3)


def test_lifted_characters(g6):
    assert lifted_characters(g6, subgroup_by_order(g6, 2)) == {chi(0), chi(2), chi(4)}
    assert lifted_characters(g6, subgroup_by_order(g6, 3)) == {chi(0), chi(3)}
    assert lifted_characters(g6, SubgroupSpec(g6, ((0,),))) == set(g6.characters)


def test_parse_subgroup_gens(g6, z3z3):
    assert parse_subgroup_gens(g6, '3') == subgroup_by_order(g6, 2)
    a = parse_subgroup_gens(z3z3, '1.0')
    assert a.order == 3
    with pytest.raises(GroupParseError):
        parse_subgroup_gens(z3z3, '1')


def test_parse_chain(g6):
    chain = parse_chain(g6, '2,6')
    assert [a.order for a in chain] == [2, 6]
    with pytest.raises(GroupParseError):
        parse_chain(g6, '4')


def test_mckay_quiver(g6):
    quiver = mckay_quiver(g6)
    assert len(quiver.arrows) == 18
    assert quiver.adjacency()[(chi(0), chi(1))] == 1
    assert quiver.dimension_vector == (1,) * 6


def test_zero_generated_theta(g6):
    theta = zero_generated_theta(g6)
    assert theta.total() == 0
    assert theta.is_zero_generated()
    assert theta.negatives() == {chi(0)}


def test_stability_condition_must_sum_to_zero():
    with pytest.raises(StabilityError):
        StabilityCondition({chi(0): 1, chi(1): 1})


def test_junior_elements_match_points(g6):
    assert junior_elements(g6) == g6.junior_points()


def test_subgroup_action(g6, z3z3):
    assert str(subgroup_action(g6, subgroup_by_order(g6, 3))) == '3:1,2,0'
    assert str(subgroup_action(g6, subgroup_by_order(g6, 2))) == '2:1,0,1'
    with pytest.raises(GroupError):
        subgroup_action(z3z3, subgroup_by_order(g6, 2))
