"""
    Tests for the homquiver package
    Released under The MIT License. See LICENSE file for details.

    Tests path algebra construction and multiplication. Requires "pytest" to run.
"""

import pytest
from homquiver import pathalg
from homquiver import presets
from homquiver.exceptions import HomquiverException
from homquiver.pathalg import Quiver, Relation


@pytest.fixture(scope="module")
def sl2_alg():
    alg, _ = presets.load_preset('sl2_principal')
    return alg


@pytest.fixture(scope="module")
def sl3_alg():
    alg, _ = presets.load_preset('sl3_singular')
    return alg


@pytest.fixture
def loop_quiver():
    return Quiver(['1'], [('x', '1', '1')])


def test_quiver1():
    q = Quiver(['1', '2'], [('a', '1', '2')])
    assert q.vertex_index('2') == 1
    assert q.arrow_names == ('a',)


def test_quiver2():
    with pytest.raises(HomquiverException):
        Quiver(['1', '1'])


def test_quiver3():
    with pytest.raises(HomquiverException) as e:
        Quiver(['1'], [('a', '1', '7')])
    assert "undeclared vertex" in str(e.value)


def test_relation_convention():
    rtl = Relation.from_words([(1, ['a', 'b'])], convention=pathalg.RIGHT_TO_LEFT)
    ltr = Relation.from_words([(1, ['b', 'a'])], convention=pathalg.LEFT_TO_RIGHT)
    assert rtl == ltr
    assert rtl.lhs == {('b', 'a'): 1}


def test_sl2_dimension(sl2_alg):
    assert sl2_alg.dimension == 5
    assert sl2_alg.saturation_length == 3


def test_sl2_basis(sl2_alg):
    names = [sl2_alg.path_string(p) for p in sl2_alg.basis]
    assert sorted(names) == sorted(['e1', 'e2', 'a', 'b', 'b*a'])
    # Length ordering
    assert names[:2] == ['e1', 'e2']


def test_sl2_projectives(sl2_alg):
    assert tuple(sl2_alg.projective(0).dims) == (2, 1)
    assert tuple(pathalg.indecomposable_projective(sl2_alg, '2').dims) == (1, 1)


def test_sl2_products(sl2_alg):
    a = sl2_alg.arrow_element('a')
    b = sl2_alg.arrow_element('b')
    # a*b traverses b first and is a relation
    assert all(v == 0 for v in pathalg.multiply(sl2_alg, a, b))
    assert sl2_alg.multiply(b, a) == sl2_alg.word_element(['b', 'a'])
    assert any(v != 0 for v in sl2_alg.multiply(b, a))


def test_sl2_unit(sl2_alg):
    unit = sl2_alg.unit()
    for p in sl2_alg.basis:
        x = sl2_alg.basis_element(p)
        assert sl2_alg.multiply(unit, x) == x
        assert sl2_alg.multiply(x, unit) == x


def test_sl2_associative(sl2_alg):
    assert sl2_alg.is_associative()


def test_sl3_dimension(sl3_alg):
    assert sl3_alg.dimension == 14
    assert sl3_alg.cartan_matrix() == [[3, 2, 1], [2, 2, 1], [1, 1, 1]]


def test_sl3_relations(sl3_alg):
    lhs = sl3_alg.word_element(['a', 'b'])
    assert lhs == sl3_alg.word_element(['d', 'c'])
    assert any(v != 0 for v in lhs)
    assert all(v == 0 for v in sl3_alg.word_element(['c', 'd']))


def test_sl3_products(sl3_alg):
    a = sl3_alg.arrow_element('a')
    b = sl3_alg.arrow_element('b')
    assert sl3_alg.multiply(a, b) == sl3_alg.word_element(['a', 'b'])


def test_sl3_associative(sl3_alg):
    assert sl3_alg.is_associative()


def test_convention_independence():
    q = Quiver(['1', '2'], [('a', '1', '2'), ('b', '2', '1')])
    rtl = pathalg.build_path_algebra(q, [Relation.from_words([(1, ['a', 'b'])])])
    ltr = pathalg.build_path_algebra(q, [Relation.from_words([(1, ['b', 'a'])], convention=pathalg.LEFT_TO_RIGHT)],
                                     pathalg.LEFT_TO_RIGHT)
    assert rtl.basis == ltr.basis
    assert ltr.path_string(ltr.basis[-1]) == 'a*b'


def test_truncated_polynomial(loop_quiver):
    alg = pathalg.build_path_algebra(loop_quiver, [Relation.from_words([(1, ['x', 'x', 'x'])])])
    assert alg.dimension == 3
    assert alg.cartan_matrix() == [[3]]


def test_not_finite_dimensional(loop_quiver):
    with pytest.raises(HomquiverException) as e:
        pathalg.build_path_algebra(loop_quiver, [], cap=4)
    assert "not finite-dimensional within cap" in str(e.value)


def test_malformed_relation1():
    q = Quiver(['1', '2'], [('a', '1', '2')])
    with pytest.raises(HomquiverException) as e:
        pathalg.build_path_algebra(q, [Relation.from_words([(1, ['a', 'a'])])])
    assert "malformed relation" in str(e.value)


def test_malformed_relation2():
    q = Quiver(['1', '2'], [('a', '1', '2'), ('b', '2', '1')])
    with pytest.raises(HomquiverException) as e:
        pathalg.build_path_algebra(q, [Relation.from_words([(1, ['a'])], [(1, ['b'])])])
    assert "not parallel" in str(e.value)


def test_malformed_relation3():
    q = Quiver(['1', '2'], [('a', '1', '2')])
    with pytest.raises(HomquiverException) as e:
        pathalg.build_path_algebra(q, [Relation.from_words([(1, ['z'])])])
    assert "malformed relation" in str(e.value)


def test_unknown_convention():
    q = Quiver(['1'])
    with pytest.raises(HomquiverException):
        pathalg.build_path_algebra(q, [], 'upside-down')
