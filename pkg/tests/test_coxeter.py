"""
    Tests for the homquiver package
    Released under The MIT License. See LICENSE file for details.

    Tests Weyl groups, Bruhat order, coideals and the closed-form evaluators. Requires "pytest" to run.
"""

import itertools
import pytest
from homquiver import coxeter
from homquiver import presets
from homquiver.exceptions import HomquiverException

ORDERS = dict(A1=2, A2=6, A3=24, A4=120, A5=720, A1xA1=4, B2=8, G2=12)
LONGEST = dict(A1=1, A2=3, A3=6, A4=10, A5=15, A1xA1=2, B2=4, G2=6)


@pytest.fixture(scope="module")
def a2():
    return coxeter.build_weyl_group('A2')


@pytest.fixture(scope="module")
def b2():
    return coxeter.build_weyl_group('B2')


def _coideals_by_brute_force(group):
    elements = group.elements
    result = set()
    for size in range(len(elements) + 1):
        for subset in itertools.combinations(elements, size):
            chosen = set(subset)
            if all(y in chosen for x in chosen for y in elements if group.bruhat_le(x, y)):
                result.add(frozenset(chosen))
    return result


@pytest.mark.parametrize("type_name", sorted(ORDERS))
def test_order_and_longest(type_name):
    group = coxeter.build_weyl_group(type_name)
    assert group.order == ORDERS[type_name]
    assert group.length(group.longest_element()) == LONGEST[type_name]
    assert group.num_positive_roots == LONGEST[type_name]
    assert len(group.reflections()) == LONGEST[type_name]


@pytest.mark.parametrize("type_name", sorted(ORDERS))
def test_gldim_regular_block(type_name):
    group = coxeter.build_weyl_group(type_name)
    assert coxeter.gldim_regular_block(group) == 2 * group.length(group.longest_element())


@pytest.mark.parametrize("type_name", ['E8', 'A6', 'A0', 'F4'])
def test_unsupported_type(type_name):
    with pytest.raises(HomquiverException) as e:
        coxeter.build_weyl_group(type_name)
    assert "unsupported type" in str(e.value)


def test_type_aliases():
    assert coxeter.build_weyl_group('c2').type == 'B2'
    assert coxeter.build_weyl_group('A1+A1').type == 'A1xA1'


def test_elements(a2):
    w = a2.element('s1s2')
    assert a2.length(w) == 2
    assert a2.word_string(a2.identity) == 'e'
    assert a2.element('w0') == a2.longest_element()
    assert a2.element(['s1', 's2', 's1']) == a2.longest_element()
    assert a2.multiply(w, a2.inverse(w)) == a2.identity
    with pytest.raises(HomquiverException):
        a2.element('x7')
    with pytest.raises(HomquiverException):
        a2.generator_index('s3')


def test_parabolic(a2):
    w0j = a2.longest_element(['s1'])
    assert a2.length(w0j) == 1
    assert len(a2.parabolic_subgroup(['s1'])) == 2
    assert a2.longest_element(['s1', 's2']) == a2.longest_element()


def test_bruhat_dihedral(b2):
    # Dihedral Bruhat order: comparable exactly when the lengths differ or the elements agree
    for u in b2.elements:
        for w in b2.elements:
            expected = u == w or b2.length(u) < b2.length(w)
            assert b2.bruhat_le(u, w) == expected


def test_bruhat_rank_dihedral(b2):
    with pytest.raises(HomquiverException):
        b2.bruhat_le(b2.identity, b2.identity, criterion='rank')


@pytest.mark.parametrize("type_name", ['A2', 'A3'])
def test_bruhat_criteria_agree(type_name):
    group = coxeter.build_weyl_group(type_name)
    for u in group.elements:
        for w in group.elements:
            assert group.bruhat_le(u, w, criterion='subword') == group.bruhat_le(u, w, criterion='rank')


def test_upper_covers(a2):
    covers = a2.upper_covers(a2.identity)
    assert sorted(a2.word_string(w) for w in covers) == ['s1', 's2']
    assert a2.upper_covers(a2.longest_element()) == []


@pytest.mark.parametrize("type_name,count", [('A1', 3), ('A2', 9), ('A1xA1', 6), ('B2', 12)])
def test_coideal_count(type_name, count):
    group = coxeter.build_weyl_group(type_name)
    ideals = coxeter.coideals(group)
    assert len(ideals) == count
    assert set(ideals) == _coideals_by_brute_force(group)
    assert all(group.is_coideal(c) for c in ideals)


def test_a_function(a2):
    assert coxeter.a_function(a2, 'e') == 0
    assert coxeter.a_function(a2, 's1') == 1
    assert coxeter.a_function(a2, 's1s2') == 1
    assert coxeter.a_function(a2, 'w0') == 3


def test_a_function_dihedral():
    group = coxeter.build_weyl_group('G2')
    assert coxeter.a_function(group, 'w0') == 6
    assert coxeter.a_function(group, 's1s2s1') == 1
    assert coxeter.a_function(group, 'e') == 0


def test_rsk_shape():
    assert coxeter.rsk_shape((0, 1, 2)) == (3,)
    assert coxeter.rsk_shape((2, 1, 0)) == (1, 1, 1)
    assert coxeter.rsk_shape((1, 0, 2)) == (2, 1)


def test_thm777(a2):
    assert coxeter.thm777_eval(coxeter.build_weyl_group('A1'), []) == (1, 2, 2)
    assert coxeter.thm777_eval(a2, ['s1']) == (1, 2, 2)
    assert coxeter.thm777_eval(a2, []) == (3, 6, 6)
    assert coxeter.thm777_eval(a2, ['s1', 's2']) == (0, 0, 0)


def test_regular_pd_simple():
    group = coxeter.build_weyl_group('A1')
    assert coxeter.regular_pd_simple(group, group.identity) == 2
    assert coxeter.regular_pd_simple(group, group.longest_element()) == 1


def test_oinf_formulas():
    group = coxeter.build_weyl_group('A1')
    result = coxeter.oinf_formulas(group, group.identity, base_pd=2)
    assert result == dict(pd_simple_in_Oinf=3, pd_verma_in_Oinf=1, gl_dim_Oinf=3, min_pd_Oinf=1, shifted_pd=3)
    assert coxeter.oinf_formulas(group, 'w0')['pd_verma_in_Oinf'] == 2
    with pytest.raises(HomquiverException):
        coxeter.oinf_formulas(group, 'e', base_pd=-1)


def test_cross_validate_sl2():
    alg, _ = presets.load_preset('sl2_principal')
    group = coxeter.build_weyl_group('A1')
    report = coxeter.cross_validate(alg, group, [], '1', ['2'])
    assert report.matches
    assert report.to_dict()['computed'] == [1, 2, 2]


def test_cross_validate_sl3():
    alg, notes = presets.load_preset('sl3_singular')
    info = notes['coxeter']
    group = coxeter.build_weyl_group(info['type'])
    report = coxeter.cross_validate(alg, group, info['parabolic'], info['simple_verma'], info['dominant'])
    assert report.predicted == (1, 2, 2)
    assert report.dominant == {'2': 2, '3': 2}


def test_cross_validate_mismatch():
    alg, _ = presets.load_preset('sl3_singular')
    group = coxeter.build_weyl_group('A2')
    with pytest.raises(HomquiverException) as e:
        coxeter.cross_validate(alg, group, [], '1', ['2'])
    assert "mismatch" in str(e.value)
    assert e.value.data['predicted'] == [3, 6, 6]


def test_initseg_correspondence():
    alg, notes = presets.load_preset('sl2_principal')
    group = coxeter.build_weyl_group('A1')
    result = coxeter.initseg_correspondence(alg, group, notes['coxeter']['vertex_of'])
    assert result['bijective']
    assert result['pd_matches']
    assert sorted(result['coideals']) == [[], ['1'], ['1', '2']]
    assert [row['computed'] for row in result['pd']] == [2, 1]
