"""
    Tests for the homquiver package
    Released under The MIT License. See LICENSE file for details.

    Tests homquiver.homology module. Requires "pytest" and "hypothesis" to run.
"""

import random
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from homquiver import homology
from homquiver import pathalg
from homquiver import presets
from homquiver import repcat
from homquiver.exceptions import HomquiverException, UndeterminedError

SETTINGS = dict(max_examples=100, derandomize=True, deadline=None)


@pytest.fixture(scope="module")
def sl2_alg():
    alg, _ = presets.load_preset('sl2_principal')
    return alg


@pytest.fixture(scope="module")
def sl3_alg():
    alg, _ = presets.load_preset('sl3_singular')
    return alg


@pytest.fixture(scope="module")
def dual_numbers():
    q = pathalg.Quiver(['1'], [('x', '1', '1')])
    return pathalg.build_path_algebra(q, [pathalg.Relation.from_words([(1, ['x', 'x'])])], name="dual")


def _random_case(seed, name):
    alg, _ = presets.load_preset(name)
    return alg, repcat.random_module(alg, random.Random(seed))


def test_resolution_sl2(sl2_alg):
    res1 = homology.minimal_resolution(repcat.simple(sl2_alg, '1'))
    res2 = homology.minimal_resolution(repcat.simple(sl2_alg, '2'))
    assert res1.term_names() == ['P1', 'P2']
    assert res2.term_names() == ['P2', 'P1', 'P2']
    assert res1.status == homology.FINITE
    assert res1.proj_dim() == 1
    assert res2.proj_dim() == 2
    assert res2.ext_range == homology.INFINITY


def test_resolution_sl3(sl3_alg):
    res = homology.minimal_resolution(repcat.simple(sl3_alg, '3'))
    assert res.term_names() == ['P3', 'P2', 'P3']
    assert res.multiplicities(1) == (0, 1, 0)
    assert res.check_complex() and res.check_exact() and res.check_minimal()


def test_proj_dims(sl2_alg, sl3_alg):
    assert [homology.proj_dim(repcat.simple(sl3_alg, v)) for v in '123'] == [1, 2, 2]
    assert homology.global_dim(sl2_alg) == 2
    assert homology.global_dim(sl3_alg) == 2


def test_proj_dim_projective(sl3_alg):
    assert homology.proj_dim(sl3_alg.projective(1)) == 0


def test_proj_dim_zero(sl2_alg):
    zero = repcat.Representation(sl2_alg, (0, 0))
    res = homology.minimal_resolution(zero)
    assert res.is_finite()
    assert res.proj_dim() == -1


def test_ext_sl3(sl3_alg):
    l1, l3 = repcat.simple(sl3_alg, '1'), repcat.simple(sl3_alg, '3')
    assert homology.ext_dim(l3, l3, 2) == 1
    assert homology.ext_dim(l1, l3, 1) == 0
    assert homology.ext_dim(l3, l1, 1) == 0
    assert homology.ext_dim(l3, l3, 5) == 0


def test_ext_negative(sl3_alg):
    l1 = repcat.simple(sl3_alg, '1')
    assert homology.ext_dim(l1, l1, -1) == 0


def test_ext_quiver(sl3_alg):
    table = homology.ext_quiver(sl3_alg, 2)
    assert table.simples == ('1', '2', '3')
    assert table.degree_slice(0) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert table.value('3', '3', 2) == 1
    assert table.value('1', '2', 1) == 1
    assert table.to_dict()['max_degree'] == 2


def test_ext_quiver_negative(sl3_alg):
    with pytest.raises(HomquiverException):
        homology.ext_quiver(sl3_alg, -1)


def test_truncated(sl2_alg):
    res = homology.minimal_resolution(repcat.simple(sl2_alg, '2'), cap=0)
    assert res.status == homology.TRUNCATED
    with pytest.raises(UndeterminedError):
        res.proj_dim()
    with pytest.raises(UndeterminedError):
        homology.ext_from_resolution(res, repcat.simple(sl2_alg, '1'), 3)


def test_negative_cap(sl2_alg):
    with pytest.raises(HomquiverException):
        homology.minimal_resolution(repcat.simple(sl2_alg, '2'), cap=-1)


def test_periodic(dual_numbers):
    simple = repcat.simple(dual_numbers, '1')
    res = homology.minimal_resolution(simple, cap=4)
    assert res.is_periodic()
    assert res.proj_dim() == homology.INFINITY
    assert homology.ext_from_resolution(res, simple, 7) == 1
    assert homology.global_dim(dual_numbers, 4) == homology.INFINITY


def test_periodic_undetected(dual_numbers):
    res = homology.minimal_resolution(repcat.simple(dual_numbers, '1'), cap=3, periodicity=False)
    assert res.status == homology.TRUNCATED
    assert res.length == 3


def test_euler_characteristic(sl3_alg):
    res = homology.minimal_resolution(repcat.simple(sl3_alg, '2'))
    assert homology.euler_characteristic(res) == (0, 1, 0)


def test_les_not_exact(sl2_alg):
    inclusion, _ = repcat.radical_sequence(sl2_alg.projective(0))
    _, projection = repcat.radical_sequence(sl2_alg.projective(1))
    with pytest.raises(HomquiverException) as e:
        homology.les_dimension_check(inclusion, projection, repcat.simple(sl2_alg, '1'), 2)
    assert "not exact" in str(e.value)


def test_les_radical(sl3_alg):
    inclusion, projection = repcat.radical_sequence(sl3_alg.projective(1))
    report = homology.les_dimension_check(inclusion, projection, repcat.simple(sl3_alg, '3'), 3)
    assert report.consistent
    assert report.identity_checked and report.identity_holds
    assert report.pd == dict(X=1, Y=0, Z=2)
    assert report.to_dict()['consistent']


@settings(**SETTINGS)
@given(st.integers(min_value=0, max_value=10 ** 6), st.sampled_from(presets.ALGEBRA_PRESETS))
def test_resolution_checks(seed, name):
    _, module = _random_case(seed, name)
    res = homology.minimal_resolution(module)
    assert res.is_finite()
    assert res.check_complex()
    assert res.check_exact()
    assert res.check_minimal()
    assert homology.euler_characteristic(res) == module.dims
    assert res.proj_dim() <= 2


@settings(**SETTINGS)
@given(st.integers(min_value=0, max_value=10 ** 6), st.sampled_from(presets.ALGEBRA_PRESETS))
def test_multiplicities_are_ext_with_simples(seed, name):
    alg, module = _random_case(seed, name)
    res = homology.minimal_resolution(module)
    for d in range(res.length + 2):
        mult = res.multiplicities(d)
        for j in range(alg.quiver.num_vertices):
            assert mult[j] == homology.ext_from_resolution(res, repcat.simple_at(alg, j), d)


@settings(**SETTINGS)
@given(st.integers(min_value=0, max_value=10 ** 6), st.sampled_from(presets.ALGEBRA_PRESETS))
def test_ext_additive(seed, name):
    alg, mod1 = _random_case(seed, name)
    mod2 = repcat.random_module(alg, random.Random(seed + 1))
    coeff = repcat.random_module(alg, random.Random(seed + 2))
    total, _, _ = repcat.direct_sum([mod1, mod2])
    for d in range(3):
        expected = homology.ext_dim(mod1, coeff, d) + homology.ext_dim(mod2, coeff, d)
        assert homology.ext_dim(total, coeff, d) == expected


@settings(**SETTINGS)
@given(st.integers(min_value=0, max_value=10 ** 6), st.sampled_from(presets.ALGEBRA_PRESETS),
       st.sampled_from(['radical', 'syzygy', 'split']))
def test_les_consistent(seed, name, kind):
    alg, module = _random_case(seed, name)
    rng = random.Random(seed + 1)
    if kind == 'radical':
        inclusion, projection = repcat.radical_sequence(module)
    elif kind == 'syzygy':
        inclusion, projection = repcat.syzygy_sequence(module)
    else:
        inclusion, projection = repcat.split_sequence(module, repcat.random_module(alg, rng))
    coeff = repcat.simple_at(alg, rng.randrange(alg.quiver.num_vertices))
    report = homology.les_dimension_check(inclusion, projection, coeff, 3)
    assert report.prefix_ok
    assert report.pd1_holds
    assert report.pd2_holds
    assert report.identity_holds
    assert report.consistent


def test_les_report_infinity():
    report = homology.LESReport(pd=dict(X=homology.INFINITY, Y=1, Z=None))
    assert report.to_dict()['pd'] == dict(X="infinity", Y=1, Z=None)
