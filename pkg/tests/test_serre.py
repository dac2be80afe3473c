"""
    Tests for the homquiver package
    Released under The MIT License. See LICENSE file for details.

    Tests Serre subcategories, comparison maps and initial segments. Requires "pytest" and "hypothesis" to run.
"""

import itertools
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from homquiver import coxeter
from homquiver import homology
from homquiver import presets
from homquiver import repcat
from homquiver import serre
from homquiver.exceptions import HomquiverException

SETTINGS = dict(max_examples=100, derandomize=True, deadline=None)

_ALGEBRAS = dict()


def _algebra(name):
    if name not in _ALGEBRAS:
        _ALGEBRAS[name] = presets.load_preset(name)[0]
    return _ALGEBRAS[name]


@pytest.fixture(scope="module")
def sl2_alg():
    alg, _ = presets.load_preset('sl2_principal')
    return alg


@pytest.fixture(scope="module")
def sl3_alg():
    alg, _ = presets.load_preset('sl3_singular')
    return alg


@pytest.fixture(scope="module")
def monomial_alg():
    alg, _ = presets.load_preset('sl3_singular_monomial')
    return alg


def test_subcategory_sl2(sl2_alg):
    sub = serre.serre_subcategory(sl2_alg, ['1'])
    assert sub.simple_labels == ('1',)
    assert sub.exponent == 1
    assert sub.dimension == 1
    assert sub.ideal_dimension == 4
    assert sub.contains(repcat.simple(sl2_alg, '1'))
    assert not sub.contains(repcat.simple(sl2_alg, '2'))


def test_subcategory_projective(sl3_alg):
    sub = serre.serre_subcategory(sl3_alg, ['1', '2'])
    assert sub.exponent == 1
    proj = sub.projective(1)
    assert proj.dims[2] == 0
    assert sub.contains(proj)
    with pytest.raises(HomquiverException):
        sub.projective(2)


def test_subcategory_multiply(sl3_alg):
    sub = serre.serre_subcategory(sl3_alg, ['1', '2'])
    unit = sub.reduce(sl3_alg.unit())
    for k in range(sub.dimension):
        x = [1 if i == k else 0 for i in range(sub.dimension)]
        assert sub.multiply(unit, x) == x


def test_restrict_hom(monomial_alg):
    sub = serre.serre_subcategory(monomial_alg, ['1', '3'])
    mod1 = repcat.simple(monomial_alg, '1')
    mod2 = sub.projective(0)
    dim_quotient, dim_ambient = sub.restrict_hom_check(mod2, mod1)
    assert dim_quotient == dim_ambient == 1
    with pytest.raises(HomquiverException):
        sub.restrict_hom_check(mod1, repcat.simple(monomial_alg, '2'))


def test_comparison_low_degrees(monomial_alg):
    simples = ['1', '3']
    for d in (0, 1):
        for s in simples:
            for t in simples:
                entry = serre.comparison_map(monomial_alg, simples, repcat.simple(monomial_alg, s),
                                             repcat.simple(monomial_alg, t), d)
                assert entry.is_iso


def test_comparison_outside(monomial_alg):
    with pytest.raises(HomquiverException):
        serre.comparison_map(monomial_alg, ['1'], repcat.simple(monomial_alg, '1'),
                             repcat.simple(monomial_alg, '2'), 0)


def test_fullness_sl2(sl2_alg):
    report = serre.extension_fullness(sl2_alg, ['1'])
    assert report.verdict == serre.FULL
    assert report.status == serre.CERTIFIED
    assert report.is_full
    assert not report.failing()


def test_fullness_sl3(sl3_alg):
    report = serre.extension_fullness(sl3_alg, ['3'])
    assert report.verdict == serre.NOT_FULL
    entry = report.entry('3', '3', 2)
    assert (entry.dim_sub, entry.dim_ambient) == (0, 1)
    assert not entry.surjective
    assert report.to_dict()['verdict'] == serre.NOT_FULL


def test_fullness_monomial(monomial_alg):
    report = serre.extension_fullness(monomial_alg, ['1', '3'])
    assert report.verdict == serre.NOT_FULL
    assert all(e.degree >= 2 for e in report.failing())


def test_fullness_empty(sl3_alg):
    report = serre.extension_fullness(sl3_alg, [])
    assert report.verdict == serre.FULL
    assert homology.global_dim(serre.serre_subcategory(sl3_alg, [])) == 0


def test_fullness_whole(sl3_alg):
    report = serre.extension_fullness(sl3_alg, ['1', '2', '3'])
    assert report.verdict == serre.FULL


def test_initial_segments_sl2(sl2_alg):
    assert serre.initial_segments(sl2_alg) == [(), ('1',), ('1', '2')]


def test_initial_segments_sl3(sl3_alg, monomial_alg):
    expected = [(), ('1',), ('3',), ('1', '2'), ('1', '3'), ('1', '2', '3')]
    assert serre.initial_segments(sl3_alg) == expected
    assert serre.initial_segments(monomial_alg) == expected


def test_guichardet_sl2(sl2_alg):
    report = serre.guichardet(sl2_alg)
    assert report.verdict is True
    assert report.failing_segments() == []


def test_guichardet_sl3(sl3_alg):
    report = serre.guichardet(sl3_alg)
    assert report.verdict is False
    assert ('3',) in report.failing_segments()
    assert report.to_dict()['verdict'] is False


def test_guichardet_monomial(monomial_alg):
    report = serre.guichardet(monomial_alg)
    assert report.verdict is False
    assert ('1', '3') in report.failing_segments()


def test_report_infinity():
    report = serre.ComparisonReport(['1'], [], serre.NOT_FULL, serre.CERTIFIED, gl_dim_ambient=2,
                                    gl_dim_sub=homology.INFINITY)
    data = report.to_dict()
    assert data['gl_dim_sub'] == "infinity"
    assert data['gl_dim_ambient'] == 2


def test_coideals_extension_full():
    alg, notes = presets.load_preset('sl2_principal')
    info = notes['coxeter']
    group = coxeter.build_weyl_group(info['type'])
    vertex_of = dict((group.element(k), v) for k, v in info['vertex_of'].items())
    found = coxeter.coideals(group)
    assert len(found) == 3
    for coideal in found:
        segment = sorted(vertex_of[w] for w in coideal)
        report = serre.extension_fullness(alg, segment)
        assert report.verdict == serre.FULL
        assert report.status == serre.CERTIFIED


@settings(**SETTINGS)
@given(st.sampled_from(presets.ALGEBRA_PRESETS), st.integers(min_value=0, max_value=10 ** 6))
def test_comparison_degrees_zero_one(name, mask):
    alg = _algebra(name)
    vertices = alg.quiver.vertices
    mask = mask % (2 ** len(vertices) - 1) + 1
    simples = [v for k, v in enumerate(vertices) if mask >> k & 1]
    sub = serre.serre_subcategory(alg, simples)
    objects = [repcat.simple(alg, v) for v in simples]
    objects += [sub.projective(alg.quiver.vertex_index(v)) for v in simples]
    for d in (0, 1):
        for mod1 in objects:
            for mod2 in objects:
                entry = serre.comparison_map(alg, sub, mod1, mod2, d)
                assert entry.is_iso, (name, simples, d, entry)


@pytest.mark.parametrize("name", presets.ALGEBRA_PRESETS)
def test_full_segments_finite_length(name):
    alg = _algebra(name)
    gl_dim = homology.global_dim(alg)
    for segment in serre.initial_segments(alg):
        if not segment or serre.extension_fullness(alg, segment).verdict != serre.FULL:
            continue
        sub = serre.serre_subcategory(alg, segment)
        simples = [repcat.simple(alg, v) for v in segment]
        for d in range(gl_dim + 1):
            for mod1, mod2 in itertools.product(simples, repeat=2):
                assert serre.comparison_map(alg, sub, mod1, mod2, d).is_iso
        sums = [repcat.direct_sum([m1, m2])[0] for m1, m2 in itertools.combinations_with_replacement(simples, 2)]
        sources = [sub.projective(alg.quiver.vertex_index(v)) for v in segment] + sums
        targets = simples + [repcat.direct_sum(simples)[0]]
        for d in range(gl_dim + 1):
            for mod1 in sources:
                for mod2 in targets:
                    entry = serre.comparison_map(alg, sub, mod1, mod2, d)
                    assert entry.is_iso, (segment, d, entry)
