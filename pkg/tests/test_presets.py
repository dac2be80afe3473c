"""
    Tests for the homquiver package
    Released under The MIT License. See LICENSE file for details.

    Tests the bundled presets against their annotations. Requires "pytest" to run.
"""

import random
import pytest
from homquiver import liecoh
from homquiver import pathalg
from homquiver import presets
from homquiver.exceptions import HomquiverException


def test_available():
    names = presets.available_presets()
    assert len(names) == len(presets.ALGEBRA_PRESETS) + len(presets.LIE_PRESETS)
    assert 'sl3_singular' in names
    assert 'heisenberg' in names


@pytest.mark.parametrize("name", presets.available_presets())
def test_self_test(name):
    rows = presets.self_test(name, n=3)
    assert rows
    failed = [key for key, _, _, ok in rows if not ok]
    assert failed == []


@pytest.mark.parametrize("name", presets.ALGEBRA_PRESETS)
def test_quiver_presets(name):
    alg, notes = presets.load_preset(name)
    assert isinstance(alg, pathalg.PathAlgebra)
    assert notes['kind'] == 'quiver'
    assert alg.dimension == notes['dimension']
    assert 'provenance' in notes


@pytest.mark.parametrize("name", presets.LIE_PRESETS)
def test_lie_presets(name):
    alg, notes = presets.load_preset(name)
    assert isinstance(alg, liecoh.LieAlgebra)
    assert notes['kind'] == 'lie'
    assert len(notes['cohomology_trivial']) == alg.dimension + 1


def test_abelian_dimension():
    alg, notes = presets.load_preset('abelian_n', n=4)
    assert alg.dimension == 4
    assert notes['cohomology_trivial'] == [1, 4, 6, 4, 1]
    with pytest.raises(HomquiverException):
        presets.load_preset('abelian_n', n=0)


def test_unknown_preset():
    with pytest.raises(HomquiverException) as e:
        presets.load_preset('sl4_regular')
    assert "unknown preset 'sl4_regular'" in str(e.value)
    assert 'sl2_principal' in e.value.data['available']


def test_preset_text():
    assert presets.preset_text('sl2_principal').startswith("# Principal block")
    assert "basis: x1 x2 x3" in presets.preset_text('abelian_n', n=3)
    assert "bracket: h e = 2*e" in presets.preset_text('sl2_lie')


def test_cap_forwarded():
    with pytest.raises(HomquiverException):
        presets.load_preset('sl3_singular', cap=1)


@pytest.mark.parametrize("name", presets.LIE_PRESETS)
def test_random_lie_module(name):
    alg, _ = presets.load_preset(name)
    for seed in range(5):
        module = presets.random_lie_module(alg, random.Random(seed), max_dim=3)
        assert 1 <= module.dimension <= 3
        assert module.is_representation()
