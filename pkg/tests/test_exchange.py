"""
    Tests for the homquiver package
    Released under The MIT License. See LICENSE file for details.

    Tests the description formats and report serialization. Requires "pytest" to run.
"""

import os
from fractions import Fraction
import pytest
from homquiver import exchange
from homquiver import homology
from homquiver import liecoh
from homquiver import pathalg
from homquiver import presets
from homquiver.exceptions import HomquiverException, ParseError

FILE_NAME = "testalg"


def test_parse_preset():
    data = exchange.parse_algebra_text(presets.preset_text('sl3_singular'))
    assert data.name == "sl3_singular"
    assert data.quiver.vertices == ('1', '2', '3')
    assert data.convention == pathalg.RIGHT_TO_LEFT
    assert data.annotations['gl_dim'] == 2
    assert data.annotations['pd'] == {'1': 1, '2': 2, '3': 2}


def test_parse_unknown_directive():
    with pytest.raises(ParseError) as e:
        exchange.parse_algebra_text("vertices: 1\nfoo: bar\n")
    assert (e.value.line, e.value.column) == (2, 1)
    assert "unknown directive 'foo'" in str(e.value)


def test_parse_undeclared_arrow():
    with pytest.raises(ParseError) as e:
        exchange.parse_algebra_text("vertices: 1\nrelation: x*x = 0\n")
    assert (e.value.line, e.value.column) == (2, 11)
    assert "undeclared arrow 'x'" in str(e.value)


@pytest.mark.parametrize("text,message", [
    ("name: empty\n", "empty vertex list"),
    ("vertices: 1 2\narrow a: 1 -> 3\n", "undeclared vertex"),
    ("vertices: 1\narrow a: 1 -> 1\narrow a: 1 -> 1\n", "duplicate arrow"),
    ("vertices: 1\narrow a: 1 -> 1\nrelation: a*a\n", "expected 'lhs = rhs'"),
    ("vertices: 1\nannotate pd: {broken\n", "invalid annotation value"),
    ("vertices: 1\njust text\n", "expected 'directive: value'"),
    ("vertices: 1\ncomposition: sideways\n", "unknown composition convention"),
])
def test_parse_errors(text, message):
    with pytest.raises(ParseError) as e:
        exchange.parse_algebra_text(text)
    assert message in str(e.value)
    assert isinstance(e.value, HomquiverException)


def test_comments_and_convention():
    text = "# a loop\nvertices: 1\narrow x: 1 -> 1  # the loop\nrelation: x*x*x = 0\ncomposition: left-to-right\n"
    data = exchange.parse_algebra_text(text)
    assert data.convention == pathalg.LEFT_TO_RIGHT
    assert exchange.build_algebra(data).dimension == 3


@pytest.mark.parametrize("name", presets.ALGEBRA_PRESETS)
def test_algebra_round_trip(name):
    data = exchange.parse_algebra_text(presets.preset_text(name))
    for convention in pathalg.CONVENTIONS:
        text = exchange.dump_algebra_text(data.quiver, data.relations, convention, name=data.name,
                                          annotations=data.annotations)
        again = exchange.parse_algebra_text(text)
        assert again.quiver == data.quiver
        assert again.relations == data.relations
        assert again.annotations == data.annotations
        assert exchange.build_algebra(again).dimension == exchange.build_algebra(data).dimension


@pytest.mark.parametrize("algebra", [liecoh.sl2(), liecoh.borel_sl2(), liecoh.heisenberg(), liecoh.g_plus_g_sl2()])
def test_lie_round_trip(algebra):
    again = exchange.parse_lie_text(exchange.dump_lie_text(algebra))
    assert again.basis == algebra.basis
    assert again.brackets() == algebra.brackets()
    assert again.name == algebra.name


@pytest.mark.parametrize("text,message", [
    ("name: x\n", "missing basis"),
    ("basis: h e\nbracket: h q = e\n", "unknown basis element"),
    ("basis: h e\nbracket: h e = 2*e\nbracket: e h = -2*e\n", "bracket declared twice"),
    ("basis: h e\nrule: h\n", "unknown directive"),
])
def test_lie_parse_errors(text, message):
    with pytest.raises(ParseError) as e:
        exchange.parse_lie_text(text)
    assert message in str(e.value)


def test_report_json():
    report = dict(b=Fraction(3, 1), a=Fraction(1, 2), pd=homology.INFINITY, items={'3', '1'})
    text = exchange.report_to_json(report)
    assert text == exchange.report_to_json(dict(reversed(list(report.items()))))
    data = exchange.report_from_json(text)
    assert data == dict(a="1/2", b=3, pd="infinity", items=['1', '3'])


def test_report_json_objects():
    alg, _ = presets.load_preset('sl2_principal')
    table = homology.ext_quiver(alg, 2)
    data = exchange.report_from_json(exchange.report_to_json(table))
    assert data['max_degree'] == 2


@pytest.fixture
def export_file():
    # Set up
    yield FILE_NAME + ".alg"
    # Clean up
    if os.path.isfile(FILE_NAME + ".alg"):
        os.remove(FILE_NAME + ".alg")


def test_export_import(export_file):
    alg, notes = presets.load_preset('sl2_principal')
    exchange.export_algebra_file(alg, export_file, annotations=dict(gl_dim=notes['gl_dim']))
    assert os.path.isfile(export_file)
    data = exchange.parse_algebra_file(export_file)
    assert data.quiver == alg.quiver
    assert data.annotations == dict(gl_dim=2)
    assert exchange.build_algebra(data).dimension == alg.dimension


def test_read_missing_file():
    with pytest.raises(HomquiverException):
        exchange.parse_algebra_file("does_not_exist.alg")
