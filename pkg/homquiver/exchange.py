"""
.. module:: exchange
    :platform: Unix, Windows
    :synopsis: Reads and writes algebra descriptions, Lie algebra descriptions and machine-readable reports

.. moduleauthor:: homquiver developers

"""

import json
import re
from collections import namedtuple
from fractions import Fraction
from . import _exchange as exch
from . import pathalg
from . import liecoh
from ._utilities import export
from .exceptions import ParseError

#: Parsed algebra description
AlgebraData = namedtuple('AlgebraData', ['quiver', 'relations', 'convention', 'name', 'annotations'])

__all__ = ['AlgebraData']

_ARROW_RE = re.compile(r"^arrow\s+([A-Za-z_][A-Za-z0-9_']*)$")
_ARROW_ARG_RE = re.compile(r"^(\S+)\s*->\s*(\S+)$")
_ANNOTATE_RE = re.compile(r"^annotate\s+([A-Za-z_][A-Za-z0-9_]*)$")


@export
def parse_algebra_text(text):
    """ Parses an algebra description.

    One statement per line; ``#`` starts a comment:

    .. code-block:: text

        name: sl3_singular
        vertices: 1 2 3
        arrow a: 1 -> 2
        relation: c*d = 0
        relation: a*b = d*c
        composition: right-to-left
        annotate pd: {"1": 1, "2": 2, "3": 2}

    Products in relations are written with ``*`` and read in the declared composition convention, which may be
    declared anywhere in the file. Annotation values are JSON.

    :param text: file contents
    :type text: str
    :return: parsed data
    :rtype: AlgebraData
    :raises ParseError: "parse error at line:col", including "unknown directive"
    """
    name = None
    vertices = None
    arrows = []
    raw_relations = []
    convention = pathalg.RIGHT_TO_LEFT
    annotations = dict()
    for line, col, head, arg, arg_col in exch.statements(text):
        arrow_match = _ARROW_RE.match(head)
        annotate_match = _ANNOTATE_RE.match(head)
        if head == 'vertices':
            if vertices is not None:
                raise ParseError("vertices declared twice", line, col)
            vertices = arg.split()
            if not vertices:
                raise ParseError("empty vertex list", line, arg_col)
            if len(set(vertices)) != len(vertices):
                raise ParseError("duplicate vertex", line, arg_col)
        elif arrow_match:
            if vertices is None:
                raise ParseError("arrow declared before the vertices", line, col)
            arrow = arrow_match.group(1)
            ends = _ARROW_ARG_RE.match(arg)
            if ends is None:
                raise ParseError("expected 'source -> target'", line, arg_col)
            for vertex in ends.groups():
                if vertex not in vertices:
                    raise ParseError("undeclared vertex '{0}'".format(vertex), line, arg_col)
            if arrow in [a[0] for a in arrows]:
                raise ParseError("duplicate arrow '{0}'".format(arrow), line, col)
            arrows.append((arrow, ends.group(1), ends.group(2)))
        elif head == 'relation':
            if '=' not in arg:
                raise ParseError("expected 'lhs = rhs'", line, arg_col)
            lhs_text, rhs_text = arg.split('=', 1)
            rhs_col = arg_col + len(lhs_text) + 1
            sides = []
            for side_text, side_col in ((lhs_text, arg_col), (rhs_text, rhs_col)):
                terms = exch.parse_combination(side_text, line, side_col)
                for coeff, names, tcol in terms:
                    if not names:
                        raise ParseError("constant terms are not allowed in relations", line, tcol)
                    for arrow in names:
                        if arrow not in [a[0] for a in arrows]:
                            raise ParseError("undeclared arrow '{0}'".format(arrow), line, tcol)
                sides.append([(coeff, names) for coeff, names, _ in terms])
            raw_relations.append(sides)
        elif head == 'composition':
            if arg not in pathalg.CONVENTIONS:
                raise ParseError("unknown composition convention '{0}'".format(arg), line, arg_col)
            convention = arg
        elif head == 'name':
            name = arg
        elif annotate_match:
            try:
                annotations[annotate_match.group(1)] = json.loads(arg)
            except ValueError as e:
                raise ParseError("invalid annotation value: {0}".format(e), line, arg_col)
        else:
            raise ParseError("unknown directive '{0}'".format(head), line, col)
    if vertices is None:
        raise ParseError("empty vertex list", 1, 1)
    quiver = pathalg.Quiver(vertices, arrows)
    relations = [pathalg.Relation.from_words(lhs, rhs, convention) for lhs, rhs in raw_relations]
    return AlgebraData(quiver, relations, convention, name, annotations)


@export
def parse_algebra_file(file_name):
    """ Reads an algebra description from a file.

    :param file_name: path of the input file
    :type file_name: str
    :rtype: AlgebraData
    :raises HomquiverException: an error occurred reading or parsing the file
    """
    return parse_algebra_text(exch.read_file(file_name))


@export
def build_algebra(data, **kwargs):
    """ Builds the path algebra of parsed algebra data.

    **Keyword Arguments:**

    * ``cap``: maximal path length. *Default: pathalg.DEFAULT_PATH_CAP*

    :param data: parsed description
    :type data: AlgebraData
    :rtype: pathalg.PathAlgebra
    """
    cap = kwargs.get('cap', pathalg.DEFAULT_PATH_CAP)
    return pathalg.build_path_algebra(data.quiver, data.relations, data.convention, cap,
                                      name=data.name or "algebra")


def _written(word, convention):
    return list(reversed(word)) if convention == pathalg.RIGHT_TO_LEFT else list(word)


@export
def dump_algebra_text(quiver, relations, convention=pathalg.RIGHT_TO_LEFT, **kwargs):
    """ Writes an algebra description which parses back to the same data.

    **Keyword Arguments:**

    * ``name``: algebra name
    * ``annotations``: dict of JSON-serializable annotations

    :param quiver: quiver
    :type quiver: pathalg.Quiver
    :param relations: relations
    :type relations: list
    :param convention: composition convention used to write products
    :type convention: str
    :return: description text
    :rtype: str
    """
    lines = []
    name = kwargs.get('name', None)
    if name:
        lines.append("name: {0}".format(name))
    lines.append("composition: {0}".format(convention))
    lines.append("vertices: {0}".format(" ".join(quiver.vertices)))
    for arrow in quiver.arrows:
        lines.append("arrow {0}: {1} -> {2}".format(arrow.name, arrow.source, arrow.target))
    for rel in relations:
        sides = []
        for side in (rel.lhs, rel.rhs):
            terms = [(coeff, _written(word, convention)) for word, coeff in sorted(side.items())]
            sides.append(exch.format_combination(terms))
        lines.append("relation: {0} = {1}".format(*sides))
    for key, value in sorted(dict(kwargs.get('annotations', None) or dict()).items()):
        lines.append("annotate {0}: {1}".format(key, json.dumps(value, sort_keys=True)))
    return "\n".join(lines) + "\n"


@export
def export_algebra_file(algebra, file_name, **kwargs):
    """ Saves the presentation of a path algebra to a file.

    :param algebra: path algebra
    :type algebra: pathalg.PathAlgebra
    :param file_name: path of the output file
    :type file_name: str
    """
    text = dump_algebra_text(algebra.quiver, algebra.relations, algebra.convention, name=algebra.name,
                             annotations=kwargs.get('annotations', None))
    return exch.write_file(file_name, text)


@export
def parse_lie_text(text):
    """ Parses a Lie algebra description.

    .. code-block:: text

        name: sl2
        basis: h e f
        bracket: h e = 2*e
        bracket: h f = -2*f
        bracket: e f = h

    :param text: file contents
    :type text: str
    :return: Lie algebra
    :rtype: liecoh.LieAlgebra
    :raises ParseError: "parse error at line:col", including "unknown directive"
    """
    name = "lie_algebra"
    basis = None
    brackets = dict()
    for line, col, head, arg, arg_col in exch.statements(text):
        if head == 'name':
            name = arg
        elif head == 'basis':
            basis = arg.split()
            if not basis:
                raise ParseError("empty basis", line, arg_col)
            if len(set(basis)) != len(basis):
                raise ParseError("duplicate basis element", line, arg_col)
        elif head == 'bracket':
            if basis is None:
                raise ParseError("bracket declared before the basis", line, col)
            if '=' not in arg:
                raise ParseError("expected 'x y = combination'", line, arg_col)
            pair_text, rhs_text = arg.split('=', 1)
            pair = pair_text.split()
            if len(pair) != 2:
                raise ParseError("expected two basis elements", line, arg_col)
            for element in pair:
                if element not in basis:
                    raise ParseError("unknown basis element '{0}'".format(element), line, arg_col)
            value = dict()
            for coeff, names, tcol in exch.parse_combination(rhs_text, line, arg_col + len(pair_text) + 1):
                if len(names) != 1 or names[0] not in basis:
                    raise ParseError("expected a multiple of one basis element", line, tcol)
                value[names[0]] = value.get(names[0], Fraction(0)) + coeff
            key = tuple(pair)
            if key in brackets or tuple(reversed(pair)) in brackets:
                raise ParseError("bracket declared twice", line, col)
            brackets[key] = value
        else:
            raise ParseError("unknown directive '{0}'".format(head), line, col)
    if basis is None:
        raise ParseError("missing basis", 1, 1)
    return liecoh.LieAlgebra(basis, brackets, name=name)


@export
def parse_lie_file(file_name):
    """ Reads a Lie algebra description from a file. """
    return parse_lie_text(exch.read_file(file_name))


@export
def dump_lie_text(algebra):
    """ Writes a Lie algebra description which parses back to the same structure constants. """
    lines = ["name: {0}".format(algebra.name), "basis: {0}".format(" ".join(algebra.basis))]
    for (x, y), value in sorted(algebra.brackets().items(), key=lambda item: (algebra.index(item[0][0]),
                                                                              algebra.index(item[0][1]))):
        terms = [(c, [k]) for k, c in value.items()]
        lines.append("bracket: {0} {1} = {2}".format(x, y, exch.format_combination(terms)))
    return "\n".join(lines) + "\n"


@export
def report_to_json(report):
    """ Serializes a report deterministically: sorted keys, exact integers, fixed indentation.

    :param report: dict or an object with a ``to_dict`` method
    :return: JSON text
    :rtype: str
    """
    return json.dumps(exch.normalize(report), sort_keys=True, indent=2)


@export
def report_from_json(text):
    """ Parses a report serialized by :func:`report_to_json`.

    :rtype: dict
    """
    return json.loads(text)
