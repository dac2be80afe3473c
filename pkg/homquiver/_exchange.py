"""
.. module:: _exchange
    :platform: Unix, Windows
    :synopsis: Helper functions for exchange module

.. moduleauthor:: homquiver developers

"""

import math
import re
from fractions import Fraction
from .exceptions import HomquiverException, ParseError


# Initialize an empty __all__ for controlling imports
__all__ = []

_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*])|(?P<bad>\S))")


def read_file(file_name, **kwargs):
    callback = kwargs.get('callback', None)
    try:
        with open(file_name, 'r') as fp:
            content = fp.read() if callback is None else callback(fp)
        return content
    except IOError as e:
        raise HomquiverException("An error occurred during reading '{0}': {1}".format(file_name, e.args[-1]))


def write_file(file_name, content, **kwargs):
    callback = kwargs.get('callback', None)
    try:
        with open(file_name, 'w') as fp:
            if callback is None:
                fp.write(content)
            else:
                callback(fp, content)
        return True
    except IOError as e:
        raise HomquiverException("An error occurred during writing '{0}': {1}".format(file_name, e.args[-1]))


def statements(text):
    """ Yields ``(line number, column offset, directive, argument, argument column)`` for every statement.

    Comments start with ``#``. A directive is the text before the first colon, e.g. ``arrow a`` or ``relation``.
    """
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        if ':' not in line:
            raise ParseError("expected 'directive: value'", lineno, col)
        head, arg = line.split(':', 1)
        arg_col = len(head) + 2 + (len(arg) - len(arg.lstrip()))
        yield lineno, col, head.strip(), arg.strip(), arg_col


def tokenize(text, line, col):
    """ Splits a linear combination into ``(kind, value, column)`` tokens. """
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            break
        kind = match.lastgroup
        start = match.start(kind)
        if kind == 'bad':
            raise ParseError("unexpected character '{0}'".format(match.group(kind)), line, col + start)
        tokens.append((kind, match.group(kind), col + start))
        pos = match.end()
    return tokens


def parse_combination(text, line, col):
    """ Parses ``2*a*b - 1/2*d*c`` style combinations.

    :return: list of ``(coefficient, names, column)`` terms; ``0`` gives the empty list
    :rtype: list
    """
    tokens = tokenize(text, line, col)
    if not tokens:
        raise ParseError("empty expression", line, col)
    terms = []
    pos = 0
    while pos < len(tokens):
        sign = Fraction(1)
        while pos < len(tokens) and tokens[pos][0] == 'op' and tokens[pos][1] in '+-':
            if tokens[pos][1] == '-':
                sign = -sign
            pos += 1
        coeff, names, start = sign, [], None
        expect_factor = True
        while pos < len(tokens):
            kind, value, tcol = tokens[pos]
            if expect_factor:
                if kind == 'num':
                    coeff *= Fraction(value)
                elif kind == 'name':
                    names.append(value)
                else:
                    raise ParseError("expected a number or a name, got '{0}'".format(value), line, tcol)
                start = tcol if start is None else start
                expect_factor = False
                pos += 1
            elif kind == 'op' and value == '*':
                expect_factor = True
                pos += 1
            elif kind == 'op':
                break
            else:
                raise ParseError("expected an operator, got '{0}'".format(value), line, tcol)
        if expect_factor:
            last = tokens[-1][2] if tokens else col
            raise ParseError("incomplete term", line, last)
        if coeff != 0:
            terms.append((coeff, names, start))
    return terms


def format_combination(terms):
    """ Inverse of :func:`parse_combination` for a list of ``(coefficient, names)`` pairs. """
    if not terms:
        return "0"
    text = ""
    for idx, (coeff, names) in enumerate(terms):
        coeff = Fraction(coeff)
        body = "*".join(names)
        if abs(coeff) != 1 or not body:
            body = "{0}*{1}".format(abs(coeff), body) if body else str(abs(coeff))
        if idx == 0:
            text += ("-" if coeff < 0 else "") + body
        else:
            text += (" - " if coeff < 0 else " + ") + body
    return text


def normalize(obj):
    """ Converts results into JSON-safe data with integers kept exact.

    Integral fractions become ``int``, other fractions ``"p/q"``; infinite values become ``"infinity"``; sets are
    sorted; objects exposing ``to_dict`` are expanded.
    """
    if hasattr(obj, 'to_dict'):
        return normalize(obj.to_dict())
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else "{0}/{1}".format(obj.numerator, obj.denominator)
    if isinstance(obj, float):
        if math.isinf(obj):
            return "infinity" if obj > 0 else "-infinity"
        if obj.is_integer():
            return int(obj)
        return repr(obj)
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted((normalize(v) for v in obj), key=repr)
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    return str(obj)
