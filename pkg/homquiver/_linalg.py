"""
.. module:: _linalg
    :platform: Unix, Windows
    :synopsis: Helper functions and classes for the exact linear algebra module

.. moduleauthor:: homquiver developers

"""

from fractions import Fraction

# Initialize an empty __all__ for controlling imports
__all__ = []


def sparse_from_dense(row):
    """ Converts a dense row into a sparse dict keeping the nonzero entries only.

    :param row: dense row
    :type row: list, tuple
    :return: sparse row in *column => value* format
    :rtype: dict
    """
    return {idx: Fraction(val) for idx, val in enumerate(row) if val != 0}


def sparse_axpy(target, coeff, source):
    """ In-place update ``target += coeff * source`` on sparse dict vectors; zero entries are dropped.

    :param target: vector to be updated
    :type target: dict
    :param coeff: multiplier
    :param source: vector to be added
    :type source: dict
    """
    for key, val in source.items():
        new_val = target.get(key, 0) + coeff * val
        if new_val == 0:
            target.pop(key, None)
        else:
            target[key] = new_val


class SparseEchelon(object):
    """ Incrementally maintained, fully reduced row echelon basis of sparse rational vectors.

    Vector keys may be any totally ordered hashable objects (column indices, path keys, etc.). The pivot of a row is
    its smallest key when ``pivot='first'`` and its largest key when ``pivot='last'``. Every stored row is normalized
    to have coefficient 1 at its pivot and zero at every other pivot, hence a single pass reduces a vector.

    Keyword Arguments:
        * ``pivot``: pivot selection rule, ``first`` or ``last``. *Default: first*
    """

    def __init__(self, **kwargs):
        pivot = kwargs.get('pivot', 'first')
        if pivot not in ('first', 'last'):
            raise ValueError("Pivot rule must be 'first' or 'last'")
        self._select = min if pivot == 'first' else max
        self._rows = dict()  # pivot key => normalized row

    def __len__(self):
        return len(self._rows)

    def __contains__(self, key):
        return key in self._rows

    @property
    def pivots(self):
        """ Pivot keys in ascending order.

        :getter: Gets the sorted pivot list
        :type: list
        """
        return sorted(self._rows)

    def row(self, key):
        """ Returns a copy of the row with the given pivot. """
        return dict(self._rows[key])

    def rows(self):
        """ Returns copies of the rows sorted by pivot. """
        return [dict(self._rows[k]) for k in self.pivots]

    def reduce(self, vector):
        """ Reduces the input vector against the stored rows.

        :param vector: sparse vector
        :type vector: dict
        :return: reduced copy of the vector (zero at every pivot)
        :rtype: dict
        """
        result = {k: Fraction(v) for k, v in vector.items() if v != 0}
        for key in [k for k in result if k in self._rows]:
            coeff = result.get(key, 0)
            if coeff != 0:
                sparse_axpy(result, -coeff, self._rows[key])
        return result

    def insert(self, vector):
        """ Adds the vector to the span.

        :param vector: sparse vector
        :type vector: dict
        :return: True if the span grew, False if the vector was already in the span
        :rtype: bool
        """
        reduced = self.reduce(vector)
        if not reduced:
            return False
        pivot = self._select(reduced)
        inv = 1 / reduced[pivot]
        reduced = {k: v * inv for k, v in reduced.items()}
        # Keep the basis fully reduced
        for row in self._rows.values():
            coeff = row.get(pivot, 0)
            if coeff != 0:
                sparse_axpy(row, -coeff, reduced)
        self._rows[pivot] = reduced
        return True

    def contains_vector(self, vector):
        """ Checks span membership. """
        return not self.reduce(vector)
