"""
.. module:: _pathalg
    :platform: Unix, Windows
    :synopsis: Helper functions for the path algebra module (ideal saturation and normal forms)

.. moduleauthor:: homquiver developers

"""

import logging
from collections import deque, namedtuple
from fractions import Fraction
from ._linalg import SparseEchelon, sparse_axpy

# Initialize an empty __all__ for controlling imports
__all__ = []

logger = logging.getLogger(__name__)


class Path(namedtuple('Path', ['length', 'arrows', 'source', 'target'])):
    """ Path in a quiver, stored in traversal order.

    ``arrows`` holds arrow indices in the order the arrows are traversed, ``source`` and ``target`` are vertex indices.
    Tuple comparison orders paths by length first and then lexicographically by arrow sequence, which is the normal
    form order of the library.
    """
    __slots__ = ()

    @property
    def is_trivial(self):
        return self.length == 0


def trivial_path(vertex_idx):
    """ Idempotent path at the given vertex index. """
    return Path(0, (), vertex_idx, vertex_idx)


def append_arrow(path, arrow_idx, arrow):
    """ Path ``path`` followed by the arrow, or None when not composable.

    :param path: path
    :type path: Path
    :param arrow_idx: arrow index
    :param arrow: arrow as (name, source index, target index)
    """
    if path.target != arrow[1]:
        return None
    return Path(path.length + 1, path.arrows + (arrow_idx,), path.source, arrow[2])


def prepend_arrow(path, arrow_idx, arrow):
    """ The arrow followed by ``path``, or None when not composable. """
    if arrow[2] != path.source:
        return None
    return Path(path.length + 1, (arrow_idx,) + path.arrows, arrow[1], path.target)


def concatenate(first, second):
    """ Traverses ``first`` and then ``second``; None when not composable. """
    if first.target != second.source:
        return None
    return Path(first.length + second.length, first.arrows + second.arrows, first.source, second.target)


def multiply_vector_by_arrow(vector, arrow_idx, arrow, side):
    """ Multiplies a sparse path vector by an arrow on the given side ('append' or 'prepend'). """
    func = append_arrow if side == 'append' else prepend_arrow
    result = dict()
    for path, coeff in vector.items():
        new_path = func(path, arrow_idx, arrow)
        if new_path is not None:
            result[new_path] = result.get(new_path, 0) + coeff
    return {k: v for k, v in result.items() if v != 0}


def saturate(arrows, relation_vectors, cap):
    """ Closes the span of the relations under left and right arrow multiplication inside paths of length <= cap.

    Products having a term longer than ``cap`` are discarded rather than truncated, so every vector of the resulting
    span is a genuine element of the two-sided ideal.

    :param arrows: list of (name, source index, target index)
    :type arrows: list
    :param relation_vectors: relations as sparse dicts keyed by :class:`Path`
    :type relation_vectors: list
    :param cap: maximal path length
    :type cap: int
    :return: echelon basis with pivots at the largest path of each row
    :rtype: SparseEchelon
    """
    ech = SparseEchelon(pivot='last')
    queue = deque(relation_vectors)
    passes = 0
    while queue:
        vec = queue.popleft()
        if not vec or max(p.length for p in vec) > cap:
            continue
        reduced = ech.reduce(vec)
        if not reduced:
            continue
        ech.insert(reduced)
        passes += 1
        for idx, arrow in enumerate(arrows):
            for side in ('append', 'prepend'):
                prod = multiply_vector_by_arrow(reduced, idx, arrow, side)
                if prod:
                    queue.append(prod)
    logger.debug("Saturation at cap %d: %d independent ideal elements", cap, passes)
    return ech


def normal_form_levels(num_vertices, arrows, ideal, cap):
    """ Enumerates the normal-form paths level by level.

    A path is a normal form when it is not the leading path of an ideal element. Extensions of leading paths are
    leading paths, hence each level is generated from the previous one.

    :return: tuple of (list of levels, saturation length or None)
    :rtype: tuple
    """
    levels = [[trivial_path(v) for v in range(num_vertices)]]
    for length in range(1, cap + 1):
        level = []
        for path in levels[-1]:
            for idx, arrow in enumerate(arrows):
                new_path = append_arrow(path, idx, arrow)
                if new_path is not None and new_path not in ideal:
                    level.append(new_path)
        if not level:
            return levels, length
        levels.append(sorted(level))
    return levels, None


def left_regular_action(arrows, basis, index, ideal):
    """ Action of every arrow on the normal-form basis by appending the arrow and reducing.

    :return: dict arrow index => {basis index => sparse vector over basis indices}
    :rtype: dict
    """
    action = dict()
    for a_idx, arrow in enumerate(arrows):
        table = dict()
        for b_idx, path in enumerate(basis):
            new_path = append_arrow(path, a_idx, arrow)
            if new_path is None:
                continue
            reduced = ideal.reduce({new_path: Fraction(1)})
            table[b_idx] = {index[p]: c for p, c in reduced.items()}
        action[a_idx] = table
    return action


def act_by_path(action, arrow_indices, vector):
    """ Applies the arrows (in traversal order) to a sparse vector over basis indices. """
    current = dict(vector)
    for a_idx in arrow_indices:
        table = action[a_idx]
        result = dict()
        for b_idx, coeff in current.items():
            image = table.get(b_idx)
            if image:
                sparse_axpy(result, coeff, image)
        current = result
        if not current:
            break
    return current


def relations_vanish(action, basis, relation_vectors):
    """ Checks that every relation acts by zero on the normal-form space (certificate of the basis). """
    for rel in relation_vectors:
        sources = set(p.source for p in rel)
        for b_idx, path in enumerate(basis):
            if path.target not in sources:
                continue
            total = dict()
            for rel_path, coeff in rel.items():
                if rel_path.source != path.target:
                    continue
                image = act_by_path(action, rel_path.arrows, {b_idx: Fraction(1)})
                sparse_axpy(total, coeff, image)
            if total:
                return False
    return True
