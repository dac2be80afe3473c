"""
.. module:: coxeter
    :platform: Unix, Windows
    :synopsis: Finite Weyl groups, Bruhat order, Lusztig's a-function and closed-form homological predictions

.. moduleauthor:: homquiver developers

"""

import logging
import re
from collections import deque
from functools import lru_cache
from . import homology
from ._utilities import export, cache_size
from .exceptions import HomquiverException

logger = logging.getLogger(__name__)

# Rank-2 types realized as dihedral groups of order 2m
DIHEDRAL_ORDERS = {'A1xA1': 2, 'B2': 4, 'G2': 6}

# (dim g, dim h) of the simple or semisimple Lie algebra of each type
LIE_DIMENSIONS = {'A1xA1': (6, 2), 'B2': (10, 2), 'G2': (14, 2)}

MAX_TYPE_A_RANK = 5

_WORD_RE = re.compile(r"s(\d+)")


def _normalize_type(name):
    text = str(name).strip().upper().replace(' ', '').replace('*', 'X').replace('+', 'X').replace('×', 'X')
    if text in ('A1XA1', 'A1A1'):
        return 'A1xA1'
    if text in ('B2', 'C2'):
        return 'B2'
    if text == 'G2':
        return 'G2'
    match = re.match(r"^A(\d+)$", text)
    if match and 1 <= int(match.group(1)) <= MAX_TYPE_A_RANK:
        return text
    raise HomquiverException("unsupported type: {0}".format(name), data=dict(type=name))


@lru_cache(maxsize=cache_size())
def rsk_shape(permutation):
    """ Shape of the Robinson-Schensted tableaux of a permutation in one-line notation.

    :param permutation: permutation values
    :type permutation: tuple
    :return: row lengths
    :rtype: tuple
    """
    rows = []
    for value in permutation:
        for row in rows:
            # Bump the smallest entry larger than the inserted value
            pos = next((k for k, x in enumerate(row) if x > value), None)
            if pos is None:
                row.append(value)
                value = None
                break
            row[pos], value = value, row[pos]
        if value is not None:
            rows.append([value])
    return tuple(len(r) for r in rows)


@export
class CoxeterGroup(object):
    """ Finite Weyl group realized as a permutation group.

    Type ``A_n`` (``n <= 5``) acts on ``n + 1`` letters, ``s_i`` swapping positions ``i`` and ``i + 1``. The rank-2
    types ``A1xA1``, ``B2`` and ``G2`` are dihedral of order ``2m`` with ``m = 2, 4, 6`` and act on the residues
    modulo ``2m`` by ``s1: k -> -k`` and ``s2: k -> 2 - k``.

    Elements are permutation tuples. Words are read as products from left to right.

    .. code-block:: python

        from homquiver import coxeter

        w = coxeter.build_weyl_group('A2')
        w.order  # 6
        w.length(w.longest_element())  # 3

    :param type_name: type descriptor such as ``A2`` or ``B2``
    :type type_name: str
    """

    def __init__(self, type_name):
        self._type = _normalize_type(type_name)
        if self._type in DIHEDRAL_ORDERS:
            m = DIHEDRAL_ORDERS[self._type]
            self._m = m
            size = 2 * m
            self._gens = (tuple((-k) % size for k in range(size)), tuple((2 - k) % size for k in range(size)))
        else:
            n = int(self._type[1:])
            self._m = None
            gens = []
            for i in range(n):
                perm = list(range(n + 1))
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                gens.append(tuple(perm))
            self._gens = tuple(gens)
        self._identity = tuple(range(len(self._gens[0])))
        self._enumerate()
        self._down = dict()
        self._covers = None

    def _enumerate(self):
        self._length = {self._identity: 0}
        self._word = {self._identity: ()}
        order = [self._identity]
        queue = deque(order)
        while queue:
            w = queue.popleft()
            for idx, s in enumerate(self._gens):
                ws = self.multiply(w, s)
                if ws not in self._length:
                    self._length[ws] = self._length[w] + 1
                    self._word[ws] = self._word[w] + (idx,)
                    order.append(ws)
                    queue.append(ws)
        self._elements = tuple(order)
        self._w0 = order[-1]
        logger.debug("Weyl group %s of order %d enumerated", self._type, len(order))

    def __repr__(self):
        return "CoxeterGroup({0})".format(self._type)

    @property
    def type(self):
        """ Normalized type descriptor. """
        return self._type

    @property
    def is_dihedral(self):
        return self._m is not None

    @property
    def rank(self):
        return len(self._gens)

    @property
    def order(self):
        return len(self._elements)

    @property
    def elements(self):
        """ Elements ordered by length (breadth-first order).

        :getter: Gets the elements
        :type: tuple
        """
        return self._elements

    @property
    def generators(self):
        """ Simple reflections ``s1, s2, ...`` as permutations. """
        return self._gens

    @property
    def generator_names(self):
        return tuple("s{0}".format(i + 1) for i in range(self.rank))

    @property
    def identity(self):
        return self._identity

    @property
    def lie_dimensions(self):
        """ ``(dim g, dim h)`` of the corresponding Lie algebra. """
        if self._type in LIE_DIMENSIONS:
            return LIE_DIMENSIONS[self._type]
        n = self.rank
        return n * n + 2 * n, n

    @property
    def num_positive_roots(self):
        if self.is_dihedral:
            return self._m
        n = self.rank
        return n * (n + 1) // 2

    def multiply(self, u, v):
        """ Product ``u v`` (apply ``v`` first). """
        return tuple(u[k] for k in v)

    def inverse(self, w):
        result = [0] * len(w)
        for k, x in enumerate(w):
            result[x] = k
        return tuple(result)

    def length(self, w):
        return self._length[self.element(w)]

    def reduced_word(self, w):
        """ A reduced word as a tuple of generator indices. """
        return self._word[self.element(w)]

    def word_string(self, w):
        """ Reduced word such as ``s1s2``; ``e`` for the identity. """
        word = self.reduced_word(w)
        return "".join("s{0}".format(i + 1) for i in word) if word else "e"

    def generator_index(self, name):
        """ Index of a simple reflection given as ``s2``, ``2`` or an index. """
        if isinstance(name, int):
            idx = name
        else:
            text = str(name).strip().lower()
            idx = int(text[1:] if text.startswith('s') else text) - 1
        if idx < 0 or idx >= self.rank:
            raise HomquiverException("Unknown simple reflection '{0}'".format(name), data=dict(type=self._type))
        return idx

    def element(self, spec):
        """ Group element from a permutation tuple, a word string such as ``s1s2`` or ``e``, or a list of generators.

        :raises HomquiverException: for unknown elements
        """
        if isinstance(spec, tuple) and spec in self._length:
            return spec
        if isinstance(spec, str):
            text = spec.strip().lower().replace('*', '').replace(' ', '')
            if text in ('', 'e', '1', 'id'):
                return self._identity
            if text == 'w0':
                return self._w0
            if _WORD_RE.sub('', text):
                raise HomquiverException("Cannot parse group element '{0}'".format(spec))
            spec = [int(i) for i in _WORD_RE.findall(text)]
            spec = ["s{0}".format(i) for i in spec]
        if isinstance(spec, (list, tuple)):
            result = self._identity
            for name in spec:
                result = self.multiply(result, self._gens[self.generator_index(name)])
            return result
        raise HomquiverException("Cannot interpret group element '{0}'".format(spec))

    def longest_element(self, parabolic=None):
        """ Longest element of the group or of the parabolic subgroup generated by ``parabolic``. """
        if parabolic is None:
            return self._w0
        members = self.parabolic_subgroup(parabolic)
        return max(members, key=lambda w: (self._length[w], w))

    def parabolic_subgroup(self, parabolic):
        """ Elements of the subgroup generated by the given simple reflections. """
        gens = [self._gens[self.generator_index(s)] for s in parabolic]
        seen = {self._identity}
        queue = deque([self._identity])
        while queue:
            w = queue.popleft()
            for s in gens:
                ws = self.multiply(w, s)
                if ws not in seen:
                    seen.add(ws)
                    queue.append(ws)
        return sorted(seen, key=lambda w: (self._length[w], w))

    def reflections(self):
        """ All reflections, the conjugates of the simple reflections. """
        result = set()
        for w in self._elements:
            winv = self.inverse(w)
            for s in self._gens:
                result.add(self.multiply(self.multiply(w, s), winv))
        return sorted(result, key=lambda w: (self._length[w], w))

    def bruhat_down_set(self, w):
        """ Elements below ``w`` in the Bruhat order, computed from subwords of a reduced word. """
        w = self.element(w)
        if w in self._down:
            return self._down[w]
        if w == self._identity:
            result = frozenset([w])
        else:
            s = self._gens[self._word[w][0]]
            shorter = self.multiply(s, w)
            below = self.bruhat_down_set(shorter)
            result = frozenset(below | set(self.multiply(s, u) for u in below))
        self._down[w] = result
        return result

    def bruhat_le(self, u, w, **kwargs):
        """ Bruhat comparison ``u <= w``.

        **Keyword Arguments:**

        * ``criterion``: ``subword``, ``rank`` (type A only) or ``auto``. *Default: auto*
        """
        u, w = self.element(u), self.element(w)
        criterion = kwargs.get('criterion', 'auto')
        if criterion == 'auto':
            criterion = 'subword' if self.is_dihedral else 'rank'
        if criterion == 'rank':
            if self.is_dihedral:
                raise HomquiverException("The rank-matrix criterion applies to type A only")
            return _rank_matrix_le(u, w)
        if criterion == 'subword':
            return u in self.bruhat_down_set(w)
        raise HomquiverException("Unknown Bruhat criterion '{0}'".format(criterion))

    def upper_covers(self, w):
        """ Elements covering ``w`` in the Bruhat order. """
        if self._covers is None:
            covers = dict((x, []) for x in self._elements)
            for x in self._elements:
                for y in self._elements:
                    if self._length[y] == self._length[x] + 1 and self.bruhat_le(x, y):
                        covers[x].append(y)
            self._covers = covers
        return list(self._covers[self.element(w)])

    def is_coideal(self, subset):
        """ Checks whether the set is closed upwards in the Bruhat order. """
        subset = set(self.element(x) for x in subset)
        return all(y in subset for x in subset for y in self.upper_covers(x))


@lru_cache(maxsize=cache_size())
def _rank_matrix_le(u, w):
    n = len(u)
    for i in range(1, n + 1):
        for j in range(n):
            cu = sum(1 for a in range(i) if u[a] >= j)
            cw = sum(1 for a in range(i) if w[a] >= j)
            if cu > cw:
                return False
    return True


@export
def build_weyl_group(type_name):
    """ Builds the Weyl group of the given type with lengths and Bruhat order.

    :param type_name: one of ``A1`` .. ``A5``, ``A1xA1``, ``B2``, ``G2``
    :type type_name: str
    :rtype: CoxeterGroup
    :raises HomquiverException: "unsupported type"
    """
    return CoxeterGroup(type_name)


@export
def coideals(group):
    """ All subsets of the group closed upwards in the Bruhat order.

    Elements are decided from the longest one downwards; an element may join only when all its upper covers have
    joined, so every coideal is produced exactly once.

    :param group: Weyl group
    :type group: CoxeterGroup
    :return: list of frozensets of elements
    :rtype: list
    """
    elements = sorted(group.elements, key=lambda w: (-group.length(w), w))
    covers = [group.upper_covers(w) for w in elements]
    result = []

    def backtrack(pos, chosen):
        if pos == len(elements):
            result.append(frozenset(chosen))
            return
        backtrack(pos + 1, chosen)
        if all(y in chosen for y in covers[pos]):
            chosen.add(elements[pos])
            backtrack(pos + 1, chosen)
            chosen.remove(elements[pos])

    backtrack(0, set())
    return sorted(result, key=lambda c: (len(c), sorted((group.length(w), w) for w in c)))


@export
def a_function(group, w):
    """ Lusztig's a-function.

    Type ``A``: ``sum((i - 1) * shape[i])`` over the Robinson-Schensted shape. Dihedral types of order ``2m``:
    0 at the identity, ``m`` at the longest element and 1 elsewhere.

    :param group: Weyl group
    :type group: CoxeterGroup
    :param w: element
    :rtype: int
    """
    w = group.element(w)
    if group.is_dihedral:
        if w == group.identity:
            return 0
        if w == group.longest_element():
            return group.num_positive_roots
        return 1
    return sum(i * part for i, part in enumerate(rsk_shape(w)))


@export
def thm777_eval(group, parabolic):
    """ Predicted (pd of the simple Verma module, global dimension, pd of the dominant simple) of a singular block.

    With ``w0J`` the longest element of the parabolic subgroup stabilizing the weight, every value is expressed
    through ``a(w0 w0J)``: the projective dimension of the simple Verma module equals it, the global dimension and
    the projective dimension of the dominant simple equal twice it.

    :param group: Weyl group
    :type group: CoxeterGroup
    :param parabolic: simple reflections generating the stabilizer
    :type parabolic: list
    :return: tuple of three integers
    :rtype: tuple
    """
    w0j = group.longest_element(parabolic)
    a = a_function(group, group.multiply(group.longest_element(), w0j))
    return a, 2 * a, 2 * a


@export
def regular_pd_simple(group, w):
    """ Projective dimension ``2 l(w0) - l(w)`` of the simple module ``L(w . 0)`` in the regular block. """
    return 2 * group.length(group.longest_element()) - group.length(w)


@export
def gldim_regular_block(group):
    """ Global dimension ``dim g - dim h`` of the regular block. """
    dim_g, dim_h = group.lie_dimensions
    return dim_g - dim_h


@export
def oinf_formulas(group, w, base_pd=None):
    """ Projective dimensions in the category of modules with generalized weight spaces.

    :param group: Weyl group
    :type group: CoxeterGroup
    :param w: element indexing the simple and the Verma module
    :param base_pd: projective dimension of a module in the finite-weight category, shifted by ``dim h``
    :type base_pd: int
    :return: dict with ``pd_simple_in_Oinf``, ``pd_verma_in_Oinf``, ``shifted_pd``, ``gl_dim_Oinf`` and
        ``min_pd_Oinf``
    :rtype: dict
    """
    dim_g, dim_h = group.lie_dimensions
    length = group.length(w)
    result = dict(pd_simple_in_Oinf=dim_g - length, pd_verma_in_Oinf=dim_h + length, gl_dim_Oinf=dim_g,
                  min_pd_Oinf=dim_h, shifted_pd=None)
    if base_pd is not None:
        if base_pd < 0:
            raise HomquiverException("Base projective dimension must be non-negative", data=dict(base_pd=base_pd))
        result['shifted_pd'] = dim_h + base_pd
    return result


@export
class CrossValidation(object):
    """ Predicted and computed (pd of the simple Verma, global dimension, pd of the dominant simple). """

    def __init__(self, predicted, computed, dominant):
        self.predicted = tuple(predicted)
        self.computed = tuple(computed)
        self.dominant = dict(dominant)

    @property
    def matches(self):
        return self.predicted == self.computed and all(v == self.predicted[2] for v in self.dominant.values())

    def to_dict(self):
        return dict(predicted=list(self.predicted), computed=list(self.computed),
                    dominant_candidates=dict(self.dominant), matches=self.matches)


@export
def cross_validate(algebra, group, parabolic, simple_verma, dominant, cap=None):
    """ Compares the closed-form predictions of :func:`thm777_eval` with the homological engine.

    :param algebra: path algebra of the block
    :type algebra: pathalg.PathAlgebra
    :param group: Weyl group
    :type group: CoxeterGroup
    :param parabolic: simple reflections of the stabilizer
    :type parabolic: list
    :param simple_verma: vertex of the simple Verma module
    :param dominant: candidate vertices of the dominant simple; each must match
    :type dominant: list
    :param cap: degree cap
    :rtype: CrossValidation
    :raises HomquiverException: "mismatch" with both values
    """
    from . import repcat
    predicted = thm777_eval(group, parabolic)
    pd_verma = homology.proj_dim(repcat.simple(algebra, simple_verma), cap)
    gl_dim = homology.global_dim(algebra, cap)
    pds = dict((str(v), homology.proj_dim(repcat.simple(algebra, v), cap)) for v in dominant)
    first = pds[str(dominant[0])] if dominant else predicted[2]
    report = CrossValidation(predicted, (pd_verma, gl_dim, first), pds)
    if not report.matches:
        raise HomquiverException("mismatch: predicted {0}, computed {1}".format(report.predicted, report.computed),
                                 data=report.to_dict())
    return report


@export
def initseg_correspondence(algebra, group, vertex_of, cap=None):
    """ Compares coideals of the group with the initial segments of the algebra of the regular block.

    :param algebra: path algebra of the regular block
    :type algebra: pathalg.PathAlgebra
    :param group: Weyl group
    :type group: CoxeterGroup
    :param vertex_of: map from group elements (words or tuples) to vertex identifiers
    :type vertex_of: dict
    :param cap: degree cap
    :return: dict with the mapped coideals, the segments and the comparison flags
    :rtype: dict
    """
    from . import repcat, serre
    mapping = dict((group.element(k), str(v)) for k, v in vertex_of.items())
    order = algebra.quiver.vertices
    images = []
    for coideal in coideals(group):
        images.append(tuple(sorted((mapping[w] for w in coideal), key=order.index)))
    segments = serre.initial_segments(algebra, cap)
    pd_rows = []
    for w, vertex in sorted(mapping.items(), key=lambda item: (group.length(item[0]), item[0])):
        computed = homology.proj_dim(repcat.simple(algebra, vertex), cap)
        pd_rows.append(dict(element=group.word_string(w), vertex=vertex, predicted=regular_pd_simple(group, w),
                            computed=computed))
    return dict(coideals=[list(c) for c in images], segments=[list(s) for s in segments],
                bijective=sorted(images) == sorted(segments) and len(set(images)) == len(images),
                pd_matches=all(r['predicted'] == r['computed'] for r in pd_rows), pd=pd_rows)
