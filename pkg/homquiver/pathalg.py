"""
.. module:: pathalg
    :platform: Unix, Windows
    :synopsis: Quivers, relations and finite-dimensional path algebras with normal-form bases

.. moduleauthor:: homquiver developers

"""

import logging
from collections import namedtuple
from fractions import Fraction
from . import abstract
from . import _pathalg
from ._pathalg import Path
from ._linalg import sparse_axpy
from ._utilities import export
from .exceptions import HomquiverException

logger = logging.getLogger(__name__)

#: Products are read right to left: ``x * y`` traverses ``y`` first, then ``x``
RIGHT_TO_LEFT = 'right-to-left'
#: Products are read left to right: ``x * y`` traverses ``x`` first, then ``y``
LEFT_TO_RIGHT = 'left-to-right'
CONVENTIONS = (RIGHT_TO_LEFT, LEFT_TO_RIGHT)

#: Default maximal path length for the ideal saturation
DEFAULT_PATH_CAP = 16

Arrow = namedtuple('Arrow', ['name', 'source', 'target'])

__all__ = ['Path', 'Arrow', 'RIGHT_TO_LEFT', 'LEFT_TO_RIGHT', 'CONVENTIONS', 'DEFAULT_PATH_CAP']


@export
class Quiver(object):
    """ Finite quiver with named vertices and arrows.

    Vertex identifiers are stored as strings. Arrows are given as ``(name, source, target)`` triples and are kept in
    declaration order, which fixes the lexicographic order of paths.

    .. code-block:: python

        from homquiver import pathalg

        q = pathalg.Quiver(['1', '2'], [('a', '1', '2'), ('b', '2', '1')])
        q.vertex_index('2')  # 1

    :param vertices: vertex identifiers
    :type vertices: list, tuple
    :param arrows: arrows as (name, source, target)
    :type arrows: list, tuple
    """
    __slots__ = ('_vertices', '_arrows', '_vindex', '_aindex')

    def __init__(self, vertices, arrows=()):
        self._vertices = tuple(str(v) for v in vertices)
        if len(set(self._vertices)) != len(self._vertices):
            raise HomquiverException("Vertex identifiers must be distinct", data=dict(vertices=self._vertices))
        self._vindex = {v: i for i, v in enumerate(self._vertices)}
        arr = []
        for arrow in arrows:
            try:
                name, src, tgt = arrow
            except (TypeError, ValueError):
                raise HomquiverException("Arrows must be given as (name, source, target)", data=dict(arrow=arrow))
            name, src, tgt = str(name), str(src), str(tgt)
            for v in (src, tgt):
                if v not in self._vindex:
                    raise HomquiverException("Arrow '{0}' uses undeclared vertex '{1}'".format(name, v),
                                             data=dict(arrow=name, vertex=v))
            arr.append(Arrow(name, src, tgt))
        self._arrows = tuple(arr)
        self._aindex = {a.name: i for i, a in enumerate(self._arrows)}
        if len(self._aindex) != len(self._arrows):
            raise HomquiverException("Arrow identifiers must be distinct", data=dict(arrows=self.arrow_names))

    def __eq__(self, other):
        return isinstance(other, Quiver) and self._vertices == other._vertices and self._arrows == other._arrows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._vertices, self._arrows))

    def __repr__(self):
        return "Quiver(vertices={0}, arrows={1})".format(list(self._vertices), [tuple(a) for a in self._arrows])

    @property
    def vertices(self):
        """ Vertex identifiers in declaration order.

        :getter: Gets the vertices
        :type: tuple
        """
        return self._vertices

    @property
    def arrows(self):
        """ Arrows in declaration order.

        :getter: Gets the arrows
        :type: tuple
        """
        return self._arrows

    @property
    def arrow_names(self):
        return tuple(a.name for a in self._arrows)

    @property
    def num_vertices(self):
        return len(self._vertices)

    def vertex_index(self, vertex):
        """ Index of the vertex with the given identifier.

        :param vertex: vertex identifier (converted to string)
        :return: vertex index
        :rtype: int
        """
        try:
            return self._vindex[str(vertex)]
        except KeyError:
            raise HomquiverException("Unknown vertex '{0}'".format(vertex), data=dict(vertex=vertex))

    def arrow_index(self, name):
        """ Index of the arrow with the given name. """
        try:
            return self._aindex[str(name)]
        except KeyError:
            raise HomquiverException("Unknown arrow '{0}'".format(name), data=dict(arrow=name))

    def indexed_arrows(self):
        """ Arrows as (name, source index, target index) triples. """
        return [(a.name, self._vindex[a.source], self._vindex[a.target]) for a in self._arrows]

    def arrow_count_matrix(self):
        """ Matrix whose entry (i, j) counts the arrows from vertex i to vertex j.

        :rtype: list
        """
        n = self.num_vertices
        counts = [[0 for _ in range(n)] for _ in range(n)]
        for _, s, t in self.indexed_arrows():
            counts[s][t] += 1
        return counts

    def make_path(self, arrow_names):
        """ Path traversing the named arrows in the given order.

        :param arrow_names: arrow names in traversal order
        :type arrow_names: list, tuple
        :return: path
        :rtype: Path
        :raises HomquiverException: "malformed relation" when the arrows are not composable
        """
        names = list(arrow_names)
        if not names:
            raise HomquiverException("malformed relation: empty path")
        indexed = self.indexed_arrows()
        first = self.arrow_index(names[0])
        path = Path(1, (first,), indexed[first][1], indexed[first][2])
        for name in names[1:]:
            idx = self.arrow_index(name)
            new_path = _pathalg.append_arrow(path, idx, indexed[idx])
            if new_path is None:
                raise HomquiverException("malformed relation: arrows {0} are not composable".format(names),
                                         data=dict(path=names))
            path = new_path
        return path


@export
class Relation(object):
    """ Relation ``lhs = rhs`` between rational combinations of parallel paths.

    Both sides are dicts mapping arrow-name tuples, written in traversal order, to coefficients. Use
    :py:meth:`from_words` to enter products in a composition convention.

    :param lhs: left-hand side
    :type lhs: dict
    :param rhs: right-hand side (empty for zero)
    :type rhs: dict
    """
    __slots__ = ('_lhs', '_rhs')

    def __init__(self, lhs, rhs=None):
        self._lhs = self._normalize(lhs)
        self._rhs = self._normalize(rhs if rhs is not None else dict())

    @staticmethod
    def _normalize(side):
        result = dict()
        for word, coeff in dict(side).items():
            key = tuple(str(w) for w in word)
            result[key] = result.get(key, 0) + Fraction(coeff)
        return {k: v for k, v in result.items() if v != 0}

    @classmethod
    def from_words(cls, lhs, rhs=(), convention=RIGHT_TO_LEFT):
        """ Builds a relation from written products.

        Each side is a list of ``(coefficient, word)`` pairs where ``word`` lists arrow names as written. Under the
        right-to-left convention the written word ``a*b`` traverses ``b`` first.

        :param lhs: left-hand side terms
        :type lhs: list
        :param rhs: right-hand side terms
        :type rhs: list
        :param convention: composition convention
        :type convention: str
        :return: relation
        :rtype: Relation
        """
        if convention not in CONVENTIONS:
            raise HomquiverException("Unknown composition convention '{0}'".format(convention))

        def convert(terms):
            side = dict()
            for coeff, word in terms:
                word = tuple(word)
                if convention == RIGHT_TO_LEFT:
                    word = tuple(reversed(word))
                side[word] = side.get(word, 0) + Fraction(coeff)
            return side

        return cls(convert(lhs), convert(rhs))

    @property
    def lhs(self):
        return dict(self._lhs)

    @property
    def rhs(self):
        return dict(self._rhs)

    def __eq__(self, other):
        return isinstance(other, Relation) and self._lhs == other._lhs and self._rhs == other._rhs

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((tuple(sorted(self._lhs.items())), tuple(sorted(self._rhs.items()))))

    def __repr__(self):
        return "Relation({0}, {1})".format(self._lhs, self._rhs)

    def terms(self):
        """ The relation as a single combination ``lhs - rhs``.

        :rtype: dict
        """
        result = dict(self._lhs)
        sparse_axpy(result, -1, self._rhs)
        return result

    def vector(self, quiver):
        """ Validates the relation against the quiver and returns ``lhs - rhs`` keyed by :class:`Path`.

        :param quiver: quiver
        :type quiver: Quiver
        :return: sparse vector
        :rtype: dict
        :raises HomquiverException: "malformed relation" for non-composable or non-parallel terms
        """
        words = list(self._lhs) + list(self._rhs)
        if not words:
            raise HomquiverException("malformed relation: both sides are empty")
        paths = dict()
        for word in words:
            if not word:
                raise HomquiverException("malformed relation: trivial paths are not allowed in relations")
            try:
                paths[word] = quiver.make_path(word)
            except HomquiverException as e:
                if "malformed relation" in str(e):
                    raise
                raise HomquiverException("malformed relation: unknown arrow in {0}".format(list(word)), data=e.data)
        endpoints = set((p.source, p.target) for p in paths.values())
        if len(endpoints) > 1:
            raise HomquiverException("malformed relation: terms are not parallel",
                                     data=dict(words=[list(w) for w in words]))
        result = dict()
        sparse_axpy(result, 1, {paths[w]: c for w, c in self._lhs.items()})
        sparse_axpy(result, -1, {paths[w]: c for w, c in self._rhs.items()})
        return result


@export
class PathAlgebra(abstract.AbstractCategory):
    """ Finite-dimensional quotient of the path algebra of a quiver by a relation ideal.

    Instances are created by :func:`build_path_algebra`. Elements are lists of rationals in the coordinates of
    :py:attr:`basis`, which holds the normal-form paths ordered by length and then by arrow sequence.

    This class provides the following properties:

    * :py:attr:`quiver`
    * :py:attr:`relations`
    * :py:attr:`convention`
    * :py:attr:`basis`
    * :py:attr:`saturation_length`
    * :py:attr:`dimension`
    """

    def __init__(self, quiver, relations, convention, basis, saturation_length, action, **kwargs):
        super(PathAlgebra, self).__init__(**kwargs)
        self._quiver = quiver
        self._relations = tuple(relations)
        self._convention = convention
        self._basis = tuple(basis)
        self._index = {p: i for i, p in enumerate(self._basis)}
        self._saturation_length = saturation_length
        self._arrows = quiver.indexed_arrows()
        self._action = action  # arrow index => {basis index => image}
        self._mult = None

    @property
    def ambient(self):
        return self

    @property
    def quiver(self):
        """ Underlying quiver.

        :getter: Gets the quiver
        :type: Quiver
        """
        return self._quiver

    @property
    def relations(self):
        """ Defining relations.

        :getter: Gets the relations
        :type: tuple
        """
        return self._relations

    @property
    def convention(self):
        """ Composition convention used by :py:meth:`multiply` and :py:meth:`path_string`.

        :getter: Gets the convention
        :type: str
        """
        return self._convention

    @property
    def basis(self):
        """ Normal-form paths.

        :getter: Gets the basis
        :type: tuple
        """
        return self._basis

    @property
    def saturation_length(self):
        """ Smallest length without nonzero normal forms.

        :getter: Gets the saturation length
        :type: int
        """
        return self._saturation_length

    @property
    def dimension(self):
        return len(self._basis)

    @property
    def simples(self):
        return tuple(range(self._quiver.num_vertices))

    @property
    def vertices(self):
        return self._quiver.vertices

    @property
    def mult(self):
        """ Multiplication table mapping pairs of basis indices to sparse combinations of basis indices.

        :getter: Gets the table (computed on first access)
        :type: dict
        """
        if self._mult is None:
            table = dict()
            for i in range(self.dimension):
                for j in range(self.dimension):
                    prod = self._basis_product(i, j)
                    if prod:
                        table[(i, j)] = prod
            self._mult = table
        return self._mult

    def index(self, path):
        """ Basis index of a normal-form path. """
        try:
            return self._index[path]
        except KeyError:
            raise HomquiverException("Path is not a normal form", data=dict(path=self.path_string(path)))

    def reduce(self, vector):
        """ Reduces a combination of arbitrary paths to basis coordinates.

        :param vector: sparse vector keyed by :class:`Path`
        :type vector: dict
        :return: sparse vector keyed by basis index
        :rtype: dict
        """
        result = dict()
        for path, coeff in vector.items():
            # Paths are reduced arrow by arrow through the regular action, whatever their length
            start = {self._index[_pathalg.trivial_path(path.source)]: Fraction(1)}
            sparse_axpy(result, Fraction(coeff), _pathalg.act_by_path(self._action, path.arrows, start))
        return result

    def act(self, arrow_indices, vector):
        """ Applies arrows (traversal order) to basis coordinates; the result is the product extending the paths. """
        return _pathalg.act_by_path(self._action, arrow_indices, vector)

    def _basis_product(self, i, j):
        first, second = (j, i) if self._convention == RIGHT_TO_LEFT else (i, j)
        # Traverse basis[first], then basis[second]
        p, q = self._basis[first], self._basis[second]
        if p.target != q.source:
            return dict()
        return _pathalg.act_by_path(self._action, q.arrows, {first: Fraction(1)})

    def multiply(self, x, y):
        """ Product of two elements given in basis coordinates.

        :param x: first factor
        :type x: list, tuple
        :param y: second factor
        :type y: list, tuple
        :return: product in basis coordinates
        :rtype: list
        """
        if len(x) != self.dimension or len(y) != self.dimension:
            raise ValueError("Elements must have {0} coordinates".format(self.dimension))
        result = dict()
        table = self.mult
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                prod = table.get((i, j))
                if prod:
                    sparse_axpy(result, Fraction(xi) * Fraction(yj), prod)
        return [result.get(k, Fraction(0)) for k in range(self.dimension)]

    def element(self, terms):
        """ Element with the given coefficients on paths.

        :param terms: dict mapping :class:`Path` (or arrow-name tuples in traversal order) to coefficients
        :type terms: dict
        :return: basis coordinates
        :rtype: list
        """
        vector = dict()
        for key, coeff in terms.items():
            if not isinstance(key, Path):
                key = self._quiver.make_path(key) if key else None
            if key is None:
                raise HomquiverException("Use idempotent() for trivial paths")
            vector[key] = vector.get(key, 0) + Fraction(coeff)
        reduced = self.reduce(vector)
        return [reduced.get(k, Fraction(0)) for k in range(self.dimension)]

    def basis_element(self, path):
        """ Coordinates of a normal-form path. """
        vec = [Fraction(0)] * self.dimension
        vec[self.index(path)] = Fraction(1)
        return vec

    def idempotent(self, vertex):
        """ Vertex idempotent as an element. """
        return self.basis_element(_pathalg.trivial_path(self._quiver.vertex_index(vertex)))

    def unit(self):
        """ Identity element, the sum of the vertex idempotents. """
        vec = [Fraction(0)] * self.dimension
        for v in range(self._quiver.num_vertices):
            vec[self._index[_pathalg.trivial_path(v)]] = Fraction(1)
        return vec

    def arrow_element(self, name):
        """ The arrow as an element. """
        return self.element({(name,): 1})

    def word_element(self, word):
        """ Element of a written product, e.g. ``['a', 'b']`` for ``a*b`` in the algebra's convention. """
        word = list(word)
        if self._convention == RIGHT_TO_LEFT:
            word.reverse()
        return self.element({tuple(word): 1})

    def path_string(self, path):
        """ Renders a path in the algebra's convention, e.g. ``a*b`` or ``e1`` for idempotents. """
        if path.length == 0:
            return "e{0}".format(self._quiver.vertices[path.source])
        names = [self._arrows[a][0] for a in path.arrows]
        if self._convention == RIGHT_TO_LEFT:
            names.reverse()
        return "*".join(names)

    def is_associative(self):
        """ Exhaustive associativity check on all basis triples.

        :rtype: bool
        """
        table = self.mult
        n = self.dimension
        for i in range(n):
            for j in range(n):
                left = table.get((i, j), dict())
                for k in range(n):
                    lhs = dict()
                    for m, c in left.items():
                        sparse_axpy(lhs, c, table.get((m, k), dict()))
                    rhs = dict()
                    for m, c in table.get((j, k), dict()).items():
                        sparse_axpy(rhs, c, table.get((i, m), dict()))
                    if lhs != rhs:
                        return False
        return True

    def relation_vectors(self):
        """ Relations as sparse vectors ``lhs - rhs`` keyed by :class:`Path` (validated). """
        key = 'relation_vectors'
        if key not in self._cache:
            self._cache[key] = [r.vector(self._quiver) for r in self._relations]
        return self._cache[key]

    def cartan_matrix(self):
        """ Matrix whose entry (i, j) is the dimension of the projective at i in vertex j.

        :rtype: list
        """
        n = self._quiver.num_vertices
        result = [[0 for _ in range(n)] for _ in range(n)]
        for p in self._basis:
            result[p.source][p.target] += 1
        return result

    def paths_from(self, vertex_idx):
        """ Normal-form paths starting at the vertex index, grouped by target index.

        :rtype: list
        """
        groups = [[] for _ in range(self._quiver.num_vertices)]
        for p in self._basis:
            if p.source == vertex_idx:
                groups[p.target].append(p)
        return groups

    def projective(self, i):
        key = ('projective', i)
        if key not in self._cache:
            from . import repcat
            self._cache[key] = repcat.ProjectiveModule.from_algebra(self, i)
        return self._cache[key]


@export
def build_path_algebra(quiver, relations, convention=RIGHT_TO_LEFT, cap=DEFAULT_PATH_CAP, **kwargs):
    """ Builds the quotient of the path algebra of ``quiver`` by the ideal generated by ``relations``.

    The span of the relations is closed under left and right multiplication by arrows inside paths of length at most
    ``c`` for increasing ``c``. As soon as a closure has no normal form of some length ``L <= c`` the normal forms are
    certified by checking that every relation acts by zero on their span.

    .. code-block:: python

        from homquiver import pathalg

        q = pathalg.Quiver(['1', '2'], [('a', '1', '2'), ('b', '2', '1')])
        rel = pathalg.Relation.from_words([(1, ['a', 'b'])])
        alg = pathalg.build_path_algebra(q, [rel])
        alg.dimension  # 5

    :param quiver: quiver
    :type quiver: Quiver
    :param relations: relations
    :type relations: list
    :param convention: composition convention
    :type convention: str
    :param cap: maximal path length
    :type cap: int
    :return: path algebra
    :rtype: PathAlgebra
    :raises HomquiverException: "not finite-dimensional within cap" or "malformed relation"
    """
    if convention not in CONVENTIONS:
        raise HomquiverException("Unknown composition convention '{0}'".format(convention))
    cap = int(cap)
    if cap < 1:
        raise HomquiverException("Path length cap must be at least 1", data=dict(cap=cap))
    relations = list(relations)
    vectors = [r.vector(quiver) for r in relations]
    vectors = [v for v in vectors if v]
    arrows = quiver.indexed_arrows()
    start = max([1] + [p.length for v in vectors for p in v])
    for c in range(start, cap + 1):
        ideal = _pathalg.saturate(arrows, vectors, c)
        levels, length = _pathalg.normal_form_levels(quiver.num_vertices, arrows, ideal, c)
        if length is None:
            continue
        basis = [p for level in levels for p in level]
        index = {p: i for i, p in enumerate(basis)}
        action = _pathalg.left_regular_action(arrows, basis, index, ideal)
        if not _pathalg.relations_vanish(action, basis, vectors):
            logger.debug("Normal forms at cap %d are not certified, enlarging", c)
            continue
        logger.info("Path algebra of dimension %d saturated at length %d (cap %d)", len(basis), length, c)
        return PathAlgebra(quiver, relations, convention, basis, length, action, **kwargs)
    raise HomquiverException("not finite-dimensional within cap", data=dict(cap=cap))


@export
def multiply(algebra, x, y):
    """ Product of two elements of the path algebra in basis coordinates.

    :param algebra: path algebra
    :type algebra: PathAlgebra
    :param x: first factor
    :param y: second factor
    :return: product
    :rtype: list
    """
    return algebra.multiply(x, y)


@export
def indecomposable_projective(algebra, vertex):
    """ Projective module spanned by the normal-form paths starting at ``vertex``.

    :param algebra: path algebra
    :type algebra: PathAlgebra
    :param vertex: vertex identifier
    :return: projective module with path labels
    :rtype: repcat.ProjectiveModule
    """
    return algebra.projective(algebra.quiver.vertex_index(vertex))
