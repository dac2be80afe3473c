"""
.. module:: serre
    :platform: Unix, Windows
    :synopsis: Serre subcategories generated by simples, comparison maps of Ext groups and extension fullness

.. moduleauthor:: homquiver developers

"""

import itertools
import logging
from fractions import Fraction
from . import abstract
from . import homology
from . import linalg
from . import repcat
from .homology import INFINITY
from .linalg import Matrix
from ._exchange import normalize
from ._linalg import SparseEchelon, sparse_from_dense
from ._utilities import export, parallel_map
from .exceptions import HomquiverException, UndeterminedError

logger = logging.getLogger(__name__)

FULL = 'extension full'
NOT_FULL = 'not extension full'
UNDETERMINED = 'undetermined'

CERTIFIED = 'fully certified'
UP_TO_CAP = 'certified up to cap'

__all__ = ['FULL', 'NOT_FULL', 'UNDETERMINED', 'CERTIFIED', 'UP_TO_CAP']


def _span(vectors, size):
    ech = SparseEchelon(pivot='last')
    for v in vectors:
        ech.insert(sparse_from_dense(v))
    return ech


def _dense(sparse, size):
    vec = [Fraction(0)] * size
    for k, c in sparse.items():
        vec[k] = c
    return vec


@export
class SerreSubcat(abstract.AbstractCategory):
    """ Serre subcategory generated by a set of simple modules.

    The subcategory consists of the modules whose composition factors lie in the chosen set, which are the modules
    over ``A / (AeA)^N`` where ``e`` is the sum of the idempotents of the remaining vertices and ``N`` the
    stabilization exponent of the powers of ``AeA``. Since ``AeA`` is generated by an idempotent its square equals
    itself, so the computed exponent is always 1.

    The quotient algebra is kept as a set of normal-form paths of ``A`` (those not eliminated by the ideal) with its
    own multiplication table. Objects are representations of ``A`` killed by the ideal.

    :param algebra: ambient path algebra
    :type algebra: pathalg.PathAlgebra
    :param simples: vertex indices of the generating simples
    :type simples: list, tuple
    """

    def __init__(self, algebra, simples, **kwargs):
        kwargs.setdefault('name', "Serre<{0}>".format(",".join(algebra.quiver.vertices[i] for i in sorted(simples))))
        super(SerreSubcat, self).__init__(**kwargs)
        n = algebra.quiver.num_vertices
        simples = tuple(sorted(set(int(i) for i in simples)))
        if any(i < 0 or i >= n for i in simples):
            raise HomquiverException("Simple indices must be vertex indices", data=dict(simples=simples))
        self._algebra = algebra
        self._simples = simples
        self._complement = tuple(v for v in range(n) if v not in simples)
        self._ideal, self._exponent = self._stabilized_ideal()
        size = algebra.dimension
        self._quotient_basis = tuple(k for k in range(size) if k not in self._ideal)
        self._qindex = {k: i for i, k in enumerate(self._quotient_basis)}
        logger.info("%s: ideal of dimension %d, exponent %d, quotient of dimension %d", self.name, len(self._ideal),
                    self._exponent, len(self._quotient_basis))

    def _stabilized_ideal(self):
        alg = self._algebra
        size = alg.dimension
        units = [alg.basis_element(p) for p in alg.basis]
        left = []
        for v in self._complement:
            idem = alg.idempotent(alg.quiver.vertices[v])
            left.extend(alg.multiply(u, idem) for u in units)
        generated = [alg.multiply(x, u) for x in left for u in units]
        ideal = _span(generated, size)
        power_basis = [_dense(r, size) for r in ideal.rows()]
        exponent = 1
        current = ideal
        while True:
            current_basis = [_dense(r, size) for r in current.rows()]
            nxt = _span([alg.multiply(x, y) for x in current_basis for y in power_basis], size)
            if len(nxt) == len(current):
                break
            current = nxt
            exponent += 1
        return current, exponent

    @property
    def ambient(self):
        return self._algebra

    @property
    def simples(self):
        return self._simples

    @property
    def complement(self):
        """ Vertex indices outside the subcategory.

        :getter: Gets the complement
        :type: tuple
        """
        return self._complement

    @property
    def exponent(self):
        """ Least N with ``(AeA)^N = (AeA)^(N+1)``.

        :getter: Gets the stabilization exponent
        :type: int
        """
        return self._exponent

    @property
    def ideal_dimension(self):
        return len(self._ideal)

    @property
    def dimension(self):
        return len(self._quotient_basis)

    @property
    def quotient_basis(self):
        """ Normal-form paths of the ambient algebra spanning the quotient algebra. """
        return tuple(self._algebra.basis[k] for k in self._quotient_basis)

    @property
    def simple_labels(self):
        return tuple(self._algebra.quiver.vertices[i] for i in self._simples)

    def reduce(self, element):
        """ Coordinates of the image of an ambient element in the quotient algebra. """
        reduced = self._ideal.reduce(sparse_from_dense(element))
        vec = [Fraction(0)] * self.dimension
        for k, c in reduced.items():
            vec[self._qindex[k]] = c
        return vec

    def lift(self, element):
        """ Ambient element with the given quotient coordinates. """
        vec = [Fraction(0)] * self._algebra.dimension
        for i, c in enumerate(element):
            vec[self._quotient_basis[i]] = Fraction(c)
        return vec

    def multiply(self, x, y):
        """ Product in the quotient algebra, in quotient coordinates. """
        return self.reduce(self._algebra.multiply(self.lift(x), self.lift(y)))

    def contains(self, module):
        """ Checks whether all composition factors of the module lie in the subcategory. """
        return all(module.dims[v] == 0 for v in self._complement)

    def projective(self, i):
        if i not in self._simples:
            raise HomquiverException("Vertex index {0} does not belong to the subcategory".format(i))
        key = ('projective', i)
        if key not in self._cache:
            self._cache[key] = self._make_projective(i)
        return self._cache[key]

    def _make_projective(self, i):
        alg = self._algebra
        proj = alg.projective(i)
        position = dict()
        for v, labels in enumerate(proj.labels):
            for k, p in enumerate(labels):
                position[p] = (v, k)
        basis = [[] for _ in proj.dims]
        for row in self._ideal.rows():
            parts = dict()
            for k, c in row.items():
                path = alg.basis[k]
                if path.source == i:
                    v, pos = position[path]
                    parts.setdefault(v, [Fraction(0)] * proj.dims[v])[pos] = c
            for v, vec in parts.items():
                basis[v].append(vec)
        quot, _, keeps = repcat.quotient_with_positions(proj, basis)
        labels = [[proj.labels[v][k] for k in keep] for v, keep in enumerate(keeps)]
        return repcat.ProjectiveModule(alg, i, quot.dims, quot.matrices, labels,
                                       name="Q{0}".format(alg.quiver.vertices[i]))

    def action_matrix(self, module, k):
        """ Matrix of the quotient basis element ``k`` on the whole space of a module. """
        path = self._algebra.basis[self._quotient_basis[k]]
        offsets = [sum(module.dims[:v]) for v in range(len(module.dims))]
        result = Matrix.zero(module.dimension, module.dimension).to_list()
        block = module.path_matrix(path)
        for r in range(block.nrows):
            for c in range(block.ncols):
                result[offsets[path.target] + r][offsets[path.source] + c] = block[r, c]
        return Matrix(result, module.dimension)

    def restrict_hom_check(self, mod1, mod2):
        """ Compares Hom over the quotient algebra with Hom over the ambient algebra.

        The quotient Hom is computed from the action of the quotient basis on the total spaces, without using the
        vertex grading; restriction along the quotient map is fully faithful exactly when both dimensions agree.

        :return: tuple of (quotient Hom dimension, ambient Hom dimension)
        :rtype: tuple
        """
        if not (self.contains(mod1) and self.contains(mod2)):
            raise HomquiverException("Both modules must belong to the subcategory")
        m, n = mod1.dimension, mod2.dimension
        equations = []
        for k in range(self.dimension):
            act1 = self.action_matrix(mod1, k)
            act2 = self.action_matrix(mod2, k)
            # (act2 F - F act1)[r][c] = 0 with F[r][c] at variable r * m + c
            for r in range(n):
                for c in range(m):
                    eq = dict()
                    for s in range(n):
                        if act2[r, s] != 0:
                            eq[s * m + c] = eq.get(s * m + c, 0) + act2[r, s]
                    for s in range(m):
                        if act1[s, c] != 0:
                            eq[r * m + s] = eq.get(r * m + s, 0) - act1[s, c]
                    eq = {key: val for key, val in eq.items() if val != 0}
                    if eq:
                        equations.append(eq)
        dim_quotient = len(linalg.nullspace_sparse(equations, m * n))
        dim_ambient, _ = repcat.hom_space(mod1, mod2)
        return dim_quotient, dim_ambient


@export
def serre_subcategory(algebra, simples):
    """ Serre subcategory of the module category of ``algebra`` generated by the given simples.

    :param algebra: path algebra
    :type algebra: pathalg.PathAlgebra
    :param simples: vertex identifiers of the simples
    :type simples: list, tuple, set
    :rtype: SerreSubcat
    """
    if isinstance(simples, SerreSubcat):
        return simples
    return SerreSubcat(algebra, [algebra.quiver.vertex_index(v) for v in simples])


@export
class ComparisonEntry(object):
    """ Comparison map ``Ext^d_sub(L_i, L_j) -> Ext^d(L_i, L_j)`` in one degree. """
    __slots__ = ('source', 'target', 'degree', 'dim_sub', 'dim_ambient', 'rank')

    def __init__(self, source, target, degree, dim_sub, dim_ambient, rank):
        self.source = source
        self.target = target
        self.degree = degree
        self.dim_sub = dim_sub
        self.dim_ambient = dim_ambient
        self.rank = rank

    def __repr__(self):
        return "ComparisonEntry({0}, {1}, d={2}: {3} -> {4}, rank {5})".format(
            self.source, self.target, self.degree, self.dim_sub, self.dim_ambient, self.rank)

    @property
    def injective(self):
        return self.rank == self.dim_sub

    @property
    def surjective(self):
        return self.rank == self.dim_ambient

    @property
    def is_iso(self):
        return self.injective and self.surjective

    def to_dict(self):
        return dict(source=self.source, target=self.target, degree=self.degree, dim_sub=self.dim_sub,
                    dim_ambient=self.dim_ambient, rank=self.rank, injective=self.injective,
                    surjective=self.surjective)


@export
class ComparisonReport(object):
    """ Extension-fullness report of a Serre subcategory.

    The :py:attr:`verdict` is one of ``extension full``, ``not extension full`` and ``undetermined``; the
    :py:attr:`status` tells whether the verdict covers every degree (``fully certified``) or only the degrees up
    to the cap (``certified up to cap``).
    """

    def __init__(self, simples, entries, verdict, status, **kwargs):
        self.simples = tuple(simples)
        self.entries = list(entries)
        self.verdict = verdict
        self.status = status
        self.max_degree = kwargs.get('max_degree', 0)
        self.gl_dim_ambient = kwargs.get('gl_dim_ambient')
        self.gl_dim_sub = kwargs.get('gl_dim_sub')
        self.notes = list(kwargs.get('notes', []))

    def __repr__(self):
        return "ComparisonReport({0}: {1}, {2})".format(list(self.simples), self.verdict, self.status)

    @property
    def is_full(self):
        return self.verdict == FULL

    def failing(self):
        """ Entries whose comparison map is not an isomorphism. """
        return [e for e in self.entries if not e.is_iso]

    def entry(self, source, target, degree):
        for e in self.entries:
            if (e.source, e.target, e.degree) == (str(source), str(target), degree):
                return e
        raise KeyError((source, target, degree))

    def to_dict(self):
        return dict(simples=list(self.simples), verdict=self.verdict, status=self.status,
                    max_degree=self.max_degree, gl_dim_ambient=normalize(self.gl_dim_ambient),
                    gl_dim_sub=normalize(self.gl_dim_sub), entries=[e.to_dict() for e in self.entries],
                    notes=list(self.notes))


@export
def lift_identity(res_ambient, res_sub, degree):
    """ Chain map from a projective resolution over the ambient algebra to one over the subcategory.

    Both resolutions resolve the same module; the map lifts its identity. Each component is fixed by the images of
    the top generators, which are solved for degree by degree.

    :param res_ambient: resolution by projectives of the ambient algebra
    :type res_ambient: homology.ProjResolution
    :param res_sub: resolution by projectives of the subcategory
    :type res_sub: homology.ProjResolution
    :param degree: last degree to lift
    :type degree: int
    :return: component maps in degrees ``0 .. degree``
    :rtype: list
    """
    maps = []
    for k in range(degree + 1):
        proj = res_ambient.term(k)
        target = res_sub.term(k)
        images = []
        for g in range(len(proj.summands)):
            v, pos = proj.generator(g)
            if k == 0:
                value = res_ambient.augmentation.block(v).column(pos)
                solver = res_sub.augmentation
            else:
                value = maps[k - 1].apply(v, res_ambient.differential(k).block(v).column(pos))
                solver = res_sub.differential(k)
            sol = linalg.solve(solver.block(v), value)
            if sol is None:
                raise HomquiverException("The identity does not lift to a chain map", data=dict(degree=k))
            images.append(sol)
        maps.append(repcat.projective_map(proj, target, images))
    return maps


def _comparison_rank(res_ambient, res_sub, chain, module, d):
    delta_sub = homology.coboundary(res_sub, module, d)
    cocycles = linalg.nullspace(delta_sub)
    boundaries = []
    if d >= 1:
        boundaries = linalg.column_space(homology.coboundary(res_ambient, module, d - 1))
    pullback = homology.pullback_matrix(chain[d], module)
    images = [pullback.apply(z) for z in cocycles]
    rank = linalg.span_dimension(boundaries + images) - len(boundaries)
    sub_boundaries = homology.coboundary(res_sub, module, d - 1).rank() if d >= 1 else 0
    dim_sub = len(cocycles) - sub_boundaries
    dim_ambient = homology.ext_from_resolution(res_ambient, module, d)
    return dim_sub, dim_ambient, rank


def _compare_row(item):
    sub, i, max_degree = item
    alg = sub.ambient
    module = sub.simple(i)
    res_ambient = homology.minimal_resolution(module, cap=max_degree + 1, category=alg, periodicity=False)
    res_sub = homology.minimal_resolution(module, cap=max_degree + 1, category=sub, periodicity=False)
    chain = lift_identity(res_ambient, res_sub, max_degree)
    entries = []
    for j in sub.simples:
        target = sub.simple(j)
        for d in range(max_degree + 1):
            dim_sub, dim_ambient, rank = _comparison_rank(res_ambient, res_sub, chain, target, d)
            entries.append(ComparisonEntry(alg.quiver.vertices[i], alg.quiver.vertices[j], d, dim_sub, dim_ambient,
                                           rank))
    return entries


@export
def comparison_map(algebra, simples, mod1, mod2, d, **kwargs):
    """ Rank of the comparison map ``Ext^d_sub(M, N) -> Ext^d(M, N)`` of a Serre subcategory.

    A minimal resolution of M over the subcategory and one over the ambient algebra are connected by a lift of the
    identity of M; the induced map on the cohomology of the Hom-complexes is the comparison map.

    :param algebra: ambient path algebra
    :type algebra: pathalg.PathAlgebra
    :param simples: vertex identifiers of the generating simples, or a :class:`SerreSubcat`
    :param mod1: first argument M, an object of the subcategory
    :type mod1: repcat.Representation
    :param mod2: second argument N, an object of the subcategory
    :type mod2: repcat.Representation
    :param d: degree
    :type d: int
    :rtype: ComparisonEntry
    """
    sub = serre_subcategory(algebra, simples)
    if not (sub.contains(mod1) and sub.contains(mod2)):
        raise HomquiverException("Both modules must belong to the subcategory", data=dict(simples=sub.simple_labels))
    res_ambient = homology.minimal_resolution(mod1, cap=d + 1, category=algebra, periodicity=False)
    res_sub = homology.minimal_resolution(mod1, cap=d + 1, category=sub, periodicity=False)
    chain = lift_identity(res_ambient, res_sub, d)
    dim_sub, dim_ambient, rank = _comparison_rank(res_ambient, res_sub, chain, mod2, d)
    return ComparisonEntry(mod1.name, mod2.name, d, dim_sub, dim_ambient, rank)


def _decided_dim(func):
    try:
        return func()
    except UndeterminedError:
        return None


def _sub_global_dim(sub, cap):
    result = 0
    for res in homology.simple_resolutions(sub, cap):
        if res.status == homology.TRUNCATED:
            return None
        result = max(result, res.proj_dim())
    return result


@export
def extension_fullness(algebra, simples, cap=None, **kwargs):
    """ Decides whether the Serre subcategory generated by ``simples`` is extension full.

    When both global dimensions are finite, the comparison maps on all pairs of simples in degrees up to the larger
    of them decide the question. Otherwise degrees up to ``cap`` are checked: a non-isomorphism is conclusive, and a
    certified infinite global dimension of the subcategory above a finite ambient one proves non-fullness.

    **Keyword Arguments:**

    * ``num_procs``: number of worker processes for the rows of the comparison

    :param algebra: ambient path algebra
    :type algebra: pathalg.PathAlgebra
    :param simples: vertex identifiers, or a :class:`SerreSubcat`
    :param cap: degree cap (default: :func:`homology.default_cap`)
    :type cap: int
    :rtype: ComparisonReport
    """
    sub = serre_subcategory(algebra, simples)
    labels = sub.simple_labels
    if not sub.simples:
        return ComparisonReport(labels, [], FULL, CERTIFIED, notes=["zero subcategory"])
    if cap is None:
        cap = homology.default_cap(algebra)
    gd_ambient = _decided_dim(lambda: homology.global_dim(algebra, cap))
    gd_sub = _sub_global_dim(sub, cap)
    finite = [g is not None and g != INFINITY for g in (gd_ambient, gd_sub)]
    if all(finite):
        max_degree, status = max(gd_ambient, gd_sub), CERTIFIED
    else:
        max_degree, status = cap, UP_TO_CAP
    items = [(sub, i, max_degree) for i in sub.simples]
    entries = [e for row in parallel_map(_compare_row, items, kwargs.get('num_procs')) for e in row]
    notes = []
    failing = [e for e in entries if not e.is_iso]
    if failing:
        verdict, status = NOT_FULL, CERTIFIED
        first = failing[0]
        notes.append("comparison map fails for ({0}, {1}) in degree {2}".format(first.source, first.target,
                                                                                first.degree))
    elif status == CERTIFIED:
        verdict = FULL
    elif gd_sub == INFINITY and finite[0]:
        verdict, status = NOT_FULL, CERTIFIED
        notes.append("subcategory has certified infinite global dimension above {0}".format(gd_ambient))
    else:
        verdict = UNDETERMINED
    logger.info("%s: %s (%s)", sub.name, verdict, status)
    return ComparisonReport(labels, entries, verdict, status, max_degree=max_degree, gl_dim_ambient=gd_ambient,
                            gl_dim_sub=gd_sub, notes=notes)


@export
def initial_segments(algebra, cap=None):
    """ Sets of simples closed under the downward condition defining initial segments.

    A set T is an initial segment when for every ``L`` in T and every simple ``L'`` with
    ``pd L' = pd L - 1`` and ``Ext^1(L, L') != 0`` also ``L'`` lies in T. Segments are listed by size and then
    lexicographically by vertex position.

    :param algebra: path algebra of finite global dimension
    :type algebra: pathalg.PathAlgebra
    :param cap: degree cap (default: :func:`homology.default_cap`)
    :return: list of tuples of vertex identifiers
    :rtype: list
    :raises HomquiverException: "infinite global dimension"
    """
    resolutions = homology.simple_resolutions(algebra, cap)
    pds = [res.proj_dim() for res in resolutions]
    if any(p == INFINITY for p in pds):
        raise HomquiverException("infinite global dimension", data=dict(pd=[str(p) for p in pds]))
    n = algebra.quiver.num_vertices
    simples = [algebra.simple(j) for j in range(n)]
    ext1 = [[homology.ext_from_resolution(res, simples[j], 1) for j in range(n)] for res in resolutions]
    required = [set(j for j in range(n) if pds[j] == pds[i] - 1 and ext1[i][j] != 0) for i in range(n)]
    segments = []
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            chosen = set(subset)
            if all(required[i] <= chosen for i in chosen):
                segments.append(tuple(algebra.quiver.vertices[i] for i in subset))
    return segments


@export
class GuichardetReport(object):
    """ Extension-fullness reports of all initial segments.

    :py:attr:`verdict` is True when every segment is certified extension full, False when one is certified not
    to be, and None otherwise.
    """

    def __init__(self, segments, reports):
        self.segments = list(segments)
        self.reports = list(reports)
        verdicts = [r.verdict for r in self.reports]
        if any(v == NOT_FULL for v in verdicts):
            self.verdict = False
        elif all(v == FULL for v in verdicts):
            self.verdict = True
        else:
            self.verdict = None

    def failing_segments(self):
        return [s for s, r in zip(self.segments, self.reports) if r.verdict == NOT_FULL]

    def to_dict(self):
        return dict(verdict=self.verdict, segments=[list(s) for s in self.segments],
                    reports=[r.to_dict() for r in self.reports],
                    failing=[list(s) for s in self.failing_segments()])


def _fullness_item(item):
    algebra, segment, cap = item
    return extension_fullness(algebra, segment, cap)


@export
def guichardet(algebra, cap=None, **kwargs):
    """ Checks whether every initial segment is extension full.

    Segments are independent and may be checked by a process pool.

    **Keyword Arguments:**

    * ``num_procs``: number of worker processes. *Default: HOMQUIVER_PROCS or 1*

    :param algebra: path algebra of finite global dimension
    :type algebra: pathalg.PathAlgebra
    :param cap: degree cap (default: :func:`homology.default_cap`)
    :rtype: GuichardetReport
    """
    segments = initial_segments(algebra, cap)
    items = [(algebra, seg, cap) for seg in segments]
    reports = parallel_map(_fullness_item, items, kwargs.get('num_procs'))
    return GuichardetReport(segments, reports)
