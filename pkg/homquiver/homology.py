"""
.. module:: homology
    :platform: Unix, Windows
    :synopsis: Minimal projective resolutions, Ext dimensions, projective and global dimensions

.. moduleauthor:: homquiver developers

"""

import logging
from . import linalg
from . import repcat
from .linalg import Matrix
from ._exchange import normalize
from ._linalg import sparse_from_dense
from ._utilities import export, env_int, parallel_map
from .exceptions import HomquiverException, UndeterminedError

logger = logging.getLogger(__name__)

#: Projective dimension of a module with a certified infinite resolution
INFINITY = float('inf')

FINITE = 'finite'
TRUNCATED = 'truncated_at_cap'
PERIODIC = 'certified_infinite_periodic'

__all__ = ['INFINITY', 'FINITE', 'TRUNCATED', 'PERIODIC']


@export
def default_cap(category):
    """ Default degree cap: ``HOMQUIVER_CAP`` when set, else twice the dimension of the ambient algebra.

    :param category: path algebra or Serre subcategory
    :rtype: int
    """
    cap = env_int('HOMQUIVER_CAP', None)
    if cap is None:
        cap = 2 * category.ambient.dimension
    return cap


@export
class ProjResolution(object):
    """ Minimal projective resolution of a module, possibly truncated.

    ``terms[d]`` is the projective cover of the syzygy ``syzygies[d]`` (``syzygies[0]`` is the module itself),
    ``augmentation`` maps ``terms[0]`` onto the module and ``differentials[d - 1]`` maps ``terms[d]`` to
    ``terms[d - 1]``.

    The :py:attr:`status` is one of ``finite``, ``truncated_at_cap`` and ``certified_infinite_periodic``. In the
    periodic case :py:attr:`period` is ``(start, period)`` such that the syzygy in degree ``start + period`` is
    isomorphic to the one in degree ``start``; two terms beyond the repeating syzygy are kept.
    """

    def __init__(self, module, category, cap):
        self._module = module
        self._category = category
        self._cap = cap
        self._terms = []
        self._differentials = []
        self._augmentation = None
        self._syzygies = [module]
        self._status = None
        self._period = None

    def __repr__(self):
        return "ProjResolution({0}: {1}, {2})".format(self._module, self.term_names(), self._status)

    @property
    def module(self):
        return self._module

    @property
    def category(self):
        return self._category

    @property
    def cap(self):
        return self._cap

    @property
    def terms(self):
        """ Projective terms.

        :getter: Gets the terms
        :type: list
        """
        return list(self._terms)

    @property
    def differentials(self):
        return list(self._differentials)

    @property
    def augmentation(self):
        return self._augmentation

    @property
    def syzygies(self):
        return list(self._syzygies)

    @property
    def status(self):
        return self._status

    @property
    def period(self):
        return self._period

    @property
    def length(self):
        """ Index of the last computed term (-1 for the zero module). """
        return len(self._terms) - 1

    @property
    def ext_range(self):
        """ Largest degree in which the Hom-complex cohomology is computed directly. """
        if self._status == FINITE:
            return INFINITY
        return len(self._terms) - 2

    def is_finite(self):
        return self._status == FINITE

    def is_periodic(self):
        return self._status == PERIODIC

    def proj_dim(self):
        """ Projective dimension certified by the resolution.

        :raises UndeterminedError: when the resolution was truncated without certificate
        """
        if self._status == FINITE:
            return self.length
        if self._status == PERIODIC:
            return INFINITY
        raise UndeterminedError("undetermined: resolution truncated at degree {0}".format(self._cap),
                                data=dict(cap=self._cap))

    def term(self, d):
        """ Term ``d``; the zero module beyond a finite resolution. """
        if 0 <= d < len(self._terms):
            return self._terms[d]
        if self._status == FINITE:
            return repcat.ProjectiveSum(self._module.algebra, [])
        raise UndeterminedError("undetermined beyond cap", data=dict(degree=d, cap=self._cap))

    def multiplicities(self, d):
        """ Multiplicity of every indecomposable projective in term ``d``. """
        return self.term(d).multiplicities()

    def differential(self, d):
        """ Differential from term ``d`` to term ``d - 1`` (``d >= 1``); zero beyond a finite resolution. """
        if 1 <= d <= len(self._differentials):
            return self._differentials[d - 1]
        return repcat.ModuleMap.zero(self.term(d), self.term(d - 1))

    def term_names(self):
        """ Names of the terms, e.g. ``['P3', 'P2', 'P3']``. """
        names = []
        for term in self._terms:
            parts = []
            for v, count in enumerate(term.multiplicities()):
                label = "P{0}".format(self._module.algebra.quiver.vertices[v])
                parts.extend([label] * count)
            names.append("+".join(parts))
        return names

    def check_complex(self):
        """ Checks that consecutive maps compose to zero. """
        maps = ([self._augmentation] if self._augmentation is not None else []) + self._differentials
        for first, second in zip(maps, maps[1:]):
            if not first.compose(second).is_zero():
                return False
        return True

    def check_exact(self):
        """ Rank check of exactness at the module and at every term followed by a computed map. """
        if self._augmentation is None:
            return self._module.is_zero()
        if not self._augmentation.is_surjective():
            return False
        incoming = [self._augmentation] + self._differentials
        for d, term in enumerate(self._terms):
            if d + 1 < len(incoming):
                outgoing_rank = incoming[d + 1].rank()
            elif self._status == FINITE:
                outgoing_rank = 0
            else:
                continue
            if term.dimension - incoming[d].rank() != outgoing_rank:
                return False
        return True

    def check_minimal(self):
        """ Checks that every differential maps into the radical of its target. """
        for diff in self._differentials:
            rad_basis = repcat.radical_vectors(diff.target)
            for v, blk in enumerate(diff.blocks):
                ech = linalg.SparseEchelon()
                for vec in rad_basis[v]:
                    ech.insert(sparse_from_dense(vec))
                for j in range(blk.ncols):
                    if ech.reduce(sparse_from_dense(blk.column(j))):
                        return False
        return True


def _find_repeat(syzygies, module):
    for j, earlier in enumerate(syzygies):
        if earlier.dims == module.dims and repcat.is_isomorphic(earlier, module):
            return j
    return None


@export
def minimal_resolution(module, cap=None, category=None, **kwargs):
    """ Minimal projective resolution built from projective covers of successive syzygies.

    Terms are computed up to degree ``cap``. The resolution is finite when a syzygy vanishes, and certified
    infinite when a syzygy is isomorphic to an earlier one.

    **Keyword Arguments:**

    * ``periodicity``: look for repeating syzygies. *Default: True*

    :param module: module to resolve
    :type module: repcat.Representation
    :param cap: maximal degree (default: :func:`default_cap`)
    :type cap: int
    :param category: path algebra or Serre subcategory providing the projectives
    :return: resolution
    :rtype: ProjResolution
    """
    if category is None:
        category = module.algebra
    if cap is None:
        cap = default_cap(category)
    if cap < 0:
        raise HomquiverException("Degree cap must be non-negative", data=dict(cap=cap))
    detect = kwargs.get('periodicity', True)
    res = ProjResolution(module, category, cap)
    syzygy = module
    inclusion = None
    stop_after = None
    degree = 0
    while True:
        if syzygy.is_zero():
            res._status = FINITE
            break
        if stop_after is not None:
            if degree > stop_after:
                res._status = PERIODIC
                break
        else:
            if degree > cap:
                res._status = TRUNCATED
                break
            start = _find_repeat(res._syzygies[:-1], syzygy) if detect else None
            if start is not None:
                res._period = (start, degree - start)
                stop_after = degree + 1
                logger.info("Syzygy %d repeats syzygy %d of %s", degree, start, module)
        proj, cover = repcat.projective_cover(syzygy, category)
        res._terms.append(proj)
        if inclusion is None:
            res._augmentation = cover
        else:
            res._differentials.append(inclusion.compose(cover))
        syzygy, inclusion = repcat.kernel(cover)
        res._syzygies.append(syzygy)
        logger.debug("Resolution of %s: term %d = %s", module, degree, proj.name)
        degree += 1
    return res


@export
def pullback_matrix(mapping, module):
    """ Matrix of ``Hom(X, N) -> Hom(P, N)``, ``g -> g o mapping``, for a map ``P -> X`` of projective sums.

    A map out of a sum of projectives is determined by the images of the top generators, hence ``Hom(P, N)`` is
    identified with the direct sum of the spaces of ``N`` at the top vertices of the summands of ``P``.

    :param mapping: map between sums of labelled projectives
    :type mapping: repcat.ModuleMap
    :param module: target module N
    :type module: repcat.Representation
    :rtype: linalg.Matrix
    """
    source, target = mapping.source, mapping.target
    row_offsets, rows = [], 0
    for s in source.summands:
        row_offsets.append(rows)
        rows += module.dims[s.vertex]
    col_offsets, cols = [], 0
    for s in target.summands:
        col_offsets.append(cols)
        cols += module.dims[s.vertex]
    result = Matrix.zero(rows, cols).to_list()
    for k in range(len(source.summands)):
        v, pos = source.generator(k)
        image = mapping.block(v).column(pos)
        for j, coeff in enumerate(image):
            if coeff == 0:
                continue
            h, path = target.columns(v)[j]
            block = module.path_matrix(path)
            for r in range(block.nrows):
                for c in range(block.ncols):
                    if block[r, c] != 0:
                        result[row_offsets[k] + r][col_offsets[h] + c] += coeff * block[r, c]
    return Matrix(result, cols)


def cochain_dimension(proj, module):
    """ Dimension of ``Hom(P, N)`` for a sum of projectives P. """
    return sum(module.dims[s.vertex] for s in proj.summands)


@export
def coboundary(res, module, d):
    """ Coboundary ``Hom(P_d, N) -> Hom(P_{d+1}, N)`` of the Hom-complex of a resolution.

    :param res: resolution
    :type res: ProjResolution
    :param module: coefficient module N
    :param d: degree
    :type d: int
    :rtype: linalg.Matrix
    """
    return pullback_matrix(res.differential(d + 1), module)


def _reduce_degree(res, d):
    if d <= res.ext_range:
        return d
    if res.is_periodic():
        _, period = res.period
        while d > res.ext_range:
            d -= period
        return d
    raise UndeterminedError("undetermined beyond cap", data=dict(degree=d, cap=res.cap))


@export
def ext_from_resolution(res, module, d):
    """ Dimension of ``Ext^d(M, N)`` from a projective resolution of M.

    Degrees beyond the computed range of a certified periodic resolution are answered by dimension shifting.

    :param res: projective resolution of M
    :type res: ProjResolution
    :param module: second argument N
    :type module: repcat.Representation
    :param d: degree
    :type d: int
    :rtype: int
    :raises UndeterminedError: "undetermined beyond cap"
    """
    if d < 0:
        return 0
    if res.is_finite() and d > res.length:
        return 0
    d = _reduce_degree(res, d)
    dim = cochain_dimension(res.term(d), module)
    rank_out = coboundary(res, module, d).rank() if dim else 0
    rank_in = coboundary(res, module, d - 1).rank() if d >= 1 and dim else 0
    return dim - rank_out - rank_in


@export
def ext_dim(mod1, mod2, d, **kwargs):
    """ Dimension of ``Ext^d(mod1, mod2)``, the cohomology of ``Hom(P, mod2)`` for a resolution P of ``mod1``.

    **Keyword Arguments:**

    * ``cap``: degree cap of the resolution. *Default: d + 1*
    * ``category``: path algebra or Serre subcategory. *Default: the algebra of the modules*
    * ``resolution``: an existing resolution of ``mod1`` to reuse

    :param mod1: first argument
    :type mod1: repcat.Representation
    :param mod2: second argument
    :type mod2: repcat.Representation
    :param d: degree
    :type d: int
    :return: dimension
    :rtype: int
    :raises UndeterminedError: "undetermined beyond cap"
    """
    res = kwargs.get('resolution')
    if res is None:
        cap = kwargs.get('cap')
        res = minimal_resolution(mod1, cap=d + 1 if cap is None else cap, category=kwargs.get('category'))
    return ext_from_resolution(res, mod2, d)


@export
def proj_dim(module, cap=None, **kwargs):
    """ Projective dimension of a module.

    The zero module has the empty resolution and is reported with length -1.

    :param module: module
    :type module: repcat.Representation
    :param cap: degree cap (default: :func:`default_cap`)
    :type cap: int
    :return: projective dimension or :data:`INFINITY`
    :rtype: int, float
    :raises UndeterminedError: "undetermined" on truncation without certificate
    """
    return minimal_resolution(module, cap=cap, category=kwargs.get('category')).proj_dim()


@export
def simple_resolutions(category, cap=None, **kwargs):
    """ Minimal resolutions of the simple objects of the category, in vertex order. """
    if cap is None:
        cap = default_cap(category)
    items = [(category, i, cap) for i in category.simples]
    return parallel_map(_resolve_simple, items, kwargs.get('num_procs'))


def _resolve_simple(item):
    category, i, cap = item
    return minimal_resolution(category.simple(i), cap=cap, category=category)


@export
def global_dim(category, cap=None, **kwargs):
    """ Global dimension: the largest projective dimension of a simple object.

    A category without simple objects is reported with global dimension 0.

    **Keyword Arguments:**

    * ``num_procs``: number of worker processes

    :param category: path algebra or Serre subcategory
    :param cap: degree cap (default: :func:`default_cap`)
    :return: global dimension or :data:`INFINITY`
    :rtype: int, float
    :raises UndeterminedError: when a simple has an undetermined projective dimension
    """
    result = 0
    for res in simple_resolutions(category, cap, **kwargs):
        result = max(result, res.proj_dim())
    return result


@export
class ExtTable(object):
    """ Dimensions of ``Ext^d(L_i, L_j)`` for the simple objects and degrees ``0 .. max_degree``.

    Entries are indexed by ``(i, j, d)`` with positions in :py:attr:`simples`.
    """

    def __init__(self, simples, max_degree, data):
        self._simples = tuple(simples)
        self._max_degree = max_degree
        self._data = tuple(tuple(tuple(row) for row in block) for block in data)  # degree, i, j

    def __getitem__(self, key):
        i, j, d = key
        return self._data[d][i][j]

    def __eq__(self, other):
        return isinstance(other, ExtTable) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self.__eq__(other)

    @property
    def simples(self):
        """ Vertex identifiers of the simple objects.

        :getter: Gets the simples
        :type: tuple
        """
        return self._simples

    @property
    def max_degree(self):
        return self._max_degree

    def value(self, source, target, d):
        """ Entry addressed by vertex identifiers. """
        return self[self._simples.index(str(source)), self._simples.index(str(target)), d]

    def degree_slice(self, d):
        """ Square matrix of the degree ``d`` entries. """
        return [list(row) for row in self._data[d]]

    def to_dict(self):
        return dict(simples=list(self._simples), max_degree=self._max_degree,
                    degrees=[self.degree_slice(d) for d in range(self._max_degree + 1)])


def _ext_row(item):
    category, i, max_degree = item
    res = minimal_resolution(category.simple(i), cap=max_degree + 1, category=category)
    return [[ext_from_resolution(res, category.simple(j), d) for j in category.simples]
            for d in range(max_degree + 1)]


@export
def ext_quiver(category, max_degree, **kwargs):
    """ Table of ``dim Ext^d(L_i, L_j)`` over the simple objects for ``d <= max_degree``.

    Rows of the table are independent and may be computed by a process pool.

    **Keyword Arguments:**

    * ``num_procs``: number of worker processes. *Default: HOMQUIVER_PROCS or 1*

    :param category: path algebra or Serre subcategory
    :param max_degree: largest degree
    :type max_degree: int
    :rtype: ExtTable
    """
    if max_degree < 0:
        raise HomquiverException("Maximal degree must be non-negative", data=dict(max_degree=max_degree))
    simples = list(category.simples)
    rows = parallel_map(_ext_row, [(category, i, max_degree) for i in simples], kwargs.get('num_procs'))
    data = [[rows[a][d] for a in range(len(simples))] for d in range(max_degree + 1)]
    labels = [category.ambient.quiver.vertices[i] for i in simples]
    return ExtTable(labels, max_degree, data)


@export
def euler_characteristic(res):
    """ Alternating sum of the dimension vectors of the terms of a finite resolution.

    For a resolution of M the result equals the dimension vector of M.

    :param res: finite resolution
    :type res: ProjResolution
    :rtype: tuple
    """
    if not res.is_finite():
        raise UndeterminedError("undetermined: the resolution is not finite")
    total = [0] * len(res.module.dims)
    for d, term in enumerate(res.terms):
        sign = 1 if d % 2 == 0 else -1
        total = [a + sign * b for a, b in zip(total, term.dims)]
    return tuple(total)


@export
class LESReport(object):
    """ Dimension-level checks of the long exact Ext sequence of a short exact sequence ``X -> Y -> Z``.

    ``exts`` maps ``X``, ``Y`` and ``Z`` to the lists of ``dim Ext^d(-, K)``; ``prefix_ok`` records that each
    partial alternating sum along ``Hom(Z,K), Hom(Y,K), Hom(X,K), Ext^1(Z,K), ...`` is a possible rank.
    """

    def __init__(self, **kwargs):
        self.exts = kwargs.get('exts', dict())
        self.max_degree = kwargs.get('max_degree', 0)
        self.alternating_sum = kwargs.get('alternating_sum', 0)
        self.identity_checked = kwargs.get('identity_checked', False)
        self.identity_holds = kwargs.get('identity_holds', None)
        self.prefix_ok = kwargs.get('prefix_ok', True)
        self.pd = kwargs.get('pd', dict())
        self.pd1_holds = kwargs.get('pd1_holds', None)
        self.pd2_holds = kwargs.get('pd2_holds', None)

    @property
    def consistent(self):
        """ True when no performed check failed. """
        return (self.prefix_ok and self.identity_holds is not False and self.pd1_holds is not False and
                self.pd2_holds is not False)

    def to_dict(self):
        return dict(exts={k: list(v) for k, v in self.exts.items()}, max_degree=self.max_degree,
                    alternating_sum=self.alternating_sum, identity_checked=self.identity_checked,
                    identity_holds=self.identity_holds, prefix_ok=self.prefix_ok,
                    pd=normalize(self.pd), pd1_holds=self.pd1_holds,
                    pd2_holds=self.pd2_holds, consistent=self.consistent)


def _check_exact(inclusion, projection):
    mod_x, mod_y, mod_z = inclusion.source, inclusion.target, projection.target
    if projection.source.dims != mod_y.dims:
        return False
    if tuple(x + z for x, z in zip(mod_x.dims, mod_z.dims)) != mod_y.dims:
        return False
    return inclusion.is_injective() and projection.is_surjective() and projection.compose(inclusion).is_zero()


def _safe_pd(res):
    try:
        return res.proj_dim()
    except UndeterminedError:
        return None


@export
def les_dimension_check(inclusion, projection, module, max_degree, **kwargs):
    """ Checks the dimension consequences of the long exact sequence of ``Ext(-, K)``.

    For a short exact sequence ``X -> Y -> Z`` the partial alternating sums of the long exact sequence are ranks of
    its maps, hence non-negative and bounded by the adjacent terms. When all three projective dimensions are finite
    and within ``max_degree`` the full alternating sum vanishes. The inequalities
    ``pd X <= max(pd Y, pd Z - 1)`` and ``pd Z <= max(pd X + 1, pd Y)`` are checked whenever the projective
    dimensions are decided.

    **Keyword Arguments:**

    * ``cap``: degree cap of the resolutions. *Default: max(max_degree + 1, default cap)*
    * ``category``: path algebra or Serre subcategory

    :param inclusion: injective map X -> Y
    :type inclusion: repcat.ModuleMap
    :param projection: surjective map Y -> Z
    :type projection: repcat.ModuleMap
    :param module: coefficient module K
    :type module: repcat.Representation
    :param max_degree: largest Ext degree
    :type max_degree: int
    :rtype: LESReport
    :raises HomquiverException: "not exact"
    """
    if not _check_exact(inclusion, projection):
        raise HomquiverException("not exact")
    category = kwargs.get('category')
    if category is None:
        category = module.algebra
    cap = kwargs.get('cap')
    cap = max(max_degree + 1, default_cap(category) if cap is None else cap)
    modules = (('X', inclusion.source), ('Y', inclusion.target), ('Z', projection.target))
    exts, pds = dict(), dict()
    for key, mod in modules:
        res = minimal_resolution(mod, cap=cap, category=category)
        exts[key] = [ext_from_resolution(res, module, d) for d in range(max_degree + 1)]
        pds[key] = _safe_pd(res)

    sequence = []
    for d in range(max_degree + 1):
        sequence.extend([exts['Z'][d], exts['Y'][d], exts['X'][d]])
    prefix_ok = True
    partial = 0
    for m, value in enumerate(sequence):
        partial += value if m % 2 == 0 else -value
        rank = partial if m % 2 == 0 else -partial
        if rank < 0 or rank > value or (m + 1 < len(sequence) and rank > sequence[m + 1]):
            prefix_ok = False
    decided = all(pds[k] is not None and pds[k] != INFINITY for k in pds)
    identity_checked = decided and max_degree >= max(pds.values())
    pd1 = pd2 = None
    if pds['X'] is not None and pds['Y'] is not None and pds['Z'] is not None:
        pd1 = pds['X'] <= max(pds['Y'], pds['Z'] - 1)
        pd2 = pds['Z'] <= max(pds['X'] + 1, pds['Y'])
    report = LESReport(exts=exts, max_degree=max_degree, alternating_sum=partial, identity_checked=identity_checked,
                       identity_holds=(partial == 0) if identity_checked else None, prefix_ok=prefix_ok, pd=pds,
                       pd1_holds=pd1, pd2_holds=pd2)
    logger.info("Long exact sequence check up to degree %d: consistent=%s", max_degree, report.consistent)
    return report
