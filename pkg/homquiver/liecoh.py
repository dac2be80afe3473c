"""
.. module:: liecoh
    :platform: Unix, Windows
    :synopsis: Chevalley-Eilenberg cohomology and homology of finite-dimensional Lie algebras over the rationals

.. moduleauthor:: homquiver developers

"""

import logging
import warnings
from fractions import Fraction
from itertools import combinations
from math import comb
from . import linalg
from .linalg import Matrix
from ._utilities import export
from .exceptions import HomquiverException

logger = logging.getLogger(__name__)


@export
class LieAlgebra(object):
    """ Finite-dimensional Lie algebra given by rational structure constants.

    Brackets are passed as a dict mapping a pair of basis elements to the bracket, written as a dict from basis
    elements to coefficients. Basis elements may be referred to by name or by index. Brackets which are not listed
    vanish and the bracket is extended antisymmetrically.

    .. code-block:: python

        from homquiver import liecoh

        sl2 = liecoh.LieAlgebra(['h', 'e', 'f'], {('h', 'e'): {'e': 2}, ('h', 'f'): {'f': -2}, ('e', 'f'): {'h': 1}})
        sl2.is_unimodular()  # True

    **Keyword Arguments:**

    * ``name``: algebra name. *Default: lie_algebra*
    * ``check``: verifies the Jacobi identity. *Default: True*

    :param basis: basis element names
    :type basis: list, tuple
    :param brackets: nonzero brackets
    :type brackets: dict
    """

    def __init__(self, basis, brackets=None, **kwargs):
        self._name = kwargs.get('name', "lie_algebra")
        self._basis = tuple(str(b) for b in basis)
        if len(set(self._basis)) != len(self._basis):
            raise HomquiverException("Basis element names must be distinct", data=dict(basis=self._basis))
        n = len(self._basis)
        self._const = [[dict() for _ in range(n)] for _ in range(n)]
        for (x, y), value in dict(brackets or dict()).items():
            i, j = self.index(x), self.index(y)
            if i == j:
                if any(Fraction(c) != 0 for c in self._vector_of(value).values()):
                    raise HomquiverException("The bracket of an element with itself must vanish",
                                             data=dict(element=self._basis[i]))
                continue
            vec = self._vector_of(value)
            self._const[i][j] = vec
            self._const[j][i] = {k: -c for k, c in vec.items()}
        if kwargs.get('check', True) and not self.jacobi_holds():
            raise HomquiverException("Structure constants violate the Jacobi identity", data=dict(name=self._name))

    def _vector_of(self, value):
        if isinstance(value, dict):
            items = value.items()
        else:
            items = enumerate(value)
        result = dict()
        for k, c in items:
            c = Fraction(c)
            if c != 0:
                key = self.index(k)
                result[key] = result.get(key, Fraction(0)) + c
        return {k: c for k, c in result.items() if c != 0}

    def __repr__(self):
        return "LieAlgebra({0}, dim={1})".format(self._name, self.dimension)

    @property
    def name(self):
        return self._name

    @property
    def basis(self):
        """ Basis element names.

        :getter: Gets the basis names
        :type: tuple
        """
        return self._basis

    @property
    def dimension(self):
        return len(self._basis)

    def index(self, element):
        """ Index of a basis element given by name or index. """
        if isinstance(element, int) and 0 <= element < len(self._basis):
            return element
        try:
            return self._basis.index(str(element))
        except ValueError:
            raise HomquiverException("Unknown basis element '{0}'".format(element), data=dict(basis=self._basis))

    def structure_constant(self, i, j):
        """ The bracket ``[x_i, x_j]`` as a sparse dict. """
        return dict(self._const[self.index(i)][self.index(j)])

    def brackets(self):
        """ Nonzero brackets ``[x_i, x_j]`` with ``i < j``, keyed by name pairs. """
        result = dict()
        for i in range(self.dimension):
            for j in range(i + 1, self.dimension):
                if self._const[i][j]:
                    result[(self._basis[i], self._basis[j])] = {self._basis[k]: c for k, c in
                                                                sorted(self._const[i][j].items())}
        return result

    def bracket(self, x, y):
        """ Bracket of two elements in basis coordinates.

        :param x: first element
        :type x: list
        :param y: second element
        :type y: list
        :return: bracket
        :rtype: list
        """
        n = self.dimension
        result = [Fraction(0)] * n
        for i, a in enumerate(x):
            if a == 0:
                continue
            for j, b in enumerate(y):
                if b == 0:
                    continue
                for k, c in self._const[i][j].items():
                    result[k] += a * b * c
        return result

    def unit_vector(self, i):
        vec = [Fraction(0)] * self.dimension
        vec[self.index(i)] = Fraction(1)
        return vec

    def jacobi_holds(self):
        """ Exhaustive check of the Jacobi identity on basis triples. """
        n = self.dimension
        units = [self.unit_vector(i) for i in range(n)]
        for i, j, k in combinations(range(n), 3):
            x, y, z = units[i], units[j], units[k]
            total = [a + b + c for a, b, c in zip(self.bracket(self.bracket(x, y), z),
                                                  self.bracket(self.bracket(y, z), x),
                                                  self.bracket(self.bracket(z, x), y))]
            if any(v != 0 for v in total):
                return False
        return True

    def ad(self, i):
        """ Matrix of ``ad x_i`` in the basis of the algebra. """
        i = self.index(i)
        n = self.dimension
        rows = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            for k, c in self._const[i][j].items():
                rows[k][j] = c
        return Matrix(rows, n)

    def modular_character(self):
        """ Values ``tr ad x_i`` on the basis. """
        return [sum((self._const[i][j].get(j, Fraction(0)) for j in range(self.dimension)), Fraction(0))
                for i in range(self.dimension)]

    def is_unimodular(self):
        """ Checks whether ``tr ad x`` vanishes for every ``x``. """
        return all(v == 0 for v in self.modular_character())


@export
class LieModule(object):
    """ Finite-dimensional module over a Lie algebra given by one action matrix per basis element.

    **Keyword Arguments:**

    * ``name``: module name. *Default: module*
    * ``check``: verifies that the matrices represent the bracket. *Default: True*

    :param algebra: Lie algebra
    :type algebra: LieAlgebra
    :param matrices: square action matrices in basis order
    :type matrices: list
    """

    def __init__(self, algebra, matrices, **kwargs):
        self._algebra = algebra
        self._name = kwargs.get('name', "module")
        matrices = [m if isinstance(m, Matrix) else Matrix(m, kwargs.get('dimension')) for m in matrices]
        if len(matrices) != algebra.dimension:
            raise HomquiverException("Expected {0} action matrices, got {1}".format(algebra.dimension, len(matrices)))
        dims = set(m.shape for m in matrices)
        if len(dims) > 1 or any(r != c for r, c in dims):
            raise HomquiverException("Action matrices must be square and of equal size", data=dict(shapes=dims))
        self._dim = matrices[0].nrows if matrices else int(kwargs.get('dimension', 0))
        self._matrices = tuple(matrices)
        self._cache = dict()
        if kwargs.get('check', True) and not self.is_representation():
            raise HomquiverException("Action matrices do not represent the bracket", data=dict(name=self._name))

    def __repr__(self):
        return "LieModule({0}, dim={1})".format(self._name, self._dim)

    @property
    def algebra(self):
        return self._algebra

    @property
    def name(self):
        return self._name

    @property
    def dimension(self):
        return self._dim

    @property
    def matrices(self):
        return self._matrices

    def action(self, i):
        """ Action matrix of the basis element ``i``. """
        return self._matrices[self._algebra.index(i)]

    def is_representation(self):
        """ Checks ``[rho(x_i), rho(x_j)] = rho([x_i, x_j])`` on all basis pairs. """
        a = self._algebra
        for i, j in combinations(range(a.dimension), 2):
            lhs = self._matrices[i] * self._matrices[j] - self._matrices[j] * self._matrices[i]
            rhs = Matrix.zero(self._dim, self._dim)
            for k, c in a.structure_constant(i, j).items():
                rhs = linalg.matrix_add(rhs, self._matrices[k], c)
            if lhs != rhs:
                return False
        return True


@export
def abelian(n):
    """ Abelian Lie algebra of dimension ``n`` with basis ``x1 .. xn``. """
    return LieAlgebra(["x{0}".format(i + 1) for i in range(n)], name="abelian_{0}".format(n))


@export
def sl2():
    """ ``sl2`` in the basis ``h, e, f``. """
    return LieAlgebra(['h', 'e', 'f'], {('h', 'e'): {'e': 2}, ('h', 'f'): {'f': -2}, ('e', 'f'): {'h': 1}},
                      name="sl2")


@export
def borel_sl2():
    """ Borel subalgebra of ``sl2`` in the basis ``h, e``; it is not unimodular. """
    return LieAlgebra(['h', 'e'], {('h', 'e'): {'e': 2}}, name="borel_sl2")


@export
def heisenberg():
    """ Three-dimensional Heisenberg algebra, the nilradical of a Borel subalgebra of ``sl3``. """
    return LieAlgebra(['x', 'y', 'z'], {('x', 'y'): {'z': 1}}, name="heisenberg")


@export
def lie_direct_sum(alg1, alg2, **kwargs):
    """ Direct sum of two Lie algebras; basis names are suffixed with ``_1`` and ``_2``. """
    n1 = alg1.dimension
    basis = ["{0}_1".format(b) for b in alg1.basis] + ["{0}_2".format(b) for b in alg2.basis]
    brackets = dict()
    for offset, alg in ((0, alg1), (n1, alg2)):
        for i, j in combinations(range(alg.dimension), 2):
            vec = alg.structure_constant(i, j)
            if vec:
                brackets[(i + offset, j + offset)] = {k + offset: c for k, c in vec.items()}
    return LieAlgebra(basis, brackets, name=kwargs.get('name', "{0}+{1}".format(alg1.name, alg2.name)))


@export
def g_plus_g_sl2():
    """ ``sl2 + sl2``, the Lie algebra acting on bimodules over ``sl2``. """
    return lie_direct_sum(sl2(), sl2(), name="sl2+sl2")


@export
def trivial_module(algebra, dimension=1):
    """ Trivial module of the given dimension. """
    return LieModule(algebra, [Matrix.zero(dimension, dimension) for _ in range(algebra.dimension)],
                     dimension=dimension, name="trivial")


@export
def adjoint_module(algebra):
    """ Adjoint module. """
    return LieModule(algebra, [algebra.ad(i) for i in range(algebra.dimension)], name="adjoint")


@export
def character_module(algebra, values):
    """ One-dimensional module on which the basis element ``x_i`` acts by ``values[i]``.

    :raises HomquiverException: if the values do not vanish on the derived algebra
    """
    values = list(values)
    if len(values) != algebra.dimension:
        raise HomquiverException("Expected one value per basis element", data=dict(values=values))
    return LieModule(algebra, [Matrix([[v]], 1) for v in values], name="character")


@export
def sl2_irreducible(algebra, k):
    """ Irreducible module of highest weight ``k`` over ``sl2`` given in the basis ``h, e, f``.

    With basis ``v_0 .. v_k``: ``h v_j = (k - 2j) v_j``, ``e v_j = j (k - j + 1) v_{j-1}`` and ``f v_j = v_{j+1}``.
    """
    k = int(k)
    if k < 0:
        raise HomquiverException("Highest weight must be non-negative", data=dict(k=k))
    size = k + 1
    h = [[Fraction(0)] * size for _ in range(size)]
    e = [[Fraction(0)] * size for _ in range(size)]
    f = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        h[j][j] = Fraction(k - 2 * j)
        if j > 0:
            e[j - 1][j] = Fraction(j * (k - j + 1))
        if j < k:
            f[j + 1][j] = Fraction(1)
    order = dict(h=h, e=e, f=f)
    return LieModule(algebra, [Matrix(order[b], size) for b in algebra.basis], name="V({0})".format(k))


@export
def module_direct_sum(modules):
    """ Direct sum of modules over the same Lie algebra. """
    modules = list(modules)
    if not modules:
        raise HomquiverException("Direct sum needs at least one module")
    algebra = modules[0].algebra
    mats = [linalg.block_diagonal([m.matrices[i] for m in modules]) for i in range(algebra.dimension)]
    return LieModule(algebra, mats, dimension=sum(m.dimension for m in modules), check=False,
                     name="+".join(m.name for m in modules))


def _kron(mat1, mat2):
    rows = []
    for r1 in mat1.to_list():
        for r2 in mat2.to_list():
            rows.append([a * b for a in r1 for b in r2])
    return Matrix(rows, mat1.ncols * mat2.ncols)


@export
def module_tensor(mod1, mod2, algebra=None):
    """ Outer tensor product of a module over ``a`` and a module over ``b`` as a module over ``a + b``.

    :param mod1: module over the first summand
    :type mod1: LieModule
    :param mod2: module over the second summand
    :type mod2: LieModule
    :param algebra: direct sum algebra, built by :func:`lie_direct_sum` when omitted
    :type algebra: LieAlgebra
    :rtype: LieModule
    """
    if algebra is None:
        algebra = lie_direct_sum(mod1.algebra, mod2.algebra)
    id1 = Matrix.identity(mod1.dimension)
    id2 = Matrix.identity(mod2.dimension)
    mats = [_kron(m, id2) for m in mod1.matrices] + [_kron(id1, m) for m in mod2.matrices]
    return LieModule(algebra, mats, dimension=mod1.dimension * mod2.dimension,
                     name="{0}x{1}".format(mod1.name, mod2.name))


@export
def conjugate_module(module):
    """ Contragredient module, the dual space with ``x`` acting by ``-rho(x)^T``. """
    return LieModule(module.algebra, [-m.transpose() for m in module.matrices], dimension=module.dimension,
                     check=False, name="{0}*".format(module.name))


@export
def transport_module(module, change):
    """ Same module in a new basis: every action matrix becomes ``S^-1 rho(x) S``.

    :param module: module
    :type module: LieModule
    :param change: invertible change of basis ``S``
    :type change: Matrix
    """
    size = module.dimension
    inverse_columns = []
    for j in range(size):
        col = linalg.solve(change, [Fraction(int(i == j)) for i in range(size)])
        if col is None:
            raise HomquiverException("Change of basis is not invertible")
        inverse_columns.append(col)
    inverse = Matrix.from_columns(inverse_columns, size)
    mats = [inverse * m * change for m in module.matrices]
    return LieModule(module.algebra, mats, dimension=size, check=False, name=module.name)


def _wedge_basis(n, p):
    if p < 0 or p > n:
        return [], dict()
    basis = list(combinations(range(n), p))
    return basis, {b: k for k, b in enumerate(basis)}


def _insert_sorted(k, rest):
    """ Sign and sorted tuple of ``x_k ^ x_rest``; None when ``k`` repeats. """
    if k in rest:
        return None, None
    pos = sum(1 for r in rest if r < k)
    return (-1) ** pos, tuple(sorted(rest + (k,)))


def cochain_differential(algebra, module, p):
    """ Chevalley-Eilenberg differential ``C^p -> C^{p+1}`` with ``C^p = Hom(Lambda^p a, V)``.

    Coordinates are ordered by wedge basis first and module basis second.
    """
    key = ('cochain', p)
    if key in module._cache:
        return module._cache[key]
    n, m = algebra.dimension, module.dimension
    src, src_idx = _wedge_basis(n, p)
    tgt, _ = _wedge_basis(n, p + 1)
    rho = [mat.to_list() for mat in module.matrices]
    rows = []
    for wedge in tgt:
        block = [dict() for _ in range(m)]
        for i, x in enumerate(wedge):
            rest = wedge[:i] + wedge[i + 1:]
            base = src_idx[rest] * m
            sign = (-1) ** i
            for r in range(m):
                for s, val in enumerate(rho[x][r]):
                    if val != 0:
                        block[r][base + s] = block[r].get(base + s, 0) + sign * val
        for i, j in combinations(range(len(wedge)), 2):
            rest = wedge[:i] + wedge[i + 1:j] + wedge[j + 1:]
            for k, c in algebra.structure_constant(wedge[i], wedge[j]).items():
                sign, merged = _insert_sorted(k, rest)
                if merged is None:
                    continue
                base = src_idx[merged] * m
                coeff = (-1) ** (i + j) * sign * c
                for r in range(m):
                    block[r][base + r] = block[r].get(base + r, 0) + coeff
        rows.extend(block)
    result = Matrix.from_sparse_rows(rows, len(src) * m)
    module._cache[key] = result
    return result


def chain_differential(algebra, module, p):
    """ Chevalley-Eilenberg boundary ``C_p -> C_{p-1}`` with ``C_p = Lambda^p a (x) V``.

    The module is turned into a right module by ``v . x = -x v``.
    """
    key = ('chain', p)
    if key in module._cache:
        return module._cache[key]
    n, m = algebra.dimension, module.dimension
    src, _ = _wedge_basis(n, p)
    tgt, tgt_idx = _wedge_basis(n, p - 1)
    rho = [mat.to_list() for mat in module.matrices]
    rows = [dict() for _ in range(len(tgt) * m)]
    for col_wedge, wedge in enumerate(src):
        for i, x in enumerate(wedge):
            base = tgt_idx[wedge[:i] + wedge[i + 1:]] * m
            sign = (-1) ** i
            for s in range(m):
                col = col_wedge * m + s
                for r in range(m):
                    val = rho[x][r][s]
                    if val != 0:
                        rows[base + r][col] = rows[base + r].get(col, 0) - sign * val
        for i, j in combinations(range(len(wedge)), 2):
            rest = wedge[:i] + wedge[i + 1:j] + wedge[j + 1:]
            for k, c in algebra.structure_constant(wedge[i], wedge[j]).items():
                sign, merged = _insert_sorted(k, rest)
                if merged is None:
                    continue
                base = tgt_idx[merged] * m
                coeff = (-1) ** (i + j) * sign * c
                for s in range(m):
                    col = col_wedge * m + s
                    rows[base + s][col] = rows[base + s].get(col, 0) + coeff
    result = Matrix.from_sparse_rows(rows, len(src) * m)
    module._cache[key] = result
    return result


def _check_degree(algebra, d):
    if d < 0 or d > algebra.dimension:
        raise HomquiverException("degree out of range: {0} not in [0, {1}]".format(d, algebra.dimension),
                                 data=dict(degree=d, dimension=algebra.dimension))


@export
def ce_cohomology(algebra, module, d):
    """ Lie algebra cohomology ``H^d(a, V)`` from the Chevalley-Eilenberg complex.

    .. code-block:: python

        from homquiver import liecoh

        a = liecoh.sl2()
        dim, cocycles = liecoh.ce_cohomology(a, liecoh.trivial_module(a), 3)  # dim == 1

    :param algebra: Lie algebra
    :type algebra: LieAlgebra
    :param module: coefficient module
    :type module: LieModule
    :param d: degree, ``0 <= d <= dim a``
    :type d: int
    :return: tuple of (dimension, cocycles representing a basis of the cohomology)
    :rtype: tuple
    :raises HomquiverException: "degree out of range"
    """
    _check_degree(algebra, d)
    cocycles = linalg.nullspace(cochain_differential(algebra, module, d))
    boundaries = linalg.column_space(cochain_differential(algebra, module, d - 1)) if d > 0 else []
    chosen = linalg.independent_subset(cocycles, start=boundaries)
    return len(chosen), [cocycles[k] for k in chosen]


@export
def ce_homology(algebra, module, d):
    """ Lie algebra homology ``H_d(a, V)``.

    :return: dimension
    :rtype: int
    :raises HomquiverException: "degree out of range"
    """
    _check_degree(algebra, d)
    size = comb(algebra.dimension, d) * module.dimension
    kernel = size - (linalg.rank(chain_differential(algebra, module, d)) if d > 0 else 0)
    image = linalg.rank(chain_differential(algebra, module, d + 1)) if d < algebra.dimension else 0
    return kernel - image


@export
def cohomology_dimensions(algebra, module):
    """ ``[dim H^0, ..., dim H^n]``. """
    return [ce_cohomology(algebra, module, d)[0] for d in range(algebra.dimension + 1)]


@export
def homology_dimensions(algebra, module):
    """ ``[dim H_0, ..., dim H_n]``. """
    return [ce_homology(algebra, module, d) for d in range(algebra.dimension + 1)]


@export
def differential_squares_to_zero(algebra, module):
    """ Checks ``d^{p+1} d^p = 0`` and the same for the boundary maps in every degree. """
    n = algebra.dimension
    for p in range(n - 1):
        if not (cochain_differential(algebra, module, p + 1) * cochain_differential(algebra, module, p)).is_zero():
            return False
    for p in range(2, n + 1):
        if not (chain_differential(algebra, module, p - 1) * chain_differential(algebra, module, p)).is_zero():
            return False
    return True


def _hom_to_character(module, values):
    rows = []
    for mat, value in zip(module.matrices, values):
        shifted = mat.transpose() - Matrix.identity(module.dimension).scale(value)
        rows.extend(shifted.to_list())
    if not rows:
        return module.dimension
    return len(linalg.nullspace(Matrix(rows, module.dimension)))


@export
def hom_to_trivial(algebra, module):
    """ Dimension of the space of ``a``-invariant functionals ``V -> C``. """
    return _hom_to_character(module, [0] * algebra.dimension)


@export
class CheckReport(object):
    """ Outcome of a cohomology identity check.

    ``passed`` is None when the check was skipped.
    """

    def __init__(self, name, passed, **kwargs):
        self.name = name
        self.passed = passed
        self.values = kwargs

    def __repr__(self):
        return "CheckReport({0}, passed={1})".format(self.name, self.passed)

    def to_dict(self):
        result = dict(check=self.name, passed=self.passed)
        result.update(self.values)
        return result


@export
def top_degree_check(algebra, module):
    """ Compares ``dim H^n(a, V)`` with the dimension of ``Hom_a(V, C_tr ad)``, ``n = dim a``.

    The twist by the trace of the adjoint action is trivial for unimodular algebras, where the right side is the
    space of invariant functionals. Both sides are computed independently.

    :rtype: CheckReport
    """
    n = algebra.dimension
    top = ce_cohomology(algebra, module, n)[0]
    twisted = _hom_to_character(module, algebra.modular_character())
    untwisted = hom_to_trivial(algebra, module)
    logger.debug("Top degree check on %s: H^%d = %d, twisted Hom = %d", module.name, n, top, twisted)
    return CheckReport("top_degree", top == twisted, cohomology=top, hom_twisted=twisted, hom_invariant=untwisted,
                       unimodular=algebra.is_unimodular())


@export
def poincare_check(algebra, module):
    """ Checks ``dim H^p(a, V) = dim H_{n-p}(a, V)`` for every ``p`` on unimodular algebras.

    Non-unimodular algebras are skipped with a warning.

    :rtype: CheckReport
    """
    if not algebra.is_unimodular():
        warnings.warn("Poincare duality check skipped: {0} is not unimodular".format(algebra.name))
        return CheckReport("poincare", None, skipped="not unimodular")
    cohom = cohomology_dimensions(algebra, module)
    hom = homology_dimensions(algebra, module)
    return CheckReport("poincare", cohom == list(reversed(hom)), cohomology=cohom, homology=hom)


@export
def euler_characteristic_check(algebra, module):
    """ Checks that the alternating sum of cohomology dimensions equals that of the cochain dimensions. """
    n = algebra.dimension
    cohom = cohomology_dimensions(algebra, module)
    lhs = sum((-1) ** d * h for d, h in enumerate(cohom))
    rhs = sum((-1) ** d * comb(n, d) * module.dimension for d in range(n + 1))
    return CheckReport("euler_characteristic", lhs == rhs, cohomology=lhs, cochains=rhs)
