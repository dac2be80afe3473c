"""
.. module:: repcat
    :platform: Unix, Windows
    :synopsis: Finite-dimensional representations of path algebras, module maps and structural submodules

.. moduleauthor:: homquiver developers

"""

import logging
import random
from fractions import Fraction
from . import linalg
from .linalg import Matrix
from ._linalg import sparse_from_dense
from ._utilities import export
from .exceptions import HomquiverException

logger = logging.getLogger(__name__)


@export
class Representation(object):
    """ Representation of a path algebra: a vector space per vertex and a matrix per arrow.

    The matrix of an arrow ``s -> t`` has shape ``(dims[t], dims[s])``. The action can be given as a dict keyed by
    arrow names or as a list in arrow declaration order; missing arrows act by zero.

    .. code-block:: python

        from homquiver import presets, repcat

        alg, _ = presets.load_preset('sl2_principal')
        m = repcat.Representation(alg, (1, 1), {'a': [[1]]})
        m.dimension  # 2

    **Keyword Arguments:**

    * ``check``: verify that the relations act by zero. *Default: True*
    * ``name``: display name. *Default: module*

    :param algebra: path algebra
    :type algebra: pathalg.PathAlgebra
    :param dims: dimension per vertex
    :type dims: list, tuple
    :param action: arrow matrices
    :type action: dict, list
    """

    def __init__(self, algebra, dims, action=None, **kwargs):
        quiver = algebra.quiver
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.num_vertices:
            raise HomquiverException("Dimension vector must have {0} entries".format(quiver.num_vertices),
                                     data=dict(dims=dims))
        if any(d < 0 for d in dims):
            raise HomquiverException("Dimensions must be non-negative", data=dict(dims=dims))
        self._algebra = algebra
        self._dims = dims
        self._name = kwargs.get('name', "module")
        self._path_cache = dict()
        arrows = quiver.indexed_arrows()
        if action is None:
            action = dict()
        if isinstance(action, dict):
            for key in action:
                quiver.arrow_index(key)
            action = [action.get(name) for name, _, _ in arrows]
        if len(action) != len(arrows):
            raise HomquiverException("Action must list one matrix per arrow")
        mats = []
        for (name, s, t), mat in zip(arrows, action):
            if mat is None:
                mat = Matrix.zero(dims[t], dims[s])
            elif not isinstance(mat, Matrix):
                mat = Matrix(mat, dims[s])
            if mat.shape != (dims[t], dims[s]):
                raise HomquiverException("Matrix of arrow '{0}' must have shape {1}".format(name, (dims[t], dims[s])),
                                         data=dict(arrow=name, shape=mat.shape))
            mats.append(mat)
        self._mats = tuple(mats)
        if kwargs.get('check', True) and not self.satisfies_relations():
            raise HomquiverException("The arrow matrices do not satisfy the relations of the algebra",
                                     data=dict(dims=dims))

    def __str__(self):
        return "{0}{1}".format(self._name, list(self._dims))

    __repr__ = __str__

    @property
    def algebra(self):
        """ Path algebra acting on the module.

        :getter: Gets the algebra
        :type: pathalg.PathAlgebra
        """
        return self._algebra

    @property
    def name(self):
        return self._name

    @name.setter
    def name(self, value):
        self._name = str(value)

    @property
    def dims(self):
        """ Dimension vector, one entry per vertex.

        :getter: Gets the dimension vector
        :type: tuple
        """
        return self._dims

    dimension_vector = dims

    @property
    def dimension(self):
        """ Total dimension. """
        return sum(self._dims)

    @property
    def matrices(self):
        """ Arrow matrices in arrow declaration order. """
        return self._mats

    def arrow_matrix(self, arrow):
        """ Matrix of the arrow given by name or index. """
        idx = arrow if isinstance(arrow, int) else self._algebra.quiver.arrow_index(arrow)
        return self._mats[idx]

    def path_matrix(self, path):
        """ Matrix by which a path acts, from the source space to the target space.

        :param path: path
        :type path: pathalg.Path
        :rtype: Matrix
        """
        try:
            return self._path_cache[path]
        except KeyError:
            pass
        result = Matrix.identity(self._dims[path.source])
        for a_idx in path.arrows:
            result = linalg.matrix_multiply(self._mats[a_idx], result)
        self._path_cache[path] = result
        return result

    def is_zero(self):
        return self.dimension == 0

    def satisfies_relations(self):
        """ Checks that every relation acts by the zero matrix. """
        for rel in self._algebra.relation_vectors():
            if not rel:
                continue
            some = next(iter(rel))
            total = Matrix.zero(self._dims[some.target], self._dims[some.source])
            for path, coeff in rel.items():
                total = linalg.matrix_add(total, self.path_matrix(path), coeff)
            if not total.is_zero():
                return False
        return True


@export
class ProjectiveModule(Representation):
    """ Indecomposable projective module whose basis vectors are labelled by paths.

    The basis of the space at vertex ``v`` is labelled by paths from :py:attr:`vertex` to ``v``; the label of a basis
    vector is the path which maps the top generator onto it. Label lists start with the trivial path at the top.
    """

    def __init__(self, algebra, vertex, dims, action, labels, **kwargs):
        kwargs.setdefault('check', False)
        kwargs.setdefault('name', "P{0}".format(algebra.quiver.vertices[vertex]))
        super(ProjectiveModule, self).__init__(algebra, dims, action, **kwargs)
        self._vertex = vertex
        self._labels = tuple(tuple(lb) for lb in labels)

    @classmethod
    def from_algebra(cls, algebra, vertex):
        """ Projective module spanned by the normal-form paths starting at the vertex index. """
        groups = algebra.paths_from(vertex)
        position = dict()
        for paths in groups:
            for k, p in enumerate(paths):
                position[p] = k
        dims = [len(g) for g in groups]
        action = []
        for a_idx, (_, s, t) in enumerate(algebra.quiver.indexed_arrows()):
            rows = [[Fraction(0)] * dims[s] for _ in range(dims[t])]
            for k, p in enumerate(groups[s]):
                image = algebra.act([a_idx], {algebra.index(p): Fraction(1)})
                for b_idx, coeff in image.items():
                    rows[position[algebra.basis[b_idx]]][k] = coeff
            action.append(Matrix(rows, dims[s]))
        return cls(algebra, vertex, dims, action, groups)

    @property
    def vertex(self):
        """ Vertex index of the top. """
        return self._vertex

    @property
    def labels(self):
        """ Path labels per vertex.

        :getter: Gets the labels
        :type: tuple
        """
        return self._labels


@export
class ProjectiveSum(Representation):
    """ Direct sum of labelled indecomposable projective modules.

    Summands are kept in the given order; summand ``k`` has its top generator at vertex ``vertices[k]``.

    :param algebra: path algebra
    :param summands: indecomposable projective modules
    :type summands: list
    """

    def __init__(self, algebra, summands, **kwargs):
        summands = tuple(summands)
        n = algebra.quiver.num_vertices
        dims = [sum(s.dims[v] for s in summands) for v in range(n)]
        action = [linalg.block_diagonal([s.matrices[a] for s in summands]) if summands
                  else Matrix.zero(0, 0) for a in range(len(algebra.quiver.arrows))]
        kwargs.setdefault('check', False)
        kwargs.setdefault('name', "+".join(s.name for s in summands) or "0")
        super(ProjectiveSum, self).__init__(algebra, dims, action, **kwargs)
        self._summands = summands
        # Position bookkeeping: per vertex, a list of (summand index, path label)
        self._columns = []
        self._generators = []
        for v in range(n):
            cols = []
            for k, s in enumerate(summands):
                cols.extend((k, p) for p in s.labels[v])
            self._columns.append(tuple(cols))
        offsets = [0] * n
        for s in summands:
            self._generators.append((s.vertex, offsets[s.vertex]))
            for v in range(n):
                offsets[v] += s.dims[v]

    @property
    def summands(self):
        return self._summands

    @property
    def vertices(self):
        """ Top vertex index of every summand. """
        return tuple(s.vertex for s in self._summands)

    def columns(self, v):
        """ (summand index, path label) for each basis vector at vertex index ``v``. """
        return self._columns[v]

    def generator(self, k):
        """ Vertex index and position of the top generator of summand ``k``. """
        return self._generators[k]

    def multiplicities(self):
        """ Number of summands with top at each vertex. """
        counts = [0] * self._algebra.quiver.num_vertices
        for s in self._summands:
            counts[s.vertex] += 1
        return tuple(counts)


@export
class ModuleMap(object):
    """ Homomorphism of representations given by one matrix per vertex.

    **Keyword Arguments:**

    * ``check``: verify that the map commutes with every arrow. *Default: True*

    :param source: source module
    :type source: Representation
    :param target: target module
    :type target: Representation
    :param blocks: matrix per vertex, shape ``(target.dims[v], source.dims[v])``; None means zero
    :type blocks: list
    """
    __slots__ = ('_source', '_target', '_blocks')

    def __init__(self, source, target, blocks, **kwargs):
        n = len(source.dims)
        if len(blocks) != n:
            raise HomquiverException("A module map needs one block per vertex")
        result = []
        for v, blk in enumerate(blocks):
            shape = (target.dims[v], source.dims[v])
            if blk is None:
                blk = Matrix.zero(*shape)
            elif not isinstance(blk, Matrix):
                blk = Matrix(blk, shape[1])
            if blk.shape != shape:
                raise HomquiverException("Block at vertex index {0} must have shape {1}".format(v, shape),
                                         data=dict(shape=blk.shape))
            result.append(blk)
        self._source = source
        self._target = target
        self._blocks = tuple(result)
        if kwargs.get('check', True) and not self.is_homomorphism():
            raise HomquiverException("The blocks do not commute with the arrow action")

    def __repr__(self):
        return "ModuleMap({0} -> {1})".format(self._source, self._target)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, [None] * len(source.dims), check=False)

    @classmethod
    def identity(cls, module):
        return cls(module, module, [Matrix.identity(d) for d in module.dims], check=False)

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def blocks(self):
        """ Matrices per vertex.

        :getter: Gets the blocks
        :type: tuple
        """
        return self._blocks

    def block(self, v):
        return self._blocks[v]

    def is_homomorphism(self):
        """ Checks that every arrow square commutes. """
        for a_idx, (_, s, t) in enumerate(self._source.algebra.quiver.indexed_arrows()):
            lhs = linalg.matrix_multiply(self._target.matrices[a_idx], self._blocks[s])
            rhs = linalg.matrix_multiply(self._blocks[t], self._source.matrices[a_idx])
            if lhs != rhs:
                return False
        return True

    def compose(self, other):
        """ Composition ``self o other``.

        :param other: map whose target is the source of this map
        :type other: ModuleMap
        :rtype: ModuleMap
        """
        if other.target.dims != self._source.dims:
            raise HomquiverException("Maps are not composable")
        blocks = [linalg.matrix_multiply(a, b) for a, b in zip(self._blocks, other.blocks)]
        return ModuleMap(other.source, self._target, blocks, check=False)

    def __add__(self, other):
        return ModuleMap(self._source, self._target,
                         [linalg.matrix_add(a, b) for a, b in zip(self._blocks, other.blocks)], check=False)

    def scale(self, scalar):
        return ModuleMap(self._source, self._target, [b.scale(scalar) for b in self._blocks], check=False)

    def apply(self, v, vector):
        """ Image of a vector of the source space at vertex index ``v``. """
        return self._blocks[v].apply(vector)

    def rank(self):
        """ Total rank. """
        return sum(b.rank() for b in self._blocks)

    def is_zero(self):
        return all(b.is_zero() for b in self._blocks)

    def is_injective(self):
        return self.rank() == self._source.dimension

    def is_surjective(self):
        return self.rank() == self._target.dimension

    def is_isomorphism(self):
        return self._source.dims == self._target.dims and self.is_injective()


def _independent_columns(vectors):
    return [vectors[j] for j in linalg.independent_subset(vectors)]


@export
def simple(algebra, vertex):
    """ Simple module at the vertex: one-dimensional there, zero elsewhere, every arrow acting by zero.

    :param algebra: path algebra
    :param vertex: vertex identifier
    :rtype: Representation
    """
    return simple_at(algebra, algebra.quiver.vertex_index(vertex))


def simple_at(algebra, idx):
    """ Simple module at the vertex index. """
    dims = [0] * algebra.quiver.num_vertices
    dims[idx] = 1
    return Representation(algebra, dims, check=False, name="L{0}".format(algebra.quiver.vertices[idx]))


@export
def direct_sum(modules):
    """ Direct sum with its canonical injections and projections.

    :param modules: summands (at least one)
    :type modules: list
    :return: tuple of (sum, list of injections, list of projections)
    :rtype: tuple
    """
    modules = list(modules)
    if not modules:
        raise HomquiverException("Direct sum needs at least one summand")
    algebra = modules[0].algebra
    n = len(modules[0].dims)
    dims = [sum(m.dims[v] for m in modules) for v in range(n)]
    action = [linalg.block_diagonal([m.matrices[a] for m in modules]) for a in range(len(modules[0].matrices))]
    total = Representation(algebra, dims, action, check=False, name="+".join(m.name for m in modules))
    injections, projections = [], []
    offsets = [0] * n
    for m in modules:
        inc, proj = [], []
        for v in range(n):
            rows = [[1 if i == offsets[v] + j else 0 for j in range(m.dims[v])] for i in range(dims[v])]
            blk = Matrix(rows, m.dims[v])
            inc.append(blk)
            proj.append(blk.transpose())
            offsets[v] += m.dims[v]
        injections.append(ModuleMap(m, total, inc, check=False))
        projections.append(ModuleMap(total, m, proj, check=False))
    return total, injections, projections


@export
def submodule(module, basis, **kwargs):
    """ Submodule spanned by the given vectors together with its inclusion.

    :param module: ambient module
    :type module: Representation
    :param basis: spanning vectors per vertex (need not be independent)
    :type basis: list
    :return: tuple of (submodule, inclusion map)
    :rtype: tuple
    :raises HomquiverException: when the spans are not closed under the arrows
    """
    cols = [_independent_columns(list(vecs)) for vecs in basis]
    dims = [len(c) for c in cols]
    action = []
    for a_idx, (name, s, t) in enumerate(module.algebra.quiver.indexed_arrows()):
        span_t = Matrix.from_columns(cols[t], module.dims[t])
        images = []
        for vec in cols[s]:
            coords = linalg.solve(span_t, module.matrices[a_idx].apply(vec))
            if coords is None:
                raise HomquiverException("Subspaces are not closed under arrow '{0}'".format(name))
            images.append(coords)
        action.append(Matrix.from_columns(images, dims[t]))
    sub = Representation(module.algebra, dims, action, check=False, name=kwargs.get('name', "sub"))
    inclusion = ModuleMap(sub, module, [Matrix.from_columns(c, module.dims[v]) for v, c in enumerate(cols)],
                          check=False)
    return sub, inclusion


@export
def submodule_generated(module, generators):
    """ Smallest submodule containing the generators.

    :param module: ambient module
    :type module: Representation
    :param generators: list of (vertex index, vector)
    :type generators: list
    :return: tuple of (submodule, inclusion map)
    :rtype: tuple
    """
    n = len(module.dims)
    spans = [linalg.SparseEchelon() for _ in range(n)]
    basis = [[] for _ in range(n)]
    arrows = module.algebra.quiver.indexed_arrows()
    queue = list(generators)
    while queue:
        v, vec = queue.pop()
        if not spans[v].insert(sparse_from_dense(vec)):
            continue
        basis[v].append(list(vec))
        for a_idx, (_, s, t) in enumerate(arrows):
            if s == v:
                queue.append((t, module.matrices[a_idx].apply(vec)))
    return submodule(module, basis)


def quotient_with_positions(module, basis, **kwargs):
    """ Quotient by the submodule spanned by ``basis``, also returning the kept standard positions per vertex. """
    n = len(module.dims)
    keeps, echelons = [], []
    for v in range(n):
        keep, ech = linalg.complement_basis(basis[v], module.dims[v])
        keeps.append(keep)
        echelons.append(ech)
    proj_blocks = []
    for v in range(n):
        rows = [[Fraction(0)] * module.dims[v] for _ in keeps[v]]
        pos = {j: i for i, j in enumerate(keeps[v])}
        for j in range(module.dims[v]):
            for key, coeff in echelons[v].reduce({j: Fraction(1)}).items():
                rows[pos[key]][j] = coeff
        proj_blocks.append(Matrix(rows, module.dims[v]))
    action = []
    for a_idx, (name, s, t) in enumerate(module.algebra.quiver.indexed_arrows()):
        mat = module.matrices[a_idx]
        for vec in basis[s]:
            if echelons[t].reduce(sparse_from_dense(mat.apply(vec))):
                raise HomquiverException("Subspaces are not closed under arrow '{0}'".format(name))
        restricted = Matrix.from_columns([mat.column(j) for j in keeps[s]], module.dims[t])
        action.append(linalg.matrix_multiply(proj_blocks[t], restricted))
    dims = [len(k) for k in keeps]
    quot = Representation(module.algebra, dims, action, check=False, name=kwargs.get('name', "quot"))
    projection = ModuleMap(module, quot, proj_blocks, check=False)
    return quot, projection, keeps


@export
def quotient(module, basis, **kwargs):
    """ Quotient by the submodule spanned by the given vectors together with the projection.

    The quotient space at a vertex is identified with the span of the standard basis vectors complementing the
    submodule at the smallest possible positions.

    :param module: ambient module
    :type module: Representation
    :param basis: spanning vectors of the submodule per vertex
    :type basis: list
    :return: tuple of (quotient, projection map)
    :rtype: tuple
    """
    quot, projection, _ = quotient_with_positions(module, basis, **kwargs)
    return quot, projection


@export
def kernel(mapping):
    """ Kernel of a module map as a submodule of its source.

    :param mapping: module map
    :type mapping: ModuleMap
    :return: tuple of (kernel, inclusion map)
    :rtype: tuple
    """
    return submodule(mapping.source, [b.nullspace() for b in mapping.blocks], name="ker")


@export
def image(mapping):
    """ Image of a module map as a submodule of its target.

    :return: tuple of (image, inclusion map)
    :rtype: tuple
    """
    return submodule(mapping.target, [linalg.column_space(b) for b in mapping.blocks], name="im")


@export
def radical_vectors(module):
    """ Spanning vectors of the radical per vertex: the columns of the matrices of incoming arrows. """
    basis = [[] for _ in module.dims]
    for a_idx, (_, s, t) in enumerate(module.algebra.quiver.indexed_arrows()):
        mat = module.matrices[a_idx]
        basis[t].extend(mat.column(j) for j in range(mat.ncols))
    return basis


@export
def radical(module):
    """ Radical of the module, the span of all arrow images.

    :param module: module
    :type module: Representation
    :return: tuple of (radical, inclusion map)
    :rtype: tuple
    """
    return submodule(module, radical_vectors(module), name="rad")


@export
def top(module):
    """ Top ``M / rad M`` of the module.

    :return: tuple of (top, projection map)
    :rtype: tuple
    """
    return quotient(module, radical_vectors(module), name="top")


@export
def socle(module):
    """ Socle of the module, the vectors killed by every arrow.

    :return: tuple of (socle, inclusion map)
    :rtype: tuple
    """
    basis = []
    arrows = module.algebra.quiver.indexed_arrows()
    for v, dim in enumerate(module.dims):
        outgoing = [module.matrices[a] for a, (_, s, _) in enumerate(arrows) if s == v]
        basis.append(linalg.nullspace(linalg.vstack(outgoing, dim)))
    return submodule(module, basis, name="soc")


@export
def loewy_series(module, **kwargs):
    """ Radical filtration layers, top first.

    Each layer is semisimple and reported by its multiplicities of simples (a dimension vector).

    **Keyword Arguments:**

    * ``modules``: also return the layers as modules. *Default: False*

    :param module: module
    :type module: Representation
    :return: list of dimension vectors, or tuple of (dimension vectors, layer modules)
    :rtype: list, tuple
    """
    layers, layer_modules = [], []
    current = module
    while not current.is_zero():
        layer, _ = top(current)
        layers.append(layer.dims)
        layer_modules.append(layer)
        current, _ = radical(current)
    if kwargs.get('modules', False):
        return layers, layer_modules
    return layers


@export
def composition_factors(module):
    """ Multiplicity of every simple as a composition factor (the dimension vector). """
    return tuple(module.dims)


@export
def is_semisimple(module):
    """ Checks whether the radical vanishes. """
    return all(m.is_zero() for m in module.matrices)


@export
def hom_space(source, target):
    """ Space of module maps between two representations.

    The intertwining conditions ``N_a F_s = F_t M_a`` are solved exactly for the blocks ``F_v``.

    :param source: source module M
    :type source: Representation
    :param target: target module N
    :type target: Representation
    :return: tuple of (dimension, list of basis maps)
    :rtype: tuple
    """
    n = len(source.dims)
    offsets, total = [], 0
    for v in range(n):
        offsets.append(total)
        total += target.dims[v] * source.dims[v]

    def var(v, r, c):
        return offsets[v] + r * source.dims[v] + c

    equations = []
    for a_idx, (_, s, t) in enumerate(source.algebra.quiver.indexed_arrows()):
        mat_n = target.matrices[a_idx]
        mat_m = source.matrices[a_idx]
        for r in range(target.dims[t]):
            for c in range(source.dims[s]):
                eq = dict()
                for k in range(target.dims[s]):
                    coeff = mat_n[r, k]
                    if coeff != 0:
                        key = var(s, k, c)
                        eq[key] = eq.get(key, 0) + coeff
                for k in range(source.dims[t]):
                    coeff = mat_m[k, c]
                    if coeff != 0:
                        key = var(t, r, k)
                        eq[key] = eq.get(key, 0) - coeff
                eq = {k: v for k, v in eq.items() if v != 0}
                if eq:
                    equations.append(eq)
    maps = []
    for vec in linalg.nullspace_sparse(equations, total):
        blocks = []
        for v in range(n):
            rows = [[vec[var(v, r, c)] for c in range(source.dims[v])] for r in range(target.dims[v])]
            blocks.append(Matrix(rows, source.dims[v]))
        maps.append(ModuleMap(source, target, blocks, check=False))
    return len(maps), maps


@export
def is_isomorphic(mod1, mod2, **kwargs):
    """ Decides whether two modules are isomorphic.

    After comparing dimension vectors, a random rational combination of a basis of ``Hom(mod1, mod2)`` is tested for
    invertibility. A nonzero determinant proves the isomorphism; when every trial is singular the modules are
    reported as non-isomorphic, which is wrong with probability at most ``(dim / spread) ** trials``.

    **Keyword Arguments:**

    * ``seed``: seed of the random combinations. *Default: 0*
    * ``trials``: number of random combinations. *Default: 3*

    :param mod1: first module
    :type mod1: Representation
    :param mod2: second module
    :type mod2: Representation
    :rtype: bool
    """
    if mod1.dims != mod2.dims:
        return False
    if mod1.is_zero():
        return True
    dim, basis = hom_space(mod1, mod2)
    if dim == 0:
        return False
    rng = random.Random(kwargs.get('seed', 0))
    spread = 50 * mod1.dimension + 1
    for _ in range(kwargs.get('trials', 3)):
        combo = ModuleMap.zero(mod1, mod2)
        for m in basis:
            combo = combo + m.scale(rng.randint(-spread, spread))
        if all(linalg.determinant(b) != 0 for b in combo.blocks):
            return True
    logger.debug("No invertible map found between modules of dimension vector %s", mod1.dims)
    return False


def top_generators(module):
    """ Vectors lifting a basis of the top, as (vertex index, vector) pairs ordered by vertex. """
    result = []
    for v, vecs in enumerate(radical_vectors(module)):
        keep, _ = linalg.complement_basis(vecs, module.dims[v])
        for j in keep:
            vec = [Fraction(0)] * module.dims[v]
            vec[j] = Fraction(1)
            result.append((v, vec))
    return result


@export
def projective_map(proj, target, images):
    """ Module map out of a sum of labelled projectives given by the images of its top generators.

    :param proj: sum of projectives
    :type proj: ProjectiveSum
    :param target: target module
    :type target: Representation
    :param images: image of the generator of each summand, a vector at the summand's top vertex
    :type images: list
    :rtype: ModuleMap
    """
    blocks = []
    for v in range(len(target.dims)):
        cols = [target.path_matrix(path).apply(images[k]) for k, path in proj.columns(v)]
        blocks.append(Matrix.from_columns(cols, target.dims[v]))
    return ModuleMap(proj, target, blocks, check=False)


@export
def projective_cover(module, category=None):
    """ Projective cover of a nonzero module.

    The summands are the projectives of ``category`` (default: the module's algebra) at the vertices of the top of
    the module, with multiplicity.

    :param module: nonzero module
    :type module: Representation
    :param category: path algebra or Serre subcategory providing the projectives
    :return: tuple of (sum of projectives, surjection)
    :rtype: tuple
    :raises HomquiverException: for the zero module or a module outside the category
    """
    if module.is_zero():
        raise HomquiverException("The zero module has no projective cover")
    if category is None:
        category = module.algebra
    gens = top_generators(module)
    allowed = set(category.simples)
    if any(v not in allowed for v, _ in gens):
        raise HomquiverException("The module is not an object of the category '{0}'".format(category.name),
                                 data=dict(dims=module.dims))
    proj = ProjectiveSum(module.algebra, [category.projective(v) for v, _ in gens])
    return proj, projective_map(proj, module, [vec for _, vec in gens])


@export
def projective_sum(category, vertices):
    """ Sum of the indecomposable projectives of ``category`` at the given vertex indices. """
    return ProjectiveSum(category.ambient, [category.projective(v) for v in vertices])


@export
def radical_by_maximal_submodules(module):
    """ Radical as the intersection of the kernels of all maps to simple modules.

    This is the definition of the radical and serves as an audit of :func:`radical`.

    :return: tuple of (radical, inclusion map)
    :rtype: tuple
    """
    algebra = module.algebra
    rows = [[] for _ in module.dims]
    for i in range(algebra.quiver.num_vertices):
        _, maps = hom_space(module, simple_at(algebra, i))
        for f in maps:
            rows[i].append(f.block(i).row(0))
    basis = []
    for v, dim in enumerate(module.dims):
        basis.append(linalg.nullspace(Matrix(rows[v], dim)))
    return submodule(module, basis, name="rad")


@export
def radical_sequence(module):
    """ Short exact sequence ``rad M -> M -> top M`` as a pair of maps. """
    _, inclusion = radical(module)
    _, projection = top(module)
    return inclusion, projection


@export
def split_sequence(mod1, mod2):
    """ Split short exact sequence ``X -> X + Z -> Z`` as a pair of maps. """
    _, injections, projections = direct_sum([mod1, mod2])
    return injections[0], projections[1]


@export
def syzygy_sequence(module, category=None):
    """ Short exact sequence ``Omega M -> P -> M`` from the projective cover. """
    _, cover = projective_cover(module, category)
    _, inclusion = kernel(cover)
    return inclusion, cover


@export
def random_module(category, rng=None, **kwargs):
    """ Random module of the category: a sum of projectives modulo a random submodule of its radical.

    **Keyword Arguments:**

    * ``max_summands``: maximal number of projective summands. *Default: 2*
    * ``max_relations``: maximal number of random radical generators. *Default: 2*
    * ``coeff``: coefficients are drawn from ``[-coeff, coeff]``. *Default: 2*

    :param category: path algebra or Serre subcategory
    :param rng: random generator (default: seeded with 0)
    :type rng: random.Random
    :return: nonzero module
    :rtype: Representation
    """
    if rng is None:
        rng = random.Random(0)
    simples = list(category.simples)
    if not simples:
        raise HomquiverException("The category has no simple objects")
    coeff = kwargs.get('coeff', 2)
    count = rng.randint(1, kwargs.get('max_summands', 2))
    proj = projective_sum(category, sorted(rng.choice(simples) for _ in range(count)))
    rad = radical_vectors(proj)
    gens = []
    for _ in range(rng.randint(0, kwargs.get('max_relations', 2))):
        choices = [v for v, vecs in enumerate(rad) if vecs]
        if not choices:
            break
        v = rng.choice(choices)
        vec = [Fraction(0)] * proj.dims[v]
        for r in rad[v]:
            c = rng.randint(-coeff, coeff)
            vec = [a + c * b for a, b in zip(vec, r)]
        gens.append((v, vec))
    _, inclusion = submodule_generated(proj, gens)
    basis = [[inclusion.block(v).column(j) for j in range(inclusion.block(v).ncols)] for v in range(len(proj.dims))]
    result, _ = quotient(proj, basis, name="M")
    return result
