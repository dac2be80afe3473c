"""
.. module:: linalg
    :platform: Unix, Windows
    :synopsis: Provides exact rational linear algebra on sparse elimination kernels

.. moduleauthor:: homquiver developers

"""

from fractions import Fraction
from . import _linalg
from ._linalg import SparseEchelon
from ._utilities import export


@export
class Matrix(object):
    """ Dense matrix of exact rationals with an explicit shape.

    Zero-sized matrices are allowed in both directions; a representation which vanishes at a vertex acts through
    ``0 x n`` and ``n x 0`` matrices and these must keep their shape.

    .. code-block:: python

        from homquiver.linalg import Matrix

        m = Matrix([[1, 2], [3, 4]])
        print(m.rank())  # 2
        z = Matrix.zero(0, 3)
        print(z.shape)  # (0, 3)

    :param rows: list of rows (any values accepted by ``fractions.Fraction``)
    :type rows: list
    :param ncols: number of columns; required when ``rows`` is empty
    :type ncols: int
    """
    __slots__ = ('_rows', '_ncols')

    def __init__(self, rows, ncols=None):
        rows = [[Fraction(v) for v in r] for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("Number of columns must be given for a matrix without rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("All rows must have {0} entries".format(ncols))
        self._rows = rows
        self._ncols = int(ncols)

    @classmethod
    def zero(cls, nrows, ncols):
        """ Zero matrix of the given shape. """
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        """ Identity matrix of size ``n``. """
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows):
        """ Builds a matrix from a list of column vectors.

        :param columns: column vectors
        :type columns: list
        :param nrows: number of rows (required for the empty list)
        :type nrows: int
        """
        return cls([[col[i] for col in columns] for i in range(nrows)], len(columns))

    @classmethod
    def from_sparse_rows(cls, rows, ncols):
        """ Builds a matrix from sparse dict rows. """
        dense = []
        for r in rows:
            row = [0] * ncols
            for k, v in r.items():
                row[k] = v
            dense.append(row)
        return cls(dense, ncols)

    @property
    def shape(self):
        """ Matrix shape as (rows, columns).

        :getter: Gets the shape
        :type: tuple
        """
        return len(self._rows), self._ncols

    @property
    def nrows(self):
        return len(self._rows)

    @property
    def ncols(self):
        return self._ncols

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def row(self, i):
        return list(self._rows[i])

    def column(self, j):
        return [r[j] for r in self._rows]

    def to_list(self):
        """ Copy of the entries as a list of lists. """
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._ncols, tuple(tuple(r) for r in self._rows)))

    def __repr__(self):
        return "Matrix({0}x{1}: {2})".format(self.nrows, self.ncols, [[str(v) for v in r] for r in self._rows])

    __str__ = __repr__

    def __add__(self, other):
        return matrix_add(self, other)

    def __sub__(self, other):
        return matrix_add(self, other, coeff=-1)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return matrix_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar):
        """ Multiplies every entry with the scalar. """
        scalar = Fraction(scalar)
        return Matrix([[v * scalar for v in r] for r in self._rows], self._ncols)

    def is_zero(self):
        """ Checks whether every entry is zero. """
        return all(v == 0 for r in self._rows for v in r)

    def transpose(self):
        """ Transposed matrix. """
        return Matrix([[self._rows[i][j] for i in range(self.nrows)] for j in range(self._ncols)], self.nrows)

    def apply(self, vector):
        """ Matrix-vector product.

        :param vector: vector with ``ncols`` entries
        :type vector: list, tuple
        :return: vector with ``nrows`` entries
        :rtype: list
        """
        if len(vector) != self._ncols:
            raise ValueError("Vector size {0} does not match {1} columns".format(len(vector), self._ncols))
        return [sum((a * b for a, b in zip(r, vector) if a != 0 and b != 0), Fraction(0)) for r in self._rows]

    def sparse_rows(self):
        """ Rows as sparse dicts. """
        return [_linalg.sparse_from_dense(r) for r in self._rows]

    def rank(self):
        return rank(self)

    def nullspace(self):
        return nullspace(self)


@export
def matrix_add(mat1, mat2, coeff=1):
    """ Computes ``mat1 + coeff * mat2``.

    :param mat1: 1st matrix
    :type mat1: Matrix
    :param mat2: 2nd matrix
    :type mat2: Matrix
    :param coeff: multiplier of the 2nd matrix
    :return: resultant matrix
    :rtype: Matrix
    """
    if mat1.shape != mat2.shape:
        raise ValueError("Shape mismatch: {0} vs {1}".format(mat1.shape, mat2.shape))
    coeff = Fraction(coeff)
    return Matrix([[a + coeff * b for a, b in zip(r1, r2)] for r1, r2 in zip(mat1._rows, mat2._rows)], mat1.ncols)


@export
def matrix_multiply(mat1, mat2):
    """ Matrix multiplication, skipping zero entries of the left factor.

    :param mat1: 1st matrix
    :type mat1: Matrix
    :param mat2: 2nd matrix
    :type mat2: Matrix
    :return: resultant matrix
    :rtype: Matrix
    """
    if mat1.ncols != mat2.nrows:
        raise ValueError("Column - row size mismatch: {0} vs {1}".format(mat1.shape, mat2.shape))
    result = []
    rows2 = mat2._rows
    for r in mat1._rows:
        out = [Fraction(0)] * mat2.ncols
        for k, a in enumerate(r):
            if a == 0:
                continue
            for j, b in enumerate(rows2[k]):
                if b != 0:
                    out[j] += a * b
        result.append(out)
    return Matrix(result, mat2.ncols)


@export
def matrix_product(matrices, size):
    """ Multiplies a list of matrices from left to right; the empty product is the identity of ``size``. """
    result = Matrix.identity(size)
    for m in matrices:
        result = matrix_multiply(result, m)
    return result


@export
def matrix_scalar(matrix, scalar):
    """ Multiplies every entry of the matrix with the scalar. """
    return matrix.scale(scalar)


@export
def matrix_transpose(matrix):
    """ Transposed matrix. """
    return matrix.transpose()


@export
def matrix_identity(size):
    return Matrix.identity(size)


@export
def matrix_zero(nrows, ncols):
    return Matrix.zero(nrows, ncols)


@export
def hstack(matrices, nrows):
    """ Concatenates matrices horizontally.

    :param matrices: blocks with equal row counts
    :type matrices: list
    :param nrows: number of rows (required for the empty list)
    :type nrows: int
    """
    ncols = sum(m.ncols for m in matrices)
    rows = [[] for _ in range(nrows)]
    for m in matrices:
        if m.nrows != nrows:
            raise ValueError("Row count mismatch in horizontal stacking")
        for i in range(nrows):
            rows[i].extend(m._rows[i])
    return Matrix(rows, ncols)


@export
def vstack(matrices, ncols):
    """ Concatenates matrices vertically.

    :param matrices: blocks with equal column counts
    :type matrices: list
    :param ncols: number of columns (required for the empty list)
    :type ncols: int
    """
    rows = []
    for m in matrices:
        if m.ncols != ncols:
            raise ValueError("Column count mismatch in vertical stacking")
        rows.extend(m.to_list())
    return Matrix(rows, ncols)


@export
def block_diagonal(matrices):
    """ Block diagonal matrix built from the input blocks. """
    nrows = sum(m.nrows for m in matrices)
    ncols = sum(m.ncols for m in matrices)
    result = Matrix.zero(nrows, ncols)
    r0 = c0 = 0
    for m in matrices:
        for i in range(m.nrows):
            for j in range(m.ncols):
                result._rows[r0 + i][c0 + j] = m._rows[i][j]
        r0 += m.nrows
        c0 += m.ncols
    return result


@export
def row_echelon(matrix, pivot='first'):
    """ Computes the reduced row echelon form of the matrix.

    :param matrix: input matrix
    :type matrix: Matrix
    :param pivot: ``first`` takes the leftmost nonzero entry of a row as its pivot, ``last`` the rightmost one
    :type pivot: str
    :return: tuple of (list of sparse rows sorted by pivot, list of pivot columns)
    :rtype: tuple
    """
    ech = SparseEchelon(pivot=pivot)
    for r in matrix.sparse_rows():
        ech.insert(r)
    return ech.rows(), ech.pivots


@export
def rank(matrix):
    """ Rank of the matrix. """
    # Eliminate along the shorter side
    if matrix.nrows > matrix.ncols:
        matrix = matrix.transpose()
    ech = SparseEchelon()
    for r in matrix.sparse_rows():
        ech.insert(r)
    return len(ech)


@export
def nullspace(matrix):
    """ Basis of the right null space ``{x : matrix * x = 0}``.

    :param matrix: input matrix
    :type matrix: Matrix
    :return: list of basis vectors, one per free column in ascending order
    :rtype: list
    """
    return nullspace_sparse(matrix.sparse_rows(), matrix.ncols)


@export
def nullspace_sparse(rows, ncols):
    """ Null space of a system given by sparse dict rows over the columns ``0 .. ncols - 1``.

    :param rows: sparse equations
    :type rows: list
    :param ncols: number of unknowns
    :type ncols: int
    :return: list of dense basis vectors, one per free column in ascending order
    :rtype: list
    """
    ech = SparseEchelon()
    for r in rows:
        ech.insert(r)
    pivots = ech.pivots
    reduced = [ech.row(p) for p in pivots]
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for p, r in zip(pivots, reduced):
            coeff = r.get(free, 0)
            if coeff != 0:
                vec[p] = -coeff
        basis.append(vec)
    return basis


@export
def complement_basis(vectors, size):
    """ Standard basis positions whose unit vectors complete the span of ``vectors`` to the whole space.

    Pivots are taken at the largest positions, hence the complement keeps the smallest possible positions.

    :param vectors: spanning vectors of a subspace
    :type vectors: list
    :param size: dimension of the ambient space
    :type size: int
    :return: tuple of (ascending list of positions, echelon of the subspace)
    :rtype: tuple
    """
    ech = SparseEchelon(pivot='last')
    for v in vectors:
        ech.insert(_linalg.sparse_from_dense(v))
    return [j for j in range(size) if j not in ech], ech


@export
def solve(matrix, rhs):
    """ Finds one solution of ``matrix * x = rhs``, free variables set to zero.

    :param matrix: coefficient matrix
    :type matrix: Matrix
    :param rhs: right hand side vector
    :type rhs: list, tuple
    :return: a solution vector or None if the system is inconsistent
    :rtype: list
    """
    if len(rhs) != matrix.nrows:
        raise ValueError("Right hand side size does not match the number of rows")
    ncols = matrix.ncols
    ech = SparseEchelon()
    for r, b in zip(matrix.sparse_rows(), rhs):
        if b != 0:
            r[ncols] = Fraction(b)
        ech.insert(r)
    if ncols in ech:
        return None
    sol = [Fraction(0)] * ncols
    for p in ech.pivots:
        sol[p] = ech.row(p).get(ncols, Fraction(0))
    return sol


@export
def column_space(matrix):
    """ Basis of the column space, chosen among the columns of the matrix.

    :return: list of column vectors
    :rtype: list
    """
    columns = [matrix.column(j) for j in range(matrix.ncols)]
    return [columns[j] for j in independent_subset(columns)]


@export
def span_dimension(vectors):
    """ Dimension of the span of the input vectors. """
    ech = SparseEchelon()
    for v in vectors:
        ech.insert(_linalg.sparse_from_dense(v))
    return len(ech)


@export
def independent_subset(vectors, start=None):
    """ Greedy choice of vectors extending the span of ``start``.

    :param vectors: candidate vectors, scanned in order
    :type vectors: list
    :param start: vectors already spanned (not returned)
    :type start: list
    :return: indices of the chosen candidates
    :rtype: list
    """
    ech = SparseEchelon()
    for v in start or []:
        ech.insert(_linalg.sparse_from_dense(v))
    chosen = []
    for idx, v in enumerate(vectors):
        if ech.insert(_linalg.sparse_from_dense(v)):
            chosen.append(idx)
    return chosen


@export
def determinant(matrix):
    """ Determinant by fraction-exact Gaussian elimination.

    :param matrix: square matrix
    :type matrix: Matrix
    :return: determinant
    :rtype: fractions.Fraction
    """
    n = matrix.nrows
    if n != matrix.ncols:
        raise ValueError("The input must be a square matrix")
    m = matrix.to_list()
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor != 0:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det
