"""Dense exact linear algebra: matrices, subspaces, quotients, tensor legs.

Conventions used throughout the package:

* A linear map V -> W with dim V = n, dim W = m is an m x n matrix acting
  on column vectors; composition is ``@``.
* Tensor products flatten indices as (i, j) -> i * dim2 + j, where dim2 is
  the dimension of the *second* factor.  This is the ordinary Kronecker
  convention, and it is associative: flattening (i, j, k) via two steps in
  either order gives i * d2 * d3 + j * d3 + k.
* A subspace is held in canonical form: the reduced row echelon basis of
  its span, with zero rows dropped.  Two subspaces are equal iff their
  canonical bases are equal entry by entry.

Matrices are immutable (rows stored as tuples) and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldMismatchError


class DimensionMismatchError(ValueError):
    """Raised when shapes or ambient dimensions do not line up."""


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        if rows:
            ncols_found = len(rows[0])
            if any(len(r) != ncols_found for r in rows):
                raise DimensionMismatchError("ragged rows")
            if ncols is not None and ncols != ncols_found:
                raise DimensionMismatchError("ncols does not match rows")
            ncols = ncols_found
        elif ncols is None:
            raise DimensionMismatchError("empty matrix needs explicit ncols")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        # __slots__ + frozen __setattr__ breaks default pickling
        return (Matrix, (self.field, self.rows, self.ncols))

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def identity(field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return Matrix(
            field, [[one if i == j else zero for j in range(n)] for i in range(n)], n
        )

    @staticmethod
    def zeros(field, m: int, n: int) -> "Matrix":
        zero = field.zero
        return Matrix(field, [[zero] * n for _ in range(m)], n)

    @staticmethod
    def column(field, entries) -> "Matrix":
        return Matrix(field, [[x] for x in entries], 1)

    @staticmethod
    def row(field, entries) -> "Matrix":
        return Matrix(field, [list(entries)], None if entries else 0)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} + {other.shape}")
        add = self.field.add
        return Matrix(
            self.field,
            [
                [add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} - {other.shape}")
        sub = self.field.sub
        return Matrix(
            self.field,
            [
                [sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.ncols,
        )

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c):
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix(
            self.field, [[mul(c, a) for a in r] for r in self.rows], self.ncols
        )

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError(f"{self.shape} @ {other.shape}")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        orows = other.rows
        out = []
        for row in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if a == 0:
                    continue
                for j, b in enumerate(orows[k]):
                    if b == 0:
                        continue
                    acc[j] = add(acc[j], mul(a, b))
            out.append(acc)
        return Matrix(f, out, other.ncols)

    def apply(self, vec) -> tuple:
        """Apply to a column vector given as a sequence; returns a tuple."""
        if len(vec) != self.ncols:
            raise DimensionMismatchError(f"{self.shape} applied to len {len(vec)}")
        f = self.field
        add, mul, zero = f.add, f.mul, f.zero
        vec = [f.coerce(x) for x in vec]
        out = []
        for row in self.rows:
            acc = zero
            for a, x in zip(row, vec):
                if a != 0 and x != 0:
                    acc = add(acc, mul(a, x))
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def stack(self, other) -> "Matrix":
        """Vertical stack."""
        self._check(other)
        if self.ncols != other.ncols:
            raise DimensionMismatchError("stack: column counts differ")
        return Matrix(self.field, list(self.rows) + list(other.rows), self.ncols)

    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise DimensionMismatchError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix(
            self.field,
            [list(r) + list(Matrix.identity(self.field, n).rows[i]) for i, r in enumerate(self.rows)],
            2 * n,
        )
        red, _, pivots = rref(aug)
        if sum(1 for p in pivots if p < n) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(self.field, [r[n:] for r in red.rows], n)


def rref(mat: Matrix):
    """Reduced row echelon form.  Returns (rref_matrix, rank, pivot_columns)."""
    f = mat.field
    rows = [list(r) for r in mat.rows]
    m, n = mat.shape
    pivots = []
    r = 0
    for c in range(n):
        pivot_row = None
        for i in range(r, m):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        lead = rows[r][c]
        if lead != f.one:
            inv = f.inv(lead)
            rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                t = rows[i][c]
                rowr = rows[r]
                rows[i] = [f.sub(x, f.mul(t, y)) for x, y in zip(rows[i], rowr)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return Matrix(f, rows, n), r, tuple(pivots)


def kernel(mat: Matrix) -> "Subspace":
    """Null space {x : mat @ x = 0} as a canonical subspace of k^ncols."""
    f = mat.field
    red, rank, pivots = rref(mat)
    n = mat.ncols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [f.zero] * n
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(red.rows[r][fc])
        basis.append(v)
    return Subspace.span(f, n, basis)


def solve(mat: Matrix, rhs) -> tuple | None:
    """One solution of mat @ x = rhs (free variables set to 0), or None."""
    f = mat.field
    if len(rhs) != mat.nrows:
        raise DimensionMismatchError("rhs length does not match row count")
    aug = Matrix(f, [list(r) + [f.coerce(b)] for r, b in zip(mat.rows, rhs)], mat.ncols + 1)
    red, rank, pivots = rref(aug)
    if mat.ncols in pivots:
        return None
    x = [f.zero] * mat.ncols
    for r, pc in enumerate(pivots):
        x[pc] = red.rows[r][mat.ncols]
    return tuple(x)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: (a kron b)[i*p+k, j*q+l] = a[i,j] * b[k,l]."""
    a._check(b)
    f = a.field
    mul, zero, one = f.mul, f.zero, f.one
    out = []
    bc = b.ncols
    for arow in a.rows:
        for brow in b.rows:
            row = []
            for x in arow:
                if x == 0:
                    row.extend([zero] * bc)
                elif x == one:
                    row.extend(brow)
                else:
                    row.extend(mul(x, y) for y in brow)
            out.append(row)
    return Matrix(f, out, a.ncols * b.ncols)


def flip_map(field, m: int, n: int) -> Matrix:
    """The swap V (x) W -> W (x) V with dim V = m, dim W = n.

    Sends basis index i*n + j to j*m + i.
    """
    zero, one = field.zero, field.one
    rows = [[zero] * (m * n) for _ in range(m * n)]
    for i in range(m):
        for j in range(n):
            rows[j * m + i][i * n + j] = one
    return Matrix(field, rows, m * n)


def unit_vector(field, n: int, i: int) -> tuple:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^ambient in canonical (RREF basis) form."""

    field: object
    ambient: int
    basis: Matrix  # full row rank, reduced row echelon, no zero rows

    @staticmethod
    def span(field, ambient: int, vectors) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionMismatchError(
                    f"vector of length {len(v)} in ambient {ambient}"
                )
        if not vecs:
            return Subspace(field, ambient, Matrix(field, [], ambient))
        red, rank, _ = rref(Matrix(field, vecs, ambient))
        return Subspace(field, ambient, Matrix(field, red.rows[:rank], ambient))

    @staticmethod
    def zero(field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, Matrix(field, [], ambient))

    @staticmethod
    def full(field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, Matrix.identity(field, ambient))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def reduce(self, vec) -> tuple:
        """Residue of vec after subtracting its projection onto the span."""
        f = self.field
        v = [f.coerce(x) for x in vec]
        if len(v) != self.ambient:
            raise DimensionMismatchError("vector/ambient mismatch")
        for row, pc in zip(self.basis.rows, self._pivots()):
            c = v[pc]
            if c != 0:
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        return tuple(v)

    def _pivots(self):
        # basis is already RREF; pivots are the leading columns
        pivots = []
        for row in self.basis.rows:
            for j, x in enumerate(row):
                if x != 0:
                    pivots.append(j)
                    break
        return tuple(pivots)

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def key(self):
        """Canonical sorting/identity key: (dim, flattened basis entries)."""
        return (self.dim, tuple(x for row in self.basis.rows for x in row))

    def __le__(self, other) -> bool:
        return subspace_le(self, other)


def _check_same_ambient(a: Subspace, b: Subspace):
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    if a.ambient != b.ambient:
        raise DimensionMismatchError(f"ambient {a.ambient} vs {b.ambient}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return Subspace.span(a.field, a.ambient, list(a.basis.rows) + list(b.basis.rows))


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection, computed as the joint kernel of both quotient maps."""
    _check_same_ambient(a, b)
    pa, _ = quotient_data(a)
    pb, _ = quotient_data(b)
    return kernel(pa.stack(pb))


def subspace_le(a: Subspace, b: Subspace) -> bool:
    _check_same_ambient(a, b)
    return all(b.contains(row) for row in a.basis.rows)


def quotient_data(v: Subspace):
    """Projection and section for k^n -> k^n / v.

    Returns (proj, incl) with proj an (n - dim v) x n matrix whose kernel is
    exactly v, incl the coordinate inclusion on the non-pivot columns of v's
    canonical basis, and proj @ incl the identity.
    """
    f = v.field
    n = v.ambient
    pivots = v._pivots()
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    q = len(free)
    proj_rows = [[f.zero] * n for _ in range(q)]
    for t, fc in enumerate(free):
        proj_rows[t][fc] = f.one
        for r, pc in enumerate(pivots):
            proj_rows[t][pc] = f.neg(v.basis.rows[r][fc])
    incl_rows = [[f.zero] * q for _ in range(n)]
    for t, fc in enumerate(free):
        incl_rows[fc][t] = f.one
    return Matrix(f, proj_rows, n), Matrix(f, incl_rows, q)


def tensor_subspace(a: Subspace, w_dim: int, side: str = "right") -> Subspace:
    """a (x) k^w (side='left') or k^w (x) a (side='right' ambient first factor).

    side='left':  the subspace a (x) k^w of k^(ambient*w)
    side='right': the subspace k^w (x) a of k^(w*ambient)
    """
    f = a.field
    if side == "left":
        vecs = []
        for row in a.basis.rows:
            for j in range(w_dim):
                v = [f.zero] * (a.ambient * w_dim)
                for i, x in enumerate(row):
                    v[i * w_dim + j] = x
                vecs.append(v)
        return Subspace.span(f, a.ambient * w_dim, vecs)
    if side == "right":
        vecs = []
        for j in range(w_dim):
            for row in a.basis.rows:
                v = [f.zero] * (w_dim * a.ambient)
                for i, x in enumerate(row):
                    v[j * a.ambient + i] = x
                vecs.append(v)
        return Subspace.span(f, w_dim * a.ambient, vecs)
    raise ValueError("side must be 'left' or 'right'")
