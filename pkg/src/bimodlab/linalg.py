"""Dense exact matrices: reduced row echelon form, kernels, solving.

Pivoting is deterministic (first nonzero entry, scanning columns left to
right and rows top to bottom), so every derived basis -- kernel bases,
echelon complements, particular solutions -- is reproducible.
"""

from typing import NamedTuple

from .fields import FieldError


class RrefResult(NamedTuple):
    matrix: "Matrix"
    pivots: tuple
    rank: int


class Matrix:
    """An immutable nrows x ncols matrix over a fixed exact field."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field, rows, ncols=None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise FieldError("ragged rows")
            if ncols is not None and ncols != width:
                raise FieldError("ncols mismatch")
            ncols = width
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_rref", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, field, n):
        zero, one = field.zero, field.one
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_int_rows(cls, field, rows, ncols=None):
        return cls(field, [[field.of(x) for x in r] for r in rows], ncols)

    @classmethod
    def from_columns(cls, field, columns, nrows=None):
        cols = [tuple(c) for c in columns]
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return cls(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    # -- arithmetic --------------------------------------------------------

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise FieldError("shape mismatch %sx%s @ %sx%s"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        zero = self.field.zero
        bt = other.rows
        out = []
        for row in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if a:
                    brow = bt[k]
                    for j, b in enumerate(brow):
                        if b:
                            acc[j] = acc[j] + a * b
            out.append(acc)
        return Matrix(self.field, out, other.ncols)

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise FieldError("shape mismatch in addition")
        return Matrix(self.field,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise FieldError("shape mismatch in subtraction")
        return Matrix(self.field,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def scale(self, c):
        return Matrix(self.field, [[c * a for a in r] for r in self.rows], self.ncols)

    def __neg__(self):
        return self.scale(-self.field.one)

    def apply(self, vec):
        """Matrix times column vector, as a tuple."""
        if len(vec) != self.ncols:
            raise FieldError("vector length %d != ncols %d" % (len(vec), self.ncols))
        zero = self.field.zero
        out = []
        for row in self.rows:
            s = zero
            for a, x in zip(row, vec):
                if a and x:
                    s = s + a * x
            out.append(s)
        return tuple(out)

    def transpose(self):
        return Matrix(self.field,
                      [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
                      self.nrows)

    def kron(self, other):
        """Kronecker product; row-major index (i, k) -> i*other.nrows + k."""
        out = []
        for arow in self.rows:
            for brow in other.rows:
                out.append([a * b for a in arow for b in brow])
        return Matrix(self.field, out, self.ncols * other.ncols)

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.ncols == other.ncols and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(a) for a in r) for r in self.rows)
        return "Matrix(%dx%d: %s)" % (self.nrows, self.ncols, body)

    # -- echelon forms -----------------------------------------------------

    def rref(self):
        """Reduced row echelon form with pivot columns and rank (cached)."""
        cached = self._rref
        if cached is not None:
            return cached
        work = [list(r) for r in self.rows]
        nrows, ncols = self.nrows, self.ncols
        pivots = []
        pr = 0
        for pc in range(ncols):
            pivot_row = None
            for i in range(pr, nrows):
                if work[i][pc]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != pr:
                work[pr], work[pivot_row] = work[pivot_row], work[pr]
            inv = work[pr][pc]
            if inv != 1:
                row = work[pr]
                for j in range(pc, ncols):
                    if row[j]:
                        row[j] = row[j] / inv
            prow = work[pr]
            for i in range(nrows):
                if i == pr:
                    continue
                f = work[i][pc]
                if f:
                    row = work[i]
                    for j in range(pc, ncols):
                        if prow[j]:
                            row[j] = row[j] - f * prow[j]
            pivots.append(pc)
            pr += 1
            if pr == nrows:
                break
        result = RrefResult(Matrix(self.field, work, ncols), tuple(pivots), len(pivots))
        object.__setattr__(self, "_rref", result)
        return result

    def rank(self):
        return self.rref().rank

    def kernel_basis(self):
        """Basis of the right null space in the echelon parametrization.

        One vector per free column f: entry 1 at f, minus the rref entry at
        each pivot column, zero elsewhere.
        """
        red, pivots, rank = self.rref()
        zero, one = self.field.zero, self.field.one
        pivot_set = set(pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            v = [zero] * self.ncols
            v[f] = one
            for i, p in enumerate(pivots):
                v[p] = -red.rows[i][f]
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """One solution of self @ x = b (free variables zero), or None."""
        if len(b) != self.nrows:
            raise FieldError("rhs length %d != nrows %d" % (len(b), self.nrows))
        aug = Matrix(self.field, [list(r) + [bv] for r, bv in zip(self.rows, b)],
                     self.ncols + 1)
        red, pivots, rank = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return None
        zero = self.field.zero
        x = [zero] * self.ncols
        for i, p in enumerate(pivots):
            x[p] = red.rows[i][self.ncols]
        return tuple(x)

    def column_space_basis(self):
        """Canonical basis of the column space: nonzero rows of rref(self^T)."""
        red, pivots, rank = self.transpose().rref()
        return [red.rows[i] for i in range(rank)]

    def inverse(self):
        if self.nrows != self.ncols:
            raise FieldError("inverse of a non-square matrix")
        n = self.nrows
        ident = Matrix.identity(self.field, n)
        aug = Matrix(self.field,
                     [list(r) + list(e) for r, e in zip(self.rows, ident.rows)], 2 * n)
        red, pivots, rank = aug.rref()
        if rank != n or tuple(pivots) != tuple(range(n)):
            return None
        return Matrix(self.field, [r[n:] for r in red.rows[:n]], n)


# -- vector helpers ---------------------------------------------------------

def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def vec_scale(c, u):
    return tuple(c * a for a in u)

def vec_is_zero(u):
    return all(not a for a in u)

def zero_vec(field, n):
    return (field.zero,) * n

def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def hstack(mats):
    mats = list(mats)
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise FieldError("hstack row mismatch")
    rows = [sum((list(m.rows[i]) for m in mats), []) for i in range(nrows)]
    return Matrix(mats[0].field, rows, sum(m.ncols for m in mats))


def vstack(mats):
    mats = list(mats)
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise FieldError("vstack column mismatch")
    rows = []
    for m in mats:
        rows.extend(m.rows)
    return Matrix(mats[0].field, rows, ncols)


def block_diag(field, mats):
    mats = list(mats)
    nrows = sum(m.nrows for m in mats)
    ncols = sum(m.ncols for m in mats)
    zero = field.zero
    out = [[zero] * ncols for _ in range(nrows)]
    r0 = c0 = 0
    for m in mats:
        for i, row in enumerate(m.rows):
            orow = out[r0 + i]
            for j, a in enumerate(row):
                orow[c0 + j] = a
        r0 += m.nrows
        c0 += m.ncols
    return Matrix(field, out, ncols)


class Subspace:
    """A subspace of k^n held in canonical (rref) form."""

    def __init__(self, field, n, spanning_vectors):
        self.field = field
        self.ambient_dim = n
        red, pivots, rank = Matrix(field, spanning_vectors, n).rref()
        self.basis = [red.rows[i] for i in range(rank)]
        self.pivots = pivots
        self.dim = rank

    def reduce(self, vec):
        """Subtract the unique combination of basis rows clearing pivot coords."""
        v = list(vec)
        for i, p in enumerate(self.pivots):
            c = v[p]
            if c:
                row = self.basis[i]
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        return tuple(v)

    def contains(self, vec):
        return vec_is_zero(self.reduce(vec))

    def contains_all(self, vecs):
        return all(self.contains(v) for v in vecs)

    def coords_of(self, vec):
        """Coordinates in terms of self.basis, or None if vec is outside."""
        v = list(vec)
        coords = []
        for i, p in enumerate(self.pivots):
            c = v[p]
            coords.append(c)
            if c:
                row = self.basis[i]
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        if not vec_is_zero(v):
            return None
        return tuple(coords)


class Quotient:
    """k^n modulo a subspace, with the deterministic echelon-complement basis.

    The quotient basis is the set of residues of the standard basis vectors
    at the non-pivot coordinates of the subspace's rref.
    """

    def __init__(self, field, n, spanning_vectors):
        self.field = field
        self.ambient_dim = n
        self.subspace = Subspace(field, n, spanning_vectors)
        pivot_set = set(self.subspace.pivots)
        self.free = tuple(j for j in range(n) if j not in pivot_set)
        self.dim = len(self.free)

    def project(self, vec):
        reduced = self.subspace.reduce(vec)
        return tuple(reduced[j] for j in self.free)

    def lift(self, coords):
        """The representative supported on the free coordinates."""
        v = [self.field.zero] * self.ambient_dim
        for j, c in zip(self.free, coords):
            v[j] = c
        return tuple(v)

    def projection_matrix(self):
        n = self.ambient_dim
        cols = [self.project(unit_vec(self.field, n, j)) for j in range(n)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def lift_matrix(self):
        cols = [self.lift(unit_vec(self.field, self.dim, i)) for i in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.ambient_dim)

    def induced_map(self, operator):
        """The matrix of the operator on the quotient.

        The operator (an ambient n x n matrix) must preserve the subspace;
        this is not re-checked here.
        """
        cols = [self.project(operator.apply(self.lift(unit_vec(self.field, self.dim, i))))
                for i in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)


def intertwiner_basis(field, shape, constraints):
    """Basis of {T : T @ S = G @ T for every (S, G) in constraints}.

    shape is (target_dim, source_dim); S is source_dim square, G target_dim
    square.  Returns matrices, ordered by the echelon parametrization of the
    row-major vectorization of T.
    """
    dt, ds = shape
    if dt == 0 or ds == 0:
        return []
    zero = field.zero
    rows = []
    for S, G in constraints:
        for r in range(dt):
            grow = G.rows[r]
            for c in range(ds):
                row = [zero] * (dt * ds)
                for k in range(ds):
                    a = S.rows[k][c]
                    if a:
                        row[r * ds + k] = row[r * ds + k] + a
                for k in range(dt):
                    g = grow[k]
                    if g:
                        row[k * ds + c] = row[k * ds + c] - g
                rows.append(row)
    if not rows:
        ident = Matrix.identity(field, dt * ds)
        kernel = [ident.rows[i] for i in range(dt * ds)]
    else:
        kernel = Matrix(field, rows, dt * ds).kernel_basis()
    out = []
    for v in kernel:
        out.append(Matrix(field, [v[i * ds:(i + 1) * ds] for i in range(dt)], ds))
    return out


def solve_affine_operator(field, shape, homogeneous, inhomogeneous):
    """Solve linear conditions on a dt x ds matrix T.

    homogeneous: list of (S, G) meaning T @ S - G @ T = 0.
    inhomogeneous: list of (P, R) meaning P @ T = R  (P is m x dt, R m x ds).
    Returns one solution (echelon particular solution) or None.
    """
    dt, ds = shape
    zero = field.zero
    rows, rhs = [], []
    for S, G in homogeneous:
        for r in range(dt):
            grow = G.rows[r]
            for c in range(ds):
                row = [zero] * (dt * ds)
                for k in range(ds):
                    a = S.rows[k][c]
                    if a:
                        row[r * ds + k] = row[r * ds + k] + a
                for k in range(dt):
                    g = grow[k]
                    if g:
                        row[k * ds + c] = row[k * ds + c] - g
                rows.append(row)
                rhs.append(zero)
    for P, R in inhomogeneous:
        for r in range(P.nrows):
            prow = P.rows[r]
            for c in range(ds):
                row = [zero] * (dt * ds)
                for k in range(dt):
                    a = prow[k]
                    if a:
                        row[k * ds + c] = row[k * ds + c] + a
                rows.append(row)
                rhs.append(R.rows[r][c])
    if dt * ds == 0:
        consistent = all(not b for b in rhs)
        return Matrix.zeros(field, dt, ds) if consistent else None
    sol = Matrix(field, rows, dt * ds).solve(tuple(rhs))
    if sol is None:
        return None
    return Matrix(field, [sol[i * ds:(i + 1) * ds] for i in range(dt)], ds)
