"""Finite dimensional associative unital algebras given by structure constants.

An Algebra knows its multiplication table, unit, Jacobson radical, a
complete ordered list of orthogonal primitive idempotents, and the
partition of idempotents into connected components.  Construction verifies
associativity, the unit law, and splitness: every simple quotient must be
one dimensional over the base field (NotSplit otherwise), which is the
checkable surrogate for working over a big enough field.
"""

from .errors import (AssociativityViolation, NoUnit, NotSplit, UnsupportedRadical)
from .fields import QQ
from .linalg import (Matrix, Quotient, Subspace, unit_vec, vec_add, vec_is_zero,
                     vec_scale, vec_sub, zero_vec)
from .quivers import QuiverPresentation, build_bound_algebra, compose


class Algebra:
    """A basic split finite dimensional algebra over an exact field."""

    def __init__(self, field, mul_table, unit, labels, radical_basis, idempotents,
                 quiver_data=None, generator_indices=None):
        self.field = field
        self.dim = len(mul_table)
        self.mul_table = tuple(tuple(tuple(v) for v in row) for row in mul_table)
        self.unit = tuple(unit)
        self.basis_labels = tuple(labels)
        self.radical_basis = tuple(tuple(v) for v in radical_basis)
        self.idempotents = tuple(tuple(v) for v in idempotents)
        self.quiver_data = quiver_data
        if generator_indices is None:
            generator_indices = tuple(range(self.dim))
        self.generator_indices = tuple(generator_indices)
        self._left_mult = [None] * self.dim
        self._right_mult = [None] * self.dim
        self.radical = Subspace(field, self.dim, self.radical_basis)
        self._finish()

    # -- element arithmetic --------------------------------------------------

    def multiply(self, u, v):
        """Product of two coordinate vectors."""
        out = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.mul_table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(row[j]):
                    if s:
                        out[k] = out[k] + c * s
        return tuple(out)

    def left_mult(self, i):
        """Matrix of left multiplication by basis element i."""
        m = self._left_mult[i]
        if m is None:
            cols = [self.mul_table[i][j] for j in range(self.dim)]
            m = Matrix.from_columns(self.field, cols, self.dim)
            self._left_mult[i] = m
        return m

    def right_mult(self, j):
        """Matrix of right multiplication by basis element j."""
        m = self._right_mult[j]
        if m is None:
            cols = [self.mul_table[i][j] for i in range(self.dim)]
            m = Matrix.from_columns(self.field, cols, self.dim)
            self._right_mult[j] = m
        return m

    def left_mult_elem(self, vec):
        cols = [self.multiply(vec, unit_vec(self.field, self.dim, j))
                for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_mult_elem(self, vec):
        cols = [self.multiply(unit_vec(self.field, self.dim, j), vec)
                for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def power(self, vec, n):
        out = self.unit
        for _ in range(n):
            out = self.multiply(out, vec)
        return out

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_structure_constants(cls, field, table, unit, labels=None):
        """Build from a d x d x d scalar array; verifies everything.

        Radical computation uses the trace form of the regular representation
        and therefore requires characteristic zero; prime field algebras must
        come from quiver presentations.
        """
        dim = len(table)
        table = tuple(tuple(tuple(v) for v in row) for row in table)
        for i in range(dim):
            if len(table[i]) != dim or any(len(v) != dim for v in table[i]):
                raise NoUnit("structure constant table is not %d^3" % dim)
        _verify_associativity(field, table)
        unit = tuple(unit)
        _verify_unit(field, table, unit)
        if labels is None:
            labels = ["b%d" % i for i in range(dim)]
        if field.characteristic != 0:
            raise UnsupportedRadical(
                "radical from raw structure constants needs characteristic 0")
        radical_basis = _trace_form_radical(field, table)
        idempotents = _primitive_idempotents(field, table, unit, radical_basis)
        return cls(field, table, unit, labels, radical_basis, idempotents)

    @classmethod
    def from_quiver(cls, quiver):
        """Bound quiver algebra; the arrow ideal is the radical and the
        vertex paths are the idempotents, ordered by input vertex order."""
        data = build_bound_algebra(quiver)
        field = quiver.field
        basis_paths = data["basis_paths"]
        reduction = data["reduction"]
        dim = data["dim"]
        pos = {p: i for i, p in enumerate(basis_paths)}
        zero = (field.zero,) * dim
        table = []
        for p in basis_paths:
            row = []
            for q in basis_paths:
                walk = compose(q, p)  # product p*q traverses q first
                if walk is None:
                    row.append(zero)
                elif walk in reduction:
                    row.append(reduction[walk])
                else:
                    row.append(zero)  # truncated: the walk lies in J^m
                    assert len(walk) >= data["truncation"]
            table.append(tuple(row))
        _verify_associativity(field, table)
        trivials = [p for p in basis_paths if not p.arrows]
        if len(trivials) != len(quiver.vertices):
            # unreachable: relations live in the square of the arrow ideal
            raise NoUnit("vertex paths do not survive in the quotient")
        unit = zero
        for p in trivials:
            unit = vec_add(unit, unit_vec(field, dim, pos[p]))
        _verify_unit(field, table, unit)
        labels = [quiver.path_label(p) for p in basis_paths]
        radical_basis = [unit_vec(field, dim, i) for i, p in enumerate(basis_paths)
                         if p.arrows]
        by_vertex = sorted(trivials, key=lambda p: p.source)
        idempotents = [unit_vec(field, dim, pos[p]) for p in by_vertex]
        generators = [pos[p] for p in basis_paths if len(p.arrows) <= 1]
        return cls(field, table, unit, labels, radical_basis, idempotents,
                   quiver_data=data, generator_indices=generators)

    # -- derived structure ------------------------------------------------------

    def _finish(self):
        field, dim = self.field, self.dim
        # radical is a two-sided nilpotent ideal
        for r in self.radical_basis:
            for i in range(dim):
                b = unit_vec(field, dim, i)
                if not self.radical.contains(self.multiply(b, r)):
                    raise NotSplit("radical is not a left ideal")
                if not self.radical.contains(self.multiply(r, b)):
                    raise NotSplit("radical is not a right ideal")
        self.nilpotency_index = self._nilpotency_index()
        # idempotents: orthogonal, complete, primitive
        total = zero_vec(field, dim)
        for i, e in enumerate(self.idempotents):
            for j, f in enumerate(self.idempotents):
                prod = self.multiply(e, f)
                expect = e if i == j else zero_vec(field, dim)
                if prod != expect:
                    raise NotSplit("idempotents %d, %d are not orthogonal" % (i, j))
            total = vec_add(total, e)
        if total != self.unit:
            raise NotSplit("idempotents do not sum to the unit")
        self.top = Quotient(field, dim, self.radical_basis)
        for i, e in enumerate(self.idempotents):
            if self._top_corner_dim(e, e) != 1:
                raise NotSplit("corner %d of the semisimple quotient has dimension != 1" % i)
        if len(self.idempotents) != self.top.dim:
            raise NotSplit("idempotent count differs from the top dimension")
        self.num_idempotents = len(self.idempotents)
        self.components = self._connected_components()
        self.component_of = tuple(
            next(c for c, part in enumerate(self.components) if i in part)
            for i in range(self.num_idempotents))

    def _nilpotency_index(self):
        if not self.radical_basis:
            return 1
        power = list(self.radical_basis)
        n = 1
        while power:
            n += 1
            if n > self.dim + 1:
                raise NotSplit("radical is not nilpotent")
            nxt = []
            for r in power:
                for s in self.radical_basis:
                    v = self.multiply(r, s)
                    if not vec_is_zero(v):
                        nxt.append(v)
            power = Subspace(self.field, self.dim, nxt).basis if nxt else []
        return n

    def radical_power_basis(self, k):
        """Canonical basis of R^k (R^0 is the whole algebra)."""
        if k == 0:
            return [unit_vec(self.field, self.dim, i) for i in range(self.dim)]
        power = Subspace(self.field, self.dim, self.radical_basis)
        for _ in range(k - 1):
            nxt = [self.multiply(r, s) for r in power.basis for s in self.radical_basis]
            power = Subspace(self.field, self.dim, nxt)
        return list(power.basis)

    def _top_corner_dim(self, e, f):
        # dim of e (A/R) f
        cols = []
        for i in range(self.dim):
            v = self.multiply(self.multiply(e, unit_vec(self.field, self.dim, i)), f)
            cols.append(self.top.project(v))
        return Matrix.from_columns(self.field, cols, self.top.dim).rank()

    def corner_dim(self, i, j):
        """dim of e_i A e_j."""
        e, f = self.idempotents[i], self.idempotents[j]
        cols = [self.multiply(self.multiply(e, unit_vec(self.field, self.dim, t)), f)
                for t in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim).rank()

    def corner_basis(self, i, j):
        e, f = self.idempotents[i], self.idempotents[j]
        cols = [self.multiply(self.multiply(e, unit_vec(self.field, self.dim, t)), f)
                for t in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim).column_space_basis()

    def _connected_components(self):
        r = len(self.idempotents)
        parent = list(range(r))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(r):
            for j in range(r):
                if i != j and (self.corner_dim(i, j) or self.corner_dim(j, i)):
                    parent[find(i)] = find(j)
        roots = {}
        comps = []
        for i in range(r):
            root = find(i)
            if root not in roots:
                roots[root] = len(comps)
                comps.append([])
            comps[roots[root]].append(i)
        comps.sort(key=lambda part: min(part))
        return tuple(tuple(part) for part in comps)

    def component_idempotent(self, c):
        """The central idempotent of component c."""
        vec = zero_vec(self.field, self.dim)
        for i in self.components[c]:
            vec = vec_add(vec, self.idempotents[i])
        return vec

    def simple_character(self, i):
        """chi_i(b_j): the scalar through which b_j acts on the i-th simple."""
        e = self.idempotents[i]
        etop = self.top.project(e)
        chis = []
        for j in range(self.dim):
            v = self.multiply(self.multiply(e, unit_vec(self.field, self.dim, j)), e)
            coords = self.top.project(v)
            # e(A/R)e is one dimensional, spanned by the residue of e
            basis = Matrix.from_columns(self.field, [etop], self.top.dim)
            sol = basis.solve(coords)
            assert sol is not None
            chis.append(sol[0])
        return tuple(chis)

    def is_semisimple(self):
        return not self.radical_basis

    def __repr__(self):
        return "Algebra(dim=%d, idempotents=%d, rad=%d)" % (
            self.dim, len(self.idempotents), len(self.radical_basis))


class CenterData:
    """The center as a subalgebra: basis vectors in ambient coordinates and
    the induced structure constants (an Algebra over the same field)."""

    def __init__(self, basis, algebra, ambient):
        self.basis = basis
        self.algebra = algebra
        self.ambient = ambient
        self.dim = len(basis)


def center(a):
    """Basis of {z : zb = bz for all b} plus its own algebra structure."""
    field = a.field
    rows = []
    for i in a.generator_indices:
        diff = a.left_mult(i) - a.right_mult(i)
        rows.extend(diff.rows)
    if rows:
        kernel = Matrix(field, rows, a.dim).kernel_basis()
    else:
        kernel = [unit_vec(field, a.dim, i) for i in range(a.dim)]
    basis = list(Subspace(field, a.dim, kernel).basis)
    span = Matrix.from_columns(field, basis, a.dim)
    dim = len(basis)
    table = []
    for u in basis:
        row = []
        for v in basis:
            prod = a.multiply(u, v)
            coords = span.solve(prod)
            if coords is None:
                raise NotSplit("center is not closed under multiplication")
            row.append(coords)
        table.append(row)
    unit_coords = span.solve(a.unit)
    assert unit_coords is not None, "the unit is central"
    labels = ["z%d" % i for i in range(dim)]
    center_alg = Algebra.from_structure_constants(field, table, unit_coords, labels) \
        if field.characteristic == 0 else None
    return CenterData(basis, center_alg, a)


class WeakSymmetryReport:
    """Verdict plus the matrix dim(e_i A e_j) and its symmetry."""

    def __init__(self, is_weakly_symmetric, socle_ok, corner_matrix):
        self.is_weakly_symmetric = is_weakly_symmetric
        self.socle_ok = socle_ok
        self.corner_matrix = corner_matrix
        n = len(corner_matrix)
        self.corner_symmetric = all(corner_matrix[i][j] == corner_matrix[j][i]
                                    for i in range(n) for j in range(n))

    def __bool__(self):
        return self.is_weakly_symmetric


def is_weakly_symmetric(a):
    """Does every projective A e_i have socle isomorphic to its top L_i?

    The socle of A e_i is the joint kernel of the radical acting on the
    corner; the condition is a one-dimensional socle fixed by e_i.
    """
    field = a.field
    corner = [[a.corner_dim(i, j) for j in range(a.num_idempotents)]
              for i in range(a.num_idempotents)]
    socle_ok = []
    for i, e in enumerate(a.idempotents):
        cols = [a.multiply(unit_vec(field, a.dim, t), e) for t in range(a.dim)]
        pe_basis = Matrix.from_columns(field, cols, a.dim).column_space_basis()
        pe = Matrix.from_columns(field, pe_basis, a.dim)
        rows = []
        for r in a.radical_basis:
            rows.extend((a.left_mult_elem(r) @ pe).rows)
        if rows:
            soc = Matrix(field, rows, pe.ncols).kernel_basis()
        else:
            soc = [unit_vec(field, pe.ncols, t) for t in range(pe.ncols)]
        if len(soc) != 1:
            socle_ok.append(False)
            continue
        vec = pe.apply(soc[0])
        socle_ok.append(a.multiply(e, vec) == vec)
    return WeakSymmetryReport(all(socle_ok), tuple(socle_ok),
                              tuple(tuple(row) for row in corner))


def connected_components(a):
    """The partition of idempotent indices into connected components."""
    return a.components


# -- verification helpers -----------------------------------------------------

def _verify_associativity(field, table):
    dim = len(table)

    def mul(u, v):
        out = [field.zero] * dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(table[i][j]):
                    if s:
                        out[k] = out[k] + c * s
        return tuple(out)

    for i in range(dim):
        bi = unit_vec(field, dim, i)
        for j in range(dim):
            left = table[i][j]
            bj = unit_vec(field, dim, j)
            for l in range(dim):
                bl = unit_vec(field, dim, l)
                if mul(left, bl) != mul(bi, mul(bj, bl)):
                    raise AssociativityViolation(i, j, l)


def _verify_unit(field, table, unit):
    dim = len(table)

    def mul(u, v):
        out = [field.zero] * dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(table[i][j]):
                    if s:
                        out[k] = out[k] + c * s
        return tuple(out)

    for i in range(dim):
        b = unit_vec(field, dim, i)
        if mul(unit, b) != b or mul(b, unit) != b:
            raise NoUnit("unit law fails on basis element %d" % i)


def _trace_form_radical(field, table):
    """Radical via the trace form of left multiplication (characteristic 0)."""
    dim = len(table)
    gram = []
    for i in range(dim):
        row = []
        for j in range(dim):
            s = field.zero
            for r in range(dim):
                for k in range(dim):
                    a = table[i][k][r]
                    if a:
                        b = table[j][r][k]
                        if b:
                            s = s + a * b
            row.append(s)
        gram.append(row)
    kernel = Matrix(field, gram, dim).kernel_basis()
    return list(Subspace(field, dim, kernel).basis)


# -- primitive idempotents ----------------------------------------------------

def _primitive_idempotents(field, table, unit, radical_basis):
    """Complete list of orthogonal primitive idempotents, via the semisimple
    quotient.  Raises NotSplit when some simple quotient is not the base
    field (non-commutative quotient or an irreducible minimal polynomial)."""
    dim = len(table)

    def mul(u, v):
        out = [field.zero] * dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for k, s in enumerate(table[i][j]):
                    if s:
                        out[k] = out[k] + c * s
        return tuple(out)

    top = Quotient(field, dim, radical_basis)
    sdim = top.dim
    sbasis = [top.lift(unit_vec(field, sdim, i)) for i in range(sdim)]

    def smul(u, v):
        # multiply representatives, project back
        a = _combine(field, sbasis, u)
        b = _combine(field, sbasis, v)
        return top.project(mul(a, b))

    for i in range(sdim):
        u = unit_vec(field, sdim, i)
        for j in range(i + 1, sdim):
            v = unit_vec(field, sdim, j)
            if smul(u, v) != smul(v, u):
                raise NotSplit("semisimple quotient is not commutative; "
                               "a simple quotient is a matrix algebra")

    blocks = _split_commutative_semisimple(field, sdim, smul, top.project(unit))
    lifted = _lift_orthogonal_idempotents(field, dim, mul, unit, top, blocks,
                                          len(radical_basis))
    return lifted


def _combine(field, basis, coords):
    n = len(basis[0]) if basis else 0
    out = [field.zero] * n
    for c, b in zip(coords, basis):
        if c:
            for i, x in enumerate(b):
                if x:
                    out[i] = out[i] + c * x
    return tuple(out)


def _split_commutative_semisimple(field, sdim, smul, one):
    """Idempotents of a split commutative semisimple algebra.

    Blocks are refined by rational eigenspaces of multiplication operators;
    a block that no element refines and that is not one dimensional
    witnesses a simple quotient bigger than the base field.
    """
    blocks = [_BlockData(field, sdim, smul, one)]
    changed = True
    while changed:
        changed = False
        for g in range(sdim):
            gen = unit_vec(field, sdim, g)
            nxt = []
            for blk in blocks:
                if blk.dim == 1:
                    nxt.append(blk)
                    continue
                parts = blk.refine_by(gen)
                if len(parts) > 1:
                    changed = True
                    nxt.extend(parts)
                else:
                    nxt.append(blk)
            blocks = nxt
    for blk in blocks:
        if blk.dim != 1:
            raise NotSplit("a simple quotient is a nontrivial field extension")
    return [blk.unit for blk in blocks]


class _BlockData:
    """One block f*S of a commutative semisimple algebra S, with unit f."""

    def __init__(self, field, sdim, smul, unit, basis=None):
        self.field = field
        self.sdim = sdim
        self.smul = smul
        self.unit = unit
        if basis is None:
            cols = [smul(unit, unit_vec(field, sdim, i)) for i in range(sdim)]
            basis = Matrix.from_columns(field, cols, sdim).column_space_basis()
        self.basis = basis
        self.dim = len(basis)

    def refine_by(self, gen):
        field = self.field
        t = self.smul(self.unit, gen)
        basis_mat = Matrix.from_columns(field, self.basis, self.sdim)
        # operator of multiplication by t in block coordinates
        cols = []
        for b in self.basis:
            w = self.smul(t, b)
            sol = basis_mat.solve(w)
            assert sol is not None
            cols.append(sol)
        op = Matrix.from_columns(field, cols, self.dim)
        roots = _rational_eigenvalues(field, op)
        if not roots:
            return [self]
        parts = []
        covered_dim = 0
        ident = Matrix.identity(field, self.dim)
        rest_unit = self.unit
        for lam in roots:
            shifted = op - ident.scale(lam)
            eig = shifted.kernel_basis()
            if not eig:
                continue
            sub_basis = [_combine(field, self.basis, v) for v in eig]
            sub_unit = _ideal_unit(field, self.sdim, self.smul, sub_basis)
            parts.append(_BlockData(field, self.sdim, self.smul, sub_unit,
                                    list(Subspace(field, self.sdim, sub_basis).basis)))
            rest_unit = vec_sub(rest_unit, sub_unit)
            covered_dim += len(eig)
        if covered_dim == 0:
            return [self]
        if covered_dim < self.dim:
            parts.append(_BlockData(field, self.sdim, self.smul, rest_unit))
        if len(parts) == 1 and parts[0].dim == self.dim:
            return [self]
        return parts


def _ideal_unit(field, sdim, smul, ideal_basis):
    """The unit of an ideal in a commutative semisimple algebra."""
    mat_rows = []
    rhs = []
    for b in ideal_basis:
        # e * b = b, unknowns = coords of e over ideal_basis
        cols = [smul(u, b) for u in ideal_basis]
        mat_rows.append(Matrix.from_columns(field, cols, sdim))
        rhs.append(b)
    big = Matrix(field, [row for m in mat_rows for row in m.rows], len(ideal_basis))
    target = tuple(x for b in rhs for x in b)
    sol = big.solve(target)
    assert sol is not None, "ideal in a semisimple algebra has a unit"
    return _combine(field, ideal_basis, sol)


def _rational_eigenvalues(field, op):
    """Eigenvalues of op inside the base field, ascending.

    Found as roots of the minimal polynomial; for the rationals the
    candidates come from the rational root theorem.
    """
    n = op.nrows
    if n == 0:
        return []
    # minimal polynomial by first linear dependency of powers
    powers = [Matrix.identity(field, n)]
    while True:
        powers.append(powers[-1] @ op)
        vecs = [tuple(x for row in m.rows for x in row) for m in powers]
        dep = Matrix.from_columns(field, vecs, n * n).kernel_basis()
        if dep:
            rel = dep[0]
            break
    deg = max(i for i, c in enumerate(rel) if c)
    lead = rel[deg]
    coeffs = [c / lead for c in rel[: deg + 1]]  # monic: x^deg + ...
    return _rational_roots(field, coeffs)


def _rational_roots(field, coeffs):
    """Roots in the field of a monic polynomial given by low-to-high coeffs."""
    if field.characteristic != 0:
        roots = []
        for v in range(field.characteristic):
            x = field.of(v)
            if not _poly_eval(field, coeffs, x):
                roots.append(x)
        return roots
    # clear denominators to an integer polynomial
    denom = 1
    for c in coeffs:
        denom = _lcm(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    roots = set()
    if ints[0] == 0:
        roots.add(field.zero)
        while ints[0] == 0:
            ints = ints[1:]
    if len(ints) <= 1:
        return sorted(roots)
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for sign in (1, -1):
                cand = field.of(sign * p, q)
                if not _poly_eval(field, coeffs, cand):
                    roots.add(cand)
    return sorted(roots)


def _poly_eval(field, coeffs, x):
    acc = field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _lcm(a, b):
    return a * b // _gcd(a, b)


def _lift_orthogonal_idempotents(field, dim, mul, unit, top, block_units, rad_dim):
    """Lift the idempotents of A/R to orthogonal idempotents of A.

    Newton iteration e -> 3e^2 - 2e^3 stays in the same coset modulo the
    radical; each new idempotent is conjugated into the corner of the
    complement of the previously lifted ones, which forces orthogonality.
    The last idempotent is the remaining complement of the sum.
    """
    lifted = []
    total = zero_vec(field, dim)
    for idx, eb in enumerate(block_units):
        if idx == len(block_units) - 1:
            last = vec_sub(unit, total)
            assert mul(last, last) == last
            assert top.project(last) == eb
            lifted.append(last)
            total = vec_add(total, last)
            break
        g = vec_sub(unit, total)
        a = mul(mul(g, top.lift(eb)), g)
        for _ in range(dim + 2):
            if mul(a, a) == a:
                break
            sq = mul(a, a)
            a = vec_sub(vec_scale(field.of(3), sq), vec_scale(field.of(2), mul(sq, a)))
        assert mul(a, a) == a, "idempotent lifting failed to converge"
        lifted.append(a)
        total = vec_add(total, a)
    return lifted
