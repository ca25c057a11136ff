"""Left modules, right modules, bimodules, and their calculus.

Modules are given by one action matrix per algebra basis element; a left
module satisfies rho(b_i) rho(b_j) = sum_k c_ij^k rho(b_k), a right module
the reversed law.  All derived bases (quotients, tensor products, hom
spaces) use the deterministic echelon conventions of the linalg layer, so
repeated runs produce identical matrices.
"""

import random

from .errors import BimodlabError
from .fields import FieldError
from .linalg import (Matrix, Quotient, Subspace, block_diag, intertwiner_basis,
                     solve_affine_operator, unit_vec, vec_is_zero, zero_vec)


class LeftModule:
    """Finite dimensional left module over an Algebra."""

    side = "left"

    def __init__(self, algebra, action, validate=True, label=None):
        self.algebra = algebra
        self.action = tuple(action)
        if len(self.action) != algebra.dim:
            raise FieldError("need one action matrix per algebra basis element")
        self.dim = self.action[0].nrows if self.action else 0
        for m in self.action:
            if m.nrows != self.dim or m.ncols != self.dim:
                raise FieldError("action matrices must be square of equal size")
        self.label = label
        if validate:
            self.validate()

    @property
    def field(self):
        return self.algebra.field

    def act_elem(self, coords):
        """Action matrix of an arbitrary algebra element."""
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for c, m in zip(coords, self.action):
            if c:
                out = out + m.scale(c)
        return out

    def validate(self):
        a = self.algebra
        ident = Matrix.identity(self.field, self.dim)
        if self.act_elem(a.unit) != ident:
            raise BimodlabError("unit does not act as the identity")
        for i in range(a.dim):
            mi = self.action[i]
            for j in range(a.dim):
                expect = self.act_elem(self._law(i, j))
                if mi @ self.action[j] != expect:
                    raise BimodlabError("%s module law fails on basis pair (%d, %d)"
                                        % (self.side, i, j))
        return self

    def _law(self, i, j):
        return self.algebra.mul_table[i][j]

    def __repr__(self):
        return "%s(%s, dim=%d)" % (type(self).__name__, self.label or "?", self.dim)


class RightModule(LeftModule):
    """Right module: rho(b_i) rho(b_j) realizes b_j b_i."""

    side = "right"

    def _law(self, i, j):
        return self.algebra.mul_table[j][i]


class Bimodule:
    """A space with commuting left and right actions."""

    def __init__(self, left_algebra, right_algebra, left_action, right_action,
                 validate=True, label=None):
        self.left_algebra = left_algebra
        self.right_algebra = right_algebra
        self.left_action = tuple(left_action)
        self.right_action = tuple(right_action)
        dims = [m.nrows for m in self.left_action] + [m.nrows for m in self.right_action]
        self.dim = dims[0] if dims else 0
        self.label = label
        if validate:
            self.validate()

    @property
    def field(self):
        return self.left_algebra.field

    def as_left_module(self, validate=False):
        return LeftModule(self.left_algebra, self.left_action, validate=validate,
                          label=self.label)

    def as_right_module(self, validate=False):
        return RightModule(self.right_algebra, self.right_action, validate=validate,
                           label=self.label)

    def left_act_elem(self, coords):
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for c, m in zip(coords, self.left_action):
            if c:
                out = out + m.scale(c)
        return out

    def right_act_elem(self, coords):
        out = Matrix.zeros(self.field, self.dim, self.dim)
        for c, m in zip(coords, self.right_action):
            if c:
                out = out + m.scale(c)
        return out

    def validate(self):
        self.as_left_module(validate=True)
        self.as_right_module(validate=True)
        la, ra = self.left_algebra, self.right_algebra
        for i in la.generator_indices:
            for j in ra.generator_indices:
                if (self.left_action[i] @ self.right_action[j]
                        != self.right_action[j] @ self.left_action[i]):
                    raise BimodlabError("left and right actions do not commute "
                                        "on generators (%d, %d)" % (i, j))
        return self

    def __repr__(self):
        return "Bimodule(%s, dim=%d)" % (self.label or "?", self.dim)


class BimoduleMap:
    """A linear map intertwining both actions of two bimodules."""

    def __init__(self, source, target, matrix, validate=True):
        self.source = source
        self.target = target
        self.matrix = matrix
        if validate:
            self.validate()

    def validate(self):
        s, t, m = self.source, self.target, self.matrix
        if m.nrows != t.dim or m.ncols != s.dim:
            raise BimodlabError("map shape %dx%d does not match dim %d -> dim %d"
                                % (m.nrows, m.ncols, s.dim, t.dim))
        for i in s.left_algebra.generator_indices:
            if m @ s.left_action[i] != t.left_action[i] @ m:
                raise BimodlabError("map fails to intertwine the left action")
        for j in s.right_algebra.generator_indices:
            if m @ s.right_action[j] != t.right_action[j] @ m:
                raise BimodlabError("map fails to intertwine the right action")
        return self

    def is_isomorphism(self):
        return self.source.dim == self.target.dim and self.matrix.rank() == self.source.dim


# -- basic constructions ------------------------------------------------------

def left_regular(a, label=None):
    return LeftModule(a, [a.left_mult(i) for i in range(a.dim)], validate=False,
                      label=label or "A")

def right_regular(a, label=None):
    return RightModule(a, [a.right_mult(i) for i in range(a.dim)], validate=False,
                       label=label or "A")

def regular_bimodule(a, label=None):
    """The algebra as a bimodule over itself."""
    return Bimodule(a, a, [a.left_mult(i) for i in range(a.dim)],
                    [a.right_mult(j) for j in range(a.dim)], validate=False,
                    label=label or "A")


class _SubmoduleBasis:
    """Shared helper: a submodule spanned inside an ambient module."""

    def __init__(self, field, ambient_dim, vectors):
        self.basis = Matrix.from_columns(field, vectors, ambient_dim).column_space_basis()
        self.matrix = Matrix.from_columns(field, self.basis, ambient_dim)

    def restrict(self, operator):
        """Operator in submodule coordinates; must preserve the span."""
        cols = []
        for v in self.basis:
            sol = self.matrix.solve(operator.apply(v))
            if sol is None:
                raise BimodlabError("operator does not preserve the submodule")
            cols.append(sol)
        return Matrix.from_columns(self.matrix.field, cols, len(self.basis))


def projective_indecomposables(a):
    """P_i = A e_i with the left action, in idempotent order.

    Each module carries .embedding: a (dim A) x (dim P_i) matrix whose
    columns express the chosen basis of P_i inside the algebra.
    """
    out = []
    for i, e in enumerate(a.idempotents):
        cols = [a.multiply(unit_vec(a.field, a.dim, t), e) for t in range(a.dim)]
        sub = _SubmoduleBasis(a.field, a.dim, cols)
        action = [sub.restrict(a.left_mult(t)) for t in range(a.dim)]
        p = LeftModule(a, action, validate=False, label="P%d" % (i + 1))
        p.embedding = sub.matrix
        out.append(p)
    return out


def right_projective_indecomposables(a):
    """e_i A with the right action, in idempotent order."""
    out = []
    for i, e in enumerate(a.idempotents):
        cols = [a.multiply(e, unit_vec(a.field, a.dim, t)) for t in range(a.dim)]
        sub = _SubmoduleBasis(a.field, a.dim, cols)
        action = [sub.restrict(a.right_mult(t)) for t in range(a.dim)]
        p = RightModule(a, action, validate=False, label="P%d'" % (i + 1))
        p.embedding = sub.matrix
        out.append(p)
    return out


def simples(a):
    """One dimensional left simples L_i, one per idempotent."""
    out = []
    for i in range(len(a.idempotents)):
        chi = a.simple_character(i)
        action = [Matrix(a.field, [[chi[j]]], 1) for j in range(a.dim)]
        out.append(LeftModule(a, action, validate=False, label="L%d" % (i + 1)))
    return out


def right_simples(a):
    out = []
    for i in range(len(a.idempotents)):
        chi = a.simple_character(i)
        action = [Matrix(a.field, [[chi[j]]], 1) for j in range(a.dim)]
        out.append(RightModule(a, action, validate=False, label="L%d'" % (i + 1)))
    return out


def zero_left_module(a):
    return LeftModule(a, [Matrix.zeros(a.field, 0, 0)] * a.dim, validate=False, label="0")

def zero_right_module(a):
    return RightModule(a, [Matrix.zeros(a.field, 0, 0)] * a.dim, validate=False, label="0")

def zero_bimodule(a, b):
    return Bimodule(a, b, [Matrix.zeros(a.field, 0, 0)] * a.dim,
                    [Matrix.zeros(a.field, 0, 0)] * b.dim, validate=False, label="0")


def direct_sum_modules(mods):
    first = mods[0]
    cls = type(first)
    action = []
    for i in range(first.algebra.dim):
        action.append(block_diag(first.field, [m.action[i] for m in mods]))
    return cls(first.algebra, action, validate=False,
               label="(" + "+".join(m.label or "?" for m in mods) + ")")


def direct_sum_bimodules(bims):
    first = bims[0]
    left = [block_diag(first.field, [b.left_action[i] for b in bims])
            for i in range(first.left_algebra.dim)]
    right = [block_diag(first.field, [b.right_action[j] for b in bims])
             for j in range(first.right_algebra.dim)]
    return Bimodule(first.left_algebra, first.right_algebra, left, right,
                    validate=False,
                    label="(" + "+".join(b.label or "?" for b in bims) + ")")


# -- tensor products ----------------------------------------------------------

def tensor_k(p, n, label=None):
    """P tensored with N over the base field, as a bimodule.

    Basis is ordered first-factor major: (u_i (x) v_j) at index i*dim(N)+j.
    The left algebra acts on the first factor, the right algebra on the second.
    """
    if not isinstance(p, LeftModule) or p.side != "left":
        raise BimodlabError("first tensor factor must be a left module")
    if not isinstance(n, RightModule):
        raise BimodlabError("second tensor factor must be a right module")
    field = p.field
    ident_p = Matrix.identity(field, p.dim)
    ident_n = Matrix.identity(field, n.dim)
    left = [m.kron(ident_n) for m in p.action]
    right = [ident_p.kron(m) for m in n.action]
    return Bimodule(p.algebra, n.algebra, left, right, validate=False,
                    label=label or "%s(x)%s" % (p.label or "?", n.label or "?"))


def _balanced_quotient(field, left_dims, middle_algebra, right_action_on_first,
                       left_action_on_second):
    """Quotient of a tensor space by the balancing relations u.b (x) v - u (x) b.v.

    right_action_on_first: matrices of the middle algebra acting on the first
    factor (on the right); left_action_on_second: on the second factor.
    Returns the Quotient of k^(d1*d2).
    """
    d1, d2 = left_dims
    relations = []
    for g in middle_algebra.generator_indices:
        rb = right_action_on_first[g]
        bm = left_action_on_second[g]
        for u in range(d1):
            ubcol = rb.column(u)
            for v in range(d2):
                bvcol = bm.column(v)
                vec = [field.zero] * (d1 * d2)
                for i, c in enumerate(ubcol):
                    if c:
                        vec[i * d2 + v] = vec[i * d2 + v] + c
                for j, c in enumerate(bvcol):
                    if c:
                        vec[u * d2 + j] = vec[u * d2 + j] - c
                relations.append(tuple(vec))
    return Quotient(field, d1 * d2, relations)


def tensor_over(q, m, label=None):
    """Q tensored over its right algebra with a left module M.

    Returns the left module with its deterministic echelon-complement basis;
    the result carries .quotient (the Quotient object) for callers that need
    the projection.
    """
    if q.right_algebra is not m.algebra and q.right_algebra != m.algebra:
        raise BimodlabError("right algebra of the bimodule must act on the module")
    field = q.field
    quot = _balanced_quotient(field, (q.dim, m.dim), q.right_algebra,
                              q.right_action, m.action)
    ident_m = Matrix.identity(field, m.dim)
    action = [quot.induced_map(q.left_action[i].kron(ident_m))
              for i in range(q.left_algebra.dim)]
    out = LeftModule(q.left_algebra, action, validate=False,
                     label=label or "%s(x)%s" % (q.label or "?", m.label or "?"))
    out.quotient = quot
    return out


def tensor_over_bimodule(q, q2, label=None):
    """Bimodule tensor product Q (x)_B Q2 for Q in A-mod-B, Q2 in B-mod-C."""
    field = q.field
    quot = _balanced_quotient(field, (q.dim, q2.dim), q.right_algebra,
                              q.right_action, q2.left_action)
    ident2 = Matrix.identity(field, q2.dim)
    ident1 = Matrix.identity(field, q.dim)
    left = [quot.induced_map(q.left_action[i].kron(ident2))
            for i in range(q.left_algebra.dim)]
    right = [quot.induced_map(ident1.kron(q2.right_action[j]))
             for j in range(q2.right_algebra.dim)]
    out = Bimodule(q.left_algebra, q2.right_algebra, left, right, validate=False,
                   label=label or "%s(x)%s" % (q.label or "?", q2.label or "?"))
    out.quotient = quot
    return out


# -- hom spaces ----------------------------------------------------------------

def hom_left(x, y):
    """Basis of Hom over the algebra of left modules x -> y (matrices)."""
    constraints = [(x.action[g], y.action[g])
                   for g in x.algebra.generator_indices]
    return intertwiner_basis(x.field, (y.dim, x.dim), constraints)


def hom_right(x, y):
    constraints = [(x.action[g], y.action[g])
                   for g in x.algebra.generator_indices]
    return intertwiner_basis(x.field, (y.dim, x.dim), constraints)


def hom_bimodule(q, q2):
    """Basis of bimodule maps q -> q2, as BimoduleMap objects."""
    constraints = [(q.left_action[g], q2.left_action[g])
                   for g in q.left_algebra.generator_indices]
    constraints += [(q.right_action[g], q2.right_action[g])
                    for g in q.right_algebra.generator_indices]
    mats = intertwiner_basis(q.field, (q2.dim, q.dim), constraints)
    return [BimoduleMap(q, q2, m, validate=False) for m in mats]


def hom_left_as_left_module(q, x):
    """Hom over A of left modules (Q, X) for a bimodule Q: a left module
    over the right algebra of Q via (b.f)(v) = f(v.b).

    Returns (basis_matrices, module).
    """
    basis = hom_left(q.as_left_module(), x)
    b_alg = q.right_algebra
    field = q.field
    if not basis:
        return [], LeftModule(b_alg, [Matrix.zeros(field, 0, 0)] * b_alg.dim,
                              validate=False, label="Hom")
    span = Matrix.from_columns(
        field, [tuple(e for row in m.rows for e in row) for m in basis],
        x.dim * q.dim)
    action = []
    for j in range(b_alg.dim):
        cols = []
        for m in basis:
            moved = m @ q.right_action[j]
            sol = span.solve(tuple(e for row in moved.rows for e in row))
            if sol is None:
                raise BimodlabError("hom space is not stable under the action")
            cols.append(sol)
        action.append(Matrix.from_columns(field, cols, len(basis)))
    mod = LeftModule(b_alg, action, validate=False, label="Hom(%s,%s)"
                     % (q.label or "?", x.label or "?"))
    return basis, mod


def find_invertible_map(maps, seed=0, attempts=200):
    """An invertible combination of the given square matrices, or None.

    Tries each basis map, then seeded random small-integer combinations;
    over the rationals a random combination is invertible whenever any
    combination is, so the bounded search is reliable in practice.
    """
    if not maps:
        return None
    field = maps[0].field
    n = maps[0].nrows
    if any(m.nrows != n or m.ncols != n for m in maps):
        return None
    for m in maps:
        if m.rank() == n:
            return m
    rng = random.Random(seed)
    for _ in range(attempts):
        combo = Matrix.zeros(field, n, n)
        for m in maps:
            c = rng.randint(-3, 3)
            if c:
                combo = combo + m.scale(field.of(c))
        if combo.rank() == n:
            return combo
    return None


def membership(basis_matrices, candidate):
    """Is the candidate matrix in the span of the basis matrices?"""
    if not basis_matrices:
        return candidate.is_zero()
    field = candidate.field
    vecs = [tuple(e for row in m.rows for e in row) for m in basis_matrices]
    span = Matrix.from_columns(field, vecs, len(vecs[0]))
    target = tuple(e for row in candidate.rows for e in row)
    return span.solve(target) is not None


# -- duality -------------------------------------------------------------------

def dual(m):
    """Vector space dual; left modules become right modules and vice versa,
    bimodules swap their two algebras.  Action matrices transpose."""
    if isinstance(m, Bimodule):
        return Bimodule(m.right_algebra, m.left_algebra,
                        [mat.transpose() for mat in m.right_action],
                        [mat.transpose() for mat in m.left_action],
                        validate=False, label=(m.label or "?") + "*")
    if isinstance(m, RightModule):
        return LeftModule(m.algebra, [mat.transpose() for mat in m.action],
                          validate=False, label=(m.label or "?") + "*")
    return RightModule(m.algebra, [mat.transpose() for mat in m.action],
                       validate=False, label=(m.label or "?") + "*")


# -- structure: top, radical series, socle --------------------------------------

def radical_submodule_vectors(m):
    """Spanning vectors of R.M (or M.R for right modules)."""
    vecs = []
    for r in m.algebra.radical_basis:
        op = m.act_elem(r)
        for j in range(m.dim):
            v = op.column(j)
            if not vec_is_zero(v):
                vecs.append(v)
    return vecs


def top_quotient(m):
    """Quotient map onto M/RM as a Quotient object."""
    return Quotient(m.field, m.dim, radical_submodule_vectors(m))


def top_multiplicities(m):
    """Multiplicity of each simple in the top, via idempotent slices."""
    a = m.algebra
    quot = top_quotient(m)
    out = []
    for e in a.idempotents:
        op = quot.induced_map(m.act_elem(e))
        out.append(op.rank())
    return tuple(out)


def loewy_length(m):
    """Length of the radical series of the module."""
    if m.dim == 0:
        return 0
    current = [unit_vec(m.field, m.dim, i) for i in range(m.dim)]
    length = 0
    while current:
        length += 1
        if length > m.dim + 1:
            raise BimodlabError("radical series does not terminate")
        nxt = []
        for r in m.algebra.radical_basis:
            op = m.act_elem(r)
            for v in current:
                w = op.apply(v)
                if not vec_is_zero(w):
                    nxt.append(w)
        current = list(Subspace(m.field, m.dim, nxt).basis) if nxt else []
    return length


def socle_vectors(m):
    """Basis of the joint kernel of the radical action."""
    rows = []
    for r in m.algebra.radical_basis:
        rows.extend(m.act_elem(r).rows)
    if not rows:
        return [unit_vec(m.field, m.dim, i) for i in range(m.dim)]
    return Matrix(m.field, rows, m.dim).kernel_basis()


def socle_multiplicities(m):
    """Multiplicity of each simple in the socle."""
    a = m.algebra
    vecs = socle_vectors(m)
    if not vecs:
        return tuple(0 for _ in a.idempotents)
    sub = _SubmoduleBasis(m.field, m.dim, vecs)
    out = []
    for e in a.idempotents:
        op = m.act_elem(e)
        imgs = [op.apply(v) for v in sub.basis]
        out.append(Matrix.from_columns(m.field, imgs, m.dim).rank())
    return tuple(out)


def multiplicity(n, j):
    """[N : L'_j] = dim N e_j for a right module N."""
    return n.act_elem(n.algebra.idempotents[j]).rank()


def is_faithful(n):
    """Annihilator of the module inside the algebra; faithful iff zero.

    Returns (faithful, annihilator_basis) with annihilator vectors in
    algebra coordinates.
    """
    a = n.algebra
    if n.dim == 0:
        ann = [unit_vec(a.field, a.dim, i) for i in range(a.dim)]
        return (a.dim == 0), ann
    cols = [tuple(e for row in n.action[i].rows for e in row) for i in range(a.dim)]
    ann = Matrix.from_columns(a.field, cols, n.dim * n.dim).kernel_basis()
    return not ann, ann


# -- projectivity ----------------------------------------------------------------

class ProjectivityCertificate:
    """Outcome of the projective cover comparison.

    When projective: iso is the isomorphism from the cover ⊕ P_i^{t_i}
    (built from the top multiplicities) onto the module.  Otherwise gap
    holds dim(cover) - dim(module).
    """

    def __init__(self, is_projective, top_mults, cover_dim, module_dim, iso=None,
                 cover=None):
        self.is_projective = is_projective
        self.top_multiplicities = top_mults
        self.cover_dim = cover_dim
        self.module_dim = module_dim
        self.gap = cover_dim - module_dim
        self.iso = iso
        self.cover = cover

    def __bool__(self):
        return self.is_projective


def is_projective(m, projectives=None):
    """Projectivity test by covering with ⊕ P_i^{t_i}.

    The cover always surjects (its image covers the top, so Nakayama
    applies); the module is projective iff the dimensions agree, in which
    case the constructed surjection is an isomorphism and is returned.
    """
    a = m.algebra
    right_side = isinstance(m, RightModule)
    if projectives is None:
        projectives = (right_projective_indecomposables(a) if right_side
                       else projective_indecomposables(a))
    quot = top_quotient(m)
    tops = []
    for e in a.idempotents:
        op = quot.induced_map(m.act_elem(e))
        tops.append(op.rank())
    cover_dim = sum(t * p.dim for t, p in zip(tops, projectives))
    if cover_dim != m.dim:
        return ProjectivityCertificate(False, tuple(tops), cover_dim, m.dim)
    if m.dim == 0:
        return ProjectivityCertificate(True, tuple(tops), 0, 0,
                                       Matrix.zeros(m.field, 0, 0))
    # pick generators: vectors in e_i M (resp. M e_i) with independent top
    # residues; the cover map sends each basis element p of P_i, read as an
    # algebra element, to its action on the generator.
    columns = []
    for i, e in enumerate(a.idempotents):
        if tops[i] == 0:
            continue
        op = m.act_elem(e)
        gens = []
        seen = []
        for j in range(m.dim):
            v = op.column(j)
            cand = quot.project(v)
            if vec_is_zero(cand):
                continue
            trial = Matrix(m.field, seen + [cand], quot.dim)
            if trial.rank() > len(seen):
                seen.append(cand)
                gens.append(v)
                if len(gens) == tops[i]:
                    break
        assert len(gens) == tops[i]
        p = projectives[i]
        for g in gens:
            for t in range(p.dim):
                coords = p.embedding.column(t)
                columns.append(m.act_elem(coords).apply(g))
    iso = Matrix.from_columns(m.field, columns, m.dim)
    if iso.rank() != m.dim:
        # cannot happen when the generators cover the top (Nakayama)
        raise AssertionError("cover of matching dimension failed to surject")
    summands = []
    for i, t in enumerate(tops):
        summands.extend([projectives[i]] * t)
    cover = direct_sum_modules(summands) if summands else None
    return ProjectivityCertificate(True, tuple(tops), cover_dim, m.dim, iso, cover)


def is_projective_oracle(m, max_free_rank=None):
    """Independent projectivity oracle: a module is projective iff the
    canonical surjection from a free module splits.  Solves for a section
    directly."""
    a = m.algebra
    right_side = isinstance(m, RightModule)
    if m.dim == 0:
        return True
    n_gens = m.dim  # one free generator per basis vector always surjects
    free = (right_regular(a) if right_side else left_regular(a))
    free_sum = direct_sum_modules([free] * n_gens)
    # surjection: generator g_t -> basis vector t of m; phi(a . g_t) = a . m_t
    cols = []
    for t in range(n_gens):
        target = unit_vec(m.field, m.dim, t)
        for s in range(a.dim):
            coords = unit_vec(a.field, a.dim, s)
            cols.append(m.act_elem(coords).apply(target))
    phi = Matrix.from_columns(m.field, cols, m.dim)
    constraints = [(m.action[g], free_sum.action[g])
                   for g in a.generator_indices]
    sec = solve_affine_operator(
        m.field, (free_sum.dim, m.dim), constraints,
        [(phi, Matrix.identity(m.field, m.dim))])
    return sec is not None


# -- short exact sequences -------------------------------------------------------

class ShortExactSequence:
    """0 -> X -> Y -> Z -> 0 with explicit injection and surjection."""

    def __init__(self, x, y, z, inj, surj, validate=True):
        self.x = x
        self.y = y
        self.z = z
        self.inj = inj
        self.surj = surj
        if validate:
            self.validate()

    def validate(self):
        x, y, z = self.x, self.y, self.z
        if self.inj.rank() != x.dim:
            raise BimodlabError("injection is not injective")
        if self.surj.rank() != z.dim:
            raise BimodlabError("surjection is not surjective")
        if x.dim + z.dim != y.dim:
            raise BimodlabError("dimensions are not exact")
        comp = self.surj @ self.inj
        if not comp.is_zero():
            raise BimodlabError("composite is nonzero")
        for g in x.algebra.generator_indices:
            if self.inj @ x.action[g] != y.action[g] @ self.inj:
                raise BimodlabError("injection is not a module map")
            if self.surj @ y.action[g] != z.action[g] @ self.surj:
                raise BimodlabError("surjection is not a module map")
        return self


def canonical_radical_sequence(a):
    """0 -> R -> A -> A/R -> 0 as left modules."""
    field = a.field
    reg = left_regular(a)
    rad_vectors = list(a.radical_basis)
    sub = _SubmoduleBasis(field, a.dim, rad_vectors) if rad_vectors else None
    if sub is None:
        x = zero_left_module(a)
        inj = Matrix.zeros(field, a.dim, 0)
    else:
        action = [sub.restrict(a.left_mult(t)) for t in range(a.dim)]
        x = LeftModule(a, action, validate=False, label="R")
        inj = sub.matrix
    quot = Quotient(field, a.dim, rad_vectors)
    z_action = [quot.induced_map(a.left_mult(t)) for t in range(a.dim)]
    z = LeftModule(a, z_action, validate=False, label="A/R")
    surj = quot.projection_matrix()
    return ShortExactSequence(x, reg, z, inj, surj)


def submodule_generated_by(m, vectors):
    """The submodule generated by the given vectors, with restricted action.

    Returns (module, inclusion_matrix)."""
    field = m.field
    current = [v for v in vectors if not vec_is_zero(v)]
    span = Subspace(field, m.dim, current)
    while True:
        new = []
        for i in range(m.algebra.dim):
            op = m.action[i]
            for v in span.basis:
                w = op.apply(v)
                if not span.contains(w):
                    new.append(w)
        if not new:
            break
        span = Subspace(field, m.dim, list(span.basis) + new)
    if span.dim == 0:
        cls = type(m)
        sub = cls(m.algebra, [Matrix.zeros(field, 0, 0)] * m.algebra.dim,
                  validate=False, label="sub")
        return sub, Matrix.zeros(field, m.dim, 0)
    subb = _SubmoduleBasis(field, m.dim, list(span.basis))
    action = [subb.restrict(m.action[i]) for i in range(m.algebra.dim)]
    cls = type(m)
    sub = cls(m.algebra, action, validate=False, label="sub")
    return sub, subb.matrix


def quotient_module(m, vectors):
    """The quotient of m by the submodule generated by vectors.

    Returns (module, projection_matrix)."""
    sub, inc = submodule_generated_by(m, vectors)
    quot = Quotient(m.field, m.dim, inc.columns())
    action = [quot.induced_map(m.action[i]) for i in range(m.algebra.dim)]
    cls = type(m)
    z = cls(m.algebra, action, validate=False, label="quot")
    return z, quot.projection_matrix()


# -- randomized constructions ------------------------------------------------------

def random_module(a, max_dim, seed, side="left"):
    """A random module: cokernel of a random map between free modules.

    Deterministic for a fixed seed.  The result dimension is at most
    max(max_dim, dim A) and the module is validated on construction.
    """
    rng = random.Random(seed)
    field = a.field
    copies = max(1, max_dim // a.dim)
    p = rng.randint(1, copies)
    qn = rng.randint(0, p + 1)
    free_cls = left_regular if side == "left" else right_regular
    free = direct_sum_modules([free_cls(a)] * p)
    # columns of the presentation: images of q random free generators
    rel_vectors = []
    for _ in range(qn):
        gen = [field.of(rng.randint(-2, 2)) for _ in range(free.dim)]
        # close under the action to make a submodule generator image
        rel_vectors.append(tuple(gen))
    if rel_vectors:
        mod, _ = quotient_module(free, rel_vectors)
    else:
        mod = free
    mod.label = "rand(%s)" % seed
    mod.validate()
    return mod


def random_ses(m, seed):
    """A short exact sequence with middle term m, from a random submodule."""
    rng = random.Random(seed)
    field = m.field
    vectors = []
    for _ in range(rng.randint(0, 2)):
        vectors.append(tuple(field.of(rng.randint(-2, 2)) for _ in range(m.dim)))
    sub, inc = submodule_generated_by(m, vectors)
    quot = Quotient(field, m.dim, inc.columns())
    action = [quot.induced_map(m.action[i]) for i in range(m.algebra.dim)]
    cls = type(m)
    z = cls(m.algebra, action, validate=False, label="quot")
    return ShortExactSequence(sub, m, z, inc, quot.projection_matrix())
