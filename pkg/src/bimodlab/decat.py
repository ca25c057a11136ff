"""The decategorified algebra of a projective-functor system and its
cell/quasi-hereditary certification.

From an algebra A (with components), its projectives P_1..P_r and right
modules N_1..N_s (each supported on one component), the decategorified
algebra has basis symbols [1_1]..[1_k] and [F_(i,j)] with multiplication

    [F_(i,j)] [F_(l,t)] = dim(N_j e_l) . [F_(i,t)],

the unit symbols acting through the component of P_i on the left and of
N_j on the right.  The span J of the [F_(i,j)] is the lowest piece of an
ideal filtration whose other layers are the one-dimensional idempotent
spans of the [1_c]; when A is weakly symmetric the filtration is a cell
filtration and each layer contains an idempotent, which certifies a
quasi-hereditary structure.
"""

from .algebras import is_weakly_symmetric
from .errors import AssociativityViolation, BimodlabError, HypothesisFailed
from .linalg import Matrix, unit_vec, vec_is_zero
from .modules import (RightModule, is_projective, multiplicity,
                      right_projective_indecomposables)


class DecatInput:
    """Algebra plus right modules, each supported on a single component.

    The component of each module is inferred from the action of the central
    component idempotents: exactly one must act as the identity.
    """

    def __init__(self, algebra, right_modules, assignments=None):
        self.algebra = algebra
        self.modules = list(right_modules)
        for n in self.modules:
            if not isinstance(n, RightModule):
                raise BimodlabError("decat input modules must be right modules")
            if n.algebra is not algebra and n.algebra != algebra:
                raise BimodlabError("decat input modules must live over the algebra")
            n.validate()
        if assignments is None:
            assignments = [self._infer_component(n) for n in self.modules]
        self.assignments = list(assignments)
        for n, c in zip(self.modules, self.assignments):
            self._check_support(n, c)

    def _infer_component(self, n):
        a = self.algebra
        hits = []
        for c in range(len(a.components)):
            op = n.act_elem(a.component_idempotent(c))
            if op == Matrix.identity(a.field, n.dim):
                hits.append(c)
        if len(hits) != 1:
            raise BimodlabError(
                "module %r is not supported on a single component" % (n.label,))
        return hits[0]

    def _check_support(self, n, c):
        a = self.algebra
        if n.act_elem(a.component_idempotent(c)) != Matrix.identity(a.field, n.dim):
            raise BimodlabError("component assignment of %r is wrong" % (n.label,))


class DecatAlgebra:
    """Basis [1_1..1_k] then [F_(i,j)] (i major); structure constants from
    the multiplicity table m(j, l) = dim(N_j e_l)."""

    def __init__(self, input_data):
        a = input_data.algebra
        self.input = input_data
        self.field = a.field
        self.k = len(a.components)
        self.r = a.num_idempotents
        self.s = len(input_data.modules)
        self.mult = tuple(tuple(multiplicity(n, l) for l in range(self.r))
                          for n in input_data.modules)
        self.component_of_projective = a.component_of
        self.component_of_module = tuple(input_data.assignments)
        self.dim = self.k + self.r * self.s
        self.labels = tuple(["[1_%d]" % (c + 1) for c in range(self.k)]
                            + ["[F_%d,%d]" % (i + 1, j + 1)
                               for i in range(self.r) for j in range(self.s)])
        self._table = self._build_table()
        self._verify_associativity()
        self.unit = tuple(self.field.one if t < self.k else self.field.zero
                          for t in range(self.dim))

    def unit_index(self, c):
        return c

    def f_index(self, i, j):
        return self.k + i * self.s + j

    def _build_table(self):
        field = self.field
        zero = (field.zero,) * self.dim
        table = []
        for x in range(self.dim):
            row = []
            for y in range(self.dim):
                row.append(self._basis_product(x, y))
            table.append(tuple(row))
        return tuple(table)

    def _basis_product(self, x, y):
        field = self.field
        out = [field.zero] * self.dim
        if x < self.k and y < self.k:
            if x == y:
                out[x] = field.one
        elif x < self.k:
            i, j = divmod(y - self.k, self.s)
            if self.component_of_projective[i] == x:
                out[y] = field.one
        elif y < self.k:
            i, j = divmod(x - self.k, self.s)
            if self.component_of_module[j] == y:
                out[x] = field.one
        else:
            i, j = divmod(x - self.k, self.s)
            l, t = divmod(y - self.k, self.s)
            m = self.mult[j][l]
            if m:
                out[self.f_index(i, t)] = field.of(m)
        return tuple(out)

    def multiply(self, u, v):
        out = [self.field.zero] * self.dim
        for x, a in enumerate(u):
            if not a:
                continue
            for y, b in enumerate(v):
                if not b:
                    continue
                c = a * b
                for t, sconst in enumerate(self._table[x][y]):
                    if sconst:
                        out[t] = out[t] + c * sconst
        return tuple(out)

    def _verify_associativity(self):
        for x in range(self.dim):
            ex = unit_vec(self.field, self.dim, x)
            for y in range(self.dim):
                left = self._table[x][y]
                ey = unit_vec(self.field, self.dim, y)
                for z in range(self.dim):
                    ez = unit_vec(self.field, self.dim, z)
                    if self.multiply(left, ez) != self.multiply(ex, self.multiply(ey, ez)):
                        raise AssociativityViolation(x, y, z)

    def involution_index(self):
        """The basis permutation [1_c] -> [1_c], [F_(i,j)] -> [F_(j,i)],
        defined when r == s; None otherwise."""
        if self.r != self.s:
            return None
        perm = list(range(self.k))
        for i in range(self.r):
            for j in range(self.s):
                perm.append(self.f_index(j, i))
        return tuple(perm)

    def apply_involution(self, vec):
        perm = self.involution_index()
        if perm is None:
            raise HypothesisFailed("involution needs r == s")
        out = [self.field.zero] * self.dim
        for t, c in enumerate(vec):
            if c:
                out[perm[t]] = c
        return tuple(out)

    def __repr__(self):
        return "DecatAlgebra(k=%d, r=%d, s=%d, dim=%d)" % (
            self.k, self.r, self.s, self.dim)


def build_decat(input_data):
    """Assemble and verify the decategorified algebra."""
    return DecatAlgebra(input_data)


class CellDatum:
    """The lowest ideal J, the filtration above it, and the layer data."""

    def __init__(self, decat):
        self.decat = decat
        self.j_indices = tuple(range(decat.k, decat.dim))
        self._verify_ideal()
        self.layers = self._build_layers()

    def _verify_ideal(self):
        d = self.decat
        jset = set(self.j_indices)
        for t in range(d.dim):
            for f in self.j_indices:
                for prod in (d._table[t][f], d._table[f][t]):
                    support = [u for u, c in enumerate(prod) if c]
                    if any(u not in jset for u in support):
                        raise BimodlabError("the F-span is not a two-sided ideal")

    def _build_layers(self):
        """Layers: J, then J + span of the first c unit symbols, in input
        component order; each upper layer is one dimensional, spanned by an
        idempotent residue."""
        d = self.decat
        layers = [{"name": "J", "new_index": None, "indices": tuple(self.j_indices)}]
        acc = list(self.j_indices)
        for c in range(d.k):
            acc = [d.unit_index(c)] + acc
            layers.append({"name": "[1_%d]" % (c + 1), "new_index": d.unit_index(c),
                           "indices": tuple(sorted(acc))})
        return layers

    def upper_layer_idempotent(self, layer):
        """The residue of the new unit symbol is idempotent in the quotient."""
        d = self.decat
        idx = layer["new_index"]
        square = d._table[idx][idx]
        residue_ok = bool(square[idx]) and square[idx] == d.field.one
        lower = set(layer["indices"]) - {idx}
        off_layer = [u for u, c in enumerate(square) if c and u != idx and u not in lower]
        return residue_ok and not off_layer


def ideal_filtration(decat):
    """The two-sided ideal filtration with the F-span at the bottom."""
    return CellDatum(decat)


class SwichResult:
    def __init__(self, matrix, permutation, certified):
        self.matrix = matrix
        self.permutation = permutation
        self.certified = certified


def swich_matrix(decat):
    """The matrix (dim e_j A e_l) certifying the shape of the lowest ideal.

    Requires the additive closure of the N_j to match that of the regular
    right module: every N_j an indecomposable projective right module and
    the induced indexing a bijection onto the projectives.
    """
    d = decat
    a = d.input.algebra
    if d.r != d.s:
        raise HypothesisFailed("need as many modules as projectives (r = s)")
    projs = right_projective_indecomposables(a)
    sigma = []
    for j, n in enumerate(d.input.modules):
        cert = is_projective(n, projectives=projs)
        if not cert:
            raise HypothesisFailed("module %d is not projective (gap %d)"
                                   % (j + 1, cert.gap))
        tops = cert.top_multiplicities
        if sum(tops) != 1:
            raise HypothesisFailed("module %d is not indecomposable projective"
                                   % (j + 1,))
        sigma.append(tops.index(1))
    if sorted(sigma) != list(range(d.r)):
        raise HypothesisFailed("modules do not exhaust the projectives")
    corner = [[a.corner_dim(i, j) for j in range(d.r)] for i in range(d.r)]
    for j in range(d.s):
        for l in range(d.r):
            if d.mult[j][l] != corner[sigma[j]][l]:
                raise HypothesisFailed(
                    "multiplicity table does not match the corner dimensions")
    return SwichResult(tuple(tuple(row) for row in corner), tuple(sigma), True)


class CellCheck:
    def __init__(self, name, passed, detail=""):
        self.name = name
        self.passed = passed
        self.detail = detail

    def __repr__(self):
        return "CellCheck(%s: %s)" % (self.name, "pass" if self.passed else "FAIL")


class CellCertification:
    def __init__(self, hypothesis_ok, hypothesis_detail, checks):
        self.hypothesis_ok = hypothesis_ok
        self.hypothesis_detail = hypothesis_detail
        self.checks = checks

    @property
    def passed(self):
        return self.hypothesis_ok and all(c.passed for c in self.checks)


def check_cell_ideal(cell, decat):
    """Certify the cell-ideal structure on the lowest filtration layer.

    Checks: the involution is an anti-automorphism fixing the unit symbols
    and swapping F-subscripts; the pairing map J -> V (x) V sending
    F_(j,i) to v_i (x) v_j is a linear bijection; left multiplication moves
    only the slot carrying the first subscript (and right multiplication
    only the other slot), uniformly in the inert slot; the involution reads
    as the swap of the two slots; and the corner dimension matrix is
    symmetric.  All of it needs the underlying algebra weakly symmetric.
    """
    a = decat.input.algebra
    ws = is_weakly_symmetric(a)
    if not ws:
        return CellCertification(False,
                                 "underlying algebra is not weakly symmetric "
                                 "(corner matrix %r)" % (ws.corner_matrix,), [])
    if decat.r != decat.s:
        return CellCertification(False, "involution needs r == s", [])
    checks = []
    checks.append(_check_involution(decat))
    checks.append(_check_alpha_bijection(decat))
    checks.append(_check_one_sided_action(decat))
    checks.append(_check_involution_swap(decat))
    corner = ws.corner_matrix
    checks.append(CellCheck("corner-symmetry", ws.corner_symmetric,
                            "matrix %r" % (corner,)))
    return CellCertification(True, "underlying algebra is weakly symmetric", checks)


def _check_involution(decat):
    d = decat
    for x in range(d.dim):
        ex = unit_vec(d.field, d.dim, x)
        ix = d.apply_involution(ex)
        if d.apply_involution(ix) != ex:
            return CellCheck("involution", False, "not involutive at %s" % d.labels[x])
        for y in range(d.dim):
            ey = unit_vec(d.field, d.dim, y)
            lhs = d.apply_involution(d.multiply(ex, ey))
            rhs = d.multiply(d.apply_involution(ey), ix)
            if lhs != rhs:
                return CellCheck("involution", False,
                                 "fails anti-multiplicativity on (%s, %s)"
                                 % (d.labels[x], d.labels[y]))
    return CellCheck("involution", True,
                     "anti-automorphism fixing unit symbols, swapping F-subscripts")


def _alpha_position(decat, i, j):
    """alpha([F_(j,i)]) = v_i (x) v_j: tensor position of an F-symbol.

    The F at f_index(j, i) maps to slot pair (i, j), flattened i*r + j.
    """
    return i * decat.r + j


def _check_alpha_bijection(decat):
    d = decat
    seen = set()
    for jj in range(d.r):
        for ii in range(d.s):
            seen.add(_alpha_position(d, ii, jj))
    ok = len(seen) == d.r * d.s
    return CellCheck("pairing-bijection", ok,
                     "J -> V(x)V is a basis bijection (dim %d)" % (d.r * d.s,))


def _check_one_sided_action(decat):
    """Left multiplication must act on the second tensor slot only (the one
    carrying the first F-subscript), with a transformation independent of
    the inert slot; right multiplication mirrors this on the first slot."""
    d = decat
    # left action: b . F_(c, a) has fixed second subscript a; collect the
    # matrix on the first subscript and require it independent of a.
    for t in range(d.dim):
        reference = None
        for a_idx in range(d.s):
            mat = []
            for c in range(d.r):
                prod = d._table[t][d.f_index(c, a_idx)]
                col = [d.field.zero] * d.r
                for u, coeff in enumerate(prod):
                    if not coeff:
                        continue
                    if u < d.k:
                        return CellCheck("one-sided-left-action", False,
                                         "product leaves the ideal")
                    i2, j2 = divmod(u - d.k, d.s)
                    if j2 != a_idx:
                        return CellCheck(
                            "one-sided-left-action", False,
                            "left multiplication by %s moves the inert slot"
                            % d.labels[t])
                    col[i2] = coeff
                mat.append(tuple(col))
            if reference is None:
                reference = mat
            elif mat != reference:
                return CellCheck("one-sided-left-action", False,
                                 "left action depends on the inert slot")
    # right action: F_(c, a) . b has fixed first subscript c.
    for t in range(d.dim):
        reference = None
        for c in range(d.r):
            mat = []
            for a_idx in range(d.s):
                prod = d._table[d.f_index(c, a_idx)][t]
                col = [d.field.zero] * d.s
                for u, coeff in enumerate(prod):
                    if not coeff:
                        continue
                    if u < d.k:
                        return CellCheck("one-sided-right-action", False,
                                         "product leaves the ideal")
                    i2, j2 = divmod(u - d.k, d.s)
                    if i2 != c:
                        return CellCheck(
                            "one-sided-right-action", False,
                            "right multiplication by %s moves the inert slot"
                            % d.labels[t])
                    col[j2] = coeff
                mat.append(tuple(col))
            if reference is None:
                reference = mat
            elif mat != reference:
                return CellCheck("one-sided-right-action", False,
                                 "right action depends on the inert slot")
    return CellCheck("one-sided-action", True,
                     "left action through one slot, right action through the other")


def _check_involution_swap(decat):
    d = decat
    for i in range(d.r):
        for j in range(d.s):
            f = unit_vec(d.field, d.dim, d.f_index(j, i))
            swapped = d.apply_involution(f)
            expect = unit_vec(d.field, d.dim, d.f_index(i, j))
            if swapped != expect:
                return CellCheck("involution-swap", False,
                                 "involution does not swap the tensor slots")
    return CellCheck("involution-swap", True, "involution acts as the slot swap")


class QuasiHereditaryResult:
    def __init__(self, passed, witnesses):
        self.passed = passed
        self.witnesses = witnesses

    def __bool__(self):
        return self.passed


def check_quasi_hereditary(cell, decat):
    """Exhibit an idempotent in every filtration layer.

    For the lowest layer the witness is [F_(i,j)] / m(j,i) for any pair
    with m(j,i) nonzero; the upper layers are spanned by the idempotent
    residues of the unit symbols.
    """
    d = decat
    witnesses = []
    found = None
    for i in range(d.r):
        for j in range(d.s):
            m = d.mult[j][i]
            if m and d.field.of(m):  # nonzero in the field, not just over Z
                found = (i, j, m)
                break
        if found:
            break
    if found is None:
        return QuasiHereditaryResult(False, [{"layer": "J", "witness": None,
                                              "reason": "every m(j,i) vanishes"}])
    i, j, m = found
    f = [d.field.zero] * d.dim
    f[d.f_index(i, j)] = d.field.of(1, m)
    f = tuple(f)
    assert d.multiply(f, f) == f
    witnesses.append({"layer": "J",
                      "witness": "[F_%d,%d]/%d" % (i + 1, j + 1, m),
                      "vector": f})
    ok = True
    for layer in cell.layers[1:]:
        good = cell.upper_layer_idempotent(layer)
        ok = ok and good
        witnesses.append({"layer": layer["name"],
                          "witness": layer["name"] if good else None,
                          "vector": unit_vec(d.field, d.dim, layer["new_index"])})
    return QuasiHereditaryResult(ok, witnesses)
