"""Quivers with relations and the bound path algebra construction.

Paths are stored as tuples of arrow indices in traversal order, so the
path (a, b) walks a first and then b.  The algebra product p * q composes
like operators: traverse q first, then p.  Vertex paths are the trivial
paths and become the orthogonal idempotents of the bound quiver algebra.

The quotient by the relation ideal I is computed in truncations
kQ/(I + J^m) for increasing m (J = arrow ideal) until the dimension
stabilizes; equal dimensions at m and m+1 force I + J^m = I + J^(m+1) and
hence J^m subset of I + J^N for every N.  For admissible ideals this
yields kQ/I exactly, and for length-homogeneous relations (every shipped
example) the grading makes each truncation exact on its own.
"""

from .errors import InconsistentRelations, NotAdmissible
from .linalg import Matrix, Quotient, hstack, unit_vec

MAX_TRUNCATION = 64
MAX_PATH_SPACE = 8192


class Path:
    """A path in a quiver: a start vertex plus arrows in traversal order."""

    __slots__ = ("source", "target", "arrows")

    def __init__(self, source, target, arrows):
        self.source = source
        self.target = target
        self.arrows = tuple(arrows)

    def __len__(self):
        return len(self.arrows)

    def __eq__(self, other):
        return (self.source, self.arrows) == (other.source, other.arrows)

    def __hash__(self):
        return hash((self.source, self.arrows))

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)

    def __repr__(self):
        return "Path(%d->%d, %r)" % (self.source, self.target, self.arrows)


def compose(first, then):
    """The walk 'first' followed by the walk 'then', or None."""
    if first.target != then.source:
        return None
    return Path(first.source, then.target, first.arrows + then.arrows)


class QuiverPresentation:
    """A quiver with relations over a fixed field.

    vertices: list of labels.
    arrows: list of (label, source_label, target_label).
    relations: list of lists of (coefficient, path) pairs, each path a tuple
    of arrow labels in traversal order.  Every relation path must be
    composable and of length >= 2.
    """

    def __init__(self, field, vertices, arrows, relations):
        self.field = field
        self.vertices = list(vertices)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.vertex_index) != len(self.vertices):
            raise NotAdmissible("duplicate vertex labels")
        self.arrow_labels = []
        self.arrow_source = []
        self.arrow_target = []
        self.arrow_index = {}
        for label, src, tgt in arrows:
            if src not in self.vertex_index or tgt not in self.vertex_index:
                raise NotAdmissible("arrow %r references unknown vertex" % (label,))
            if label in self.arrow_index or label in self.vertex_index:
                raise NotAdmissible("duplicate label %r" % (label,))
            self.arrow_index[label] = len(self.arrow_labels)
            self.arrow_labels.append(label)
            self.arrow_source.append(self.vertex_index[src])
            self.arrow_target.append(self.vertex_index[tgt])
        self.relations = [self._check_relation(rel) for rel in relations]

    def _check_relation(self, rel):
        checked = []
        for coeff, arrow_labels in rel:
            idx = []
            for label in arrow_labels:
                if label not in self.arrow_index:
                    raise NotAdmissible("relation uses unknown arrow %r" % (label,))
                idx.append(self.arrow_index[label])
            if len(idx) < 2:
                raise NotAdmissible("relation path %r has length < 2" % (arrow_labels,))
            for a, b in zip(idx, idx[1:]):
                if self.arrow_target[a] != self.arrow_source[b]:
                    raise NotAdmissible("relation path %r is not composable" % (arrow_labels,))
            checked.append((coeff, Path(self.arrow_source[idx[0]],
                                        self.arrow_target[idx[-1]], idx)))
        if not checked:
            raise NotAdmissible("empty relation")
        return checked

    def trivial_paths(self):
        return [Path(i, i, ()) for i in range(len(self.vertices))]

    def arrow_paths(self):
        return [Path(self.arrow_source[a], self.arrow_target[a], (a,))
                for a in range(len(self.arrow_labels))]

    def paths_up_to(self, max_len):
        """All paths of length <= max_len, grouped by length."""
        by_len = [self.trivial_paths()]
        if max_len >= 1:
            by_len.append(self.arrow_paths())
        arrows = self.arrow_paths()
        for length in range(2, max_len + 1):
            nxt = []
            for p in by_len[length - 1]:
                for a in arrows:
                    walk = compose(p, a)
                    if walk is not None:
                        nxt.append(walk)
            by_len.append(nxt)
        return by_len

    def path_label(self, path):
        if not path.arrows:
            return "e_%s" % self.vertices[path.source]
        return ".".join(self.arrow_labels[a] for a in path.arrows)


def build_bound_algebra(q):
    """Bound quiver algebra data: basis paths, reduction table, truncation.

    The basis consists of path residues picked greedily in
    length-then-lexicographic order (input arrow order breaks ties), so it
    is deterministic; all vertex paths and all arrows are always kept.
    """
    prev_dim = None
    m = 2
    while True:
        data = _truncated_quotient(q, m)
        if prev_dim is not None and data["dim"] == prev_dim:
            return data
        prev_dim = data["dim"]
        m += 1
        if m > MAX_TRUNCATION:
            raise NotAdmissible("arrow ideal is not nilpotent modulo the relations "
                                "(no stabilization up to length %d)" % MAX_TRUNCATION)


def _truncated_quotient(q, m):
    field = q.field
    by_len = q.paths_up_to(m - 1)
    all_paths = [p for group in by_len for p in group]
    all_paths.sort(key=Path.sort_key)
    n = len(all_paths)
    if n > MAX_PATH_SPACE:
        raise NotAdmissible("path space exceeds %d elements; relations do not bound it"
                            % MAX_PATH_SPACE)
    index = {p: i for i, p in enumerate(all_paths)}

    # Span of all left * rel * right, truncated past length m-1; terms that
    # fail to compose contribute zero.
    spanning = []
    for rel in q.relations:
        min_len = min(len(term) for _, term in rel)
        for left_len in range(0, m - min_len):
            for left in by_len[left_len]:
                for right_len in range(0, m - min_len - left_len):
                    for right in by_len[right_len]:
                        vec = [field.zero] * n
                        nonzero = False
                        for coeff, term in rel:
                            walk = compose(right, term)
                            walk = walk and compose(walk, left)
                            if walk is not None and len(walk) <= m - 1:
                                vec[index[walk]] = vec[index[walk]] + coeff
                                nonzero = True
                        if nonzero:
                            spanning.append(tuple(vec))
    ideal = Quotient(field, n, spanning)

    # Greedy basis picking: keep each path whose residue is independent of
    # the ideal plus the residues already kept.
    kept = []
    echelon = [list(r) for r in ideal.subspace.basis]
    for i, p in enumerate(all_paths):
        v = _reduce_against(list(unit_vec(field, n, i)), echelon)
        lead = _leading_index(v)
        if lead is None:
            if not p.arrows:
                raise InconsistentRelations("vertex %r reduces to zero"
                                            % (q.vertices[p.source],))
            continue
        kept.append(i)
        _rescale(v, lead)
        _insert_row(echelon, v, lead)

    basis_paths = [all_paths[i] for i in kept]
    dim = len(basis_paths)

    # Reduction of every enumerated path over the kept basis, via one rref
    # of [kept residues | all residues].
    kept_cols = [ideal.subspace.reduce(unit_vec(field, n, i)) for i in kept]
    all_cols = [ideal.subspace.reduce(unit_vec(field, n, i)) for i in range(n)]
    aug = hstack([Matrix.from_columns(field, kept_cols, n),
                  Matrix.from_columns(field, all_cols, n)])
    red, pivots, rank = aug.rref()
    if rank != dim or tuple(pivots[:dim]) != tuple(range(dim)):
        raise AssertionError("kept paths fail to span the truncated quotient")
    reduction = {}
    for j, p in enumerate(all_paths):
        reduction[p] = tuple(red.rows[i][dim + j] for i in range(dim))
    return {
        "dim": dim,
        "basis_paths": basis_paths,
        "reduction": reduction,
        "truncation": m,
        "quiver": q,
    }


def _reduce_against(v, rows):
    for row in rows:
        lead = _leading_index(row)
        c = v[lead]
        if c:
            for j in range(lead, len(v)):
                if row[j]:
                    v[j] = v[j] - c * row[j]
    return v


def _leading_index(v):
    for j, a in enumerate(v):
        if a:
            return j
    return None


def _rescale(v, lead):
    c = v[lead]
    if c != 1:
        for j in range(lead, len(v)):
            if v[j]:
                v[j] = v[j] / c


def _insert_row(rows, v, lead):
    pos = 0
    while pos < len(rows) and _leading_index(rows[pos]) < lead:
        pos += 1
    rows.insert(pos, v)
    for row in rows:
        if row is not v and row[lead]:
            c = row[lead]
            for j in range(lead, len(v)):
                if v[j]:
                    row[j] = row[j] - c * v[j]
