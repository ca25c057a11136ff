"""Deciding whether a bimodule factors through vector spaces.

A bimodule Q over (A, B) is split over the base field when it lies in the
additive closure of bimodules A (x)_k K with K a right B-module.  The
decision procedure is constructive:

  1. the left module of Q must be projective;
  2. slice the top Q/RQ into the right modules K_i = e_i (Q/RQ);
  3. assemble the comparison bimodule Qhat = sum_i P_i (x)_k K_i;
  4. the dimensions of Qhat and Q must agree;
  5. the quotient Q ->> Q/RQ must split as right modules (a section beta);
  6. the induced bimodule map gamma(p (x) x) = p . beta(x) is then
     surjective onto the top, hence surjective by Nakayama, and the
     dimension equality makes it an isomorphism.

Success returns the full certificate (slices, Qhat, beta, gamma); failure
returns a typed witness that re-fails its named check.
"""

import random

from .linalg import Matrix, Quotient, hstack, solve_affine_operator, vec_is_zero
from .modules import (BimoduleMap, RightModule, direct_sum_bimodules,
                      hom_left_as_left_module, is_projective, left_regular,
                      projective_indecomposables, random_module, random_ses,
                      canonical_radical_sequence, simples, tensor_k,
                      tensor_over, zero_bimodule, _SubmoduleBasis)

NOT_LEFT_PROJECTIVE = "NotLeftProjective"
DIMENSION_MISMATCH = "DimensionMismatch"
NO_RIGHT_SPLITTING = "NoRightSplitting"


class KSplitCertificate:
    """Outcome of the k-split check.

    On success: slices (right modules K_i), hat (the comparison bimodule),
    beta (right-module splitting matrix Q/RQ -> Q), gamma (BimoduleMap
    hat -> Q, verified bijective).  On failure: kind names the failed step
    and witness carries re-checkable data.
    """

    def __init__(self, bimodule, verdict, slices=None, hat=None, beta=None,
                 gamma=None, kind=None, witness=None):
        self.bimodule = bimodule
        self.verdict = verdict
        self.slices = slices
        self.hat = hat
        self.beta = beta
        self.gamma = gamma
        self.kind = kind
        self.witness = witness

    @property
    def is_split(self):
        return self.verdict == "success"

    def __repr__(self):
        if self.is_split:
            return "KSplitCertificate(success, slices=%r)" % (
                [k.dim for k in self.slices],)
        return "KSplitCertificate(failure, %s)" % self.kind

    def revalidate(self):
        """Re-run the certified claim from scratch; returns True when it holds."""
        q = self.bimodule
        if self.verdict == "success":
            if q.dim == 0:
                return True
            if self.gamma.matrix.nrows != q.dim or self.gamma.matrix.ncols != q.dim:
                return False
            try:
                BimoduleMap(self.hat, q, self.gamma.matrix, validate=True)
            except Exception:
                return False
            if self.gamma.matrix.rank() != q.dim:
                return False
            if self.hat.dim != q.dim:
                return False
            # beta is a right-module section of the top projection
            top = _top_data(q)
            proj = top["quotient"].projection_matrix()
            if proj @ self.beta != Matrix.identity(q.field, top["quotient"].dim):
                return False
            for g in q.right_algebra.generator_indices:
                induced = top["quotient"].induced_map(q.right_action[g])
                if self.beta @ induced != q.right_action[g] @ self.beta:
                    return False
            return True
        if self.kind == NOT_LEFT_PROJECTIVE:
            return not is_projective(q.as_left_module())
        if self.kind == DIMENSION_MISMATCH:
            hat_dim, q_dim = self.witness
            return hat_dim != q_dim and q_dim == q.dim
        if self.kind == NO_RIGHT_SPLITTING:
            return _find_right_splitting(q) is None
        return False


def _top_data(q):
    """Quotient Q/RQ with its right-module structure and idempotent slices."""
    field = q.field
    rad_vectors = []
    for r in q.left_algebra.radical_basis:
        op = q.left_act_elem(r)
        for j in range(q.dim):
            v = op.column(j)
            if not vec_is_zero(v):
                rad_vectors.append(v)
    quot = Quotient(field, q.dim, rad_vectors)
    right_action = [quot.induced_map(m) for m in q.right_action]
    top_mod = RightModule(q.right_algebra, right_action, validate=False,
                          label="%s/R%s" % (q.label or "Q", q.label or "Q"))
    return {"quotient": quot, "module": top_mod}


def _slice_modules(q, top):
    """K_i = e_i (Q/RQ) as right modules, with their embeddings in Q/RQ."""
    field = q.field
    quot = top["quotient"]
    top_mod = top["module"]
    slices = []
    for i, e in enumerate(q.left_algebra.idempotents):
        op = quot.induced_map(q.left_act_elem(e))
        image_cols = [op.column(j) for j in range(quot.dim)]
        nonzero = [c for c in image_cols if not vec_is_zero(c)]
        if not nonzero:
            k = RightModule(q.right_algebra,
                            [Matrix.zeros(field, 0, 0)] * q.right_algebra.dim,
                            validate=False, label="K%d" % (i + 1))
            k.embedding = Matrix.zeros(field, quot.dim, 0)
            slices.append(k)
            continue
        sub = _SubmoduleBasis(field, quot.dim, nonzero)
        action = [sub.restrict(top_mod.action[t])
                  for t in range(q.right_algebra.dim)]
        k = RightModule(q.right_algebra, action, validate=False, label="K%d" % (i + 1))
        k.embedding = sub.matrix
        slices.append(k)
    return slices


def _find_right_splitting(q):
    """A right-module section of Q ->> Q/RQ, or None."""
    top = _top_data(q)
    quot = top["quotient"]
    if quot.dim == 0:
        return Matrix.zeros(q.field, q.dim, 0)
    proj = quot.projection_matrix()
    constraints = [(quot.induced_map(q.right_action[g]), q.right_action[g])
                   for g in q.right_algebra.generator_indices]
    return solve_affine_operator(
        q.field, (q.dim, quot.dim), constraints,
        [(proj, Matrix.identity(q.field, quot.dim))])


def check_ksplit(q):
    """Run the decision procedure on a bimodule over (A, B).

    The zero bimodule is split by convention (the empty direct sum).
    """
    a = q.left_algebra
    if q.dim == 0:
        hat = zero_bimodule(a, q.right_algebra)
        slices = _slice_modules(q, _top_data(q))
        return KSplitCertificate(q, "success", slices=slices, hat=hat,
                                 beta=Matrix.zeros(q.field, 0, 0),
                                 gamma=BimoduleMap(hat, q,
                                                   Matrix.zeros(q.field, 0, 0),
                                                   validate=False))
    left_cert = is_projective(q.as_left_module())
    if not left_cert:
        return KSplitCertificate(q, "failure", kind=NOT_LEFT_PROJECTIVE,
                                 witness=left_cert.gap)
    top = _top_data(q)
    slices = _slice_modules(q, top)
    projectives = projective_indecomposables(a)
    parts = [tensor_k(p, k) for p, k in zip(projectives, slices) if k.dim > 0]
    if parts:
        hat = direct_sum_bimodules(parts)
    else:
        hat = zero_bimodule(a, q.right_algebra)
    if hat.dim != q.dim:
        return KSplitCertificate(q, "failure", kind=DIMENSION_MISMATCH,
                                 witness=(hat.dim, q.dim))
    beta = _find_right_splitting(q)
    if beta is None:
        return KSplitCertificate(q, "failure", kind=NO_RIGHT_SPLITTING,
                                 witness=None)
    gamma_cols = []
    quot = top["quotient"]
    for p, k in zip(projectives, slices):
        if k.dim == 0:
            continue
        for t in range(p.dim):
            elem = p.embedding.column(t)
            act = q.left_act_elem(elem)
            for s in range(k.dim):
                x = k.embedding.column(s)        # coords in Q/RQ
                gamma_cols.append(act.apply(beta.apply(x)))
    gamma_matrix = Matrix.from_columns(q.field, gamma_cols, q.dim)
    # image of gamma plus R.Q covers Q: surjectivity comes from Nakayama
    rad_cols = []
    for r in a.radical_basis:
        op = q.left_act_elem(r)
        rad_cols.extend(op.column(j) for j in range(q.dim))
    nak = hstack([gamma_matrix, Matrix.from_columns(q.field, rad_cols, q.dim)]) \
        if rad_cols else gamma_matrix
    assert nak.rank() == q.dim, "image of gamma plus R.Q must cover Q"
    gamma = BimoduleMap(hat, q, gamma_matrix, validate=True)
    assert gamma.is_isomorphism(), \
        "dimension equality plus Nakayama surjectivity forces bijectivity"
    return KSplitCertificate(q, "success", slices=slices, hat=hat, beta=beta,
                             gamma=gamma)


def split_bimodule_from_slices(a, slices, label=None):
    """The bimodule sum_i P_i (x)_k K_i for given right-module slices."""
    projectives = projective_indecomposables(a)
    if len(slices) != len(projectives):
        raise ValueError("need one slice per idempotent")
    parts = [tensor_k(p, k) for p, k in zip(projectives, slices) if k.dim > 0]
    if not parts:
        b_alg = slices[0].algebra if slices else a
        return zero_bimodule(a, b_alg)
    out = direct_sum_bimodules(parts)
    out.label = label or out.label
    return out


# -- sampling the tensor condition ------------------------------------------------

class SampleReport:
    """Result of sampling one of the quantified conditions."""

    def __init__(self, condition, tested, counterexamples, seed, trials):
        self.condition = condition
        self.tested = tested
        self.counterexamples = counterexamples
        self.seed = seed
        self.trials = trials

    @property
    def passed(self):
        return not self.counterexamples

    def __repr__(self):
        return "SampleReport(%s, tested=%d, counterexamples=%d)" % (
            self.condition, len(self.tested), len(self.counterexamples))


def sample_condition_a(q, trials, seed):
    """Tensor q with test modules; counterexamples are non-projective images.

    The fixed test set always contains every simple, the regular module and
    every indecomposable projective of the right algebra; `trials` seeded
    random modules are added.
    """
    b = q.right_algebra
    tests = []
    tests.extend(("simple[%d]" % i, m) for i, m in enumerate(simples(b)))
    tests.append(("regular", left_regular(b)))
    tests.extend(("projective[%d]" % i, m)
                 for i, m in enumerate(projective_indecomposables(b)))
    rng = random.Random(seed)
    for t in range(trials):
        tests.append(("random[%d]" % t, random_module(b, 6, rng.randrange(2**30))))
    tested, counterexamples = [], []
    for name, m in tests:
        image = tensor_over(q, m)
        cert = is_projective(image)
        tested.append((name, m.dim, image.dim, bool(cert)))
        if not cert:
            counterexamples.append({"module": name, "module_dim": m.dim,
                                    "image_dim": image.dim, "gap": cert.gap})
    return SampleReport("tensor-image-projective", tested, counterexamples,
                        seed, trials)


def _induced_hom_map(q, hom_src, hom_tgt, connecting):
    """Matrix of f -> connecting o f between hom-space bases."""
    field = q.field
    src_basis, _ = hom_src
    tgt_basis, _ = hom_tgt
    if not src_basis:
        return Matrix.zeros(field, len(tgt_basis), 0)
    if not tgt_basis:
        return Matrix.zeros(field, 0, len(src_basis))
    flat = [tuple(e for row in m.rows for e in row) for m in tgt_basis]
    span = Matrix.from_columns(field, flat, len(flat[0]))
    cols = []
    for m in src_basis:
        moved = connecting @ m
        sol = span.solve(tuple(e for row in moved.rows for e in row))
        assert sol is not None, "hom functor image must stay in the hom space"
        cols.append(sol)
    return Matrix.from_columns(field, cols, len(tgt_basis))


def sample_condition_b(q, trials, seed):
    """Apply Hom(Q, -) to short exact sequences of left modules and test
    that the images are split exact sequences of modules over the right
    algebra.

    The canonical sequence 0 -> R -> A -> A/R -> 0 is always included.
    """
    a = q.left_algebra
    sequences = [("canonical-radical", canonical_radical_sequence(a))]
    rng = random.Random(seed)
    for t in range(trials):
        m = random_module(a, 6, rng.randrange(2**30))
        sequences.append(("random[%d]" % t, random_ses(m, rng.randrange(2**30))))
    tested, counterexamples = [], []
    for name, ses in sequences:
        hx = hom_left_as_left_module(q, ses.x)
        hy = hom_left_as_left_module(q, ses.y)
        hz = hom_left_as_left_module(q, ses.z)
        f = _induced_hom_map(q, hx, hy, ses.inj)
        g = _induced_hom_map(q, hy, hz, ses.surj)
        failure = None
        dims = (len(hx[0]), len(hy[0]), len(hz[0]))
        if f.rank() != dims[0]:
            failure = "image-not-injective"
        elif not (g @ f).is_zero():
            failure = "image-not-a-complex"
        elif g.rank() != dims[2]:
            failure = "image-not-surjective"
        elif f.rank() + g.rank() != dims[1]:
            failure = "image-not-exact"
        else:
            constraints = [(hz[1].action[t], hy[1].action[t])
                           for t in q.right_algebra.generator_indices]
            section = solve_affine_operator(
                q.field, (dims[1], dims[2]), constraints,
                [(g, Matrix.identity(q.field, dims[2]))])
            if section is None:
                failure = "no-module-section"
        tested.append((name, dims, failure))
        if failure is not None:
            counterexamples.append({"sequence": name, "dims": dims,
                                    "failure": failure})
    return SampleReport("hom-image-split-exact", tested, counterexamples,
                        seed, trials)
