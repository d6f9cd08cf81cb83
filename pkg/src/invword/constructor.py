"""Witnesses: short products of conjugates reaching an involution.

construct_involution(g, spec) returns a Witness holding steps (c_i, e_i)
with every c_i of determinant 1 (even parity in the alternating case) such
that prod_i c_i g^{e_i} c_i^{-1} equals a recorded target t with t^2 scalar
(in {I, -I}) and t non-central.  Closed-form reduction words cover each
canonical shape; a conjugacy-class graph search covers a fixed list of
small groups where the reductions degenerate; everything is replayed
before being returned.
"""

import itertools
import json
import random

from .gf import UnsupportedField, make_extension, make_field, pick_alpha, poly_deg
from .matrix import (GroupSpec, Mat, classify, commutator, pad, parse_mat,
                     transvection, transvection_h)
from .canonical import charpoly, companion, generalized_jordan, split_decomposable
from .perm import Perm, a5_witness, alt_partner, commutator_perm

# Pairs (n, q) where the closed-form reductions are not available end to
# end; these go through the class-graph search first.
EXCLUDED_PAIRS = {(2, 2), (2, 3), (3, 2), (3, 4), (4, 2), (4, 3)}

MAX_WITNESS_LEN = 96
_MAX_DEPTH = 10


class ConstructError(Exception):
    """A reduction identity or a search failed to produce a witness."""


class Unreachable(ConstructError):
    """No product of conjugates reaches an involution; the certificate
    describes the exhausted search."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class WitnessStep:
    __slots__ = ("c", "e", "case")

    def __init__(self, c, e, case):
        assert e in (1, -1)
        self.c = c
        self.e = e
        self.case = case

    def __repr__(self):
        return "WitnessStep(e=%+d, case=%s)" % (self.e, self.case)


class Witness:
    """g, the steps, and the recorded target of the replayable product."""

    def __init__(self, spec, g, steps, target):
        self.spec = spec
        self.g = g
        self.steps = [s if isinstance(s, WitnessStep) else WitnessStep(*s)
                      for s in steps]
        self.target = target
        self.net_exponent = sum(s.e for s in self.steps)

    @property
    def length(self):
        return len(self.steps)

    def reseeded(self):
        return any("reseed" in s.case for s in self.steps)

    def __repr__(self):
        return "Witness(%r, length=%d, net=%d)" % (
            self.spec, self.length, self.net_exponent)


# -- word algebra --------------------------------------------------------


def _product(g, steps):
    gi = g.inv()
    acc = Mat.identity(g.ctx, g.n)
    for c, e, _ in steps:
        acc = acc * (c * (g if e == 1 else gi) * c.inv())
    return acc


def _expand(outer, word):
    """Rewrite steps over y in terms of steps over g, where word is a
    g-word with product y: an occurrence d y d^-1 becomes the word
    conjugated by d, and d y^-1 d^-1 its reversal with flipped exponents."""
    out = []
    for d, eps, _lab in outer:
        if eps == 1:
            out.extend((d * c, e, lab) for c, e, lab in word)
        else:
            out.extend((d * c, -e, lab) for c, e, lab in reversed(word))
    return out


def find_partner(g, spec=None):
    """First transvection h (by coefficient, then position) whose
    commutator with g is non-central."""
    ctx, n = g.ctx, g.n
    if g.is_scalar():
        raise ValueError("central element has no partner")
    for lam in range(1, ctx.q):
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                h = transvection(ctx, n, i, j, lam)
                if not commutator(g, h).is_scalar():
                    return h
    raise AssertionError("non-central element must fail to commute with "
                         "some transvection")


def _reseed(g, depth):
    """Trade g for the commutator x = g^-1 h^-1 g h (always determinant 1
    and non-central) and pull a witness for x back to g.  The wrapping
    word has net exponent 0, so the result is balanced regardless of the
    inner word."""
    ctx, n = g.ctx, g.n
    h = find_partner(g)
    word_x = [(Mat.identity(ctx, n), -1, "reseed"),
              (h.inv(), 1, "reseed")]
    x = _product(g, word_x)
    assert x == commutator(g, h) and not x.is_scalar()
    inner, t = _construct_internal(x, depth + 1)
    return _expand(inner, word_x), t


# -- 2x2 core ------------------------------------------------------------


def _beta_exponent(ctx):
    """(alpha, k) with alpha a square in {-1, 2, -2} and k the integer
    exponent satisfying k = 2/alpha in the prime field."""
    alpha, beta = pick_alpha(ctx)
    if alpha == ctx.neg(1):
        k = -2
    elif alpha == ctx.scalar(2):
        k = 1
    else:
        k = -1
    assert ctx.scalar(k % ctx.p) == beta
    return alpha, k


def _sl2_unipotent(w, label):
    """Word for upper unitriangular w = I + x E_12, x != 0.  For odd q the
    product is [[1, x], [-2/x, -1]], which squares to -I; for even q the
    element is already an involution."""
    ctx = w.ctx
    x = w.rows[0][1]
    eye = Mat.identity(ctx, 2)
    assert w.rows[0][0] == 1 and w.rows[1][0] == 0 and w.rows[1][1] == 1
    assert x != 0
    if ctx.p == 2:
        return [(eye, 1, label)], w
    alpha, k = _beta_exponent(ctx)
    gamma = ctx.sqrt(ctx.div(alpha, ctx.mul(x, x)))
    assert gamma is not None
    s = Mat(ctx, [[ctx.neg(ctx.mul(gamma, x)), ctx.sub(x, ctx.inv(gamma))],
                  [gamma, ctx.neg(1)]])
    assert s.det() == 1
    steps = [(eye, 1, label)] + [(s, 1 if k > 0 else -1, label)] * abs(k)
    t = _product(w, steps)
    expect = Mat(ctx, [[1, x],
                       [ctx.neg(ctx.div(ctx.scalar(2), x)), ctx.neg(1)]])
    if t != expect:
        raise ConstructError("unipotent 2x2 identity failed")
    return steps, t


def _sl2_core(g, depth=0):
    """Witness steps for non-central 2x2 determinant-1 g over GF(q), q >= 2.

    Normalizes so the lower-left entry vanishes or the matrix takes the
    antidiagonal-plus form, then branches on the shape.  Over GF(2) the
    order-3 elements admit no witness of this kind; that raises."""
    ctx = g.ctx
    assert g.n == 2 and g.det() == 1 and not g.is_scalar()
    eye = Mat.identity(ctx, 2)
    u = None
    w = g
    if w.rows[1][0] != 0:
        # row reduce to the form with a zero in position (1,1)
        u = transvection_h(ctx, ctx.neg(ctx.div(w.rows[0][0], w.rows[1][0])))
        w = u * w * u.inv()
        assert w.rows[0][0] == 0 and w.rows[1][0] != 0
    if w.rows[1][0] == 0:
        # [[a, b], [0, 1/a]]
        a, b = w.rows[0][0], w.rows[0][1]
        if a == 1:
            steps, t = _sl2_unipotent(w, "sl2-unipotent")
        elif a == ctx.neg(1):
            # q odd, b != 0: w^2 = I + (-2b) E_12
            word = [(eye, 1, "sl2-square"), (eye, 1, "sl2-square")]
            seed = _product(w, word)
            inner, t = _sl2_unipotent(seed, "sl2-square")
            steps = _expand(inner, word)
        else:
            # a not 0, 1, -1: commutator with h(1) is I + (1 - a^2) E_12
            h1 = transvection_h(ctx, 1)
            word = [(h1, 1, "sl2-commutator"), (eye, -1, "sl2-commutator")]
            seed = _product(w, word)
            assert seed.rows[1][0] == 0 and seed.rows[0][0] == 1
            inner, t = _sl2_unipotent(seed, "sl2-commutator")
            steps = _expand(inner, word)
    else:
        # [[0, -1/a], [a, b]]
        a, b = w.rows[1][0], w.rows[1][1]
        if b == 0:
            # already squares to -I (to I when q is even)
            steps, t = [(eye, 1, "sl2-antidiagonal")], w
        elif ctx.p != 2:
            # (h2 w h2^-1 w)^2 = I + (4b/a) E_12 with h2 = I + (b/a) E_12
            h2 = transvection_h(ctx, ctx.div(b, a))
            word = [(h2, 1, "sl2-twist"), (eye, 1, "sl2-twist")] * 2
            seed = _product(w, word)
            assert seed == transvection_h(
                ctx, ctx.mul(ctx.scalar(4), ctx.div(b, a)))
            inner, t = _sl2_unipotent(seed, "sl2-twist")
            steps = _expand(inner, word)
        else:
            if ctx.q == 2:
                raise ConstructError(
                    "order-3 element of the 2x2 group over GF(2): no "
                    "product of conjugates is an involution")
            # even q >= 4: commutator with a diagonal-plus matrix lands in
            # the triangular branch, and one more commutator is unipotent
            c = 2  # any element outside {0, 1}
            off = ctx.mul(ctx.sub(ctx.mul(c, c), 1),
                          ctx.div(b, ctx.mul(a, c)))
            h3 = Mat(ctx, [[c, off], [0, ctx.inv(c)]])
            assert h3.det() == 1
            word1 = [(h3, 1, "sl2-char2"), (eye, -1, "sl2-char2")]
            w1 = _product(w, word1)
            csq = ctx.mul(c, c)
            assert w1.rows[1][0] == 0 and w1.rows[0][0] == csq and csq != 1
            h1 = transvection_h(ctx, 1)
            word2 = _expand([(h1, 1, "sl2-char2"), (eye, -1, "sl2-char2")],
                            word1)
            seed = _product(w, word2)
            assert seed.rows[1][0] == 0 and seed.rows[0][0] == 1
            inner, t = _sl2_unipotent(seed, "sl2-char2")
            steps = _expand(inner, word2)
    if u is not None:
        # the word was built over w = u g u^-1 and u has determinant 1
        steps = [(c * u, e, lab) for c, e, lab in steps]
    assert _product(g, steps) == t
    return steps, t


def sl2_witness(g):
    """Witness for a non-central 2x2 determinant-1 matrix, q > 3.

    For q in {2, 3} use construct_involution, which routes these through
    the class-graph search."""
    ctx = g.ctx
    if ctx.q <= 3:
        raise ValueError("q <= 3 needs the search fallback; "
                         "call construct_involution")
    spec = GroupSpec("SL", 2, ctx.q)
    cls = classify(g, spec)
    if not cls.in_group:
        raise ValueError("determinant is not 1")
    if cls.central:
        raise ValueError("central element has no witness")
    steps, t = _sl2_core(g)
    w = Witness(spec, g, steps, t)
    rep = replay(w)
    assert rep.ok, rep.violation
    return w


# -- reduction words for the canonical shapes ----------------------------


def _s3(ctx, n, y):
    """The 3x3 gadget [[0, -1, y], [1, 0, 0], [0, 0, 1]] (determinant 1)
    acting on the last three coordinates."""
    r = Mat(ctx, [[0, ctx.neg(1), y], [1, 0, 0], [0, 0, 1]])
    return pad(r, n, n - 3)


def _scalar_fix(ctx, n, d):
    """nu with nu^n = 1/d, or None; scaling a conjugator by nu cancels in
    the conjugation, so this repairs determinants invisibly."""
    target = ctx.inv(d)
    for nu in range(1, ctx.q):
        if ctx.pow(nu, n) == target:
            return nu
    return None


def _m1_word(gJ):
    """Companion matrix of an irreducible polynomial, n >= 3: a 4-step word
    whose product is I + E_{n-1,n}."""
    ctx, n = gJ.ctx, gJ.n
    lab = "m1-reduction"
    word = [(_s3(ctx, n, ctx.neg(1)), -1, lab), (_s3(ctx, n, 0), 1, lab),
            (_s3(ctx, n, 1), -1, lab), (_s3(ctx, n, 0), 1, lab)]
    expect = pad(transvection_h(ctx, 1), n, n - 2)
    if _product(gJ, word) != expect:
        raise ConstructError("companion reduction identity failed")
    return word, expect, n - 2


def _mn_word(gJ):
    """lambda (I + N), n >= 3: a 2-step word with product I + E_{n-1,n}.
    The scalar lambda cancels between the two exponents."""
    ctx, n = gJ.ctx, gJ.n
    lab = "mn-reduction"

    def v_of(y):
        rows = [[0] * n for _ in range(n)]
        rows[n - 2][0] = 1
        rows[n - 3][1] = ctx.add(rows[n - 3][1], 1)
        for i in range(3, n + 1):
            rows[n - i][i - 1] = ctx.add(rows[n - i][i - 1], 1)
            sgn = 1 if i % 2 == 1 else ctx.neg(1)
            rows[n - 1][i - 1] = ctx.add(rows[n - 1][i - 1], sgn)
        rows[n - 2][1] = ctx.add(rows[n - 2][1], y)
        return Mat(ctx, rows)

    conjs = []
    for y in (1, 0):
        v = v_of(y)
        dv = v.det()
        if dv == 0:
            raise ConstructError("reduction matrix singular")
        if dv != 1:
            nu = _scalar_fix(ctx, n, dv)
            if nu is None:
                raise ConstructError(
                    "reduction determinant outside the n-th powers")
            v = v.scale(nu)
            assert v.det() == 1
        conjs.append(v)
    word = [(conjs[0], 1, lab), (conjs[1], -1, lab)]
    expect = pad(transvection_h(ctx, 1), n, n - 2)
    if _product(gJ, word) != expect:
        raise ConstructError("regular unipotent reduction identity failed")
    return word, expect, n - 2


def _m2_t2(ctx, n, f):
    """The auxiliary conjugator for the two-block shape, n = 2d >= 6."""
    half = n // 2
    rows = [[0] * n for _ in range(n)]

    def put(i, j, val):
        # i, j are 1-indexed
        rows[i - 1][j - 1] = ctx.add(rows[i - 1][j - 1], val)

    if n == 6:
        put(1, 4, 1)
        put(2, 3, 1)
        put(2, 6, 1)
        put(3, 1, 1)
        put(4, 2, 1)
        put(6, 6, 1)
        put(4, 4, ctx.neg(1))
        put(5, 5, ctx.neg(1))
        put(5, 6, ctx.add(1, f[2]))
    else:
        put(1, n, 1)
        put(1, half + 1, 1 if (half + 1) % 2 == 1 else ctx.neg(1))
        for i in range(2, half - 1):
            put(i, half + i, 1)
        for i in range(1, half + 1):
            put(half - 2 + i, i, 1)
        put(n - 2, n - 2, ctx.neg(1))
        put(n - 1, n - 1, ctx.neg(1))
        put(n - 1, n, ctx.add(1, f[half - 1]))
        put(n, n, 1)
    return Mat(ctx, rows)


def _m2_word(gJ, f):
    """Two Jordan blocks for the same irreducible f of degree d = n/2 >= 2:
    a 4-step word with product I + E_{n-1,n} when n >= 6; a searched pair
    reaching a 2x2 residue when n = 4."""
    ctx, n = gJ.ctx, gJ.n
    lab = "m2-reduction"
    if n == 4:
        c0 = f[0]
        wres = Mat(ctx, [[1, 1], [ctx.inv(c0), ctx.add(1, ctx.inv(c0))]])
        assert wres.det() == 1 and not wres.is_scalar()
        target = pad(wres, 4, 2)
        A, B = _pair_search(gJ, target)
        word = [(A, 1, lab), (B, -1, lab)]
        assert _product(gJ, word) == target
        return word, target, 2
    t1 = pad(transvection_h(ctx, 1), n, n - 2)
    t2 = _m2_t2(ctx, n, f)
    dv = t2.det()
    if dv == 0:
        raise ConstructError("auxiliary conjugator singular")
    if dv != 1:
        nu = _scalar_fix(ctx, n, dv)
        if nu is None:
            raise ConstructError(
                "auxiliary determinant outside the n-th powers")
        t2 = t2.scale(nu)
    A = t2.inv()
    B = A * t1
    s0, sm1 = _s3(ctx, n, 0), _s3(ctx, n, ctx.neg(1))
    word = [(s0 * A, -1, lab), (s0 * B, 1, lab),
            (sm1 * B, -1, lab), (sm1 * A, 1, lab)]
    if _product(gJ, word) != t1:
        raise ConstructError("double-block reduction identity failed")
    return word, t1, n - 2


# -- searched pairs ------------------------------------------------------


def _pair_candidates(ctx, n, count=600):
    yield Mat.identity(ctx, n)
    for i in range(n):
        for j in range(n):
            if i != j:
                yield transvection(ctx, n, i, j, 1)
    rng = random.Random(0xA11CE ^ (ctx.q * 1009 + n))
    for _ in range(count):
        m = Mat.identity(ctx, n)
        for _ in range(2 * n):
            i = rng.randrange(n)
            j = rng.randrange(n)
            if i == j:
                continue
            m = m * transvection(ctx, n, i, j, rng.randrange(1, ctx.q))
        yield m


def _similarity_in_sl(g, m):
    """u with u g u^-1 = m and det u = 1, or None.  A base solution is
    corrected inside the centralizer F[g] (g is regular in every use)."""
    from .canonical import solve_similarity
    u0 = solve_similarity(g, m)
    if u0 is None:
        return None
    d = u0.det()
    if d == 1:
        return u0
    ctx, n = g.ctx, g.n
    want = ctx.inv(d)
    pows = [Mat.identity(ctx, n)]
    for _ in range(n - 1):
        pows.append(pows[-1] * g)
    tried = 0
    for coeffs in itertools.product(range(ctx.q), repeat=n):
        tried += 1
        if tried > 300000:
            break
        z = None
        for ck, pk in zip(coeffs, pows):
            if ck == 0:
                continue
            term = pk.scale(ck)
            z = term if z is None else z + term
        if z is None or z.det() != want:
            continue
        u = u0 * z
        assert u.det() == 1 and u * g * u.inv() == m
        return u
    return None


def _pair_search(g, target):
    """Determinant-1 pair (A, B) with (A g A^-1)(B g^-1 B^-1) = target."""
    cp_g = charpoly(g)
    for b in _pair_candidates(g.ctx, g.n):
        m = target * (b * g * b.inv())
        if charpoly(m) != cp_g:
            continue
        a = _similarity_in_sl(g, m)
        if a is not None:
            return a, b
    raise ConstructError("pair search exhausted")


# -- residue finish, descent, decomposition ------------------------------


def _finish_block(gJ, word, expect, offset, depth):
    """expect = I (+) r (+) I with a 2x2 residue r at the given diagonal
    offset: finish with a 2x2 word on r, lift, and square once if the
    embedded target only squares to -I on the residue."""
    ctx, n = gJ.ctx, gJ.n
    sub = Mat(ctx, [[expect.rows[offset + i][offset + j] for j in (0, 1)]
                    for i in (0, 1)])
    inner, t_sub = _sl2_core(sub, depth)
    lifted = [(pad(c, n, offset), e, lab) for c, e, lab in inner]
    steps = _expand(lifted, word)
    t = pad(t_sub, n, offset)
    spec = GroupSpec("SL", n, ctx.q)
    if not classify(t, spec).projective_involution:
        steps = steps + steps
        t = t * t
        assert classify(t, spec).projective_involution
    return steps, t


def _phi(mat_ext, base, f):
    """Entrywise blow-up along the extension defined by f: each entry
    sum b_k xi^k becomes sum b_k C(f)^k.  A ring homomorphism, so words
    and their products descend entry by entry."""
    ext = mat_ext.ctx
    d = poly_deg(f)
    comp = companion(base, f)
    pows = [Mat.identity(base, d)]
    for _ in range(d - 1):
        pows.append(pows[-1] * comp)
    m = mat_ext.n
    out = [[0] * (m * d) for _ in range(m * d)]
    for i in range(m):
        for j in range(m):
            a = mat_ext.rows[i][j]
            if a == 0:
                continue
            blk = None
            for k, ck in enumerate(ext.coords_base(a)):
                if ck == 0:
                    continue
                term = pows[k].scale(ck)
                blk = term if blk is None else blk + term
            if blk is None:
                continue
            for bi in range(d):
                for bj in range(d):
                    out[i * d + bi][j * d + bj] = blk.rows[bi][bj]
    return Mat(base, out)


def _ext_descent(gJ, f, mult, depth):
    """Jordan block for irreducible f of degree d >= 2 with multiplicity
    mult: view it as xi (I + N) over GF(q^d), solve there, map the word
    down entrywise.  Determinants of the mapped conjugators are norms of
    the upstairs determinants, so determinant-1 is preserved."""
    base = gJ.ctx
    ext = make_extension(base, f)  # UnsupportedField above 32 elements
    xi = base.q  # encoding of the adjoined root
    rows = [[0] * mult for _ in range(mult)]
    for i in range(mult):
        rows[i][i] = xi
        if i + 1 < mult:
            rows[i][i + 1] = xi
    m_up = Mat(ext, rows)
    assert _phi(m_up, base, f) == gJ
    if mult >= 3:
        word, expect, off = _mn_word(m_up)
        steps_up, t_up = _finish_block(m_up, word, expect, off, depth)
    else:
        # mult == 2 with even q: the upstairs matrix has determinant
        # xi^2 != 1, so reseed there and solve the 2x2 case
        h_up = find_partner(m_up)
        word_x = [(Mat.identity(ext, 2), -1, "reseed"),
                  (h_up.inv(), 1, "reseed")]
        x = _product(m_up, word_x)
        assert not x.is_scalar() and x.det() == 1
        inner, t_up = _sl2_core(x, depth)
        steps_up = _expand(inner, word_x)
    steps = [(_phi(c, base, f), e, "descent/" + lab)
             for c, e, lab in steps_up]
    t = _phi(t_up, base, f)
    assert _product(gJ, steps) == t
    assert classify(t, GroupSpec("SL", gJ.n, base.q)).projective_involution
    return steps, t


def _read_sub(gJ, emb):
    return Mat(gJ.ctx, [[gJ.rows[i][j] for j in emb] for i in emb])


def _lift_sub(c, n, emb):
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, i in enumerate(emb):
        for b, j in enumerate(emb):
            rows[i][j] = c.rows[a][b]
    return Mat(c.ctx, rows)


def _decomposable(gJ, cf, depth):
    """Split into diagonal parts, solve on one non-scalar part with a
    balanced word (so the complement cancels), lift, and square once if
    the embedded target is not yet a projective involution."""
    ctx, n = gJ.ctx, gJ.n
    g1, g2, (emb1, emb2) = split_decomposable(cf, gJ)
    sides = [(g1, emb1), (g2, emb2)]
    viable = [(s, e) for s, e in sides
              if not s.is_scalar() and not (s.n == 2 and ctx.q == 2)]
    if viable:
        sub, emb = viable[0]
    else:
        # only a 2x2 part over GF(2) is non-scalar; balanced words do not
        # exist there (they land in the index-2 subgroup), so widen the
        # part by one coordinate of the scalar complement
        traps = [(s, e) for s, e in sides if not s.is_scalar()]
        assert traps, "split must leave a non-scalar part"
        _, emb_t = traps[0]
        emb_o = emb2 if emb_t == emb1 else emb1
        emb = tuple(emb_t) + (emb_o[0],)
        sub = _read_sub(gJ, emb)
    inner, t_sub = _construct_internal(sub, depth + 1, require_balanced=True)
    steps = [(_lift_sub(c, n, emb), e, lab) for c, e, lab in inner]
    t = _lift_sub(t_sub, n, emb)
    assert _product(gJ, steps) == t
    spec = GroupSpec("SL", n, ctx.q)
    if not classify(t, spec).projective_involution:
        steps = steps + steps
        t = t * t
        assert classify(t, spec).projective_involution
    return steps, t


# -- class-graph search and sampling for the excluded pairs ---------------


def brute_force_witness(g, spec, cap=48):
    """Exhaustive witness via the conjugacy-class graph of the ambient
    group.  Levels of the graph are exactly the classes meeting the k-fold
    products of the class of g and its inverse, so the first hit gives a
    minimum-length witness.  Raises Unreachable (with a closure
    certificate) when no involution is reachable, GroupTooLarge when the
    group cannot be enumerated, ConstructError past the cap."""
    from .oracle import build_group, conjugacy_classes

    tbl = build_group(spec)
    ct = conjugacy_classes(tbl)
    gi = tbl.index_of(g)
    if gi is None:
        raise ValueError("element outside the group")
    if gi == tbl.identity_index:
        raise ValueError("identity has no witness")
    cls_g = ct.class_of[gi]
    tg_inv = tbl.inv(ct.transporter[gi])
    genmap = {}
    for x in ct.members(cls_g):
        # x = t_x r t_x^-1 and g = t_g r t_g^-1, so (t_x t_g^-1) conjugates
        # g to x; the inverse class reuses the same conjugators
        v = tbl.mul(ct.transporter[x], tg_inv)
        genmap.setdefault(x, (1, v))
        genmap.setdefault(tbl.inv(x), (-1, v))
    gens = sorted(genmap)

    def is_target(idx):
        if tbl.spec.family in ("Alt", "Sym"):
            return (idx != tbl.identity_index
                    and tbl.mul(idx, idx) == tbl.identity_index)
        el = tbl.decode(idx)
        return classify(el, spec).projective_involution

    seen = {}  # class index -> (word of generator elements, its product)
    frontier = []
    for a in gens:
        k = ct.class_of[a]
        if k not in seen:
            seen[k] = ([a], a)
            frontier.append(k)
    level = 1
    while True:
        for k in frontier:
            word, prod = seen[k]
            if is_target(prod):
                steps = [(tbl.decode(genmap[a][1]), genmap[a][0], "bfs")
                         for a in word]
                return Witness(spec, g, steps, tbl.decode(prod))
        if level >= cap:
            raise ConstructError("class search passed the cap (%d)" % cap)
        nxt = []
        for k in frontier:
            word, x = seen[k]
            for a in gens:
                y = tbl.mul(x, a)
                ky = ct.class_of[y]
                if ky not in seen:
                    seen[ky] = (word + [a], y)
                    nxt.append(ky)
        if not nxt:
            closure = sorted(seen)
            certificate = {
                "group_order": tbl.order,
                "classes_in_closure": len(closure),
                "closure_size": sum(ct.sizes[k] for k in closure),
                "levels_explored": level,
                "involution_classes_in_group": sum(
                    1 for k in range(len(ct.reps)) if is_target(ct.reps[k])),
            }
            raise Unreachable(
                "closure of the class contains no involution", certificate)
        frontier = nxt
        level += 1


def _sampled_witness(g):
    """Randomized last resort: balanced alternating-exponent products of
    conjugates by seeded random determinant-1 matrices."""
    ctx, n = g.ctx, g.n
    seed = n
    for row in g.rows:
        for v in row:
            seed = (seed * ctx.q + v) % (2 ** 61 - 1)
    rng = random.Random(seed)
    gi = g.inv()
    eye = Mat.identity(ctx, n)
    spec = GroupSpec("SL", n, ctx.q)
    for length in (2, 4, 6, 8, 12, 16, 24, 32, 48):
        for _ in range(300):
            steps = []
            acc = eye
            for k in range(length):
                c = eye
                for _ in range(n + 1):
                    i = rng.randrange(n)
                    j = rng.randrange(n)
                    if i == j:
                        continue
                    c = c * transvection(ctx, n, i, j,
                                         rng.randrange(1, ctx.q))
                e = 1 if k % 2 == 0 else -1
                steps.append((c, e, "sampled"))
                acc = acc * (c * (g if e == 1 else gi) * c.inv())
            if classify(acc, spec).projective_involution:
                return steps, acc
    raise ConstructError("sampled search exhausted")


def _excluded_ladder(g, depth):
    """For the fixed small (n, q) pairs: exact class search, then the
    generic reductions anyway, then sampling."""
    from .oracle import GroupTooLarge

    try:
        if g.det() != 1:
            return _reseed(g, depth)
        w = brute_force_witness(g, GroupSpec("SL", g.n, g.ctx.q))
        return [(s.c, s.e, s.case) for s in w.steps], w.target
    except GroupTooLarge:
        pass
    try:
        return _construct_internal(g, depth + 1, skip_excluded=True)
    except ConstructError:
        return _sampled_witness(g)


# -- main pipeline -------------------------------------------------------


def _construct_internal(g, depth=0, require_balanced=False,
                        skip_excluded=False):
    if depth > _MAX_DEPTH:
        raise ConstructError("recursion limit hit")
    ctx, n = g.ctx, g.n
    if g.is_scalar():
        raise ValueError("central element has no witness")
    if (n, ctx.q) in EXCLUDED_PAIRS and not skip_excluded:
        steps, t = _excluded_ladder(g, depth)
    elif g.det() != 1:
        steps, t = _reseed(g, depth)
    elif n == 2:
        steps, t = _sl2_core(g, depth)
    else:
        cf = generalized_jordan(g)
        gJ = cf.canonical
        if cf.case == "decomposable":
            steps_j, t_j = _decomposable(gJ, cf, depth)
        elif cf.case == "m1":
            try:
                word, expect, off = _m1_word(gJ)
                steps_j, t_j = _finish_block(gJ, word, expect, off, depth)
            except ConstructError:
                steps_j, t_j = _reseed(gJ, depth)
        elif cf.case == "mn":
            try:
                word, expect, off = _mn_word(gJ)
                steps_j, t_j = _finish_block(gJ, word, expect, off, depth)
            except ConstructError:
                try:
                    expect = pad(transvection_h(ctx, 1), n, n - 2)
                    a, b = _pair_search(gJ, expect)
                    word = [(a, 1, "mn-reduction"), (b, -1, "mn-reduction")]
                    steps_j, t_j = _finish_block(gJ, word, expect, n - 2,
                                                 depth)
                except ConstructError:
                    steps_j, t_j = _reseed(gJ, depth)
        elif cf.case == "m2":
            f = cf.blocks[0][0]
            try:
                word, expect, off = _m2_word(gJ, f)
                steps_j, t_j = _finish_block(gJ, word, expect, off, depth)
            except ConstructError:
                steps_j, t_j = None, None
                if ctx.p == 2:
                    try:
                        steps_j, t_j = _ext_descent(gJ, f, 2, depth)
                    except (ConstructError, UnsupportedField):
                        pass
                if steps_j is None:
                    steps_j, t_j = _reseed(gJ, depth)
        elif cf.case == "ext":
            f, mult = cf.blocks[0]
            try:
                steps_j, t_j = _ext_descent(gJ, f, mult, depth)
            except ConstructError:
                steps_j, t_j = _reseed(gJ, depth)
        else:
            raise AssertionError("unexpected case %r at n=%d" % (cf.case, n))
        if cf.u.is_identity():
            steps, t = steps_j, t_j
        else:
            u, ui = cf.u, cf.u.inv()
            steps = [(ui * c * u, e, lab) for c, e, lab in steps_j]
            t = ui * t_j * u
    if require_balanced and sum(e for _, e, _ in steps) != 0:
        steps, t = _reseed(g, depth)
    return steps, t


def construct_involution(g, spec):
    """Witness for a non-central g in the group described by spec.

    Matrix families GL and SL take Mat inputs; Sym and Alt take Perm
    inputs.  The returned witness is replayed before being handed back."""
    if spec.family in ("Sym", "Alt"):
        assert isinstance(g, Perm) and g.n == spec.n
        if g.is_identity():
            raise ValueError("identity has no witness")
        if spec.family == "Alt" and g.parity() != 0:
            raise ValueError("odd permutation is outside the group")
        certificate = None
        if g.n == 5 and g.cycle_type() == (5,):
            raw, target, certificate = a5_witness(g)
            steps = [(c, e, "a5-search") for c, e in raw]
        else:
            h = alt_partner(g)
            steps = [(Perm.identity(g.n), -1, "alt-partner"),
                     (h.inv(), 1, "alt-partner")]
            target = commutator_perm(g, h)
        w = Witness(spec, g, steps, target)
        w.certificate = certificate
    elif spec.family in ("GL", "SL"):
        assert isinstance(g, Mat) and g.n == spec.n and g.ctx.q == spec.q
        cls = classify(g, spec)
        if not cls.in_group:
            raise ValueError("determinant is not 1: outside the group")
        if cls.central:
            raise ValueError("central element has no witness")
        steps, target = _construct_internal(g)
        w = Witness(spec, g, steps, target)
    else:
        raise ValueError("construction not supported for family %r"
                         % spec.family)
    rep = replay(w)
    assert rep.ok, "construction produced an invalid witness: %s" % \
        rep.violation
    return w


# -- replay and serialization ---------------------------------------------


class ReplayReport:
    __slots__ = ("ok", "violation", "length", "net_exponent")

    def __init__(self, ok, violation, length, net_exponent):
        self.ok = ok
        self.violation = violation
        self.length = length
        self.net_exponent = net_exponent

    def __repr__(self):
        state = "ok" if self.ok else "violation=%s" % self.violation
        return "ReplayReport(%s, length=%d, net=%d)" % (
            state, self.length, self.net_exponent)


def replay(w):
    """Recompute the product and recheck every invariant; reports the
    first violation instead of raising."""
    spec = w.spec
    length = len(w.steps)
    net = sum(s.e for s in w.steps)

    def report(violation=None):
        return ReplayReport(violation is None, violation, length, net)

    if length == 0:
        return report("empty-witness")
    if length > MAX_WITNESS_LEN:
        return report("length-exceeds-%d" % MAX_WITNESS_LEN)
    if net != w.net_exponent:
        return report("net-exponent-mismatch")
    if spec.family in ("Sym", "Alt"):
        g = w.g
        acc = Perm.identity(g.n)
        gi = g.inv()
        for s in w.steps:
            if s.c.parity() != 0:
                return report("conjugator-parity")
            acc = acc * (s.c * (g if s.e == 1 else gi) * s.c.inv())
        if acc != w.target:
            return report("product-mismatch")
        t = w.target
        if t.is_identity() or not (t * t).is_identity():
            return report("target-not-involution")
        if t.parity() != 0:
            return report("target-parity")
        return report()
    g = w.g
    acc = Mat.identity(g.ctx, g.n)
    gi = g.inv()
    for s in w.steps:
        if s.c.det() != 1:
            return report("conjugator-determinant")
        acc = acc * (s.c * (g if s.e == 1 else gi) * s.c.inv())
    if acc != w.target:
        return report("product-mismatch")
    if not classify(w.target, spec).projective_involution:
        return report("target-not-projective-involution")
    return report()


def witness_to_json(w):
    spec = w.spec
    group = {"family": spec.family, "n": spec.n}
    if spec.q is not None:
        group["q"] = spec.q
    if spec.family in ("Sym", "Alt"):
        enc = str
    else:
        enc = lambda m: m.to_text()
    obj = {
        "group": group,
        "g": enc(w.g),
        "steps": [{"c": enc(s.c), "e": s.e, "case": s.case}
                  for s in w.steps],
        "target": enc(w.target),
        "net_exponent": w.net_exponent,
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def witness_from_json(text):
    obj = json.loads(text)
    fam = obj["group"]["family"]
    n = obj["group"]["n"]
    if fam in ("Sym", "Alt"):
        spec = GroupSpec(fam, n)
        dec = lambda s: Perm.from_cycles(s, n)
    else:
        spec = GroupSpec(fam, n, obj["group"]["q"])
        ctx = make_field(spec.q)
        dec = lambda s: parse_mat(ctx, s)
    steps = [(dec(d["c"]), d["e"], d["case"]) for d in obj["steps"]]
    w = Witness(spec, dec(obj["g"]), steps, dec(obj["target"]))
    if w.net_exponent != obj["net_exponent"]:
        raise ValueError("net exponent mismatch in witness record")
    return w
