"""Characteristic polynomials, factorization, and generalized Jordan form.

Conventions (frozen; the constructor depends on them):

* companion(f) has 1s on the subdiagonal and last column (-c_0,...,-c_{d-1}).
* The generalized Jordan block for (f, m) is kron(I_m + N_m, C(f)): diagonal
  blocks C(f) with C(f) itself as the superdiagonal coupling.  For deg f = 1
  this is exactly lambda(I + N), and in general it is the image of
  xi(I_m + N_m) over GF(q^deg f) under the regular embedding.
* Blocks are ordered by factor (degree, then coefficient encoding), and by
  decreasing multiplicity within a factor.
"""

import random

from .gf import (
    irreducible_polys,
    poly_add,
    poly_deg,
    poly_divmod,
    poly_mul,
    poly_neg,
    poly_trim,
)
from .matrix import Mat, direct_sum, kron, nullspace


def companion(ctx, f):
    """Companion matrix of a monic polynomial, subdiagonal-1 convention."""
    d = poly_deg(f)
    assert d >= 1 and f[-1] == 1
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = ctx.neg(f[i])
    return Mat(ctx, rows)


def gen_jordan_block(ctx, f, m):
    c = companion(ctx, f)
    if m == 1:
        return c
    coupling = [[1 if j - i in (0, 1) else 0 for j in range(m)] for i in range(m)]
    return kron(Mat(ctx, coupling), c)


def blocks_matrix(ctx, blocks):
    """Assemble the canonical matrix from a block list [(f, m), ...]."""
    out = None
    for f, m in blocks:
        b = gen_jordan_block(ctx, f, m)
        out = b if out is None else direct_sum(out, b)
    return out


def charpoly(g):
    """det(xI - g) by subset dynamic programming; monic, constant first."""
    ctx, n = g.ctx, g.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(poly_trim((ctx.neg(g.rows[i][j]), 1)))
            else:
                row.append(poly_trim((ctx.neg(g.rows[i][j]),)))
        rows.append(row)
    dp = {0: (1,)}
    for mask in range(1, 1 << n):
        k = bin(mask).count("1") - 1  # expand along row k
        acc = ()
        pos = 0
        for j in range(n):
            if not mask & (1 << j):
                continue
            term = poly_mul(ctx, rows[k][j], dp[mask ^ (1 << j)])
            if (k + pos) & 1:
                term = poly_neg(ctx, term)
            acc = poly_add(ctx, acc, term)
            pos += 1
        dp[mask] = acc
    return dp[(1 << n) - 1]


_IRR_CACHE = {}


def _irreducibles(ctx, d):
    key = (ctx.key, d)
    if key not in _IRR_CACHE:
        _IRR_CACHE[key] = irreducible_polys(ctx, d)
    return _IRR_CACHE[key]


def factor_charpoly(g):
    """Monic irreducible factors with multiplicities, ordered by degree then
    coefficient encoding."""
    ctx = g.ctx
    rem = charpoly(g)
    out = []
    d = 1
    while poly_deg(rem) > 0:
        for f in _irreducibles(ctx, d):
            mult = 0
            while True:
                quo, r = poly_divmod(ctx, rem, f)
                if r:
                    break
                rem, mult = quo, mult + 1
            if mult:
                out.append((f, mult))
            if poly_deg(rem) < d:
                break
        d += 1
    return out


def mat_poly_eval(g, f):
    acc = Mat.zero(g.ctx, g.n)
    for c in reversed(f):
        acc = acc * g + Mat.scalar(g.ctx, g.n, c)
    return acc


def _jordan_partition(g, f, e):
    # Multiplicities of the (f, *) blocks from the rank filtration of f(g)^j.
    if e == 1:
        return [1]
    d = poly_deg(f)
    fg = mat_poly_eval(g, f)
    ranks = [g.n]
    power = Mat.identity(g.ctx, g.n)
    while True:
        power = power * fg
        ranks.append(power.rank())
        if ranks[-1] == ranks[-2]:
            break
    ge = [(ranks[j - 1] - ranks[j]) // d for j in range(1, len(ranks))]
    parts = []
    for j, cnt in enumerate(ge):
        exactly = cnt - (ge[j + 1] if j + 1 < len(ge) else 0)
        parts.extend([j + 1] * exactly)
    parts.sort(reverse=True)
    assert sum(parts) == e
    return parts


class CanonicalForm:
    """Generalized Jordan data: u g u^{-1} = blocks_matrix(blocks)."""

    def __init__(self, u, blocks, case, canonical):
        self.u = u
        self.blocks = blocks
        self.case = case
        self.canonical = canonical

    def __repr__(self):
        return "CanonicalForm(case=%s, blocks=%r)" % (self.case, self.blocks)


def _case_tag(blocks, n):
    if len(blocks) >= 2:
        return "decomposable"
    if n <= 2:
        return "small"  # base case; at n=2 the m2/mn shapes coincide anyway
    f, m = blocks[0]
    d = poly_deg(f)
    if m == 1:
        return "m1"
    if d == 1:
        return "mn"
    if m == 2:
        return "m2"
    return "ext"  # deg f >= 2 with m >= 3: handled by field-extension descent


def solve_similarity(g, j):
    """An invertible u with u g u^{-1} = j, or None if g, j are not similar.

    Solves the linear system X g = j X and picks an invertible element of the
    solution space (structured scan, then seeded random combinations).
    """
    ctx, n = g.ctx, g.n
    nsq = n * n
    rows = []
    for i in range(n):
        for jj in range(n):
            row = [0] * nsq
            for k in range(n):
                row[i * n + k] = ctx.add(row[i * n + k], g.rows[k][jj])
                row[k * n + jj] = ctx.sub(row[k * n + jj], j.rows[i][k])
            rows.append(row)
    basis = nullspace(Mat(ctx, rows))
    mats = [Mat(ctx, [v[i * n:(i + 1) * n] for i in range(n)]) for v in basis]
    mats = [m for m in mats if m.rows != Mat.zero(ctx, n).rows]
    if not mats:
        return None
    for m in mats:
        if m.det():
            return m
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            cand = mats[a] + mats[b]
            if cand.det():
                return cand
    rng = random.Random(0x5EED ^ n ^ ctx.q)
    for _ in range(2000):
        cand = Mat.zero(ctx, n)
        for m in mats:
            c = rng.randrange(ctx.q)
            if c:
                cand = cand + m.scale(c)
        if cand.det():
            return cand
    return None


def generalized_jordan(g):
    """Canonical form of an invertible matrix, with a replayable base change."""
    ctx, n = g.ctx, g.n
    blocks = []
    for f, e in factor_charpoly(g):
        for m in _jordan_partition(g, f, e):
            blocks.append((f, m))
    jmat = blocks_matrix(ctx, blocks)
    if jmat == g:
        u = Mat.identity(ctx, n)
    else:
        u = solve_similarity(g, jmat)
        assert u is not None, "block data must describe a similar matrix"
    assert u * g * u.inv() == jmat
    return CanonicalForm(u, blocks, _case_tag(blocks, n), jmat)


def split_decomposable(cf, g):
    """Split a decomposable canonical form into two diagonal parts.

    Returns (g1, g2, (emb1, emb2)) where emb_i are index tuples into the
    Jordan coordinates; g1 (+) g2 read off those positions.  When both sides
    of the natural split are scalar (lambda I (+) mu I), the sides are
    re-split as (lambda I, mu) (+) (lambda, mu I) so each part is non-scalar.
    On an indecomposable input, returns the case tag instead.
    """
    if len(cf.blocks) < 2:
        return cf.case
    sizes = [poly_deg(f) * m for f, m in cf.blocks]
    first_f = cf.blocks[0][0]
    cut_blocks = 1
    if any(f != first_f for f, _ in cf.blocks):
        while cut_blocks < len(cf.blocks) and cf.blocks[cut_blocks][0] == first_f:
            cut_blocks += 1
    n1 = sum(sizes[:cut_blocks])
    n = cf.canonical.n
    emb1 = tuple(range(n1))
    emb2 = tuple(range(n1, n))

    def read(emb):
        return Mat(cf.canonical.ctx,
                   [[cf.canonical.rows[i][j] for j in emb] for i in emb])

    g1, g2 = read(emb1), read(emb2)
    if g1.is_scalar() and g2.is_scalar():
        # both sides scalar: lambda I_{n1} (+) mu I_{n2}; trade one coordinate
        # so that at least one side becomes non-scalar (needs a side of dim 2+)
        if n1 >= 2:
            emb1 = tuple(range(n1 - 1)) + (n1,)
            emb2 = (n1 - 1,) + tuple(range(n1 + 1, n))
        elif n - n1 >= 2:
            emb1 = (0, 1)
            emb2 = tuple(range(2, n))
        g1, g2 = read(emb1), read(emb2)
    return g1, g2, (emb1, emb2)


def _partitions(e):
    def rec(rest, mx):
        if rest == 0:
            yield []
            return
        for p in range(min(rest, mx), 0, -1):
            for tail in rec(rest - p, p):
                yield [p] + tail
    return rec(e, e)


def class_transversal(ctx, n, include_central=False):
    """Representatives covering every conjugacy class of SL_n(q).

    Enumerates determinant-1 canonical forms J and, for each, the twists
    D J D^{-1} with D = diag(nu^i, 1, ..., 1): these cover all SL-classes
    inside each GL-class (possibly with repeats, which are harmless for
    sweep-style consumers).  Yields (rep, blocks) pairs.
    """
    polys = []
    for d in range(1, n + 1):
        for f in _irreducibles(ctx, d):
            if f[0] != 0:  # invertible companion only
                polys.append(f)
    forms = []

    def rec(idx, remaining, acc):
        if remaining == 0:
            forms.append(list(acc))
            return
        for i in range(idx, len(polys)):
            f = polys[i]
            d = poly_deg(f)
            if d > remaining:
                continue
            for e in range(1, remaining // d + 1):
                for part in _partitions(e):
                    rec(i + 1, remaining - e * d,
                        acc + [(f, m) for m in part])

    rec(0, n, [])
    nu = ctx.generator()
    out = []
    for blocks in forms:
        det = 1
        for f, m in blocks:
            dcf = f[0] if poly_deg(f) % 2 == 0 else ctx.neg(f[0])
            det = ctx.mul(det, ctx.pow(dcf, m))
        if det != 1:
            continue
        jmat = blocks_matrix(ctx, blocks)
        if not include_central and jmat.is_scalar():
            continue
        for i in range(ctx.q - 1):
            d = Mat.diag(ctx, (ctx.pow(nu, i),) + (1,) * (n - 1))
            out.append((d * jmat * d.inv(), blocks))
    return out
