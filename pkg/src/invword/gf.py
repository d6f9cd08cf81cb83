"""Small finite fields with exhaustive lookup tables.

Elements of GF(p^k) are encoded as integers in range(p**k): the element
sum c_i * xi**i (0 <= c_i < p, xi a fixed root of the modulus) gets the
encoding sum c_i * p**i.  For prime fields the encoding is the residue
itself.  Polynomials over a field are tuples of encodings, constant term
first, with no trailing zeros; the zero polynomial is ().

Fields beyond GF(32) are refused: every table here is built by full
scans, and nothing downstream needs larger coefficient fields.
"""

from functools import lru_cache


MAX_ORDER = 32

# Fixed monic moduli for the non-prime orders up to MAX_ORDER, constant
# term first.  Changing any row changes every element encoding of that
# field, so rows are frozen.
MODULUS_TABLE = {
    4: (1, 1, 1),            # x^2 + x + 1
    8: (1, 1, 0, 1),         # x^3 + x + 1
    9: (1, 0, 1),            # x^2 + 1
    16: (1, 1, 0, 0, 1),     # x^4 + x + 1
    25: (2, 0, 1),           # x^2 + 2
    27: (1, 2, 0, 1),        # x^3 + 2x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
}


class UnsupportedField(ValueError):
    """Requested field order is out of range or not a prime power."""


class FieldCtx:
    """Arithmetic context for one finite field.

    All operations go through precomputed flat tables; the hot-path
    consumers read ``add_table`` / ``mul_table`` directly (row-major,
    index a*q + b) instead of paying method-call overhead.
    """

    def __init__(self, q, p, deg, key, add_table, mul_table, base=None, ext_modulus=None):
        self.q = q
        self.p = p
        self.deg = deg        # degree over the prime field
        self.key = key
        self.base = base      # coefficient field for towers, else None
        self.ext_modulus = ext_modulus
        self.ext_deg = None if base is None else len(ext_modulus) - 1
        self.add_table = add_table
        self.mul_table = mul_table
        n = q
        self.neg_table = [0] * n
        for a in range(1, n):
            for b in range(n):
                if add_table[a * n + b] == 0:
                    self.neg_table[a] = b
                    break
        self.inv_table = [0] * n  # inv_table[0] stays 0 and is never served
        for a in range(1, n):
            for b in range(1, n):
                if mul_table[a * n + b] == 1:
                    self.inv_table[a] = b
                    break
        # smallest-encoding square root, or None
        self.sqrt_table = [None] * n
        for x in range(n - 1, -1, -1):
            self.sqrt_table[mul_table[x * n + x]] = x
        self._gen = None

    # -- element ops ---------------------------------------------------

    def add(self, a, b):
        return self.add_table[a * self.q + b]

    def sub(self, a, b):
        return self.add_table[a * self.q + self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a * self.q + b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.q)
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul_table[a * self.q + self.inv(b)]

    def pow(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        r, q = 1, self.q
        while k:
            if k & 1:
                r = self.mul_table[r * q + a]
            a = self.mul_table[a * q + a]
            k >>= 1
        return r

    def sqrt(self, a):
        """Square root of a, smallest encoding, or None if a is a non-square."""
        return self.sqrt_table[a]

    def is_square(self, a):
        return self.sqrt_table[a] is not None

    def scalar(self, k):
        """Image of the integer k under Z -> GF(q)."""
        return k % self.p

    def coords(self, a):
        """Digits of a over the prime field, length self.deg."""
        p, out = self.p, []
        for _ in range(self.deg):
            out.append(a % p)
            a //= p
        return tuple(out)

    def coords_base(self, a):
        """Digits of a over the coefficient field of a tower, length ext_deg."""
        if self.base is None:
            raise ValueError("not a tower field")
        b, out = self.base.q, []
        for _ in range(self.ext_deg):
            out.append(a % b)
            a //= b
        return tuple(out)

    def generator(self):
        """Smallest-encoding generator of the multiplicative group."""
        if self._gen is None:
            for g in range(1, self.q):
                x, order = g, 1
                while x != 1:
                    x = self.mul_table[x * self.q + g]
                    order += 1
                if order == self.q - 1:
                    self._gen = g
                    break
        return self._gen

    def elements(self):
        return range(self.q)

    def __repr__(self):
        if self.base is not None:
            return "GF(%d) over GF(%d)" % (self.q, self.base.q)
        return "GF(%d)" % self.q


def _poly_field_tables(k_add, k_mul, k_neg, k_size, modulus):
    # Tables for k[x]/(modulus), modulus monic of degree d >= 2 over the
    # coefficient structure k.  Elements are digit tuples encoded base k_size.
    d = len(modulus) - 1
    q = k_size ** d

    def dec(e):
        out = []
        for _ in range(d):
            out.append(e % k_size)
            e //= k_size
        return out

    def enc(t):
        e = 0
        for c in reversed(t):
            e = e * k_size + c
        return e

    add_table = [0] * (q * q)
    mul_table = [0] * (q * q)
    for a in range(q):
        ta = dec(a)
        for b in range(q):
            tb = dec(b)
            add_table[a * q + b] = enc([k_add(x, y) for x, y in zip(ta, tb)])
            prod = [0] * (2 * d - 1)
            for i, x in enumerate(ta):
                if x == 0:
                    continue
                for j, y in enumerate(tb):
                    prod[i + j] = k_add(prod[i + j], k_mul(x, y))
            for i in range(2 * d - 2, d - 1, -1):
                c = prod[i]
                if c == 0:
                    continue
                prod[i] = 0
                for j in range(d + 1):
                    if modulus[j]:
                        t = k_mul(c, modulus[j])
                        prod[i - d + j] = k_add(prod[i - d + j], k_neg(t))
            mul_table[a * q + b] = enc(prod[:d])
    return add_table, mul_table


def _smallest_prime_factor(n):
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


@lru_cache(maxsize=None)
def make_field(q):
    """Field context for GF(q), q a prime power up to 32.  Cached, so
    contexts compare by identity."""
    if q < 2 or q > MAX_ORDER:
        raise UnsupportedField("field order %d outside supported range 2..%d" % (q, MAX_ORDER))
    p = _smallest_prime_factor(q)
    deg, m = 0, q
    while m % p == 0:
        m //= p
        deg += 1
    if m != 1:
        raise UnsupportedField("field order %d is not a prime power" % q)
    if deg == 1:
        add_table = [(a + b) % p for a in range(p) for b in range(p)]
        mul_table = [(a * b) % p for a in range(p) for b in range(p)]
        return FieldCtx(q, p, 1, ("p", q), add_table, mul_table)
    modulus = MODULUS_TABLE[q]
    k_neg = lambda a: (-a) % p
    add_table, mul_table = _poly_field_tables(
        lambda a, b: (a + b) % p, lambda a, b: (a * b) % p, k_neg, p, modulus)
    return FieldCtx(q, p, deg, ("p", q), add_table, mul_table)


_EXT_CACHE = {}


def make_extension(base, modulus):
    """GF(q^d) as a tower over base = GF(q), with xi a root of the given
    monic irreducible modulus (tuple over base, constant first, degree d >= 2).

    The encoding is sum b_i * q**i for the element sum b_i * xi**i, so base
    elements embed as themselves and coords_base() recovers the b_i.
    """
    modulus = tuple(modulus)
    key = ("t", base.key, modulus)
    ctx = _EXT_CACHE.get(key)
    if ctx is not None:
        return ctx
    d = len(modulus) - 1
    if d < 2 or modulus[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 2")
    if base.q ** d > MAX_ORDER:
        raise UnsupportedField(
            "extension GF(%d) exceeds supported order %d" % (base.q ** d, MAX_ORDER))
    if not poly_is_irreducible(base, modulus):
        raise ValueError("modulus is reducible over GF(%d)" % base.q)
    add_table, mul_table = _poly_field_tables(base.add, base.mul, base.neg, base.q, modulus)
    ctx = FieldCtx(base.q ** d, base.p, base.deg * d, key, add_table, mul_table,
                   base=base, ext_modulus=modulus)
    _EXT_CACHE[key] = ctx
    return ctx


def pick_alpha(ctx):
    """First square alpha among -1, 2, -2 in GF(q), q odd, with beta = 2/alpha.

    At least one of the three is a square since their product is a square.
    Returns (alpha, beta) encodings.
    """
    assert ctx.p != 2
    two = ctx.scalar(2)
    for alpha in (ctx.neg(1), two, ctx.neg(two)):
        if ctx.is_square(alpha):
            return alpha, ctx.div(two, alpha)
    raise AssertionError("unreachable: one of -1, 2, -2 is always a square")


# -- polynomial helpers (tuples over a ctx, constant term first) --------


def poly_trim(f):
    f = tuple(f)
    n = len(f)
    while n and f[n - 1] == 0:
        n -= 1
    return f[:n]


def poly_deg(f):
    return len(f) - 1  # zero polynomial gets -1


def poly_add(ctx, f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = ctx.add(out[i], c)
    return poly_trim(out)


def poly_neg(ctx, f):
    return tuple(ctx.neg(c) for c in f)


def poly_sub(ctx, f, g):
    return poly_add(ctx, f, poly_neg(ctx, g))


def poly_scale(ctx, c, f):
    if c == 0:
        return ()
    return poly_trim(ctx.mul(c, x) for x in f)


def poly_mul(ctx, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return poly_trim(out)


def poly_divmod(ctx, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    dg = len(g) - 1
    lead_inv = ctx.inv(g[-1])
    quo = [0] * max(len(f) - dg, 0)
    for i in range(len(f) - dg - 1, -1, -1):
        c = ctx.mul(f[i + dg], lead_inv)
        if c == 0:
            continue
        quo[i] = c
        for j, gc in enumerate(g):
            f[i + j] = ctx.sub(f[i + j], ctx.mul(c, gc))
    return poly_trim(quo), poly_trim(f)


def poly_mod(ctx, f, g):
    return poly_divmod(ctx, f, g)[1]


def poly_monic(ctx, f):
    if not f or f[-1] == 1:
        return poly_trim(f)
    return poly_scale(ctx, ctx.inv(f[-1]), f)


def poly_gcd(ctx, f, g):
    while g:
        f, g = g, poly_mod(ctx, f, g)
    return poly_monic(ctx, f)


def poly_eval(ctx, f, a):
    r = 0
    for c in reversed(f):
        r = ctx.add(ctx.mul(r, a), c)
    return r


def poly_pow_mod(ctx, f, k, m):
    r = poly_mod(ctx, (1,), m)
    f = poly_mod(ctx, f, m)
    while k:
        if k & 1:
            r = poly_mod(ctx, poly_mul(ctx, r, f), m)
        f = poly_mod(ctx, poly_mul(ctx, f, f), m)
        k >>= 1
    return r


def monic_polys(ctx, d):
    """All monic degree-d polynomials over ctx, in encoding order."""
    q = ctx.q
    for e in range(q ** d):
        coeffs = []
        for _ in range(d):
            coeffs.append(e % q)
            e //= q
        yield tuple(coeffs) + (1,)


def poly_is_irreducible(ctx, f):
    d = poly_deg(f)
    if d <= 0:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False  # divisible by x
    for k in range(1, d // 2 + 1):
        for g in monic_polys(ctx, k):
            if not poly_mod(ctx, f, g):
                return False
    return True


def irreducible_polys(ctx, d):
    """Monic irreducible degree-d polynomials over ctx, encoding order."""
    return [f for f in monic_polys(ctx, d) if poly_is_irreducible(ctx, f)]


def poly_str(f):
    """Compact display form, highest power first: (1,0,1) -> 'x^2+1'."""
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            xs = "x" if i == 1 else "x^%d" % i
            parts.append(xs if c == 1 else "%d%s" % (c, xs))
    return "+".join(parts)


def poly_parse(s):
    """Inverse of poly_str for well-formed inputs; encodings stay raw ints."""
    s = s.replace(" ", "")
    if s == "0":
        return ()
    coeffs = {}
    for term in s.split("+"):
        if "x" in term:
            head, _, tail = term.partition("x")
            c = int(head) if head else 1
            k = int(tail[1:]) if tail.startswith("^") else (1 if tail == "" else int(tail))
        else:
            c, k = int(term), 0
        coeffs[k] = coeffs.get(k, 0) + c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return poly_trim(out)
