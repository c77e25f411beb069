"""Exact arithmetic in F_p, F_p^2 and small extensions F_p^k.

Representation
--------------
A field context (FieldCtx) fixes the prime p, the canonical quadratic
non-residue s (smallest positive), the extension degree k and a monic
irreducible modulus of degree k over F_p.  Elements are plain tuples of k
residues in [0, p), little-endian in the power basis, so (a, b) means
a + b*x with x^2 = s when k = 2.  Keeping elements as bare tuples keeps the
hot loops (root finding over hundreds of vertices) cheap; all arithmetic
goes through the context.

Everything here is deterministic: the non-residue is canonical, extension
moduli come from a fixed search order, and root finding splits with a fixed
sweep over field elements instead of random polynomials, so identical inputs
give identical outputs on any machine.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    ExtensionConstructionFailure,
    NonPrime,
    UnsupportedPrime,
    ZeroPolynomial,
)

# deterministic Miller-Rabin witnesses, exact for n < 3.3 * 10^24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for the sizes this package meets."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for odd prime p."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def smallest_nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue mod p (canonical choice)."""
    for s in range(2, p):
        if legendre(s, p) == -1:
            return s
    raise NonPrime(f"no quadratic non-residue mod {p}; {p} is not an odd prime")


@dataclass(frozen=True)
class FieldCtx:
    """Immutable description of F_p^k; shareable across workers."""

    p: int
    s: int
    k: int
    modulus: tuple[int, ...]  # monic, length k+1, coefficients mod p
    _xp: tuple[int, ...] = field(default=(), repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p ** self.k

    # -- element constructors --

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.k

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.k - 1)

    def from_int(self, a: int) -> tuple[int, ...]:
        return (a % self.p,) + (0,) * (self.k - 1)

    def element(self, coeffs) -> tuple[int, ...]:
        c = [v % self.p for v in coeffs]
        if len(c) > self.k:
            raise ValueError("too many coefficients for this context")
        c += [0] * (self.k - len(c))
        return tuple(c)

    # -- ring operations --

    def add(self, x, y):
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def sub(self, x, y):
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def neg(self, x):
        p = self.p
        return tuple((-a) % p for a in x)

    def mul(self, x, y):
        p = self.p
        if self.k == 1:
            return (x[0] * y[0] % p,)
        if self.k == 2:
            a, b = x
            c, d = y
            return ((a * c + self.s * b * d) % p, (a * d + b * c) % p)
        # schoolbook product then reduction by the monic modulus
        k = self.k
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    prod[i + j] += a * b
        m = self.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                off = i - k
                for j in range(k):
                    prod[off + j] -= c * m[j]
            prod[i] = 0
        return tuple(v % p for v in prod[:k])

    def inv(self, x):
        p = self.p
        if self.k == 1:
            return (pow(x[0], -1, p),)
        if self.k == 2:
            a, b = x
            n = (a * a - self.s * b * b) % p
            ninv = pow(n, -1, p)
            return (a * ninv % p, -b * ninv % p)
        # extended Euclid in F_p[x] against the modulus
        r0, r1 = list(self.modulus), list(x)
        t0, t1 = [0], [1]
        while any(r1):
            while r1 and r1[-1] % p == 0:
                r1.pop()
            if len(r1) == 0:
                break
            q, r = _fp_divmod(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _fp_sub(t0, _fp_mul(q, t1, p), p)
        while r0 and r0[-1] % p == 0:
            r0.pop()
        if len(r0) != 1:
            raise ZeroDivisionError("element not invertible")
        c = pow(r0[0], -1, p)
        t0 = [v * c % p for v in t0]
        t0 += [0] * (self.k - len(t0))
        return tuple(t0[: self.k])

    def pow(self, x, e: int):
        if e < 0:
            return self.pow(self.inv(x), -e)
        r = self.one
        b = x
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    def frobenius(self, x):
        """x -> x^p; for k = 2 this is conjugation a + b*sqrt(s) -> a - b*sqrt(s)."""
        if self.k == 1:
            return x
        if self.k == 2:
            return (x[0], (-x[1]) % self.p)
        xp = self._frobenius_gen()
        # evaluate the element polynomial at x^p (Horner in the field)
        acc = self.zero
        for c in reversed(x):
            acc = self.mul(acc, xp)
            acc = self.add(acc, self.from_int(c))
        return acc

    def _frobenius_gen(self):
        if self._xp:
            return self._xp
        xp = poly_powmod_x(self.p, [self.from_int(c) for c in self.modulus], self)
        xp_elem = self.element([c[0] for c in xp] if xp and self.k == 1 else [])
        # poly_powmod_x returns a polynomial over the field; collapse it:
        # its coefficients are base-field scalars here because the modulus is
        # over F_p, so x^p mod m(x) has F_p coefficients.
        coeffs = [c[0] for c in xp]
        xp_elem = self.element(coeffs)
        object.__setattr__(self, "_xp", xp_elem)
        return xp_elem

    def enumerate_element(self, index: int) -> tuple[int, ...]:
        """index-th field element in the canonical sweep order (base-p digits)."""
        digits = []
        for _ in range(self.k):
            digits.append(index % self.p)
            index //= self.p
        return tuple(digits)


# -- F_p[x] helpers used for modulus search and generic inversion --------------

def _fp_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _fp_trim(out)


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_divmod(a, b, p):
    a = [v % p for v in a]
    b = [v % p for v in b]
    _fp_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    binv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    _fp_trim(r)
    while len(r) >= len(b):
        c = r[-1] * binv % p
        d = len(r) - len(b)
        q[d] = c
        for i in range(len(b)):
            r[d + i] = (r[d + i] - c * b[i]) % p
        _fp_trim(r)
    return _fp_trim(q), r


def _fp_powmod_x(e, m, p):
    """x^e mod m in F_p[x] for monic m."""
    result = [1]
    base = [0, 1]
    _, base = _fp_divmod(base, m, p)
    while e:
        if e & 1:
            _, result = _fp_divmod(_fp_mul(result, base, p), m, p)
        e >>= 1
        if e:
            _, base = _fp_divmod(_fp_mul(base, base, p), m, p)
    return result


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while _fp_trim(b):
        _, r = _fp_divmod(a, b, p)
        a, b = b, r
    if a:
        c = pow(a[-1], -1, p)
        a = [v * c % p for v in a]
    return a


def _fp_irreducible(m, p) -> bool:
    """Rabin test: m of degree k is irreducible over F_p iff x^(p^k) = x mod m
    and gcd(x^(p^(k/l)) - x, m) = 1 for every prime l | k."""
    k = len(m) - 1
    xq = _fp_powmod_x(p ** k, m, p)
    if _fp_sub(xq, [0, 1], p):
        return False
    ell = 2
    kk = k
    primes = set()
    while ell * ell <= kk:
        if kk % ell == 0:
            primes.add(ell)
            while kk % ell == 0:
                kk //= ell
        ell += 1
    if kk > 1:
        primes.add(kk)
    for ell in primes:
        xe = _fp_powmod_x(p ** (k // ell), m, p)
        g = _fp_gcd(_fp_sub(xe, [0, 1], p), m, p)
        if len(g) != 1:
            return False
    return True


# -- context constructors ------------------------------------------------------

def make_prime_ctx(p: int) -> FieldCtx:
    """F_p itself (k = 1)."""
    _check_prime(p)
    return FieldCtx(p=p, s=smallest_nonresidue(p), k=1, modulus=(0, 1))


def make_quadratic_ctx(p: int) -> FieldCtx:
    """The canonical F_p^2 = F_p[x]/(x^2 - s) with s the smallest non-residue."""
    _check_prime(p)
    s = smallest_nonresidue(p)
    return FieldCtx(p=p, s=s, k=2, modulus=((-s) % p, 0, 1))


def make_extension_ctx(p: int, k: int) -> FieldCtx:
    """F_p^k with the first irreducible modulus x^k + (low-degree tail).

    Tails are swept by (tail degree, then coefficient tuple) so the choice is
    reproducible.  Used by the 2-isogeny oracle for k in {4, 6}.
    """
    _check_prime(p)
    if k == 1:
        return make_prime_ctx(p)
    if k == 2:
        return make_quadratic_ctx(p)
    s = smallest_nonresidue(p)
    for tail_deg in range(0, k):
        # tail = c_d x^d + ... + c_0 with c_d != 0, swept lexicographically
        # on (c_d, c_{d-1}, ..., c_0)
        count = p ** tail_deg
        for lead in range(1, p):
            for rest in range(count):
                tail = [0] * (tail_deg + 1)
                tail[tail_deg] = lead
                r = rest
                for i in range(tail_deg - 1, -1, -1):
                    tail[i] = r % p
                    r //= p
                m = tail + [0] * (k - tail_deg - 1) + [1]
                if _fp_irreducible(m, p):
                    return FieldCtx(p=p, s=s, k=k, modulus=tuple(m))
    raise ExtensionConstructionFailure(f"no irreducible modulus of degree {k} over F_{p}")


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if p < 5:
        raise UnsupportedPrime(f"p = {p} < 5 is not supported")


# -- polynomials over F_q (lists of element tuples, little-endian) --------------

def poly_trim(f):
    while f and not any(f[-1]):
        f.pop()
    return f


def poly_deg(f) -> int:
    return len(f) - 1


def poly_add(f, g, ctx):
    n = max(len(f), len(g))
    z = ctx.zero
    out = [ctx.add(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)]
    return poly_trim(out)


def poly_sub(f, g, ctx):
    n = max(len(f), len(g))
    z = ctx.zero
    out = [ctx.sub(f[i] if i < len(f) else z, g[i] if i < len(g) else z) for i in range(n)]
    return poly_trim(out)


def poly_mul(f, g, ctx):
    if not f or not g:
        return []
    z = ctx.zero
    out = [z] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if any(a):
            for j, b in enumerate(g):
                if any(b):
                    out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return poly_trim(out)


def poly_divmod(f, g, ctx):
    f = list(f)
    g = poly_trim(list(g))
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    inv_lead = ctx.inv(g[-1])
    q = [ctx.zero] * max(len(f) - len(g) + 1, 0)
    r = poly_trim(list(f))
    while len(r) >= len(g):
        c = ctx.mul(r[-1], inv_lead)
        d = len(r) - len(g)
        q[d] = c
        for i in range(len(g)):
            r[d + i] = ctx.sub(r[d + i], ctx.mul(c, g[i]))
        poly_trim(r)
    return q, r


def poly_monic(f, ctx):
    f = poly_trim(list(f))
    if not f:
        return f
    inv_lead = ctx.inv(f[-1])
    return [ctx.mul(c, inv_lead) for c in f]


def poly_gcd(f, g, ctx):
    f, g = poly_trim(list(f)), poly_trim(list(g))
    while g:
        _, r = poly_divmod(f, g, ctx)
        f, g = g, r
    return poly_monic(f, ctx)


def poly_eval(f, x, ctx):
    acc = ctx.zero
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_powmod(base, e: int, m, ctx):
    """base^e mod m over F_q."""
    _, base = poly_divmod(base, m, ctx)
    result = [ctx.one]
    while e:
        if e & 1:
            _, result = poly_divmod(poly_mul(result, base, ctx), m, ctx)
        e >>= 1
        if e:
            _, base = poly_divmod(poly_mul(base, base, ctx), m, ctx)
    return result


def poly_powmod_x(e: int, m, ctx):
    return poly_powmod([ctx.zero, ctx.one], e, m, ctx)


def frobenius(x, ctx: FieldCtx):
    """x -> x^p in the given context (involution on F_p^2)."""
    return ctx.frobenius(x)


def roots_with_multiplicity(f, ctx: FieldCtx) -> dict:
    """All roots of f lying in the context field, with multiplicities.

    f is a polynomial over ctx (list of element tuples).  The method is the
    usual one: strip the q-power linear part with gcd(x^q - x, f), then split
    it by sweeping c = 0, 1, 2, ... in canonical order and taking
    gcd((x+c)^((q-1)/2) - 1, g); multiplicities come from synthetic division
    of the original f.  The sweep order is fixed, so output order is too
    (roots sorted by coefficient tuple).
    """
    f = poly_trim(list(f))
    if not f:
        raise ZeroPolynomial("cannot take roots of the zero polynomial")
    if len(f) == 1:
        return {}
    f = poly_monic(f, ctx)
    q = ctx.q
    # linear part: product of (x - r) over distinct roots r in F_q
    xq = poly_powmod_x(q, f, ctx)
    lin = poly_gcd(poly_sub(xq, [ctx.zero, ctx.one], ctx), f, ctx)
    roots = sorted(_split_linear(lin, ctx))
    out = {}
    for r in roots:
        mult = 0
        while True:
            quot, ok = _deflate(f, r, ctx)
            if not ok:
                break
            f = quot
            mult += 1
        out[r] = mult
    return out


def _split_linear(g, ctx) -> list:
    """Roots of a squarefree product of linear factors, deterministically."""
    g = poly_trim(list(g))
    if len(g) <= 1:
        return []
    if len(g) == 2:
        # monic x + c -> root -c
        c = ctx.mul(g[0], ctx.inv(g[1]))
        return [ctx.neg(c)]
    half = (ctx.q - 1) // 2
    idx = 0
    while True:
        shift = ctx.enumerate_element(idx)
        idx += 1
        base = [shift, ctx.one]  # x + c
        h = poly_powmod(base, half, g, ctx)
        h = poly_sub(h, [ctx.one], ctx)
        d = poly_gcd(h, g, ctx)
        if 0 < poly_deg(d) < poly_deg(g):
            other, rem = poly_divmod(g, d, ctx)
            assert not rem
            return _split_linear(d, ctx) + _split_linear(other, ctx)


def _deflate(f, r, ctx):
    """Divide f by (x - r) if r is a root; returns (quotient, was_root)."""
    out = [ctx.zero] * (len(f) - 1)
    acc = ctx.zero
    for i in range(len(f) - 1, -1, -1):
        acc = ctx.add(ctx.mul(acc, r), f[i])
        if i > 0:
            out[i - 1] = acc
    if any(acc):
        return f, False
    # out currently holds the synthetic-division shifts; redo properly
    quot = [ctx.zero] * (len(f) - 1)
    carry = ctx.zero
    for i in range(len(f) - 1, 0, -1):
        carry = ctx.add(ctx.mul(carry, r), f[i])
        quot[i - 1] = carry
    return poly_trim(quot), True
