"""Arithmetic in the coefficient rings Z/nZ and Galois rings (Z/p^e)[t]/(lam).

Both rings are principal Artinian: every element is a unit, nilpotent, or a
splitting element (a non-nilpotent zero divisor).  Splitting elements give an
idempotent decomposition of the ring, realised for Z/nZ as a coprime
factorisation of the modulus.  Galois rings are local, so they never split.

Ring elements are plain values: ints for Zmod, coefficient tuples for
GaloisRing.  All operations take and return canonical representatives.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import reduce


class ContextMismatchError(ValueError):
    """Operands belong to different ring contexts."""


class NotSplittingError(ValueError):
    """split() was called on an element that is not a splitting element."""


class NotUnitError(ValueError):
    """Inversion of a non-unit was requested."""


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class Zmod:
    """The ring Z/nZ.  n == 1 is the zero ring (allowed in quotients)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be >= 1")

    kind = "zmod"

    @property
    def E(self) -> int:
        # Nilpotency bound: a^E == 0 for every nilpotent a, since the
        # bit length of n dominates every prime exponent in n.
        return max(1, self.n.bit_length())

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.n

    def from_int(self, i: int):
        return i % self.n

    # coerce also serves as projection/lift between Zmod rings whose moduli
    # divide each other: canonical representatives are plain ints.
    def coerce(self, x):
        if not isinstance(x, int):
            raise ContextMismatchError(f"expected int element, got {x!r}")
        return x % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def pow_elem(self, a, k: int):
        return pow(a, k, self.n)

    def is_zero(self, a) -> bool:
        return a % self.n == 0

    def is_unit(self, a) -> bool:
        return self.n == 1 or math.gcd(a, self.n) == 1

    def is_nilpotent(self, a) -> bool:
        return pow(a, self.E, self.n) == 0

    def is_splitting(self, a) -> bool:
        a %= self.n
        return a != 0 and not self.is_unit(a) and not self.is_nilpotent(a)

    def inv(self, a):
        if self.n == 1:
            return 0
        if math.gcd(a, self.n) != 1:
            raise NotUnitError(f"{a} is not a unit mod {self.n}")
        return pow(a, -1, self.n)

    def try_divide(self, a, b):
        """Smallest c with b*c == a mod n, or None if no such c exists."""
        if self.n == 1:
            return 0
        a %= self.n
        b %= self.n
        g = math.gcd(b, self.n)
        if a % g:
            return None
        nn = self.n // g
        if nn == 1:
            return 0
        return ((a // g) * pow(b // g, -1, nn)) % nn

    def gcd_bezout(self, a, b):
        """(g, s, t): g canonical generator of (a, b), s*a + t*b == g mod n."""
        if self.n == 1:
            return 0, 0, 0
        a %= self.n
        b %= self.n
        g0, s0, t0 = _ext_gcd(a, b)
        if g0 == 0:
            return 0, 0, 0
        g = math.gcd(g0, self.n)
        # u*g0 == g mod n for some u (exists since g = gcd(g0, n)).
        u = _ext_gcd(g0, self.n)[1]
        return g % self.n, (u * s0) % self.n, (u * t0) % self.n

    def gcd_many(self, elems):
        return math.gcd(self.n, *elems) % self.n

    def ideal_gen(self, a):
        return math.gcd(a % self.n, self.n) % self.n

    def colon(self, a, b):
        """Generator of the colon ideal ((a) : (b))."""
        d = math.gcd(a % self.n, self.n)
        return (d // math.gcd(d, b % self.n)) % self.n

    def split(self, a):
        """Coprime factor rings (Z/n1, Z/n2); a nilpotent in the first,
        a unit in the second."""
        if not self.is_splitting(a):
            raise NotSplittingError(f"{a} is not a splitting element mod {self.n}")
        h = pow(a, self.E, self.n)
        n1 = math.gcd(h, self.n)
        n2 = self.n // n1
        assert n1 > 1 and n2 > 1 and math.gcd(n1, n2) == 1
        return Zmod(n1), Zmod(n2)

    def crt(self, r1, a1, r2, a2):
        """Element of self congruent to a1 mod r1.n and a2 mod r2.n."""
        n1, n2 = r1.n, r2.n
        if n1 * n2 != self.n or math.gcd(n1, n2) != 1:
            raise ContextMismatchError("crt requires a coprime factorisation of n")
        t = ((a2 - a1) * pow(n1, -1, n2)) % n2
        return (a1 + n1 * t) % self.n

    def ann_quotient(self, c):
        """R / Ann(c) as a ring context."""
        g = math.gcd(c % self.n, self.n)
        if g == 0:
            g = self.n
        return Zmod(self.n // g)

    def quotient_by(self, c):
        """R / (c) as a ring context."""
        return Zmod(math.gcd(c % self.n, self.n) or self.n)

    def elements(self):
        return range(self.n)

    def format_elem(self, a) -> str:
        return str(a % self.n)

    def __str__(self):
        return f"Z/{self.n}"


# ---------------------------------------------------------------------------
# Galois rings
# ---------------------------------------------------------------------------

def _fp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_rem(a, m, p):
    """a mod m over F_p; m monic, lists of ints ascending."""
    a = [x % p for x in a]
    _fp_trim(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        if c:
            off = len(a) - 1 - dm
            for j in range(dm + 1):
                a[off + j] = (a[off + j] - c * m[j]) % p
        a.pop()
        _fp_trim(a)
    return a


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_rem(out, m, p)


def _fp_gcd(a, b, p):
    a = _fp_trim([x % p for x in a])
    b = _fp_trim([x % p for x in b])
    while b:
        inv = pow(b[-1], -1, p)
        # a mod b via monic-scaled remainder
        bm = [(x * inv) % p for x in b]
        a = _fp_rem(a, bm, p)
        a, b = b, a
    if a:
        inv = pow(a[-1], -1, p)
        a = [(x * inv) % p for x in a]
    return a


def _fp_is_irreducible(lam, p):
    """lam monic over F_p, ascending coefficients."""
    k = len(lam) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    # x^(p^i) mod lam via iterated Frobenius
    xp = _fp_rem([0] * p + [1], lam, p) if p <= 64 else None
    if xp is None:
        # binary powering for large p
        xp = [0, 1]
        e = p
        acc = [1]
        base = [0, 1]
        while e:
            if e & 1:
                acc = _fp_mulmod(acc, base, lam, p)
            base = _fp_mulmod(base, base, lam, p)
            e >>= 1
        xp = acc
    frob = xp
    for i in range(1, k // 2 + 1):
        cur = frob
        if i > 1:
            # frob_i = frob_{i-1} composed with Frobenius: compute by powering
            cur = _fp_pow_frobenius(frob, i, lam, p)
        diff = list(cur) + [0, 0]
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(diff, lam, p)
        if len(g) - 1 >= 1:
            return False
    return True


def _fp_pow_frobenius(xp, i, lam, p):
    """x^(p^i) mod lam given xp = x^p mod lam: repeated p-th powering."""
    cur = xp
    for _ in range(i - 1):
        # cur(x)^p == cur evaluated at x^p ... cheaper: cur^p by powering
        acc = [1]
        base = cur
        e = p
        while e:
            if e & 1:
                acc = _fp_mulmod(acc, base, lam, p)
            base = _fp_mulmod(base, base, lam, p)
            e >>= 1
        cur = acc
    return cur


def find_irreducible(p: int, k: int, seed: int = 0) -> tuple[int, ...]:
    """Monic degree-k polynomial over F_p that is irreducible, found by
    random monic sampling.  Returned ascending, including the leading 1."""
    if k == 1:
        return (0, 1)
    rng = random.Random((seed, p, k).__hash__())
    while True:
        coeffs = [rng.randrange(p) for _ in range(k)] + [1]
        if coeffs[0] == 0:
            coeffs[0] = 1 + rng.randrange(p - 1) if p > 1 else 0
        if _fp_is_irreducible(coeffs, p):
            return tuple(coeffs)


@dataclass(frozen=True)
class GaloisRing:
    """(Z/p^e)[t]/(lam) with lam monic of degree k, irreducible mod p.

    Elements are tuples of k ints in [0, p^e).  Local ring: maximal ideal
    (p), residue field F_{p^k}.  e == 0 gives the zero ring.
    """

    p: int
    e: int
    lam: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2 or self.e < 0:
            raise ValueError("need prime p >= 2 and e >= 0")
        if len(self.lam) < 2 or self.lam[-1] != 1:
            raise ValueError("lam must be monic of degree >= 1")

    kind = "galois"

    @property
    def k(self) -> int:
        return len(self.lam) - 1

    @property
    def pe(self) -> int:
        return self.p ** self.e

    @property
    def E(self) -> int:
        return max(1, self.e)

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1 % self.pe,) + (0,) * (self.k - 1)

    def from_int(self, i: int):
        return (i % self.pe,) + (0,) * (self.k - 1)

    def coerce(self, x):
        if isinstance(x, int):
            return self.from_int(x)
        if len(x) != self.k:
            raise ContextMismatchError("element has wrong length")
        q = self.pe
        return tuple(c % q for c in x)

    def add(self, a, b):
        q = self.pe
        return tuple((x + y) % q for x, y in zip(a, b))

    def sub(self, a, b):
        q = self.pe
        return tuple((x - y) % q for x, y in zip(a, b))

    def neg(self, a):
        q = self.pe
        return tuple((-x) % q for x in a)

    def mul(self, a, b):
        q = self.pe
        k = self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        lam = self.lam
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % q
            if c:
                off = i - k
                for j in range(k):
                    prod[off + j] -= c * lam[j]
            prod[i] = 0
        return tuple(c % q for c in prod[:k])

    def pow_elem(self, a, k: int):
        acc = self.one
        base = a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def is_zero(self, a) -> bool:
        return all(c % self.pe == 0 for c in a)

    def val(self, a) -> int:
        """p-adic valuation: min over coefficients, capped at e."""
        v = self.e
        for c in a:
            c %= self.pe
            if c:
                w = 0
                while c % self.p == 0:
                    c //= self.p
                    w += 1
                v = min(v, w)
        return v

    def unit_part(self, a):
        """u with a == p^val(a) * u; requires a != 0."""
        v = self.val(a)
        pv = self.p ** v
        return tuple((c % self.pe) // pv for c in a)

    def is_unit(self, a) -> bool:
        return self.e == 0 or self.val(a) == 0

    def is_nilpotent(self, a) -> bool:
        return self.val(a) >= 1 or self.e == 0

    def is_splitting(self, a) -> bool:
        return False  # local ring

    def inv(self, a):
        if not self.is_unit(a):
            raise NotUnitError(f"{a} is not a unit in {self}")
        if self.e == 0:
            return self.zero
        p = self.p
        # invert in the residue field F_p[t]/(lam) ...
        abar = _fp_trim([c % p for c in a])
        lamp = [c % p for c in self.lam]
        # extended Euclid over F_p[t]
        r0, r1 = lamp[:], abar[:]
        s0, s1 = [], [1]
        while _fp_trim(r1[:]):
            # divide r0 by r1
            q = []
            r0w = r0[:]
            inv_lc = pow(r1[-1], -1, p)
            dq = len(r0w) - len(r1)
            q = [0] * (dq + 1) if dq >= 0 else []
            while len(r0w) >= len(r1) and _fp_trim(r0w):
                if len(r0w) < len(r1):
                    break
                c = (r0w[-1] * inv_lc) % p
                off = len(r0w) - len(r1)
                q[off] = c
                for j, y in enumerate(r1):
                    r0w[off + j] = (r0w[off + j] - c * y) % p
                _fp_trim(r0w)
            # update
            sq = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(s1):
                        sq[i + j] = (sq[i + j] + x * y) % p
            s_new = [( (s0[i] if i < len(s0) else 0) - (sq[i] if i < len(sq) else 0) ) % p
                     for i in range(max(len(s0), len(sq), 1))]
            r0, r1 = r1, r0w
            s0, s1 = s1, _fp_trim(s_new)
        # r0 is the gcd (a nonzero constant since lam irreducible, a unit)
        glc = pow(r0[0], -1, p)
        x0 = tuple(((s0[i] if i < len(s0) else 0) * glc) % p for i in range(self.k))
        # Newton lift: x <- x(2 - a x) doubles p-adic precision
        x = x0
        two = self.from_int(2)
        prec = 1
        while prec < self.e:
            x = self.mul(x, self.sub(two, self.mul(a, x)))
            prec *= 2
        assert self.mul(a, x) == self.one
        return x

    def try_divide(self, a, b):
        if self.is_zero(a):
            return self.zero
        if self.is_zero(b):
            return None
        va, vb = self.val(a), self.val(b)
        if vb > va:
            return None
        c = self.mul(self.unit_part(a), self.inv(self.unit_part(b)))
        return self.mul(self.from_int(self.p ** (va - vb)), c)

    def gcd_bezout(self, a, b):
        az, bz = self.is_zero(a), self.is_zero(b)
        if az and bz:
            return self.zero, self.zero, self.zero
        if az:
            return self.ideal_gen(b), self.zero, self.inv(self.unit_part(b))
        if bz:
            return self.ideal_gen(a), self.inv(self.unit_part(a)), self.zero
        va, vb = self.val(a), self.val(b)
        if va <= vb:
            return self.from_int(self.p ** va), self.inv(self.unit_part(a)), self.zero
        return self.from_int(self.p ** vb), self.zero, self.inv(self.unit_part(b))

    def gcd_many(self, elems):
        v = self.e
        for x in elems:
            if not self.is_zero(x):
                v = min(v, self.val(x))
        return self.from_int(self.p ** v) if v < self.e else self.zero

    def ideal_gen(self, a):
        v = self.val(a)
        return self.from_int(self.p ** v) if v < self.e else self.zero

    def colon(self, a, b):
        va = self.val(a)
        vb = self.val(b)
        return self.from_int(self.p ** max(va - vb, 0))

    def split(self, a):
        raise NotSplittingError("Galois rings are local and never split")

    def crt(self, r1, a1, r2, a2):
        raise ContextMismatchError("crt is not applicable to a local ring")

    def ann_quotient(self, c):
        # Ann(p^v u) = (p^(e-v)), so R/Ann(c) keeps only e-v levels.
        v = self.e if self.is_zero(c) else self.val(c)
        return GaloisRing(self.p, self.e - v, self.lam)

    def quotient_by(self, c):
        return GaloisRing(self.p, self.val(c), self.lam)

    def elements(self):
        q = self.pe
        k = self.k
        total = q ** k
        for idx in range(total):
            out = []
            m = idx
            for _ in range(k):
                out.append(m % q)
                m //= q
            yield tuple(out)

    def residue_lifts(self):
        """Lifts of all residue-field elements: tuples with entries in [0,p)."""
        p, k = self.p, self.k
        for idx in range(p ** k):
            out = []
            m = idx
            for _ in range(k):
                out.append(m % p)
                m //= p
            yield tuple(out)

    def format_elem(self, a) -> str:
        return ",".join(str(c) for c in a)

    def __str__(self):
        lam = ",".join(str(c) for c in self.lam)
        return f"{self.p}^{self.e};{self.k};{lam}"


def parse_ring(text: str):
    """Parse a ring description: a decimal modulus, or 'p^e;k;lam-coeffs'."""
    text = text.strip()
    if ";" not in text:
        n = int(text)
        if n < 2:
            raise ValueError("modulus must be >= 2")
        return Zmod(n)
    parts = text.split(";")
    if len(parts) != 3:
        raise ValueError("Galois ring format is p^e;k;lam-coeffs")
    p_s, e_s = parts[0].split("^")
    p, e = int(p_s), int(e_s)
    k = int(parts[1])
    lam = tuple(int(c) for c in parts[2].split(","))
    if len(lam) != k + 1:
        raise ValueError("lam must have k+1 coefficients")
    return GaloisRing(p, e, lam)
