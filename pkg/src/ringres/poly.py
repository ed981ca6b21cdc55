"""Univariate polynomial arithmetic over the supported rings.

Polynomials are immutable coefficient tuples, ascending by degree, with no
trailing zeros.  The zero polynomial has an empty tuple; its degree is the
sentinel NO_DEGREE = -1, which compares below every true degree (all real
degrees are >= 0) and must not be used arithmetically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as _np

from .ring import ContextMismatchError, NotUnitError

NO_DEGREE = -1

KARATSUBA_CUTOFF = 32

# Vectorized int64 fast path for Z/n with small n.  Convolution sums are
# bounded by min(len) * n^2, so n <= 2^25 and operand length <= 4096 keep
# every intermediate strictly inside int64.
_VEC_MOD_LIMIT = 1 << 25
_VEC_LEN_MIN = 16
_VEC_LEN_MAX = 4096


def _vec_ring(R) -> bool:
    return getattr(R, "kind", None) == "zmod" and R.n <= _VEC_MOD_LIMIT


def _poly_from_arr(R, arr):
    p = Poly(R, arr.tolist())
    p._arr = arr if len(p.coeffs) == len(arr) else arr[: len(p.coeffs)]
    return p


class NeedsSplitError(ValueError):
    """An operation hit a splitting element; carries the element."""

    def __init__(self, element, message="ring split required"):
        super().__init__(message)
        self.element = element


class NonInvertibleLeadingCoeffError(ValueError):
    """Division requires an invertible leading coefficient."""


class Poly:
    __slots__ = ("ring", "coeffs", "_arr")

    def __init__(self, ring, coeffs):
        cs = list(coeffs)
        while cs and ring.is_zero(cs[-1]):
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)
        self._arr = None

    def _as_arr(self):
        """Cached int64 coefficient array (small-modulus fast path only)."""
        a = self._arr
        if a is None:
            a = _np.array(self.coeffs, dtype=_np.int64)
            self._arr = a
        return a

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_ints(cls, ring, ints):
        return cls(ring, [ring.from_int(i) for i in ints])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    @classmethod
    def one(cls, ring):
        return cls(ring, [ring.one])

    @classmethod
    def const(cls, ring, c):
        return cls(ring, [c])

    # -- structure --------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else NO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ring.zero

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"Poly({self.ring}, {list(self.coeffs)})"

    # -- arithmetic -------------------------------------------------------
    def _check(self, other):
        if self.ring != other.ring:
            raise ContextMismatchError("polynomials over different rings")

    def __add__(self, other):
        self._check(other)
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        if _vec_ring(R) and len(a) >= _VEC_LEN_MIN:
            big, small = self, other
            if len(big.coeffs) < len(small.coeffs):
                big, small = small, big
            out = big._as_arr().copy()
            out[: len(small.coeffs)] += small._as_arr()
            return _poly_from_arr(R, out % R.n)
        out = list(a)
        for i, c in enumerate(b):
            out[i] = R.add(out[i], c)
        return Poly(R, out)

    def __neg__(self):
        R = self.ring
        return Poly(R, [R.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        self._check(other)
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if _vec_ring(R) and max(len(a), len(b)) >= _VEC_LEN_MIN:
            out = _np.zeros(max(len(a), len(b)), dtype=_np.int64)
            out[: len(a)] = self._as_arr()
            out[: len(b)] -= other._as_arr()
            return _poly_from_arr(R, out % R.n)
        out = list(a) + [R.zero] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = R.sub(out[i], c)
        return Poly(R, out)

    def __mul__(self, other):
        self._check(other)
        R = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(R, [])
        if (
            _vec_ring(R)
            and max(len(a), len(b)) >= _VEC_LEN_MIN
            and min(len(a), len(b)) <= _VEC_LEN_MAX
        ):
            prod = _np.convolve(self._as_arr(), other._as_arr())
            return _poly_from_arr(R, prod % R.n)
        return Poly(R, _mul_coeffs(R, a, b))

    def scale(self, c):
        R = self.ring
        return Poly(R, [R.mul(x, c) for x in self.coeffs])

    def shift(self, s: int):
        """Multiply by x^s."""
        if self.is_zero() or s == 0:
            return self if s == 0 else self
        return Poly(self.ring, (self.ring.zero,) * s + self.coeffs)

    def mod_xpow(self, t: int):
        return Poly(self.ring, self.coeffs[:t])

    def eval(self, a):
        R = self.ring
        acc = R.zero
        for c in reversed(self.coeffs):
            acc = R.add(R.mul(acc, a), c)
        return acc

    def map_ring(self, ring2):
        return Poly(ring2, [ring2.coerce(c) for c in self.coeffs])

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(self.ring.format_elem(c) for c in self.coeffs)


def _mul_coeffs(R, a, b):
    if (
        _vec_ring(R)
        and max(len(a), len(b)) >= _VEC_LEN_MIN
        and min(len(a), len(b)) <= _VEC_LEN_MAX
    ):
        prod = _np.convolve(
            _np.array(a, dtype=_np.int64), _np.array(b, dtype=_np.int64)
        )
        return (prod % R.n).tolist()
    if min(len(a), len(b)) <= KARATSUBA_CUTOFF:
        out = [R.zero] * (len(a) + len(b) - 1)
        zero = R.zero
        for i, x in enumerate(a):
            if x != zero:
                for j, y in enumerate(b):
                    out[i + j] = R.add(out[i + j], R.mul(x, y))
        return out
    h = min(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_coeffs(R, a0, b0)
    z2 = _mul_coeffs(R, a1, b1)
    asum = [R.add(x, y) for x, y in zip(a0, a1)] + list(a1[len(a0):]) + list(a0[len(a1):])
    bsum = [R.add(x, y) for x, y in zip(b0, b1)] + list(b1[len(b0):]) + list(b0[len(b1):])
    z1 = _mul_coeffs(R, asum, bsum)
    out = [R.zero] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] = R.add(out[i], c)
        if i + h < len(out):
            out[i + h] = R.sub(out[i + h], c)
    for i, c in enumerate(z1):
        out[i + h] = R.add(out[i + h], c)
    for i, c in enumerate(z2):
        out[i + h] = R.sub(out[i + h], c)
        out[i + 2 * h] = R.add(out[i + 2 * h], c)
    return out


# ---------------------------------------------------------------------------
# content / primitivity
# ---------------------------------------------------------------------------

def content(f: Poly):
    """Canonical generator of the coefficient ideal."""
    return f.ring.gcd_many(f.coeffs) if f.coeffs else f.ring.zero


def is_primitive(f: Poly) -> bool:
    return f.ring.is_unit(content(f))


def divide_by_scalar(f: Poly, c):
    """g with c*g == f, coefficient-wise smallest representatives."""
    R = f.ring
    out = []
    for x in f.coeffs:
        q = R.try_divide(x, c)
        if q is None:
            raise ValueError("scalar does not divide all coefficients")
        out.append(q)
    return Poly(R, out)


def top_non_nilpotent(f: Poly):
    """(i, a_i) for the highest-degree non-nilpotent coefficient, or None."""
    R = f.ring
    for i in range(len(f.coeffs) - 1, -1, -1):
        if not R.is_nilpotent(f.coeffs[i]):
            return i, f.coeffs[i]
    return None


def reciprocal(f: Poly) -> Poly:
    """x^deg(f) * f(1/x); requires f != 0."""
    if f.is_zero():
        raise ValueError("reciprocal of the zero polynomial")
    return Poly(f.ring, tuple(reversed(f.coeffs)))


def is_unit_poly(f: Poly) -> bool:
    """Unit of R[x]: invertible constant term, nilpotent higher coefficients."""
    R = f.ring
    if f.is_zero():
        return False
    if not R.is_unit(f.coeffs[0]):
        return False
    return all(R.is_nilpotent(c) for c in f.coeffs[1:])


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def divrem(f: Poly, g: Poly):
    """(q, r) with f = q*g + r, deg r < deg g; needs lc(g) invertible."""
    R = f.ring
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if not R.is_unit(g.lc):
        raise NonInvertibleLeadingCoeffError(
            "divrem requires an invertible leading coefficient")
    dg = g.degree
    if f.degree < dg:
        return Poly(R, []), f
    winv = R.inv(g.lc)
    if _vec_ring(R) and dg >= _VEC_LEN_MIN:
        n = R.n
        rem = f._as_arr().copy()
        low = g._as_arr()[:dg]
        q = [0] * (f.degree - dg + 1)
        for i in range(f.degree, dg - 1, -1):
            c = int(rem[i])
            if not c:
                continue
            qc = c * winv % n
            q[i - dg] = qc
            seg = rem[i - dg : i]
            seg -= qc * low
            seg %= n
        return Poly(R, q), _poly_from_arr(R, rem[:dg])
    rem = list(f.coeffs)
    q = [R.zero] * (f.degree - dg + 1)
    gcs = g.coeffs
    for i in range(f.degree, dg - 1, -1):
        c = rem[i]
        if R.is_zero(c):
            continue
        qc = R.mul(c, winv)
        q[i - dg] = qc
        off = i - dg
        for j, gc in enumerate(gcs):
            rem[off + j] = R.sub(rem[off + j], R.mul(qc, gc))
    return Poly(R, q), Poly(R, rem[:dg])


# ---------------------------------------------------------------------------
# inversion of unit polynomials
# ---------------------------------------------------------------------------

def invert_unit(f: Poly) -> Poly:
    """Exact inverse of a unit of R[x] (degree at most E*deg f)."""
    R = f.ring
    if not is_unit_poly(f):
        raise NotUnitError("not a unit of R[x]")
    bound = R.E * max(f.degree, 1) + 1
    v = Poly(R, [R.inv(f.coeffs[0])])
    two = Poly(R, [R.from_int(2)])
    t = 1
    while t < bound:
        t *= 2
        v = (v * (two - v * f)).mod_xpow(t)
    assert v * f == Poly.one(R), "unit inversion failed to converge"
    return v


def invert_mod(u: Poly, f: Poly) -> Poly:
    """Inverse of the unit u in R[x]/(f); lc(f) invertible, deg result < deg f.

    Two-phase Newton iteration: powers of x up to deg f, then reduction mod f.
    """
    R = u.ring
    if not is_unit_poly(u):
        raise NotUnitError("not a unit of R[x]")
    if f.is_zero() or not R.is_unit(f.lc):
        raise NonInvertibleLeadingCoeffError(
            "invert_mod requires an invertible leading coefficient of f")
    if f.degree == 0:
        return Poly.zero(R)
    one = Poly.one(R)
    two = Poly(R, [R.from_int(2)])
    v = Poly(R, [R.inv(u.coeffs[0])])
    t = 1
    while t < f.degree:
        t *= 2
        v = (v * (two - v * u)).mod_xpow(min(t, f.degree))
    rounds = max(1, math.ceil(math.log2(max(2, R.E * max(1, u.degree))))) + 1
    for _ in range(rounds):
        if divrem(v * u, f)[1] == one:
            break
        v = divrem(v * (two - v * u), f)[1]
    assert divrem(v * u, f)[1] == one, "modular inversion failed to converge"
    return v


# ---------------------------------------------------------------------------
# fun_factor: f = u * gtilde with u a unit of R[x] and gtilde monic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FunFactorization:
    u: Poly
    gtilde: Poly
    k: int


def fun_factor(f: Poly) -> FunFactorization:
    """Hensel-lifted factorization of a primitive f.

    k is the index of the highest non-nilpotent coefficient, which must be
    invertible (otherwise NeedsSplitError carries the splitting element).
    """
    R = f.ring
    if f.is_zero() or not is_primitive(f):
        raise ValueError("fun_factor requires a primitive polynomial")
    top = top_non_nilpotent(f)
    assert top is not None, "primitive polynomial has a non-nilpotent coefficient"
    k, a = top
    if not R.is_unit(a):
        raise NeedsSplitError(a)
    d = f.degree
    w = R.inv(a)
    if k == d:
        return FunFactorization(Poly(R, [a]), f.scale(w), k)
    # Seed: f == (a*ubar) * (w*fbar) modulo the nilpotent ideal generated by
    # the coefficients above k; quadratic Hensel lifting makes it exact.
    fbar = Poly(R, f.coeffs[:k + 1])
    ubar = Poly(R, (R.one,) + f.coeffs[k + 1:])
    g = ubar.scale(a)
    h = fbar.scale(w)           # monic of degree k
    s = Poly(R, [w])
    t = Poly.zero(R)
    one = Poly.one(R)
    rounds = max(1, math.ceil(math.log2(max(2, R.E)))) + 1
    for _ in range(rounds):
        e = f - g * h
        if e.is_zero():
            break
        q, r = divrem(s * e, h)
        g = g + t * e + q * g
        h = h + r
        b = s * g + t * h - one
        c, d2 = divrem(s * b, h)
        s = s - d2
        t = t - t * b - c * g
    assert f == g * h, "Hensel lifting failed to converge"
    assert is_unit_poly(g), "unit factor is not a unit of R[x]"
    return FunFactorization(g, h, k)


# ---------------------------------------------------------------------------
# division by primitive polynomials (splitting + CRT when needed)
# ---------------------------------------------------------------------------

def crt_poly(R, R1, p1: Poly, R2, p2: Poly) -> Poly:
    width = max(len(p1.coeffs), len(p2.coeffs))
    out = []
    for i in range(width):
        c1 = p1.coeffs[i] if i < len(p1.coeffs) else R1.zero
        c2 = p2.coeffs[i] if i < len(p2.coeffs) else R2.zero
        out.append(R.crt(R1, c1, R2, c2))
    return Poly(R, out)


def divrem_primitive(f: Poly, g: Poly):
    """(q, r) with f = q*g + r, deg r < deg g, for primitive g != 0."""
    R = f.ring
    if g.is_zero() or not is_primitive(g):
        raise ValueError("divisor must be primitive and nonzero")
    if g.degree == 0:
        return f.scale(R.inv(g.coeffs[0])), Poly.zero(R)
    i, a = top_non_nilpotent(g)
    if R.is_unit(a):
        fac = fun_factor(g)
        q0, r = divrem(f, fac.gtilde)
        return q0 * invert_unit(fac.u), r
    # a is splitting: recurse over the factor rings and recombine
    R1, R2 = R.split(a)
    q1, r1 = divrem_primitive(f.map_ring(R1), g.map_ring(R1))
    q2, r2 = divrem_primitive(f.map_ring(R2), g.map_ring(R2))
    return crt_poly(R, R1, q1, R2, q2), crt_poly(R, R1, r1, R2, r2)
