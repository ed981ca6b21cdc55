"""Resultants, reduced resultants and Bezout certificates.

Euclidean-style algorithms over principal Artinian rings: non-invertible
leading coefficients are handled by content extraction, Hensel factorization
into unit * monic, and ring splitting with CRT recombination.

Conventions:
  * res(f, g) == det(sylvester(f, g)) for all nonzero f, g; swapping the
    arguments multiplies by (-1)^(deg f * deg g).
  * res with a zero operand is 0; res of two nonzero constants is 1
    (empty Sylvester matrix).
  * rres / res_ideal return the canonical generator of the ideal.
"""
from __future__ import annotations

from dataclasses import dataclass

from .poly import (NeedsSplitError, Poly, content, crt_poly, divide_by_scalar,
                   divrem, fun_factor, invert_unit, is_primitive, reciprocal,
                   top_non_nilpotent)


# ---------------------------------------------------------------------------
# ppa: reduction to a primitive pair
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitElem:
    element: object


@dataclass(frozen=True)
class Reduced:
    c: object
    f: Poly
    g: Poly


def ppa(f: Poly, g: Poly):
    """Primitive-pair reduction.

    Returns SplitElem(a) when a ring split is required, else Reduced(c, f1, g1)
    with f1, g1 primitive and Rres(f, g) = c * Rres_{R/Ann(c)}(f1, g1).
    """
    R = f.ring
    cf, cg = content(f), content(g)
    if R.is_unit(cf) and R.is_unit(cg):
        return Reduced(R.one, f, g)
    if R.is_splitting(cf):
        return SplitElem(cf)
    if R.is_splitting(cg):
        return SplitElem(cg)
    if R.is_nilpotent(cf) and R.is_nilpotent(cg):
        d = R.gcd_bezout(cf, cg)[0]
        sub = ppa(divide_by_scalar(f, d), divide_by_scalar(g, d))
        if isinstance(sub, SplitElem):
            return sub
        return Reduced(R.mul(d, sub.c), sub.f, sub.g)
    # exactly one content is nilpotent; arrange it on f
    if not R.is_nilpotent(cf):
        f, g = g, f
        cf = cg
    i, a = top_non_nilpotent(g)
    if not R.is_unit(a):
        return SplitElem(a)
    fac = fun_factor(g)
    if fac.gtilde.degree == 0:
        # g is a unit of R[x], so (f, g) = (1) regardless of f's content
        return Reduced(R.one, f, Poly.one(R))
    sub = ppa(divide_by_scalar(f, cf), fac.gtilde)
    if isinstance(sub, SplitElem):
        return sub
    return Reduced(R.mul(cf, sub.c), sub.f, sub.g)


# ---------------------------------------------------------------------------
# reduced resultant
# ---------------------------------------------------------------------------

def _rres0(f: Poly):
    """Generator of the contraction (f) ∩ R."""
    R = f.ring
    if f.is_zero():
        return R.zero
    if f.degree == 0:
        return f.coeffs[0]
    c = content(f)
    if R.is_splitting(c):
        return _split_crt_elem(R, c, lambda Rb: _rres0(f.map_ring(Rb)))
    h = f if R.is_unit(c) else divide_by_scalar(f, c)
    if R.is_unit(c):
        c = R.one
    ch = content(h)
    if R.is_splitting(ch):
        return _split_crt_elem(R, ch, lambda Rb: _rres0(f.map_ring(Rb)))
    i, a = top_non_nilpotent(h)
    if R.is_splitting(a):
        return _split_crt_elem(R, a, lambda Rb: _rres0(f.map_ring(Rb)))
    fac = fun_factor(h)
    if fac.gtilde.degree == 0:
        return c  # f is c times a unit of R[x]
    return R.zero  # a monic factor of positive degree blocks constants


def _split_crt_elem(R, a, branch_fn):
    R1, R2 = R.split(a)
    return R.crt(R1, branch_fn(R1), R2, branch_fn(R2))


def _rres(f: Poly, g: Poly):
    # Iterative main loop (the Euclidean chain can be as long as the input
    # degree); splits and quotient-ring recursions stay recursive but their
    # depth is bounded by the factor structure of the modulus.
    R = f.ring
    mult = R.one
    while True:
        if f.degree < g.degree:
            f, g = g, f
        if f.degree <= 0:
            a = f.coeffs[0] if f.coeffs else R.zero
            b = g.coeffs[0] if g.coeffs else R.zero
            return R.mul(mult, R.gcd_bezout(a, b)[0])
        if g.degree <= 0:
            c = g.coeffs[0] if g.coeffs else R.zero
            Rq = R.quotient_by(c)
            r0 = _rres0(f.map_ring(Rq))
            return R.mul(mult, R.gcd_bezout(c, R.coerce(r0))[0])
        out = ppa(f, g)
        if isinstance(out, SplitElem):
            fb, gb = f, g
            return R.mul(mult, _split_crt_elem(
                R, out.element,
                lambda Rb: Rb.coerce(_rres(fb.map_ring(Rb), gb.map_ring(Rb)))))
        c, f1, g1 = out.c, out.f, out.g
        if not R.is_unit(c):
            Rq = R.ann_quotient(c)
            rq = _rres(f1.map_ring(Rq), g1.map_ring(Rq))
            return R.mul(mult, R.mul(c, R.coerce(rq)))
        if f1.degree < g1.degree:
            f1, g1 = g1, f1
        if g1.degree <= 0:
            mult = R.mul(mult, c)
            f, g = f1, g1
            continue
        i, a = top_non_nilpotent(g1)
        if R.is_splitting(a):
            return R.mul(mult, R.mul(c, _split_crt_elem(
                R, a,
                lambda Rb: Rb.coerce(_rres(f1.map_ring(Rb), g1.map_ring(Rb))))))
        fac = fun_factor(g1)
        q, r = divrem(f1, fac.gtilde)
        mult = R.mul(mult, c)
        f, g = fac.gtilde, r


def rres(f: Poly, g: Poly):
    """Canonical generator of the reduced resultant ideal (f, g) ∩ R."""
    return f.ring.ideal_gen(_rres(f, g))


# ---------------------------------------------------------------------------
# reduced resultant with Bezout certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RresCertificate:
    value: object
    u: Poly
    v: Poly


def _reduce_cofactors(f, g, r, u, v):
    R = f.ring
    if f.degree >= 1 and R.is_unit(f.lc) and v.degree >= f.degree:
        q, v = divrem(v, f)
        u = u + q * g
    elif g.degree >= 1 and R.is_unit(g.lc) and u.degree >= g.degree:
        q, u = divrem(u, g)
        v = v + q * f
    return r, u, v


def _rres0_bezout(f: Poly):
    """(r, s) with s*f == r in R[x] and (r) = (f) ∩ R."""
    R = f.ring
    if f.is_zero():
        return R.zero, Poly.zero(R)
    if f.degree == 0:
        return f.coeffs[0], Poly.one(R)

    def split_on(a):
        R1, R2 = R.split(a)
        r1, s1 = _rres0_bezout(f.map_ring(R1))
        r2, s2 = _rres0_bezout(f.map_ring(R2))
        return R.crt(R1, r1, R2, r2), crt_poly(R, R1, s1, R2, s2)

    c = content(f)
    if R.is_splitting(c):
        return split_on(c)
    h = f if R.is_unit(c) else divide_by_scalar(f, c)
    if R.is_unit(c):
        c = R.one
    ch = content(h)
    if R.is_splitting(ch):
        return split_on(ch)
    i, a = top_non_nilpotent(h)
    if R.is_splitting(a):
        return split_on(a)
    fac = fun_factor(h)
    if fac.gtilde.degree == 0:
        s = invert_unit(h)
        return c, s  # s*f == c*(h^{-1} h) == c
    return R.zero, Poly.zero(R)


def _rres_bezout(f: Poly, g: Poly):
    """(r, u, v) with u*f + v*g == r exactly and (r) = Rres(f, g)."""
    R = f.ring
    if f.degree < g.degree:
        r, u, v = _rres_bezout(g, f)
        return r, v, u
    if f.degree <= 0:
        a = f.coeffs[0] if f.coeffs else R.zero
        b = g.coeffs[0] if g.coeffs else R.zero
        r, s, t = R.gcd_bezout(a, b)
        return r, Poly.const(R, s), Poly.const(R, t)
    if g.degree <= 0:
        c = g.coeffs[0] if g.coeffs else R.zero
        Rq = R.quotient_by(c)
        r0, s0 = _rres0_bezout(f.map_ring(Rq))
        s = s0.map_ring(R)
        P = s * f
        r0l = R.coerce(r0)
        if R.is_zero(c):
            assert P == Poly.const(R, r0l), "exact contraction witness expected"
            w = Poly.zero(R)
        else:
            w = divide_by_scalar(P - Poly.const(R, r0l), c)
        rg, sig, tau = R.gcd_bezout(c, r0l)
        u = s.scale(tau)
        v = Poly.const(R, sig) - w.scale(tau)
        return _reduce_cofactors(f, g, rg, u, v)

    def split_on(a):
        R1, R2 = R.split(a)
        r1, u1, v1 = _rres_bezout(f.map_ring(R1), g.map_ring(R1))
        r2, u2, v2 = _rres_bezout(f.map_ring(R2), g.map_ring(R2))
        return (R.crt(R1, r1, R2, r2),
                crt_poly(R, R1, u1, R2, u2),
                crt_poly(R, R1, v1, R2, v2))

    cf, cg = content(f), content(g)
    if R.is_splitting(cf):
        return split_on(cf)
    if R.is_splitting(cg):
        return split_on(cg)
    fu, gu = R.is_unit(cf), R.is_unit(cg)
    if not fu and not gu:
        d = R.gcd_bezout(cf, cg)[0]
        f1, g1 = divide_by_scalar(f, d), divide_by_scalar(g, d)
        Rq = R.ann_quotient(d)
        r0, u0, v0 = _rres_bezout(f1.map_ring(Rq), g1.map_ring(Rq))
        r = R.mul(d, R.coerce(r0))
        return _reduce_cofactors(f, g, r, u0.map_ring(R), v0.map_ring(R))
    if not fu or not gu:
        # exactly one content is nilpotent; fn carries it, gp is primitive
        fn, cn, gp = (f, cf, g) if not fu else (g, cg, f)
        i, a = top_non_nilpotent(gp)
        if R.is_splitting(a):
            return split_on(a)
        fac = fun_factor(gp)
        if fac.gtilde.degree == 0:
            # gp is a unit of R[x]: gp^{-1} * gp = 1 witnesses Rres = (1)
            w = invert_unit(gp)
            if not fu:
                return _reduce_cofactors(f, g, R.one, Poly.zero(R), w)
            return _reduce_cofactors(f, g, R.one, w, Poly.zero(R))
        f1 = divide_by_scalar(fn, cn)
        Rq = R.ann_quotient(cn)
        r0, u0, v0 = _rres_bezout(f1.map_ring(Rq), fac.gtilde.map_ring(Rq))
        r = R.mul(cn, R.coerce(r0))
        un = u0.map_ring(R)
        vp = v0.map_ring(R).scale(cn) * invert_unit(fac.u)
        if not fu:
            return _reduce_cofactors(f, g, r, un, vp)
        return _reduce_cofactors(f, g, r, vp, un)
    # both primitive
    i, a = top_non_nilpotent(g)
    if R.is_splitting(a):
        return split_on(a)
    fac = fun_factor(g)
    q, rr = divrem(f, fac.gtilde)
    r0, a0, b0 = _rres_bezout(fac.gtilde, rr)
    u = b0
    v = (a0 - b0 * q) * invert_unit(fac.u)
    return _reduce_cofactors(f, g, r0, u, v)


def rres_bezout(f: Poly, g: Poly) -> RresCertificate:
    """Reduced resultant with an exact witness u*f + v*g == value."""
    r, u, v = _rres_bezout(f, g)
    return RresCertificate(r, u, v)


# ---------------------------------------------------------------------------
# resultant
# ---------------------------------------------------------------------------

def _split_res(f: Poly, g: Poly, a, ideal_mode):
    """Split on a; recombine with degree-drop corrections.

    For a projection phi with deg phi(f) = deg f - d and deg phi(g) = deg g:
    phi(res(f,g)) = (-1)^(d*deg g) * phi(lc g)^d * res(phi f, phi g);
    symmetrically lc(f)^e (no sign) when only deg g drops, and 0 when both
    degrees drop.
    """
    R = f.ring
    R1, R2 = R.split(a)

    def branch(Rb):
        fb, gb = f.map_ring(Rb), g.map_ring(Rb)
        if fb.is_zero() or gb.is_zero():
            return Rb.zero
        d = f.degree - fb.degree
        e = g.degree - gb.degree
        if d > 0 and e > 0:
            return Rb.zero
        if e == 0:
            val = Rb.mul(Rb.pow_elem(Rb.coerce(g.lc), d), _res(fb, gb, ideal_mode))
            if (d * g.degree) % 2:
                val = Rb.neg(val)
            return val
        return Rb.mul(Rb.pow_elem(Rb.coerce(f.lc), e), _res(fb, gb, ideal_mode))

    return R.crt(R1, branch(R1), R2, branch(R2))


def _res_unit(f: Poly, u: Poly, ideal_mode):
    """res(f, u) for a unit u of R[x], via reciprocal reduction."""
    R = f.ring
    if u.degree == 0:
        return R.pow_elem(u.coeffs[0], f.degree)
    # strip the power of x: res(x, u) = u(0)
    s = next(i for i, c in enumerate(f.coeffs) if not R.is_zero(c))
    acc = R.pow_elem(u.coeffs[0], s)
    f2 = Poly(R, f.coeffs[s:])
    if f2.degree == 0:
        return R.mul(acc, R.pow_elem(f2.coeffs[0], u.degree))
    val = _res(reciprocal(f2), reciprocal(u), ideal_mode)
    if (f2.degree * u.degree) % 2:
        val = R.neg(val)
    return R.mul(acc, val)


def _res(f: Poly, g: Poly, ideal_mode=False):
    # Iterative main loop: the Euclidean chain can be as long as the input
    # degree, which would overflow Python's recursion limit for large inputs.
    R = f.ring
    acc = R.one
    while True:
        if f.is_zero() or g.is_zero():
            return R.zero
        n, m = f.degree, g.degree
        if n == 0 and m == 0:
            return acc
        if n == 0:
            return R.mul(acc, R.pow_elem(f.coeffs[0], m))
        if m == 0:
            return R.mul(acc, R.pow_elem(g.coeffs[0], n))
        if n == 1 and m == 1:
            return R.mul(acc, R.sub(R.mul(f.coeffs[1], g.coeffs[0]),
                                    R.mul(f.coeffs[0], g.coeffs[1])))
        if m > n:
            f, g = g, f
            n, m = m, n
            if (n * m) % 2:
                acc = R.neg(acc)

        # content extraction: res(c*f, g) = c^deg(g) * res(f, g) (degree kept)
        for first in (True, False):
            p = f if first else g
            other_deg = g.degree if first else f.degree
            c = content(p)
            if R.is_splitting(c):
                return R.mul(acc, _split_res(f, g, c, ideal_mode))
            if not R.is_unit(c):
                acc = R.mul(acc, R.pow_elem(c, other_deg))
                if R.is_zero(acc):
                    return R.zero
                p = divide_by_scalar(p, c)
                c2 = content(p)
                if R.is_splitting(c2):
                    if first:
                        f = p
                    else:
                        g = p
                    return R.mul(acc, _split_res(f, g, c2, ideal_mode))
                assert R.is_unit(c2), "content of the primitive part must be a unit"
            if first:
                f = p
            else:
                g = p
        i, a = top_non_nilpotent(g)
        if R.is_splitting(a):
            return R.mul(acc, _split_res(f, g, a, ideal_mode))
        if i == m:  # invertible leading coefficient: plain division step
            q, r = divrem(f, g)
            if r.is_zero():
                return R.zero
            # res(f, g) = (-1)^(n m) lc(g)^(n - deg r) res(g, r)
            acc = R.mul(acc, R.pow_elem(g.lc, n - r.degree))
            if (n * m) % 2:
                acc = R.neg(acc)
            f, g = g, r
            continue
        # nilpotent leading part: res(f, g) = res(f, u) * res(f, gtilde)
        fac = fun_factor(g)
        if ideal_mode and R.is_unit(f.lc):
            r1 = R.one  # res(f, u) is a unit when lc(f) is invertible
        else:
            r1 = _res_unit(f, fac.u, ideal_mode)
        acc = R.mul(acc, r1)
        g = fac.gtilde


def res(f: Poly, g: Poly):
    """Resultant normalised so that res(f, g) == det(sylvester(f, g))."""
    return _res(f, g, ideal_mode=False)


def res_ideal(f: Poly, g: Poly):
    """Canonical generator of the ideal (res(f, g)); skips the unit-side
    resultant whenever the higher-degree operand has an invertible lc."""
    return f.ring.ideal_gen(_res(f, g, ideal_mode=True))
