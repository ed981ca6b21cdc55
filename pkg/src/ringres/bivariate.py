"""Resultants of bivariate polynomials with respect to y over Z/nZ.

The resultant res_y(f, g) of f, g in (Z/nZ)[x][y] is the determinant of the
y-Sylvester matrix with entries in (Z/nZ)[x]; it is a polynomial in x of
degree at most B = deg_y(g)*deg_x(f) + deg_y(f)*deg_x(g).  We compute it by
evaluating x at B+1 points whose pairwise differences are units, running the
univariate resultant at each point, and Lagrange-interpolating the results.

Z/nZ rarely contains B+1 such points, so n is split into branches: primes
p <= B are trial-divided out of n and each prime-power factor p^e is handled
inside a Galois ring GR(p, e, k) with p^k > B (lifts of distinct residue-field
elements have unit differences); the coprime cofactor m keeps the plain points
0..B.  The branch results are recombined coefficient-wise by CRT.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import GaloisRing, Zmod, find_irreducible
from .poly import Poly, crt_poly
from .resultant import res


@dataclass(frozen=True)
class BiPoly:
    """Dense bivariate polynomial: a vector of x-polynomials, ascending in y."""

    ring: Zmod
    coeffs: tuple  # tuple[Poly, ...], coeffs[j] multiplies y^j

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_ints(cls, ring, grid) -> "BiPoly":
        """grid[j] is the ascending coefficient list of the y^j coefficient."""
        return cls(ring, tuple(Poly.from_ints(ring, row) for row in grid))

    @property
    def deg_y(self) -> int:
        return len(self.coeffs) - 1

    @property
    def deg_x(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def eval_x(self, ring, a) -> Poly:
        """f(a, y) over `ring`, coercing each x-coefficient into `ring`."""
        return Poly(ring, [c.map_ring(ring).eval(a) for c in self.coeffs])

    def format(self) -> str:
        return ";".join(c.format() for c in self.coeffs) if self.coeffs else "0"


def degree_bound(f: BiPoly, g: BiPoly) -> int:
    """Degree bound B for res_y(f, g) as a polynomial in x."""
    return g.deg_y * f.deg_x + f.deg_y * g.deg_x


@dataclass(frozen=True)
class Branch:
    """One evaluation branch: a ring with B+1 unit-difference points in it.

    `modulus` is the integer factor of n this branch is responsible for.
    """

    ring: object
    modulus: int
    points: tuple


def _small_primes_upto(bound: int):
    sieve = bytearray([1]) * max(bound + 1, 2)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(2, bound + 1) if sieve[i]]


def interpolation_plan(ctx: Zmod, B: int) -> list[Branch]:
    """Branches covering Z/n with B+1 unit-difference evaluation points each.

    Primes p <= B dividing n are pulled out into Galois-ring branches with
    residue field of size p^k > B; the remaining cofactor m > 1 keeps the
    integer points 0..B (their differences are <= B, hence units mod m).
    """
    n = ctx.n
    branches = []
    m = n
    for p in _small_primes_upto(B):
        if m % p:
            continue
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        k = 1
        while p**k <= B:
            k += 1
        gr = GaloisRing(p, e, find_irreducible(p, k))
        points = []
        for lift in gr.residue_lifts():
            points.append(lift)
            if len(points) == B + 1:
                break
        branches.append(Branch(gr, p**e, tuple(points)))
    if m > 1:
        rm = Zmod(m)
        branches.append(Branch(rm, m, tuple(rm.from_int(i) for i in range(B + 1))))
    return branches


def _formal_res(S, pf: Poly, N: int, pg: Poly, M: int):
    """det of the (N+M) x (N+M) Sylvester matrix of pf, pg taken at the
    *formal* degrees N >= deg pf, M >= deg pg.

    Leading-coefficient drops change the determinant relative to res(pf, pg):
    a drop of d in the first argument contributes (-1)^(d*M) * lc(pg)^d, a
    drop of e in the second contributes lc(pf)^e, and a simultaneous drop
    zeroes the first column, hence the determinant.
    """
    if N == 0 and M == 0:
        return S.one
    if M == 0:
        return S.pow_elem(pg.coeff(0), N)
    if N == 0:
        return S.pow_elem(pf.coeff(0), M)
    n, m = pf.degree, pg.degree
    if n < N and m < M:
        return S.zero
    if n < N:
        if pf.is_zero():
            return S.zero
        d = N - n
        val = S.mul(S.pow_elem(pg.lc, d), res(pf, pg))
        return S.neg(val) if (d * M) % 2 else val
    if m < M:
        if pg.is_zero():
            return S.zero
        return S.mul(S.pow_elem(pf.lc, M - m), res(pf, pg))
    return res(pf, pg)


def _interpolate(S, points, values) -> Poly:
    """Unique polynomial of degree < len(points) through (points[i], values[i]).

    Requires pairwise unit differences between points (guaranteed by the
    interpolation plan)."""
    acc = Poly.zero(S)
    for i, (ai, ri) in enumerate(zip(points, values)):
        num = Poly.const(S, ri)
        denom = S.one
        for j, aj in enumerate(points):
            if j == i:
                continue
            num = num * Poly(S, [S.neg(aj), S.one])
            denom = S.mul(denom, S.sub(ai, aj))
        acc = acc + num.scale(S.inv(denom))
    return acc


def _restrict_galois(gr: GaloisRing, p: Poly) -> Poly:
    """Restrict a Galois-ring polynomial with base-ring values back to Z/p^e.

    The resultant of base-ring inputs lies in the base ring, so every higher
    t-coefficient must vanish; a nonzero one indicates an internal bug."""
    base = Zmod(gr.pe)
    out = []
    for c in p.coeffs:
        assert all(x == 0 for x in c[1:]), "resultant left the base ring"
        out.append(base.from_int(c[0]))
    return Poly(base, out)


def res_y(f: BiPoly, g: BiPoly) -> Poly:
    """Resultant of f and g with respect to y, as a polynomial in x."""
    R = f.ring
    if f.is_zero() or g.is_zero():
        return Poly.zero(R)
    N, M = f.deg_y, g.deg_y
    if N == 0 and M == 0:
        return Poly.const(R, R.one)
    B = degree_bound(f, g)
    pieces = []  # (Zmod ring, Poly) per branch
    for br in interpolation_plan(R, B):
        S = br.ring
        values = []
        for a in br.points:
            pf = f.eval_x(S, a)
            pg = g.eval_x(S, a)
            values.append(_formal_res(S, pf, N, pg, M))
        interp = _interpolate(S, br.points, values)
        if isinstance(S, GaloisRing):
            pieces.append((Zmod(br.modulus), _restrict_galois(S, interp)))
        else:
            pieces.append((S, interp))
    ring, acc = pieces[0]
    for ring2, piece in pieces[1:]:
        combined = Zmod(ring.n * ring2.n)
        acc = crt_poly(combined, ring, acc, ring2, piece)
        ring = combined
    assert ring.n == R.n
    return acc.map_ring(R)
