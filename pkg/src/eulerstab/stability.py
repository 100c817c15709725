"""Exact real-root analysis and Hurwitz stability decisions.

Every decision in this module is made in exact rational arithmetic:

* Sturm chains (content-normalized integer remainders) count distinct real
  roots in an interval by sign-variation differences.
* Yun's algorithm produces the squarefree decomposition, so repeated roots
  carry exact multiplicities.
* Real roots are isolated into disjoint open rational intervals or exact
  rational points.  Isolation starts from power-of-two magnitude brackets
  inside the Cauchy bound (root magnitudes of the polynomials handled here
  span many orders, so plain midpoint bisection from the bound would waste
  dozens of Sturm evaluations per root), then switches to ordinary bisection.
* Interlacing of two real-rooted polynomials is decided on the merged,
  exactly ordered root multisets; shared roots are legal because the
  alternation uses weak inequalities.
* Weak Hurwitz stability is decided by the even/odd interlacing criterion:
  p is weakly stable iff its even and odd parts are real-rooted with only
  nonpositive zeros and the odd part interlaces the even part (with a
  direct image argument handling the degenerate case where one part
  vanishes identically).
* Strict Hurwitz stability is decided by positivity of the Hurwitz
  determinants, computed fraction-free (Bareiss) after clearing
  denominators.

Division of labor: weak stability always goes through the even/odd
interlacing route (imaginary-axis zeros are handled exactly there); strict
stability always goes through the determinants.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .polynomial import (
    Polynomial,
    Scalar,
    _coerce,
    poly_gcd,
    primitive_integer_coeffs,
)

WEAKLY_STABLE = "weakly_stable"
STRICTLY_STABLE = "strictly_stable"
UNSTABLE = "unstable"

_X = Polynomial.x()
_ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# Sturm chains


@dataclasses.dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of a nonzero polynomial.

    polys holds p, p', then the negated Euclidean remainders, each remainder
    rescaled to primitive integer form (a positive rational multiple, which
    leaves all signs intact).  rows caches the primitive integer coefficient
    vectors used for fast exact sign evaluation.
    """

    polys: Tuple[Polynomial, ...]
    rows: Tuple[Tuple[int, ...], ...] = dataclasses.field(repr=False, compare=False)

    def variations(self, point: Scalar) -> int:
        """Sign variations of the chain at a rational point."""
        x = _coerce(point)
        num, den = x.numerator, x.denominator
        signs = []
        for row in self.rows:
            s = _sign_at(row, num, den)
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo: Scalar, hi: Scalar) -> int:
        """Distinct real roots of polys[0] in the open interval (lo, hi)."""
        lo, hi = _coerce(lo), _coerce(hi)
        if not lo < hi:
            raise ValueError("need lo < hi")
        p = self.polys[0]
        if p(lo) == 0 or p(hi) == 0:
            raise ValueError("interval endpoints must not be roots")
        return self.variations(lo) - self.variations(hi)


def _sign_at(coeffs: Sequence[int], num: int, den: int) -> int:
    """Sign of sum(c_i * num^i * den^(d-i)), i.e. of the polynomial at num/den."""
    acc = coeffs[-1]
    dp = 1
    for c in coeffs[-2::-1]:
        dp *= den
        acc = acc * num + c * dp
    return (acc > 0) - (acc < 0)


def sturm_chain(p: Polynomial) -> SturmChain:
    if p.is_zero:
        raise ValueError("Sturm chain requires a nonzero polynomial")
    polys = [p]
    if p.degree >= 1:
        polys.append(p.derivative())
        while True:
            r = -(polys[-2] % polys[-1])
            if r.is_zero:
                break
            polys.append(Polynomial(primitive_integer_coeffs(r)))
    rows = tuple(primitive_integer_coeffs(q) for q in polys)
    return SturmChain(tuple(polys), rows)


def count_real_roots(p: Polynomial, lo: Scalar, hi: Scalar) -> int:
    """Distinct real roots of p in (lo, hi); endpoints must not be roots."""
    return sturm_chain(p).count(lo, hi)


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """Strict bound: every root z of p satisfies |z| < the returned value."""
    if p.is_zero or p.degree < 1:
        raise ValueError("root bound requires a nonconstant polynomial")
    lead = abs(p.leading_coefficient)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


# ---------------------------------------------------------------------------
# squarefree structure


def squarefree_decompose(p: Polynomial) -> Tuple[Tuple[Polynomial, int], ...]:
    """Yun decomposition p = lc * prod(q_i^(m_i)) with q_i monic, squarefree,
    pairwise coprime.  Constants decompose into the empty product."""
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    f = p.monic()
    if f.degree == 0:
        return ()
    d = f.derivative()
    a = poly_gcd(f, d)
    b = f.exact_div(a)
    c = d.exact_div(a)
    w = c - b.derivative()
    out: List[Tuple[Polynomial, int]] = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, w)
        if g.degree > 0:
            out.append((g, i))
        b = b.exact_div(g)
        c = w.exact_div(g)
        w = c - b.derivative()
        i += 1
    return tuple(out)


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of p."""
    out = Polynomial.one()
    for q, _ in squarefree_decompose(p):
        out = out * q
    return out


# ---------------------------------------------------------------------------
# root isolation


@dataclasses.dataclass(frozen=True)
class IsolatedRoot:
    """One distinct real root: either an exact rational point (lo == hi) or
    an open interval (lo, hi) containing exactly one root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


@dataclasses.dataclass(frozen=True)
class RootIsolation:
    """Sorted, pairwise disjoint isolating locations with multiplicities."""

    roots: Tuple[IsolatedRoot, ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def _pow2_at_least(x: Fraction) -> Fraction:
    b = Fraction(1)
    while b < x:
        b *= 2
    return b


def _pow2_at_most(x: Fraction) -> Fraction:
    b = Fraction(1)
    if b <= x:
        while b * 2 <= x:
            b *= 2
        return b
    while b > x:
        b /= 2
    return b


def _isolate_squarefree(
    s: Polynomial, min_width: Optional[Fraction]
) -> Tuple[List[Fraction], List[Tuple[Fraction, Fraction]]]:
    """Isolate all real roots of a squarefree polynomial.

    Returns (points, intervals): exact rational roots discovered along the
    way, plus open intervals holding exactly one root each.  When min_width
    is given, intervals are refined at least that narrow (unless the root is
    found exactly first).
    """
    points: List[Fraction] = []
    intervals: List[Tuple[Fraction, Fraction]] = []
    if s(_ZERO) == 0:
        points.append(_ZERO)
        s = s.exact_div(_X)
    if s.degree < 1:
        return points, intervals

    chain = sturm_chain(s)
    vcache: Dict[Fraction, int] = {}

    def var(t: Fraction) -> int:
        v = vcache.get(t)
        if v is None:
            v = chain.variations(t)
            vcache[t] = v
        return v

    def cnt(a: Fraction, b: Fraction) -> int:
        return var(a) - var(b)

    hi = _pow2_at_least(cauchy_root_bound(s))
    lo = _pow2_at_most(1 / cauchy_root_bound(s.reciprocal(s.degree)))
    if lo >= hi:
        lo = hi / 2
    mags = [lo]
    while mags[-1] < hi:
        mags.append(mags[-1] * 2)

    def hug(t: Fraction, start: Fraction) -> Fraction:
        # Shrink a symmetric gap around the known root t until it holds only t.
        d = start
        while s(t - d) == 0 or s(t + d) == 0 or cnt(t - d, t + d) != 1:
            d /= 2
        return d

    def refine(a: Fraction, b: Fraction) -> None:
        # exactly one root in (a, b)
        if min_width is not None:
            while b - a > min_width:
                m = (a + b) / 2
                if s(m) == 0:
                    points.append(m)
                    return
                if cnt(a, m) == 1:
                    b = m
                else:
                    a = m
        intervals.append((a, b))

    def bisect(a: Fraction, b: Fraction, c: int) -> None:
        if c == 1:
            refine(a, b)
            return
        m = (a + b) / 2
        if s(m) == 0:
            points.append(m)
            d = hug(m, (b - a) / 4)
            cl = cnt(a, m - d)
            if cl:
                bisect(a, m - d, cl)
            cr = cnt(m + d, b)
            if cr:
                bisect(m + d, b, cr)
        else:
            cl = cnt(a, m)
            if cl:
                bisect(a, m, cl)
            if c - cl:
                bisect(m, b, c - cl)

    def split(bounds: List[Fraction], i: int, j: int) -> None:
        # Recursive subdivision over the precomputed magnitude brackets;
        # evaluates the chain only where roots actually are.
        c = cnt(bounds[i], bounds[j])
        if c == 0:
            return
        if j - i == 1:
            bisect(bounds[i], bounds[j], c)
            return
        k = (i + j) // 2
        split(bounds, i, k)
        split(bounds, k, j)

    for side in (-1, 1):
        bounds = sorted(side * m for m in mags)
        # Boundary points that are themselves roots become exact points and
        # their hug gap becomes a dead zone; the remaining spans are chained
        # into contiguous runs so the lazy subdivision still applies.
        runs: List[List[Fraction]] = []

        def add_span(a: Fraction, b: Fraction) -> None:
            if runs and runs[-1][-1] == a:
                runs[-1].append(b)
            else:
                runs.append([a, b])

        prev: Optional[Fraction] = None
        for t in bounds:
            if s(t) == 0:
                points.append(t)
                d = hug(t, abs(t) / 4)
                if prev is not None and prev < t - d:
                    add_span(prev, t - d)
                prev = t + d
            else:
                if prev is not None:
                    add_span(prev, t)
                prev = t
        for run in runs:
            split(run, 0, len(run) - 1)
    return points, intervals


def isolate_real_roots(
    p: Polynomial, min_width: Optional[Fraction] = Fraction(1, 256)
) -> RootIsolation:
    """Isolate the real roots of p with multiplicities.

    min_width=None skips width refinement and stops as soon as the
    locations are pairwise isolating (cheapest option for ordering work).
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("root isolation requires a nonconstant polynomial")
    factors = squarefree_decompose(p)
    s = Polynomial.one()
    for q, _ in factors:
        s = s * q
    points, intervals = _isolate_squarefree(s, min_width)
    fchains = [(q, m, sturm_chain(q) if q.degree >= 1 else None) for q, m in factors]

    roots: List[IsolatedRoot] = []
    for r in points:
        mult = sum(m for q, m in factors if q(r) == 0)
        roots.append(IsolatedRoot(r, r, mult))
    for a, b in intervals:
        mult = 0
        for q, m, ch in fchains:
            if ch is not None and ch.count(a, b) == 1:
                mult = m
                break
        if mult == 0:
            raise RuntimeError("internal error: isolating interval matches no factor")
        roots.append(IsolatedRoot(a, b, mult))
    roots.sort(key=lambda r: (r.lo, r.hi))
    return RootIsolation(tuple(roots))


def approximate_real_roots(p: Polynomial, digits: int = 20) -> List[Tuple[Fraction, int]]:
    """(midpoint, multiplicity) pairs for the real roots of p, with each
    isolation interval refined below the root magnitude times 10^-(digits+1),
    so the midpoint carries `digits` significant decimal digits.

    The midpoints are approximations; every decision elsewhere stays exact.
    """
    iso = isolate_real_roots(p, min_width=None)
    if not iso.roots:
        return []
    s = squarefree_part(p)
    chain = sturm_chain(s)
    rel = Fraction(1, 10 ** (digits + 1))
    out: List[Tuple[Fraction, int]] = []
    for root in iso:
        if root.is_point:
            out.append((root.lo, root.multiplicity))
            continue
        a, b = root.lo, root.hi
        found = None
        while b - a > max(abs(a), abs(b)) * rel:
            m = (a + b) / 2
            if s(m) == 0:
                found = m
                break
            if chain.count(a, m) == 1:
                b = m
            else:
                a = m
        out.append((found if found is not None else (a + b) / 2, root.multiplicity))
    return out


def is_real_rooted(p: Polynomial) -> bool:
    """True iff every complex root of p is real.

    Checked factor by factor: a squarefree q is real-rooted iff its Sturm
    count inside the Cauchy bound equals its degree.
    """
    if p.is_zero:
        raise ValueError("real-rootedness is undefined for the zero polynomial")
    for q, _ in squarefree_decompose(p):
        if q.degree < 1:
            continue
        bound = cauchy_root_bound(q)
        if sturm_chain(q).count(-bound, bound) != q.degree:
            return False
    return True


# ---------------------------------------------------------------------------
# joint root ordering and interlacing


@dataclasses.dataclass(frozen=True)
class _Location:
    lo: Fraction
    hi: Fraction
    mult_f: int
    mult_g: int


def _distinct_location_table(f: Polynomial, g: Polynomial) -> List[_Location]:
    """Distinct real roots of f and g, exactly ordered, with multiplicities
    in each polynomial.  The union of distinct roots is isolated once via
    the squarefree part of f*g, so coincident roots land in one location."""
    ff = squarefree_decompose(f)
    gg = squarefree_decompose(g)
    u = Polynomial.one()
    for q, _ in ff:
        u = u * q
    v = Polynomial.one()
    for q, _ in gg:
        v = v * q
    w = (u * v).exact_div(poly_gcd(u, v))
    if w.degree < 1:
        return []
    points, intervals = _isolate_squarefree(w, None)
    fch = [(q, m, sturm_chain(q)) for q, m in ff if q.degree >= 1]
    gch = [(q, m, sturm_chain(q)) for q, m in gg if q.degree >= 1]

    locs: List[_Location] = []
    for r in points:
        mf = sum(m for q, m in ff if q(r) == 0)
        mg = sum(m for q, m in gg if q(r) == 0)
        locs.append(_Location(r, r, mf, mg))
    for a, b in intervals:
        mf = sum(m for q, m, ch in fch if ch.count(a, b) == 1)
        mg = sum(m for q, m, ch in gch if ch.count(a, b) == 1)
        locs.append(_Location(a, b, mf, mg))
    locs.sort(key=lambda l: (l.lo, l.hi))
    return locs


def _alternation_holds(locs: Sequence[_Location]) -> bool:
    """Weak alternation r_1 >= s_1 >= r_2 >= s_2 >= ... where the r_i are
    f's roots and the s_i are g's roots, both descending with multiplicity."""
    rranks: List[int] = []
    sranks: List[int] = []
    for rank, loc in enumerate(reversed(locs)):
        rranks.extend([rank] * loc.mult_f)
        sranks.extend([rank] * loc.mult_g)
    for i, s in enumerate(sranks):
        if rranks[i] > s:
            return False
        if i + 1 < len(rranks) and s > rranks[i + 1]:
            return False
    return True


def interlaces(g: Polynomial, f: Polynomial) -> bool:
    """True iff the roots of g weakly interlace the roots of f
    (... <= s_2 <= r_2 <= s_1 <= r_1, multiplicities included, shared roots
    allowed).

    Preconditions, enforced: both real-rooted with positive leading
    coefficients and deg(g) in {deg(f) - 1, deg(f)}.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("interlacing is undefined for the zero polynomial")
    if f.leading_coefficient <= 0 or g.leading_coefficient <= 0:
        raise ValueError("interlacing requires positive leading coefficients")
    if g.degree not in (f.degree - 1, f.degree):
        raise ValueError("degree of g must be deg(f) or deg(f) - 1")
    if not is_real_rooted(f) or not is_real_rooted(g):
        raise ValueError("interlacing requires real-rooted polynomials")
    return _alternation_holds(_distinct_location_table(f, g))


# ---------------------------------------------------------------------------
# stability certificates


@dataclasses.dataclass(frozen=True)
class HermiteBiehlerEvidence:
    """Witness data for a weak-stability verdict: real-root isolations of
    the even and odd parts and the interlacing outcome (None when a
    degenerate split made it inapplicable)."""

    even_part_roots: Optional[RootIsolation]
    odd_part_roots: Optional[RootIsolation]
    interlacing: Optional[bool]
    detail: str = ""


@dataclasses.dataclass(frozen=True)
class HurwitzEvidence:
    determinants: Tuple[Fraction, ...]


@dataclasses.dataclass(frozen=True)
class StabilityCertificate:
    verdict: str
    evidence: Union[HermiteBiehlerEvidence, HurwitzEvidence]


def _isolation_or_empty(p: Polynomial, min_width: Optional[Fraction]) -> RootIsolation:
    if p.is_zero or p.degree < 1:
        return RootIsolation(())
    return isolate_real_roots(p, min_width)


def _isolation_from_locations(locs: Sequence[_Location], use_f: bool) -> RootIsolation:
    roots = tuple(
        IsolatedRoot(l.lo, l.hi, l.mult_f if use_f else l.mult_g)
        for l in locs
        if (l.mult_f if use_f else l.mult_g) > 0
    )
    return RootIsolation(roots)


def hermite_biehler_weakly_stable(p: Polynomial) -> StabilityCertificate:
    """Decide weak Hurwitz stability (no zeros with positive real part).

    Writes p(x) = E(x^2) + x*O(x^2) and checks that E and O are real-rooted
    with only nonpositive zeros and that O interlaces E.  When one part
    vanishes identically, p is a dilated copy of the other part composed
    with x^2, so the verdict reduces to the nonpositive-real-roots condition
    on the surviving part alone.
    """
    if p.is_zero:
        ev = HermiteBiehlerEvidence(None, None, None, "zero polynomial vanishes identically")
        return StabilityCertificate(UNSTABLE, ev)
    if p.leading_coefficient < 0:
        p = -p
    even, odd = p.even_odd_split()

    if even.is_zero or odd.is_zero:
        part = even if odd.is_zero else odd
        iso = _isolation_or_empty(part, None)
        ok = iso.total_multiplicity == (part.degree if part.degree >= 1 else 0) and all(
            r.hi <= 0 for r in iso
        )
        if odd.is_zero:
            ev = HermiteBiehlerEvidence(iso, None, None, "degenerate split: odd part vanishes")
        else:
            ev = HermiteBiehlerEvidence(None, iso, None, "degenerate split: even part vanishes")
        return StabilityCertificate(WEAKLY_STABLE if ok else UNSTABLE, ev)

    locs = _distinct_location_table(even, odd)
    even_iso = _isolation_from_locations(locs, use_f=True)
    odd_iso = _isolation_from_locations(locs, use_f=False)

    problems = []
    if even.leading_coefficient <= 0 or odd.leading_coefficient <= 0:
        problems.append("an even/odd part has a nonpositive leading coefficient")
    if even_iso.total_multiplicity != even.degree:
        problems.append("even part is not real-rooted")
    if odd_iso.total_multiplicity != odd.degree:
        problems.append("odd part is not real-rooted")
    if any(r.hi > 0 for r in even_iso) or any(r.hi > 0 for r in odd_iso):
        problems.append("a part has a positive real root")
    if odd.degree not in (even.degree - 1, even.degree):
        problems.append("even/odd degrees are incompatible with interlacing")

    interlacing: Optional[bool] = None
    if not problems:
        interlacing = _alternation_holds(locs)
        if not interlacing:
            problems.append("odd part does not interlace the even part")

    detail = "; ".join(problems)
    verdict = WEAKLY_STABLE if not problems else UNSTABLE
    ev = HermiteBiehlerEvidence(even_iso, odd_iso, interlacing, detail)
    return StabilityCertificate(verdict, ev)


# ---------------------------------------------------------------------------
# Hurwitz determinants


def _bareiss_det(rows: List[List[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - mik * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def hurwitz_determinants(p: Polynomial) -> Tuple[Fraction, ...]:
    """The leading principal minors of the Hurwitz matrix of p.

    With p(z) = sum(a_{n-k} z^k) (a_0 the leading coefficient), the k-th
    matrix has entry (i, j) = a_{2j-i} (1-indexed, a_m = 0 outside 0..n).
    Determinants are computed fraction-free over the integers after
    clearing denominators by D, then rescaled by D^-k.
    """
    if p.is_zero:
        raise ValueError("Hurwitz determinants require a nonzero polynomial")
    n = p.degree
    desc = list(reversed(p.coeffs))  # a_0 .. a_n
    den = 1
    for c in desc:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    b = [int(c * den) for c in desc]

    def entry(i: int, j: int) -> int:
        m = 2 * j - i
        return b[m] if 0 <= m <= n else 0

    dets = []
    for k in range(1, n + 1):
        rows = [[entry(i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]
        dets.append(Fraction(_bareiss_det(rows), den**k))
    return tuple(dets)



def is_strictly_hurwitz_stable(p: Polynomial) -> StabilityCertificate:
    """Routh-Hurwitz criterion: strictly stable iff every Hurwitz determinant
    is positive.  Requires a positive leading coefficient (normalize first).

    An "unstable" verdict here means only that strict stability fails; the
    polynomial may still be weakly stable (zeros on the imaginary axis).
    """
    if p.is_zero:
        raise ValueError("stability is undefined for the zero polynomial")
    if p.leading_coefficient <= 0:
        raise ValueError("the leading coefficient must be positive; normalize the sign first")
    dets = hurwitz_determinants(p)
    verdict = STRICTLY_STABLE if all(d > 0 for d in dets) else UNSTABLE
    return StabilityCertificate(verdict, HurwitzEvidence(dets))
