"""Dense integer polynomials, exact rational evaluation and real root isolation.

Every sign decision is made with exact integer arithmetic.  Root isolation
uses Sturm sequences on the squarefree part, so an interval handed back as a
:class:`RootInterval` provably contains exactly one real root.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

NUDGE = Fraction(1, 2**40)
FLOAT_WIDTH = Fraction(1, 2**60)


class PolyError(ValueError):
    pass


class IntPoly:
    """Immutable polynomial with integer coefficients, ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def t(cls) -> "IntPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def falling(cls, n: int) -> "IntPoly":
        """t(t-1)...(t-n+1)."""
        return cls.from_roots(range(n))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse strings like ``"t^3-2*t^2+4*t-4"`` (variable ``t`` or ``x``)."""
        s = text.replace(" ", "").replace("**", "^").replace("x", "t")
        if not s:
            raise PolyError("empty polynomial string")
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"[+-][^+-]+", s)
        if "".join(terms) != s:
            raise PolyError(f"cannot parse polynomial {text!r}")
        out: dict[int, int] = {}
        for term in terms:
            m = re.fullmatch(r"([+-])(\d+)?(?:\*?(t)(?:\^(\d+))?)?", term)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise PolyError(f"bad term {term!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            deg = 0 if m.group(3) is None else int(m.group(4) or 1)
            out[deg] = out.get(deg, 0) + sign * coef
        top = max(out)
        return cls(out.get(i, 0) for i in range(top + 1))

    # -- structure -----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if a == 1 else f"{a}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        return s + "".join(f"{sg}{b}" for sg, b in parts[1:])

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _lift(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod_exact(self, d: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division over the integers; raises if a quotient coefficient is not integral."""
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        q = [0] * max(len(r) - len(d.coeffs) + 1, 0)
        lc = d.lc
        for k in range(len(q) - 1, -1, -1):
            c, rem = divmod(r[k + d.degree], lc)
            if rem:
                raise PolyError("quotient is not an integer polynomial")
            q[k] = c
            if c:
                for j, y in enumerate(d.coeffs):
                    r[k + j] -= c * y
        return IntPoly(q), IntPoly(r[: d.degree] if d.degree > 0 else [])

    def exact_div(self, d: "IntPoly") -> "IntPoly":
        q, r = self.divmod_exact(d)
        if r:
            raise PolyError(f"{d} does not divide {self}")
        return q

    def __floordiv__(self, d: "IntPoly") -> "IntPoly":
        return self.exact_div(d)

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    # -- evaluation ----------------------------------------------------
    def eval(self, t: Number) -> Fraction:
        """Exact value at a rational point (Horner on the homogenised numerator)."""
        t = Fraction(t)
        a, b = t.numerator, t.denominator
        if not self.coeffs:
            return Fraction(0)
        acc = 0
        bp = 1
        for c in reversed(self.coeffs):
            acc = acc * a + c * bp
            bp *= b
        # acc = sum c_i a^i b^(deg - i); bp = b^(deg + 1)
        return Fraction(acc, bp // b)

    __call__ = eval

    def sign_at(self, t: Number) -> int:
        t = Fraction(t)
        a, b = t.numerator, t.denominator
        acc = 0
        bp = 1
        for c in reversed(self.coeffs):
            acc = acc * a + c * bp
            bp *= b
        return (acc > 0) - (acc < 0)


def _lift(x: "IntPoly | int") -> IntPoly:
    return x if isinstance(x, IntPoly) else IntPoly([x])


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of ``|lc(b)|^k * a`` by ``b``: a positive multiple of the true remainder."""
    r = list(a.coeffs)
    db, lc = b.degree, b.lc
    slc = 1 if lc > 0 else -1
    while len(r) - 1 >= db and any(r):
        k = len(r) - 1
        c = r[k]
        # r <- |lc| * r - sign(lc) * c * t^(k-db) * b
        r = [abs(lc) * x for x in r]
        for j, y in enumerate(b.coeffs):
            r[k - db + j] -= slc * c * y
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(r)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor up to units, primitive with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    if not a:
        return b
    if not b:
        return a
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, r.primitive() if r else r
    return a.primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    if not p:
        raise PolyError("zero polynomial")
    if p.degree <= 0:
        return p.primitive()
    return p.primitive().exact_div(poly_gcd(p, p.derivative()))


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of ``p`` with each member rescaled by a positive constant."""
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        r = _prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(IntPoly([-c // r.content() for c in r.coeffs]))
    return seq


def _variations(seq: Sequence[IntPoly], t: Fraction) -> int:
    signs = [s for s in (p.sign_at(t) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: IntPoly, lo: Number, hi: Number, seq: Sequence[IntPoly] | None = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not p:
        raise PolyError("zero polynomial")
    if lo >= hi:
        raise PolyError("need lo < hi")
    if p.sign_at(lo) == 0 or p.sign_at(hi) == 0:
        raise PolyError("endpoint is a root; perturb interval")
    if seq is None:
        seq = sturm_sequence(p)
    return _variations(seq, lo) - _variations(seq, hi)


@dataclass(frozen=True)
class RootInterval:
    """Rational interval certified to hold exactly one simple root of ``poly``."""

    poly: IntPoly
    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None
    simple: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise PolyError("root interval needs lo < hi")
        slo, shi = self.poly.sign_at(self.lo), self.poly.sign_at(self.hi)
        if slo == 0 or shi == 0:
            raise PolyError("endpoint is a root; perturb interval")
        if slo == shi:
            raise PolyError("no sign change across root interval")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        """Nearest double to the root (refines a copy when the interval is wide)."""
        if self.exact is not None:
            return float(self.exact)
        r = self if self.width < FLOAT_WIDTH else refine(self, FLOAT_WIDTH)
        return float(r.midpoint)

    def contains(self, x: Number) -> bool:
        return self.lo < Fraction(x) < self.hi

    def as_json(self) -> dict:
        d = {"lo": str(self.lo), "hi": str(self.hi), "approx": f"{float(self):.12f}"}
        if self.exact is not None:
            d["exact"] = str(self.exact)
        return d


def _split_point(p: IntPoly, lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    step = (hi - lo) * NUDGE
    k = 0
    s = mid
    while p.sign_at(s) == 0:
        k += 1
        s = mid + (k // 2 + 1) * step * (1 if k % 2 else -1)
    return s


def _around_exact(p: IntPoly, r: Fraction, lo: Fraction, hi: Fraction) -> RootInterval:
    half = min(r - lo, hi - r) / 2
    while True:
        a, b = r - half, r + half
        if p.sign_at(a) and p.sign_at(b) and p.sign_at(a) != p.sign_at(b):
            return RootInterval(p, a, b, exact=r)
        half /= 2


def _deflate_rational(p: IntPoly, r: Fraction) -> IntPoly:
    return p.exact_div(IntPoly([-r.numerator, r.denominator]))


def isolate_roots(p: IntPoly, lo: Number, hi: Number) -> list[RootInterval]:
    """Disjoint isolating intervals for every real root of ``p`` in the open interval (lo, hi).

    The intervals refer to the squarefree part of ``p`` (with any root sitting
    exactly on ``lo`` or ``hi`` divided out), so each one brackets a sign change.
    """
    if not p:
        raise PolyError("zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise PolyError("need lo < hi")
    sq = squarefree_part(p)
    if sq.degree <= 0:
        return []
    work = sq
    for end in (lo, hi):
        if work.sign_at(end) == 0:
            work = _deflate_rational(work, end)
    if work.degree <= 0:
        return []
    seq = sturm_sequence(work)
    out: list[RootInterval] = []
    stack = [(lo, hi, _variations(seq, lo) - _variations(seq, hi))]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append(RootInterval(work, a, b))
            continue
        s = _split_point(work, a, b)
        vs = _variations(seq, s)
        stack.append((a, s, _variations(seq, a) - vs))
        stack.append((s, b, vs - _variations(seq, b)))
    out.sort(key=lambda r: r.lo)
    return out


def refine(r: RootInterval, width: Number) -> RootInterval:
    """Bisect ``r`` until ``hi - lo < width``."""
    width = Fraction(width)
    if width <= 0:
        raise PolyError("width must be positive")
    p, lo, hi = r.poly, r.lo, r.hi
    if r.exact is not None:
        half = width / 4
        while p.sign_at(r.exact - half) == 0 or p.sign_at(r.exact + half) == 0:
            half /= 2
        return RootInterval(p, r.exact - half, r.exact + half, exact=r.exact)
    slo = p.sign_at(lo)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return refine(_around_exact(p, mid, lo, hi), width)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return RootInterval(p, lo, hi)


def compare_roots(a: RootInterval, b: RootInterval) -> int:
    """-1, 0 or 1 as the root in ``a`` is below, equal to or above the root in ``b``."""
    if a.exact is not None and b.exact is not None:
        return (a.exact > b.exact) - (a.exact < b.exact)
    g = poly_gcd(a.poly, b.poly)
    w = max(a.width, b.width)
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        if g.degree > 0:
            # g divides both polys, so it is non-zero at every endpoint here
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            if sturm_count(g, lo, hi) == 1:
                return 0
        w /= 4
        a, b = refine(a, w), refine(b, w)


def poly_from_json(obj) -> IntPoly:
    if isinstance(obj, str):
        return IntPoly.parse(obj)
    return IntPoly(int(c) for c in obj)
