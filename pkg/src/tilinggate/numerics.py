"""Exact arithmetic over Q(sqrt 3) and symbolic angle bookkeeping.

Every coordinate, rotation, and trigonometric value in this package is a
number of the form p/r + (q/r)*sqrt(3) with integer p, q, r.  All sign and
equality decisions are made on that representation; floating point appears
only in clearly labeled diagnostic conversions (``float(x)``), never in a
feasibility decision.

Angles are tracked as integer pairs (m, n) meaning m*alpha + n*beta, where
alpha and beta are the two acute angles of the tile (alpha opposite side a,
beta opposite side b).  Since alpha + beta = pi/3, the straight angle is
(3, 3), the 120-degree tile angle is (2, 2), and a full turn is (6, 6).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, sqrt
from typing import Union

Rational = Fraction

_NumberLike = Union[int, Fraction, "Q3Scalar"]


class Q3Scalar:
    """Exact value (p + q*sqrt(3)) / r, kept with gcd(p, q, r) = 1 and r > 0."""

    __slots__ = ("p", "q", "r")

    def __init__(self, rat: int | Fraction = 0, coef3: int | Fraction = 0):
        if isinstance(rat, Fraction) or isinstance(coef3, Fraction):
            rat = Fraction(rat)
            coef3 = Fraction(coef3)
            r = rat.denominator * coef3.denominator // gcd(
                rat.denominator, coef3.denominator
            )
            p = rat.numerator * (r // rat.denominator)
            q = coef3.numerator * (r // coef3.denominator)
        else:
            p, q, r = rat, coef3, 1
        self.p, self.q, self.r = _normalize(p, q, r)

    @classmethod
    def _raw(cls, p: int, q: int, r: int) -> "Q3Scalar":
        self = object.__new__(cls)
        self.p, self.q, self.r = _normalize(p, q, r)
        return self

    @property
    def rat(self) -> Fraction:
        return Fraction(self.p, self.r)

    @property
    def coef3(self) -> Fraction:
        return Fraction(self.q, self.r)

    def __add__(self, other: _NumberLike) -> "Q3Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Q3Scalar._raw(
            self.p * o.r + o.p * self.r, self.q * o.r + o.q * self.r, self.r * o.r
        )

    __radd__ = __add__

    def __sub__(self, other: _NumberLike) -> "Q3Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Q3Scalar._raw(
            self.p * o.r - o.p * self.r, self.q * o.r - o.q * self.r, self.r * o.r
        )

    def __rsub__(self, other: _NumberLike) -> "Q3Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "Q3Scalar":
        return Q3Scalar._raw(-self.p, -self.q, self.r)

    def __mul__(self, other: _NumberLike) -> "Q3Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Q3Scalar._raw(
            self.p * o.p + 3 * self.q * o.q,
            self.p * o.q + self.q * o.p,
            self.r * o.r,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: _NumberLike) -> "Q3Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        # 1 / ((p + q sqrt3)/r) = r (p - q sqrt3) / (p^2 - 3 q^2)
        norm = o.p * o.p - 3 * o.q * o.q
        if norm == 0:
            raise ZeroDivisionError("division by zero Q3Scalar")
        inv = Q3Scalar._raw(o.r * o.p, -o.r * o.q, norm)
        return self * inv

    def __rtruediv__(self, other: _NumberLike) -> "Q3Scalar":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other: object) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q and self.r == o.r

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.r))

    def sign(self) -> int:
        """Exact sign of p + q*sqrt(3); compares p^2 against 3 q^2."""
        p, q = self.p, self.q
        if q == 0:
            return 0 if p == 0 else (1 if p > 0 else -1)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: |p| versus sqrt(3)|q|
        cmp = p * p - 3 * q * q
        if cmp == 0:
            raise ArithmeticError("sqrt(3) is irrational")  # unreachable
        if p > 0:
            return 1 if cmp > 0 else -1
        return -1 if cmp > 0 else 1

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __lt__(self, other: _NumberLike) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: _NumberLike) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: _NumberLike) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: _NumberLike) -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        # diagnostics only (SVG layout, cross checks)
        return (self.p + self.q * sqrt(3.0)) / self.r

    def key(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    def __repr__(self) -> str:
        if self.q == 0:
            return f"Q3({Fraction(self.p, self.r)})"
        return f"Q3({Fraction(self.p, self.r)} + {Fraction(self.q, self.r)}*sqrt3)"


def _normalize(p: int, q: int, r: int) -> tuple[int, int, int]:
    if r == 0:
        raise ZeroDivisionError("zero denominator")
    if r < 0:
        p, q, r = -p, -q, -r
    g = gcd(gcd(abs(p), abs(q)), r)
    if g > 1:
        p //= g
        q //= g
        r //= g
    return p, q, r


def _coerce(x: object) -> Q3Scalar | None:
    if isinstance(x, Q3Scalar):
        return x
    if isinstance(x, int):
        return Q3Scalar._raw(x, 0, 1)
    if isinstance(x, Fraction):
        return Q3Scalar._raw(x.numerator, 0, x.denominator)
    return None


Q3_ZERO = Q3Scalar(0)
Q3_ONE = Q3Scalar(1)
SQRT3 = Q3Scalar(0, 1)


def q3_sign(x: Q3Scalar) -> int:
    """Exact sign (-1, 0, +1) of a Q3Scalar, decided with unbounded integers."""
    return x.sign()


@dataclass(frozen=True)
class Point2:
    """Point with exact Q(sqrt 3) coordinates, in tile side-length units."""

    x: Q3Scalar
    y: Q3Scalar

    def key(self):
        return (self.x.key(), self.y.key())

    def __repr__(self) -> str:
        return f"({float(self.x):.4f}, {float(self.y):.4f})"


def point(x: _NumberLike, y: _NumberLike) -> Point2:
    xs = _coerce(x)
    ys = _coerce(y)
    assert xs is not None and ys is not None
    return Point2(xs, ys)


class NegativeAngleError(ValueError):
    """Raised when an angle subtraction leaves a negative component."""


@dataclass(frozen=True, order=True)
class AngleMeasure:
    """The angle m*alpha + n*beta.  pi = (3,3), gamma = (2,2), pi/3 = (1,1)."""

    m: int
    n: int

    def __add__(self, other: "AngleMeasure") -> "AngleMeasure":
        return AngleMeasure(self.m + other.m, self.n + other.n)

    def __sub__(self, other: "AngleMeasure") -> "AngleMeasure":
        return AngleMeasure(self.m - other.m, self.n - other.n)

    def is_nonnegative(self) -> bool:
        return self.m >= 0 and self.n >= 0

    def covers(self, other: "AngleMeasure") -> bool:
        """Componentwise >=, the sound fillability test for frontier corners."""
        return self.m >= other.m and self.n >= other.n


ALPHA = AngleMeasure(1, 0)
BETA = AngleMeasure(0, 1)
GAMMA = AngleMeasure(2, 2)
STRAIGHT = AngleMeasure(3, 3)
FULL_TURN = AngleMeasure(6, 6)
TILE_ANGLES = (ALPHA, BETA, GAMMA)


def angle_add(x: AngleMeasure, y: AngleMeasure) -> AngleMeasure:
    return x + y


def angle_sub(x: AngleMeasure, y: AngleMeasure, strict: bool = False) -> AngleMeasure:
    """Componentwise difference; with strict=True a negative component raises.

    Frontier corners are sums of tile angles, so a subtraction that goes
    negative means the corner cannot be completed ("negative-angle").
    """
    d = x - y
    if strict and not d.is_nonnegative():
        raise NegativeAngleError(f"negative-angle: {x} - {y}")
    return d


@dataclass(frozen=True)
class Rotation:
    """Exact plane isometry fixing the origin: rotation, optionally mirrored.

    Application order for mirrored=True is reflect-across-x-axis first, then
    rotate.  c*c + s*s = 1 exactly for every rotation built by angle_trig.
    """

    c: Q3Scalar
    s: Q3Scalar
    mirrored: bool = False

    def apply(self, x: Q3Scalar, y: Q3Scalar) -> tuple[Q3Scalar, Q3Scalar]:
        if self.mirrored:
            y = -y
        return (self.c * x - self.s * y, self.s * x + self.c * y)

    def compose(self, other: "Rotation") -> "Rotation":
        """self after other (matrix product self @ other)."""
        if self.mirrored:
            # z1 * conj(z2), flip mirror flag of other
            c = self.c * other.c + self.s * other.s
            s = self.s * other.c - self.c * other.s
        else:
            c = self.c * other.c - self.s * other.s
            s = self.s * other.c + self.c * other.s
        return Rotation(c, s, self.mirrored != other.mirrored)

    def inverse(self) -> "Rotation":
        if self.mirrored:
            return self
        return Rotation(self.c, -self.s, False)

    def key(self):
        return (self.c.key(), self.s.key(), self.mirrored)

    def unit_norm_defect(self) -> Q3Scalar:
        return self.c * self.c + self.s * self.s - 1


IDENTITY = Rotation(Q3_ONE, Q3_ZERO)


def base_rotations(a: int, b: int, c: int) -> tuple[Rotation, Rotation]:
    """Exact (cos, sin) of alpha and beta for the tile (a, b, c).

    cos alpha = (a+2b)/(2c), sin alpha = (a/(2c)) sqrt3, and the same with
    a and b exchanged for beta.
    """
    rot_a = Rotation(Q3Scalar._raw(a + 2 * b, 0, 2 * c), Q3Scalar._raw(0, a, 2 * c))
    rot_b = Rotation(Q3Scalar._raw(2 * a + b, 0, 2 * c), Q3Scalar._raw(0, b, 2 * c))
    return rot_a, rot_b


def _power(rot: Rotation, n: int) -> Rotation:
    if n < 0:
        return _power(rot.inverse(), -n)
    acc = IDENTITY
    base = rot
    while n:
        if n & 1:
            acc = acc.compose(base)
        base = base.compose(base)
        n >>= 1
    return acc


def angle_trig(am: AngleMeasure, t) -> Rotation:
    """Exact (cos, sin) of m*alpha + n*beta for tile t, via angle addition."""
    rot_a, rot_b = base_rotations(t.a, t.b, t.c)
    return _power(rot_a, am.m).compose(_power(rot_b, am.n))


def _sector(c: Q3Scalar, s: Q3Scalar) -> int:
    """Octant-style sector of the canonical angle in [0, 2pi).

    0: angle 0; 1: (0,pi/2); 2: pi/2; 3: (pi/2,pi); 4: pi; 5: (pi,3pi/2);
    6: 3pi/2; 7: (3pi/2,2pi).
    """
    ss = s.sign()
    cs = c.sign()
    if ss > 0:
        return 1 if cs > 0 else (2 if cs == 0 else 3)
    if ss < 0:
        return 5 if cs < 0 else (6 if cs == 0 else 7)
    return 0 if cs > 0 else 4


class TrigContext:
    """Per-tile exact trigonometry: rotations, true angle order, measure lookup.

    The measure table maps the exact (cos, sin) of every nonnegative (m, n)
    with value in (0, 2pi) back to its AngleMeasure.  Distinct such (m, n)
    have distinct rotations (two measures share a rotation only when they
    differ by a multiple of (6, 6), i.e. by full turns), so the lookup is
    well defined.
    """

    def __init__(self, t):
        self.triple = t
        self.rot_alpha, self.rot_beta = base_rotations(t.a, t.b, t.c)
        self._rot_cache: dict[tuple[int, int], Rotation] = {(0, 0): IDENTITY}
        self._sign_cache: dict[tuple[int, int], int] = {}
        self._table: dict[tuple, AngleMeasure] | None = None

    def rotation(self, am: AngleMeasure) -> Rotation:
        key = (am.m, am.n)
        rot = self._rot_cache.get(key)
        if rot is None:
            rot = _power(self.rot_alpha, am.m).compose(_power(self.rot_beta, am.n))
            self._rot_cache[key] = rot
        return rot

    def true_sign(self, m: int, n: int) -> int:
        """Exact sign of the real number m*alpha + n*beta (not mod 2pi).

        Walks the rotations one step at a time; each step is smaller than
        pi/2, so crossings of angle 0 are detected exactly from the sector
        classification, giving an exact winding count.
        """
        key = (m, n)
        cached = self._sign_cache.get(key)
        if cached is not None:
            return cached
        steps: list[tuple[Rotation, bool]] = []
        if m >= 0:
            steps += [(self.rot_alpha, True)] * m
        else:
            steps += [(self.rot_alpha.inverse(), False)] * (-m)
        if n >= 0:
            steps += [(self.rot_beta, True)] * n
        else:
            steps += [(self.rot_beta.inverse(), False)] * (-n)
        cur = IDENTITY
        sector = 0
        winding = 0
        for rot, positive in steps:
            cur = rot.compose(cur)
            new_sector = _sector(cur.c, cur.s)
            if positive and sector == 7 and new_sector in (0, 1):
                winding += 1
            elif not positive and sector in (0, 1) and new_sector == 7:
                winding -= 1
            sector = new_sector
        if winding > 0:
            result = 1
        elif winding < 0:
            result = -1
        else:
            result = 0 if sector == 0 else 1
        self._sign_cache[key] = result
        return result

    def compare_measures(self, x: AngleMeasure, y: AngleMeasure) -> int:
        """Order by true angle value, exactly."""
        return self.true_sign(x.m - y.m, x.n - y.n)

    def less_than_straight(self, am: AngleMeasure) -> bool:
        return self.true_sign(am.m - 3, am.n - 3) < 0

    def _build_table(self) -> dict[tuple, AngleMeasure]:
        table: dict[tuple, AngleMeasure] = {}
        m = 0
        while self.true_sign(m - 6, -6) < 0:  # m*alpha < 2pi
            n = 1 if m == 0 else 0
            while self.true_sign(m - 6, n - 6) < 0:
                am = AngleMeasure(m, n)
                rot = self.rotation(am)
                key = (rot.c.key(), rot.s.key())
                assert key not in table, "measure table collision"
                table[key] = am
                n += 1
            m += 1
        return table

    def measure_from_rotation(self, c: Q3Scalar, s: Q3Scalar) -> AngleMeasure | None:
        """AngleMeasure with value in (0, 2pi) whose exact trig is (c, s).

        Returns None when the geometric angle is not a nonnegative
        combination of alpha and beta; such a corner can never be completed
        by tile angles.
        """
        if self._table is None:
            self._table = self._build_table()
        return self._table.get((c.key(), s.key()))
