"""Extended-magnitude reals stored as ``sign * exp^k(m)`` or its reciprocal.

A :class:`TowerReal` holds a sign, a level ``k`` (the number of stacked
exponentials), a float ``mag`` and a ``recip`` flag.  With ``recip`` unset
the magnitude is ``exp^k(mag)``; with it set, the magnitude is
``1 / exp^k(mag)``.  This is enough to carry numbers such as
``exp(-exp(43992))`` through comparisons and products without overflow.

Canonical form (``T = 700``):

* level 0: ``mag`` in ``[1, e^T)``; zero is ``sign=0, level=0, mag=0``;
* level >= 1: ``mag`` in ``[T, e^T)``;
* magnitudes below one have ``recip=True``, everything else ``recip=False``.

General addition is deliberately not exposed.  :func:`dominant_sum` covers
the sums that arise in practice (one term swamps the other, or both terms
fit in a float after one logarithm).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import total_ordering

T = 700.0
EXP_T = math.exp(T)
LN10 = math.log(10.0)

# exp(d) below this no longer moves a float sum
_NEGLIGIBLE_LOG_RATIO = -40.0


@total_ordering
@dataclass(frozen=True, slots=True)
class TowerReal:
    sign: int
    recip: bool
    level: int
    mag: float

    # construction -------------------------------------------------------

    @classmethod
    def from_real(cls, x: float) -> "TowerReal":
        x = float(x)
        if not math.isfinite(x):
            raise ValueError(f"cannot represent non-finite value {x!r}")
        if x == 0.0:
            return ZERO
        return normalize(1 if x > 0 else -1, False, 0, abs(x))

    @classmethod
    def from_tower(cls, level: int, mag: float, *, sign: int = 1,
                   recip: bool = False) -> "TowerReal":
        """Build ``sign * exp^level(mag)`` (or its reciprocal) and canonicalize."""
        if level < 0:
            raise ValueError("level must be non-negative")
        if not math.isfinite(mag):
            raise ValueError(f"non-finite mag {mag!r}")
        if sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        return normalize(sign, recip, level, mag)

    @classmethod
    def exp_neg(cls, y: float) -> "TowerReal":
        """``exp(-y)`` for a float ``y`` without underflow."""
        return exp_of(cls.from_real(-y))

    # conversions --------------------------------------------------------

    def __float__(self) -> float:
        if self.sign == 0:
            return 0.0
        if self.level == 0:
            v = self.mag
        else:
            v = math.inf
        return self.sign / v if self.recip else self.sign * v

    def to_dict(self) -> dict:
        return {"sign": self.sign, "recip": self.recip,
                "level": self.level, "mag": self.mag}

    @classmethod
    def from_dict(cls, d: dict) -> "TowerReal":
        x = cls(int(d["sign"]), bool(d["recip"]), int(d["level"]), float(d["mag"]))
        if normalize(x.sign, x.recip, x.level, x.mag) != x:
            raise ValueError(f"non-canonical tower {d!r}")
        return x

    # arithmetic ---------------------------------------------------------

    def __neg__(self) -> "TowerReal":
        if self.sign == 0:
            return self
        return TowerReal(-self.sign, self.recip, self.level, self.mag)

    def __abs__(self) -> "TowerReal":
        return self if self.sign >= 0 else -self

    def reciprocal(self) -> "TowerReal":
        if self.sign == 0:
            raise ZeroDivisionError("reciprocal of zero")
        if self.level == 0 and self.mag == 1.0:
            return self
        return TowerReal(self.sign, not self.recip, self.level, self.mag)

    def __mul__(self, other):
        if not isinstance(other, TowerReal):
            other = TowerReal.from_real(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TowerReal):
            other = TowerReal.from_real(other)
        return mul(self, other.reciprocal())

    # ordering -----------------------------------------------------------

    def _key(self):
        # order key of |x| for x != 0
        if self.recip:
            return (0, -self.level, -self.mag)
        return (1, self.level, self.mag)

    def __eq__(self, other):
        if not isinstance(other, TowerReal):
            if isinstance(other, (int, float)):
                return cmp(self, TowerReal.from_real(other)) == 0
            return NotImplemented
        return (self.sign, self.recip, self.level, self.mag) == (
            other.sign, other.recip, other.level, other.mag)

    def __hash__(self):
        return hash((self.sign, self.recip, self.level, self.mag))

    def __lt__(self, other):
        if not isinstance(other, TowerReal):
            other = TowerReal.from_real(other)
        return cmp(self, other) < 0

    def __str__(self) -> str:
        return render(self)


ZERO = TowerReal(0, False, 0, 0.0)
ONE = TowerReal(1, False, 0, 1.0)


def normalize(sign: int, recip: bool, level: int, mag: float) -> TowerReal:
    """Bring an arbitrary ``(sign, recip, level, mag)`` tuple to canonical form."""
    if sign == 0:
        return ZERO
    mag = float(mag)
    # raise while the top value would overflow
    while mag >= EXP_T:
        mag = math.log(mag)
        level += 1
        if mag < T:  # log(EXP_T) may round just below T
            mag = T
    # lower while the tower is taller than needed
    while level >= 1 and mag < T:
        if level == 1 and mag < 0.0:
            recip = not recip
            mag = -mag
        mag = math.exp(mag)
        level -= 1
    if level == 0:
        if mag < 0.0:
            sign = -sign
            mag = -mag
        if mag == 0.0:
            return ZERO
        if mag < 1.0:
            inv = 1.0 / mag
            recip = not recip
            if inv >= EXP_T:
                return normalize(sign, recip, 1, -math.log(mag))
            mag = inv
        if mag == 1.0:
            recip = False
    return TowerReal(sign, recip, level, mag)


def _abs_ln(x: TowerReal) -> TowerReal:
    """``ln |x|`` for ``x != 0``."""
    if x.sign == 0:
        raise ValueError("logarithm of zero")
    if x.level == 0:
        inner = TowerReal.from_real(math.log(x.mag))
    else:
        inner = normalize(1, False, x.level - 1, x.mag)
    return -inner if x.recip else inner


def ln_of(x: TowerReal) -> TowerReal:
    if x.sign <= 0:
        raise ValueError("logarithm of a non-positive tower")
    return _abs_ln(x)


def exp_of(x: TowerReal) -> TowerReal:
    if x.sign == 0:
        return ONE
    if x.recip:
        # |x| < 1: an ordinary float does the job
        return TowerReal.from_real(math.exp(float(x)))
    up = normalize(1, False, x.level + 1, x.mag)
    return up if x.sign > 0 else up.reciprocal()


def dominant_sum(x: TowerReal, y: TowerReal) -> TowerReal:
    """``x + y`` when the result is determined to float precision.

    Exact float arithmetic is used when both operands are level-0 values.
    Otherwise the sum is taken in log space: ``ln|a| + log1p(+-exp(d))`` with
    ``d = ln|b| - ln|a|`` for ``|a| >= |b|``.  When ``ln|a|`` itself exceeds
    the float range, ``d`` is below ``-exp(700) * 2**-52`` and ``a`` is returned.
    """
    if x.sign == 0:
        return y
    if y.sign == 0:
        return x
    if x.level == 0 and y.level == 0:
        return TowerReal.from_real(float(x) + float(y))
    a, b = (x, y) if cmp(abs(x), abs(y)) >= 0 else (y, x)
    if x.sign != y.sign and abs(x) == abs(y):
        return ZERO
    la, lb = _abs_ln(a), _abs_ln(b)
    if la.level != 0 or lb.level != 0:
        return a
    d = float(lb) - float(la)
    if d < _NEGLIGIBLE_LOG_RATIO:
        return a
    corr = math.log1p(math.exp(d)) if a.sign == b.sign else math.log1p(-math.exp(d))
    mag = exp_of(TowerReal.from_real(float(la) + corr))
    return mag if a.sign > 0 else -mag


# Scaled form for levels 0 and 1: |x| = f * e^(S j) with f in [1, e^S).
# m - S*j is exact (Sterbenz) for S*j <= m < S*(j+1), j >= 1, so a level-1
# magnitude survives the split without rounding.
_S = 350.0
_EXP_S = math.exp(_S)
# S*j stays an exact double below this level-1 magnitude
_SCALED_MAX = 2.0 ** 40


def _to_scaled(x: TowerReal):
    if x.level == 0:
        v = x.mag
        if x.recip:
            # 1/M = (e^(2S)/M) * e^(-2S); e^(2S)/M in (1, e^(2S))
            f, j = (_EXP_S / v) * _EXP_S, -2
        else:
            f, j = v, 0
    else:
        j = math.floor(x.mag / _S)
        r = x.mag - _S * j
        if x.recip:
            f, j = math.exp(_S - r), -j - 1
        else:
            f = math.exp(r)
    return _renorm(f, j)


def _renorm(f: float, j: int):
    while f >= _EXP_S:
        f /= _EXP_S
        j += 1
    while f < 1.0:
        f *= _EXP_S
        j -= 1
    return f, j


def _from_scaled(sign: int, f: float, j: int) -> TowerReal:
    f, j = _renorm(f, j)
    if j == 0:
        return normalize(sign, False, 0, f)
    if j == 1:
        return normalize(sign, False, 0, f * _EXP_S)
    if j >= 2:
        return normalize(sign, False, 1, _S * j + math.log(f))
    if j == -1:
        return normalize(sign, True, 0, _EXP_S / f)
    if j == -2:
        return normalize(sign, True, 0, _EXP_S * (_EXP_S / f))
    return normalize(sign, True, 1, _S * -j - math.log(f))


def _log_parts(x: TowerReal):
    """``ln|x|`` as ``(s, k, m)`` meaning ``s * exp^k(m)``."""
    s = -1.0 if x.recip else 1.0
    if x.level == 0:
        return s, 0, math.log(x.mag)
    return s, x.level - 1, x.mag


def _log_sum(p, q):
    """Sum of two ``(s, k, m)`` logs; mirrors :func:`dominant_sum`."""
    (s1, k1, m1), (s2, k2, m2) = p, q
    if k1 == 0 and k2 == 0:
        v = s1 * m1 + s2 * m2
        return (1.0 if v >= 0 else -1.0), 0, abs(v)
    if (k1, m1) < (k2, m2):
        (s1, k1, m1), (s2, k2, m2) = (s2, k2, m2), (s1, k1, m1)
    if k1 >= 2 or m2 == 0.0:
        return s1, k1, m1
    lb = m2 if k2 == 1 else math.log(m2)
    d = lb - m1
    if d < _NEGLIGIBLE_LOG_RATIO:
        return s1, k1, m1
    e = math.exp(d)
    corr = math.log1p(e) if s1 == s2 else math.log1p(-e)
    # the sum is exp(m1 + corr); keep it as a level-0 float when it fits
    top = m1 + corr
    if top < T:
        return s1, 0, math.exp(top)
    return s1, 1, top


def mul(x: TowerReal, y: TowerReal) -> TowerReal:
    if x.sign == 0 or y.sign == 0:
        return ZERO
    sign = x.sign * y.sign
    if x.level == y.level and x.mag == y.mag and x.recip != y.recip:
        return ONE if sign > 0 else -ONE
    if x.level == 0 and y.level == 0:
        if x.recip == y.recip:
            p = x.mag * y.mag
            if p < EXP_T:
                return normalize(sign, x.recip, 0, p)
        else:
            num, den = (x.mag, y.mag) if y.recip else (y.mag, x.mag)
            return normalize(sign, False, 0, num / den)
    if (x.level <= 1 and y.level <= 1
            and max(x.mag if x.level else 0.0, y.mag if y.level else 0.0) < _SCALED_MAX):
        fx, jx = _to_scaled(x)
        fy, jy = _to_scaled(y)
        return _from_scaled(sign, fx * fy, jx + jy)
    s, k, m = _log_sum(_log_parts(x), _log_parts(y))
    if m == 0.0:
        return ONE if sign > 0 else -ONE
    return normalize(sign, s < 0, k + 1, m)


def cmp(x: TowerReal, y: TowerReal) -> int:
    """Three-way comparison: -1, 0 or +1."""
    if x.sign != y.sign:
        return -1 if x.sign < y.sign else 1
    if x.sign == 0:
        return 0
    kx, ky = x._key(), y._key()
    c = (kx > ky) - (kx < ky)
    return c if x.sign > 0 else -c


# rendering ------------------------------------------------------------------

def _num(v: float) -> str:
    s = repr(float(v))
    return s[:-2] if s.endswith(".0") else s


def render(x: TowerReal) -> str:
    """Render as ``[-]m``, ``[-]1/m``, ``[-]exp([-]m)`` or ``[-]exp^k(m)`` / ``1/exp^k(m)``.

    Levels 0 and 1 get an ``" ≈ ..."`` suffix: the decimal value for
    reciprocals at level 0, and ``10^(p)`` with ``p = ±mag/ln 10`` at level 1.
    """
    if x.sign == 0:
        return "0"
    neg = "-" if x.sign < 0 else ""
    if x.level == 0:
        if not x.recip:
            return neg + _num(x.mag)
        return f"{neg}1/{_num(x.mag)} ≈ {neg}{float(abs(x))!r}"
    if x.level == 1:
        inner = ("-" if x.recip else "") + _num(x.mag)
        p = x.mag / LN10 * (-1 if x.recip else 1)
        return f"{neg}exp({inner}) ≈ {neg}10^({p:.1f})"
    body = f"exp^{x.level}({_num(x.mag)})"
    return f"{neg}1/{body}" if x.recip else neg + body


_NUM = r"\d+(?:\.\d*)?(?:e[+-]?\d+)?"
_RENDER_RE = re.compile(
    rf"^(?P<neg>-)?(?:"
    rf"(?P<plain>{_NUM})"
    rf"|1/(?P<recip0>{_NUM})"
    rf"|exp\((?P<rneg>-)?(?P<lvl1>{_NUM})\)"
    rf"|(?P<rk>1/)?exp\^(?P<k>\d+)\((?P<lvlk>{_NUM})\)"
    rf")$"
)


def parse(text: str) -> TowerReal:
    """Inverse of :func:`render` (the ``≈`` suffix is ignored)."""
    head = text.split(" ≈ ", 1)[0].strip()
    m = _RENDER_RE.match(head)
    if not m:
        raise ValueError(f"not a tower rendering: {text!r}")
    sign = -1 if m["neg"] else 1
    if m["plain"] is not None:
        v = float(m["plain"])
        return ZERO if v == 0 else TowerReal.from_tower(0, v, sign=sign)
    if m["recip0"] is not None:
        return _checked(TowerReal(sign, True, 0, float(m["recip0"])))
    if m["lvl1"] is not None:
        return _checked(TowerReal(sign, bool(m["rneg"]), 1, float(m["lvl1"])))
    return _checked(TowerReal(sign, bool(m["rk"]), int(m["k"]), float(m["lvlk"])))


def _checked(x: TowerReal) -> TowerReal:
    if normalize(x.sign, x.recip, x.level, x.mag) != x:
        raise ValueError(f"non-canonical tower rendering {render(x)!r}")
    return x
