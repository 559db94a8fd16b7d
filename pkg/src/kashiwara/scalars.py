"""Exact arithmetic in the rational function field Q(r, s).

A :class:`Scalar` is stored as ``r^a * s^b * num / den`` where ``num`` and
``den`` are integer polynomials (python-flint ``fmpz_mpoly``) that are coprime,
not divisible by ``r`` or ``s``, and ``den`` has a positive leading
coefficient in graded-lex order.  That makes the representation canonical, so
equality is a plain field comparison and Laurent monomials (the bulk of all
structure constants) never trigger a gcd.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational

import flint

from .errors import DivisionByZero, PoleAtPoint

CTX = flint.fmpz_mpoly_ctx.get(("r", "s"), "deglex")
_ZERO = CTX.from_dict({})
_ONE = CTX.from_dict({(0, 0): 1})


def _shift(p, x, y):
    if x == 0 and y == 0:
        return p
    return p * CTX.from_dict({(x, y): 1})


def _strip_monomial(p):
    """Split ``p`` as ``r^x s^y * q`` with q not divisible by r or s."""
    tc = p.term_content()
    x, y = (int(e) for e in tc.monoms()[0])
    if x == 0 and y == 0:
        return 0, 0, p
    return x, y, p / CTX.from_dict({(x, y): 1})


class Scalar:
    """Element of Q(r, s); immutable."""

    __slots__ = ("a", "b", "num", "den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Scalar):
            self.a, self.b, self.num, self.den = value.a, value.b, value.num, value.den
        elif isinstance(value, Integral):
            self.a = self.b = 0
            self.num = CTX.from_dict({(0, 0): int(value)}) if value else _ZERO
            self.den = _ONE
        elif isinstance(value, Rational):
            f = Fraction(value)
            self.a = self.b = 0
            self.num = CTX.from_dict({(0, 0): f.numerator}) if f else _ZERO
            self.den = CTX.from_dict({(0, 0): f.denominator})
        else:
            raise TypeError(f"cannot build a Scalar from {type(value).__name__}")
        self._hash = None

    @classmethod
    def _raw(cls, a, b, num, den):
        obj = cls.__new__(cls)
        obj.a, obj.b, obj.num, obj.den = a, b, num, den
        obj._hash = None
        return obj

    @classmethod
    def _normalized(cls, a, b, num, den):
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        x, y, num = _strip_monomial(num)
        a, b = a + x, b + y
        if not den.is_one():
            x, y, den = _strip_monomial(den)
            a, b = a - x, b - y
            g = num.gcd(den)
            if not g.is_one():
                num, den = num / g, den / g
            if den.leading_coefficient() < 0:
                num, den = -num, -den
        return cls._raw(a, b, num, den)

    @classmethod
    def monomial(cls, a, b, coeff=1):
        """``coeff * r^a * s^b``."""
        if coeff == 0:
            return ZERO
        return cls._raw(int(a), int(b), CTX.from_dict({(0, 0): int(coeff)}), _ONE)

    @classmethod
    def from_poly(cls, num, den=None):
        return cls._normalized(0, 0, num, _ONE if den is None else den)

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.a == 0 and self.b == 0 and self.num.is_one() and self.den.is_one()

    def is_laurent(self):
        return self.den.is_one()

    def is_monomial(self):
        return self.den.is_one() and len(self.num) == 1

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, Rational):
            return Scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        a, b = min(self.a, other.a), min(self.b, other.b)
        n1 = _shift(self.num, self.a - a, self.b - b)
        n2 = _shift(other.num, other.a - a, other.b - b)
        if self.den == other.den:
            return Scalar._normalized(a, b, n1 + n2, self.den)
        return Scalar._normalized(a, b, n1 * other.den + n2 * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.a, self.b, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        a, b = self.a + other.a, self.b + other.b
        d1, d2 = self.den, other.den
        if d1.is_one() and d2.is_one():
            return Scalar._raw(a, b, self.num * other.num, _ONE)
        n1, n2 = self.num, other.num
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 / g, d2 / g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 / g, d1 / g
        num, den = n1 * n2, d1 * d2
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar._raw(a, b, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("division by the zero scalar")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Scalar._raw(-self.a, -self.b, num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.den.is_one():
            return Scalar._raw(self.a * n, self.b * n, self.num ** n, _ONE)
        return Scalar._raw(self.a * n, self.b * n, self.num ** n, self.den ** n)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return (
            self.a == other.a
            and self.b == other.b
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.a, self.b, tuple(sorted(self.num.to_dict().items())),
                 tuple(sorted(self.den.to_dict().items())))
            )
        return self._hash

    # -- views ------------------------------------------------------------

    @property
    def numerator(self):
        """Numerator as a Laurent polynomial (carries the r^a s^b shift)."""
        return LaurentPoly.from_flint(self.num, self.a, self.b)

    @property
    def denominator(self):
        return LaurentPoly.from_flint(self.den, 0, 0)

    def substitute(self, r_val, s_val):
        """Exact value at ``(r, s) = (r_val, s_val)``; raises PoleAtPoint."""
        rv, sv = Fraction(r_val), Fraction(s_val)
        d = _eval(self.den, rv, sv)
        if d == 0 or (self.a < 0 and rv == 0) or (self.b < 0 and sv == 0):
            raise PoleAtPoint(f"{self} has a pole at r={rv}, s={sv}")
        return _eval(self.num, rv, sv) * rv ** self.a * sv ** self.b / d

    def __str__(self):
        num = _laurent_str(self.num, self.a, self.b)
        if self.den.is_one():
            return num
        if len(self.num) > 1:
            num = f"({num})"
        den = _laurent_str(self.den, 0, 0)
        if len(self.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar('{self}')"

    @classmethod
    def parse(cls, text):
        from .dsl import parse_scalar

        return parse_scalar(text)


def _eval(p, rv, sv):
    return sum((Fraction(int(c)) * rv ** int(i) * sv ** int(j) for (i, j), c in p.to_dict().items()),
               Fraction(0))


def _monomial_str(i, j):
    parts = []
    for name, e in (("r", i), ("s", j)):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _laurent_str(p, a, b):
    if p.is_zero():
        return "0"
    out = []
    for (i, j), c in zip(p.monoms(), p.coeffs()):
        c = int(c)
        mono = _monomial_str(i + a, j + b)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


class LaurentPoly:
    """Read-only Laurent polynomial view: ``terms`` maps (a, b) to a nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {k: Fraction(v) for k, v in terms.items() if v != 0}

    @classmethod
    def from_flint(cls, p, a, b):
        return cls({(i + a, j + b): int(c) for (i, j), c in p.to_dict().items()})

    def to_scalar(self):
        out = ZERO
        for (i, j), c in self.terms.items():
            out = out + Scalar(c) * Scalar.monomial(i, j)
        return out

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"LaurentPoly({self.terms!r})"


ZERO = Scalar._raw(0, 0, _ZERO, _ONE)
ONE = Scalar._raw(0, 0, _ONE, _ONE)
R = Scalar.monomial(1, 0)
S = Scalar.monomial(0, 1)


def scalar_arith(op, a, b):
    a, b = Scalar(a), Scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def scalar_div(a, b):
    return Scalar(a) / Scalar(b)


def scalar_pow_q(exp_r, exp_s):
    """The Laurent monomial r^exp_r s^exp_s."""
    return Scalar.monomial(exp_r, exp_s)


def scalar_substitute(x, r_val, s_val):
    return Scalar(x).substitute(r_val, s_val)
