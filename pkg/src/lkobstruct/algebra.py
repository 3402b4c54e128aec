"""Exact arithmetic over Q[t, t^-1], F = Q[t]/(t^2 - t + 1) and Q(t).

Everything here is built on :class:`fractions.Fraction`; there is no floating
point anywhere in the package.  Values are immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _exact(x):
    """Coefficient storage: ints stay ints (fast), other rationals become Fractions."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, (int, Rational)):
        return _exact(Fraction(x))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _quo(a, b):
    """Exact quotient of two rationals, never a float."""
    if type(a) is int and type(b) is int and a % b == 0:
        return a // b
    return _exact(Fraction(a) / b)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class LaurentPoly:
    """Sparse Laurent polynomial in ``t`` with rational coefficients.

    >>> t = LaurentPoly.t()
    >>> (1 - t) * (1 - t**-1)
    LaurentPoly('-1*t^-1 + 2 - t')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        terms = {}
        for k, c in (coeffs or {}).items():
            c = _exact(c)
            if c:
                terms[int(k)] = c
        self._terms: Tuple[Tuple[int, Fraction], ...] = tuple(sorted(terms.items()))
        self._hash = None

    # -- construction -----------------------------------------------------
    @classmethod
    def t(cls, k: int = 1) -> "LaurentPoly":
        return cls({k: 1})

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_list(cls, coeffs: Sequence[Scalar], low: int = 0) -> "LaurentPoly":
        """Coefficients listed by ascending exponent starting at ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, FieldElem):
            return x.to_laurent()
        if isinstance(x, str):
            return parse_laurent(x)
        return cls.const(x)

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Tuple[Tuple[int, Fraction], ...]:
        return self._terms

    def coeff(self, k: int):
        for e, c in self._terms:
            if e == k:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return self._terms[-1][0]

    @property
    def leading_coeff(self) -> Fraction:
        return self._terms[-1][1]

    def is_polynomial(self) -> bool:
        """True when no negative exponent occurs."""
        return not self._terms or self._terms[0][0] >= 0

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    # -- ring operations --------------------------------------------------
    def _combine(self, other: "LaurentPoly", sign: int) -> "LaurentPoly":
        out: Dict[int, Fraction] = dict(self._terms)
        for k, c in other._terms:
            out[k] = out.get(k, 0) + sign * c
        return LaurentPoly(out)

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self._terms})

    def __mul__(self, other):
        if isinstance(other, (RationalFn, TorsionValue)):
            return NotImplemented
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: Dict[int, Fraction] = {}
        for i, a in self._terms:
            for j, b in other._terms:
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self._terms
            return LaurentPoly({k * n: _quo(1, c ** (-n))})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "LaurentPoly":
        c = _exact(c)
        return LaurentPoly({k: c * v for k, v in self._terms})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._terms})

    def conj(self) -> "LaurentPoly":
        """The involution t -> t^-1."""
        return LaurentPoly({-k: c for k, c in self._terms})

    def substitute_power(self, w: int) -> "LaurentPoly":
        """Substitute t -> t^w.  ``w = 0`` would collapse the ring and is rejected."""
        if w == 0:
            raise ValueError("winding substitution t -> t^0 is not allowed")
        return LaurentPoly({k * w: c for k, c in self._terms})

    def evaluate(self, x: Scalar) -> Fraction:
        x = _frac(x)
        return sum((c * x ** k for k, c in self._terms), Fraction(0))

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        if not self._terms:
            return Fraction(0)
        num = reduce(_gcd, (c.numerator for _, c in self._terms))
        den = reduce(_lcm, (c.denominator for _, c in self._terms))
        return Fraction(abs(num), den)

    def normalize_unit(self, over_q: bool = False) -> "LaurentPoly":
        """Representative modulo units.

        Over Z[t^+-1] the units are +-t^k: shift so the lowest exponent is 0 and
        make the lowest coefficient positive.  With ``over_q`` the content is
        divided out as well (units of Q[t^+-1] are c*t^k).
        """
        if not self._terms:
            return self
        p = self.shift(-self.min_exp)
        if over_q:
            p = p.scale(_quo(1, p.content()))
        if p._terms[0][1] < 0:
            p = -p
        return p

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (k, c) in enumerate(self._terms):
            neg = c < 0
            a = -c if neg else c
            if k == 0:
                body = format_rational(a)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 and not (neg and i == 0) else f"{format_rational(a)}*{mono}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _lcm(a: int, b: int) -> int:
    return abs(a * b) // _gcd(a, b)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+(?:/\d+)?)\s*(?:\*?\s*(?P<t1>t)(?:\s*\^\s*(?P<e1>[+-]?\d+))?)?
          |
          (?P<t2>t)(?:\s*\^\s*(?P<e2>[+-]?\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_laurent(text: str) -> LaurentPoly:
    """Parse ``-1*t^-1 + 2 + 3*t^2`` and looser spellings such as ``3t-1``.

    Exponents may also be written in parentheses, e.g. ``t^(-1)``.
    """
    s = text.strip().replace("^(", "^").replace(")", "").replace("(", "")
    s = s.replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    out: Dict[int, Fraction] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and m.group("sign") is None):
            raise ValueError(f"cannot parse Laurent polynomial {text!r} at {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = Fraction(m.group("coef"))
            if m.group("t1"):
                k = int(m.group("e1")) if m.group("e1") else 1
            else:
                k = 0
        else:
            c = Fraction(1)
            k = int(m.group("e2")) if m.group("e2") else 1
        out[k] = out.get(k, 0) + sign * c
        pos = m.end()
        first = False
    return LaurentPoly(out)


# ---------------------------------------------------------------------------
# Univariate polynomial helpers (ordinary polynomials, min exponent >= 0)

def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Euclidean division in Q[t]; both arguments must be ordinary polynomials."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if not (a.is_polynomial() and b.is_polynomial()):
        raise ValueError("poly_divmod needs ordinary polynomials")
    if a.is_zero() or a.max_exp < b.max_exp:
        return LaurentPoly(), a
    rem = [0] * (a.max_exp + 1)
    for k, c in a.terms:
        rem[k] = c
    db, lb = b.max_exp, b.leading_coeff
    bterms = [(k, c) for k, c in b.terms if k != db]
    quo = {}
    for dr in range(len(rem) - 1, db - 1, -1):
        c = rem[dr]
        if not c:
            continue
        f = _quo(c, lb)
        quo[dr - db] = f
        off = dr - db
        for k, v in bterms:
            rem[k + off] -= f * v
    return LaurentPoly(quo), LaurentPoly({k: c for k, c in enumerate(rem[:db]) if c})


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in Q[t]."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a.scale(_quo(1, a.leading_coeff))


def split_t_power(p: LaurentPoly) -> Tuple[int, LaurentPoly]:
    """Write ``p = t^m * p0`` with ``p0`` a polynomial not divisible by t."""
    if p.is_zero():
        return 0, p
    m = p.min_exp
    return m, p.shift(-m)


def laurent_divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """a / b in Q[t^+-1], raising if b does not divide a."""
    if a.is_zero():
        return a
    ma, a0 = split_t_power(a)
    mb, b0 = split_t_power(b)
    q, r = poly_divmod(a0, b0)
    if not r.is_zero():
        raise ArithmeticError(f"{b} does not divide {a}")
    return q.shift(ma - mb)


# ---------------------------------------------------------------------------

_T_POWERS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))  # t^k mod t^2-t+1, k mod 6


class FieldElem:
    """``c0 + c1*t`` in F = Q[t]/(t^2 - t + 1).

    t is a primitive sixth root of unity here, so t^-1 = 1 - t and t^6 = 1.
    """

    __slots__ = ("c0", "c1")

    def __init__(self, c0: Scalar = 0, c1: Scalar = 0):
        object.__setattr__(self, "c0", _frac(c0))
        object.__setattr__(self, "c1", _frac(c1))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    @classmethod
    def t(cls) -> "FieldElem":
        return cls(0, 1)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "FieldElem":
        c0 = c1 = Fraction(0)
        for k, c in LaurentPoly.coerce(p).terms:
            a, b = _T_POWERS[k % 6]
            c0 += a * c
            c1 += b * c
        return cls(c0, c1)

    @classmethod
    def coerce(cls, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        if isinstance(x, (LaurentPoly, str)):
            return cls.from_laurent(LaurentPoly.coerce(x))
        return cls(x, 0)

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly({0: self.c0, 1: self.c1})

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElem(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(-self.c0, -self.c1)

    def __sub__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElem(self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        return FieldElem.coerce(other) - self

    def __mul__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        # (a + bt)(c + dt) = ac + (ad + bc)t + bd t^2,  t^2 = t - 1
        a, b, c, d = self.c0, self.c1, o.c0, o.c1
        bd = b * d
        return FieldElem(a * c - bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """x * conj(x), which lies in Q: a^2 + ab + b^2."""
        a, b = self.c0, self.c1
        return a * a + a * b + b * b

    def conj(self) -> "FieldElem":
        # t -> t^-1 = 1 - t
        return FieldElem(self.c0 + self.c1, -self.c1)

    def inv(self) -> "FieldElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in F")
        cj = self.conj()
        return FieldElem(cj.c0 / n, cj.c1 / n)

    def __pow__(self, n: int) -> "FieldElem":
        base = self if n >= 0 else self.inv()
        out = FieldElem(1)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __truediv__(self, other):
        return self * FieldElem.coerce(other).inv()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inv()

    def __eq__(self, other):
        try:
            o = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0, self.c1))

    def __str__(self) -> str:
        return f"{format_rational(self.c0)} + {format_rational(self.c1)}*t"

    def __repr__(self) -> str:
        return f"FieldElem({self})"


def field_ops(a: FieldElem, b: FieldElem | None, op: str) -> FieldElem:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "conj":
        return a.conj()
    raise ValueError(f"unknown field operation {op!r}")


def lp_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


# ---------------------------------------------------------------------------

class RationalFn:
    """numerator / denominator in Q(t).  Equality is by cross multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = LaurentPoly.const(1)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    @classmethod
    def coerce(cls, x) -> "RationalFn":
        return x if isinstance(x, RationalFn) else cls(x)

    def reduced(self) -> "RationalFn":
        """Cancel common factors; the denominator becomes a monic polynomial."""
        if self.num.is_zero():
            return self
        mn, n0 = split_t_power(self.num)
        md, d0 = split_t_power(self.den)
        g = poly_gcd(n0, d0)
        n0 = poly_divmod(n0, g)[0]
        d0 = poly_divmod(d0, g)[0]
        lc = d0.leading_coeff
        return RationalFn(n0.scale(_quo(1, lc)).shift(mn - md), d0.scale(_quo(1, lc)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        r = self.reduced()
        return r.den.is_constant()

    def __add__(self, other):
        o = RationalFn.coerce(other)
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFn.coerce(other))

    def __rsub__(self, other):
        return RationalFn.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, TorsionValue):
            return NotImplemented
        o = RationalFn.coerce(other)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> "RationalFn":
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFn.coerce(other).inv()

    def conj(self) -> "RationalFn":
        return RationalFn(self.num.conj(), self.den.conj())

    def __eq__(self, other):
        try:
            o = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        r = self.reduced()
        return hash((r.num, r.den))

    def __str__(self) -> str:
        r = self.reduced()
        if r.den.is_constant():
            return str(r.num.scale(_quo(1, r.den.coeff(0))))
        return f"({r.num}) / ({r.den})"

    def __repr__(self) -> str:
        return f"RationalFn({self})"


DELTA = LaurentPoly({0: 1, 1: -1, 2: 1})  # t^2 - t + 1


class TorsionValue:
    """An element of Q(t)/Q[t^+-1].

    Internally a value is kept in proper form ``r/q``: ``q`` a monic polynomial
    with ``q(0) != 0`` and ``deg r < deg q``.  Two proper forms are equal in
    Q(t)/Q[t^+-1] exactly when ``r1*q2 == r2*q1`` (the difference is a proper
    fraction, so it is a Laurent polynomial only if it is zero).  The lowest
    terms form (:attr:`canonical`) is used for display and hashing.
    """

    __slots__ = ("value", "_proper", "_canon")

    def __init__(self, value):
        object.__setattr__(self, "value", RationalFn.coerce(value))
        object.__setattr__(self, "_proper", None)
        object.__setattr__(self, "_canon", None)

    def __setattr__(self, name, value):
        raise AttributeError("TorsionValue is immutable")

    @property
    def proper(self) -> Tuple[LaurentPoly, LaurentPoly]:
        if self._proper is None:
            object.__setattr__(self, "_proper", _proper_form(self.value))
        return self._proper

    @property
    def canonical(self) -> Tuple[LaurentPoly, LaurentPoly]:
        """(numerator, monic denominator) in lowest terms; ``(0, 1)`` for zero."""
        if self._canon is None:
            r, q = self.proper
            if r.is_zero():
                canon = (r, LaurentPoly.const(1))
            else:
                g = poly_gcd(r, q)
                r, q = poly_divmod(r, g)[0], poly_divmod(q, g)[0]
                lc = q.leading_coeff
                canon = (r.scale(_quo(1, lc)), q.scale(_quo(1, lc)))
            object.__setattr__(self, "_canon", canon)
        return self._canon

    def is_zero(self) -> bool:
        return self.proper[0].is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = other if isinstance(other, TorsionValue) else TorsionValue(other)
        return TorsionValue(self.value + o.value)

    __radd__ = __add__

    def __neg__(self):
        return TorsionValue(-self.value)

    def __sub__(self, other):
        o = other if isinstance(other, TorsionValue) else TorsionValue(other)
        return TorsionValue(self.value - o.value)

    def __mul__(self, scalar):
        """Module action of Q[t^+-1] (or F through its degree <= 1 representatives)."""
        if isinstance(scalar, TorsionValue):
            return NotImplemented
        return TorsionValue(self.value * LaurentPoly.coerce(scalar))

    __rmul__ = __mul__

    def conj(self) -> "TorsionValue":
        return TorsionValue(self.value.conj())

    def __eq__(self, other):
        if not isinstance(other, TorsionValue):
            try:
                other = TorsionValue(other)
            except TypeError:
                return NotImplemented
        r1, q1 = self.proper
        r2, q2 = other.proper
        if r1.is_zero() or r2.is_zero():
            return r1.is_zero() and r2.is_zero()
        if q1 == q2:
            return r1 == r2
        return r1 * q2 == r2 * q1

    def __hash__(self):
        return hash(self.canonical)

    def __str__(self) -> str:
        r, q = self.canonical
        if r.is_zero():
            return "0"
        return f"{_paren(r)} / ({_descending(q)})"

    def __repr__(self) -> str:
        return f"TorsionValue({self})"


def _paren(p: LaurentPoly) -> str:
    return str(p) if len(p.terms) == 1 else f"({p})"


def _descending(p: LaurentPoly) -> str:
    """Display a polynomial highest power first, e.g. ``t^2 - t + 1``."""
    parts = []
    for i, (k, c) in enumerate(reversed(p.terms)):
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = format_rational(a)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if a == 1 else f"{format_rational(a)}*{mono}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) or "0"


_TINV_CACHE: Dict[Tuple[LaurentPoly, int], LaurentPoly] = {}


def _t_inverse_power_mod(q0: LaurentPoly, m: int) -> LaurentPoly:
    """t^-m modulo q0 (requires q0(0) != 0)."""
    key = (q0, m)
    inv = _TINV_CACHE.get(key)
    if inv is None:
        # q0 = c + t*E(t)  gives  t^-1 = -E/c  mod q0
        c = q0.coeff(0)
        tinv = LaurentPoly({k - 1: _quo(-v, c) for k, v in q0.terms if k > 0})
        inv = LaurentPoly.const(1)
        for _ in range(m):
            inv = poly_divmod(inv * tinv, q0)[1]
        if len(_TINV_CACHE) < 4096:
            _TINV_CACHE[key] = inv
    return inv


def _proper_form(f: RationalFn) -> Tuple[LaurentPoly, LaurentPoly]:
    one = LaurentPoly.const(1)
    if f.num.is_zero():
        return LaurentPoly(), one
    md, q0 = split_t_power(f.den)
    lc = q0.leading_coeff
    if q0.max_exp == 0:
        return LaurentPoly(), one
    n = f.num.shift(-md)
    if lc != 1:
        q0 = q0.scale(_quo(1, lc))
    # f = (n / lc) / q0 with n Laurent; reduce n first (often all-integer
    # arithmetic), write n = t^-m * n0 and use t^-m mod q0, then divide by lc
    m = max(0, -n.min_exp)
    r = poly_divmod(n.shift(m), q0)[1]
    if m:
        r = poly_divmod(r * _t_inverse_power_mod(q0, m), q0)[1]
    if lc != 1:
        r = r.scale(_quo(1, lc))
    return r, q0


# ---------------------------------------------------------------------------
# Small matrices (lists of rows)

Matrix = Tuple[Tuple[LaurentPoly, ...], ...]


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(LaurentPoly.coerce(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    one, zero = LaurentPoly.const(1), LaurentPoly()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = transpose(b)
    return tuple(
        tuple(reduce(lambda s, xy: s + xy[0] * xy[1], zip(row, col), _zero_like(row[0])) for col in bt)
        for row in a
    )


def _zero_like(x):
    return RationalFn(0) if isinstance(x, RationalFn) else LaurentPoly()


def determinant(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over Q[t^+-1]."""
    n = len(m)
    if n == 0:
        return LaurentPoly.const(1)
    a = [list(map(LaurentPoly.coerce, row)) for row in m]
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = LaurentPoly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return LaurentPoly()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = laurent_divide_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def _minor(m: Sequence[Sequence], i: int, j: int):
    return [row[:j] + row[j + 1:] for r, row in enumerate(map(tuple, m)) if r != i]


def adjugate(m: Sequence[Sequence[LaurentPoly]]) -> Matrix:
    n = len(m)
    if n == 1:
        return ((LaurentPoly.const(1),),)
    return tuple(
        tuple(determinant(_minor(m, j, i)) * (1 if (i + j) % 2 == 0 else -1) for j in range(n))
        for i in range(n)
    )


class SingularMatrixError(ArithmeticError):
    """Raised when a presentation matrix has zero determinant."""


def matrix_inverse_rational(m: Sequence[Sequence]) -> Tuple[Tuple[RationalFn, ...], ...]:
    """Inverse over Q(t) via the adjugate; the product with ``m`` is checked exactly."""
    m = as_matrix(m)
    det = determinant(m)
    if det.is_zero():
        raise SingularMatrixError("matrix is singular over Q(t)")
    adj = adjugate(m)
    inv = tuple(tuple(RationalFn(x, det).reduced() for x in row) for row in adj)
    check = mat_mul(tuple(tuple(RationalFn(x) for x in row) for row in m), inv)
    n = len(m)
    for i in range(n):
        for j in range(n):
            if check[i][j] != RationalFn(1 if i == j else 0):
                raise ArithmeticError("inverse failed exact verification")
    return inv


def order_ideal_generator(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """gcd of the maximal minors, normalized modulo units +-t^k.

    For a square presentation this is the determinant.  The gcd is taken over
    Q[t] and then rescaled to a primitive integer polynomial, so the result is
    a generator over Z[t^+-1] whenever the minors have integer coefficients
    whose gcd is primitive.
    """
    from itertools import combinations

    m = as_matrix(m)
    rows = len(m)
    cols = len(m[0]) if m else 0
    if rows == 0 or cols == 0:
        return LaurentPoly.const(1)
    if cols > rows:
        return LaurentPoly()  # fewer relations than generators: not torsion
    k = cols
    minors = []
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            minors.append(determinant([[m[r][c] for c in cs] for r in rs]))
    nonzero = [split_t_power(x)[1] for x in minors if not x.is_zero()]
    if not nonzero:
        return LaurentPoly()
    return reduce(poly_gcd, nonzero).normalize_unit(over_q=True)
