"""Alexander module of the square knot and its rational Blanchfield pairing.

Generators are ordered (a1, b1, a2, b2).  The relations are the rows of
``tA - A^T`` for the Seifert matrix ``A``; after eliminating
``b_i = (1 - t) a_i`` the module is ``F a1 + F a2`` with
``F = Q[t]/(t^2 - t + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence, Tuple, Union

from .algebra import (
    FieldElem,
    LaurentPoly,
    Matrix,
    RationalFn,
    TorsionValue,
    as_matrix,
    determinant,
    laurent_divide_exact,
    matrix_inverse_rational,
    order_ideal_generator,
    transpose,
)

T = LaurentPoly.t()
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()

TREFOIL_BLOCK = ((1, 0), (-1, 1))
MIRROR_BLOCK = ((-1, 0), (1, -1))


@dataclass(frozen=True)
class SeifertData:
    A: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        A = tuple(tuple(int(x) for x in row) for row in self.A)
        n = len(A)
        if any(len(r) != n for r in A) or n % 2:
            raise ValueError("Seifert matrix must be square of even size")
        object.__setattr__(self, "A", A)

    @property
    def genus(self) -> int:
        return len(self.A) // 2

    def intersection_form(self) -> Tuple[Tuple[int, ...], ...]:
        """A - A^T."""
        n = len(self.A)
        return tuple(tuple(self.A[i][j] - self.A[j][i] for j in range(n)) for i in range(n))


def block_sum(*blocks: Sequence[Sequence]) -> tuple:
    n = sum(len(b) for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for row in b:
            rows.append((0,) * off + tuple(row) + (0,) * (n - off - len(row)))
        off += len(b)
    return tuple(rows)


def seifert_square_knot() -> SeifertData:
    return SeifertData(block_sum(TREFOIL_BLOCK, MIRROR_BLOCK))


def seifert_trefoil() -> SeifertData:
    return SeifertData(TREFOIL_BLOCK)


def presentation_matrix(S: SeifertData) -> Matrix:
    """tA - A^T; rows are relations among the generators."""
    n = len(S.A)
    return tuple(
        tuple(T.scale(S.A[i][j]) - S.A[j][i] for j in range(n))
        for i in range(n)
    )


# ---------------------------------------------------------------------------
# Module elements


@dataclass(frozen=True)
class IntersectionVector:
    x1: int
    y1: int
    x2: int
    y2: int


@dataclass(frozen=True)
class ModuleVector:
    """(a1, a2)-coordinates over F."""

    first: FieldElem
    second: FieldElem

    def __post_init__(self):
        object.__setattr__(self, "first", FieldElem.coerce(self.first))
        object.__setattr__(self, "second", FieldElem.coerce(self.second))

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        return ModuleVector(self.first + other.first, self.second + other.second)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return ModuleVector(self.first - other.first, self.second - other.second)

    def scale(self, f) -> "ModuleVector":
        f = FieldElem.coerce(f)
        return ModuleVector(f * self.first, f * self.second)

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()

    def to_generators(self) -> Tuple[LaurentPoly, ...]:
        """Section into the (a1, b1, a2, b2) basis."""
        return (self.first.to_laurent(), ZERO, self.second.to_laurent(), ZERO)

    def __str__(self) -> str:
        return f"({fe_str(self.first)}, {fe_str(self.second)})"


def fe_str(x: FieldElem) -> str:
    """Compact display of c0 + c1*t, e.g. ``(4t-5)/7``."""
    den = lcm(x.c0.denominator, x.c1.denominator)
    a, b = int(x.c0 * den), int(x.c1 * den)
    parts = []
    if b:
        parts.append({1: "t", -1: "-t"}.get(b, f"{b}t"))
    if a or not b:
        parts.append(f"{a:+}" if parts else f"{a}")
    poly = "".join(parts)
    if den == 1:
        return poly
    return f"({poly})/{den}" if a and b else f"{poly}/{den}"


def eliminate(v: Sequence) -> ModuleVector:
    """(a1, b1, a2, b2) coordinates -> (a1, a2) using b_i = (1 - t) a_i."""
    a1, b1, a2, b2 = (LaurentPoly.coerce(x) for x in v)
    one_minus_t = ONE - T
    return ModuleVector(FieldElem.from_laurent(a1 + one_minus_t * b1),
                        FieldElem.from_laurent(a2 + one_minus_t * b2))


def module_from_int_vector(v: IntersectionVector) -> ModuleVector:
    """(t x1 + y1, t x2 + y2)."""
    return ModuleVector(FieldElem(v.y1, v.x1), FieldElem(v.y2, v.x2))


def kappa_coordinates(v: IntersectionVector) -> Tuple[int, int, int, int]:
    """Push-off of the curve in the (a1, b1, a2, b2) basis, from the Seifert matrix.

    [gamma] = [x1 y1 x2 y2] J with J the inverse intersection pairing, then
    multiplied by A.  Kept separate from :func:`module_from_int_vector` so the
    closed form can be checked against the matrix computation.
    """
    A = seifert_square_knot().A
    coords = (v.y1, -v.x1, -v.y2, v.x2)
    return tuple(sum(coords[i] * A[i][j] for i in range(4)) for j in range(4))


def gamma_k(k: int) -> IntersectionVector:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return IntersectionVector(2 * k + 1, -k, 2 * k + 1, -k - 1)


def f_value(k: int) -> Fraction:
    """(2k+1)/(3k^2+3k+1)."""
    return Fraction(2 * k + 1, 3 * k * k + 3 * k + 1)


def w_k(k: int) -> ModuleVector:
    """(1, (2k+1)/(3k^2+3k+1) t + (3k^2+2k)/(3k^2+3k+1))."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = 3 * k * k + 3 * k + 1
    return ModuleVector(FieldElem(1), FieldElem(Fraction(3 * k * k + 2 * k, n), Fraction(2 * k + 1, n)))


def w_k_scalar(k: int) -> FieldElem:
    """The scalar (-(2k+1)t + (k+1))/(3k^2+3k+1) carrying gamma_k to w_k."""
    n = 3 * k * k + 3 * k + 1
    return FieldElem(Fraction(k + 1, n), Fraction(-(2 * k + 1), n))


# ---------------------------------------------------------------------------
# Blanchfield pairing


@lru_cache(maxsize=None)
def _pairing_matrix(A: Tuple[Tuple[int, ...], ...]) -> Tuple[Tuple[LaurentPoly, ...], LaurentPoly]:
    """(t - 1) (tA - A^T)^{-T} as an integral matrix over one common denominator."""
    M = presentation_matrix(SeifertData(A))
    inv = matrix_inverse_rational(transpose(M))
    det = determinant(M)
    n = len(M)
    num = tuple(
        tuple(inv[i][j].num * laurent_divide_exact(det, inv[i][j].den) * (T - 1) for j in range(n))
        for i in range(n)
    )
    return num, det


PairingInput = Union[ModuleVector, Sequence]


def _as_generators(x: PairingInput, n: int) -> Tuple[LaurentPoly, ...]:
    if isinstance(x, ModuleVector):
        if n != 4:
            raise ValueError("(a1, a2) coordinates only make sense for the square knot")
        return x.to_generators()
    v = tuple(LaurentPoly.coerce(e) for e in x)
    if len(v) != n:
        raise ValueError(f"expected {n} coordinates, got {len(v)}")
    return v


def blanchfield_pair(x: PairingInput, y: PairingInput, S: SeifertData | None = None) -> TorsionValue:
    """conj(x)^T (t - 1) (tA - A^T)^{-T} y in Q(t)/Q[t^+-1].

    Conjugate-linear in ``x``, linear in ``y``.  The transpose inverse is what
    makes the value vanish whenever either argument is a relation row.
    """
    S = S or seifert_square_knot()
    n = len(S.A)
    num, det = _pairing_matrix(S.A)
    xs, lx = _clear_denominators(_as_generators(x, n))
    ys, ly = _clear_denominators(_as_generators(y, n))
    total = LaurentPoly()
    for i in range(n):
        if xs[i].is_zero():
            continue
        row = LaurentPoly()
        for j in range(n):
            if not ys[j].is_zero() and not num[i][j].is_zero():
                row = row + num[i][j] * ys[j]
        total = total + xs[i].conj() * row
    # the scalars lx, ly are rational, so conjugation leaves them alone
    return TorsionValue(RationalFn(total, det.scale(lx * ly)))


def _clear_denominators(v: Tuple[LaurentPoly, ...]) -> Tuple[Tuple[LaurentPoly, ...], int]:
    den = 1
    for p in v:
        for _, c in p.terms:
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
    if den == 1:
        return v, 1
    return tuple(p.scale(den) for p in v), den


@lru_cache(maxsize=None)
def bl_unit() -> TorsionValue:
    """Bl((0,1),(0,1)) for the square knot."""
    return blanchfield_pair(ModuleVector(0, 1), ModuleVector(0, 1))


# ---------------------------------------------------------------------------
# Kernel distinctness


@dataclass(frozen=True)
class KernelCertificate:
    k1: int
    k2: int
    w1: ModuleVector
    w2: ModuleVector
    difference: ModuleVector
    c: Fraction
    d: Fraction
    quadratic: Fraction
    self_pairing: TorsionValue
    pairing_distinct: bool
    line_distinct: bool

    @property
    def distinct(self) -> bool:
        return self.pairing_distinct

    def to_dict(self) -> dict:
        return {
            "k1": self.k1,
            "k2": self.k2,
            "w_k1": str(self.w1),
            "w_k2": str(self.w2),
            "difference": str(self.difference),
            "c": _fr(self.c),
            "d": _fr(self.d),
            "c2_cd_d2": _fr(self.quadratic),
            "self_pairing": str(self.self_pairing),
            "bl_unit": str(bl_unit()),
            "distinct_by_pairing": self.pairing_distinct,
            "distinct_by_line": self.line_distinct,
            "kernels": "distinct" if self.distinct else "equal",
        }

    def render(self) -> str:
        d = self.to_dict()
        return "\n".join([
            f"w_{self.k1}            = {d['w_k1']}",
            f"w_{self.k2}            = {d['w_k2']}",
            f"w_{self.k1} - w_{self.k2}      = {d['difference']}",
            f"c^2 + cd + d^2  = {d['c2_cd_d2']}   (c = {d['c']}, d = {d['d']})",
            f"Bl(1,1)         = {d['bl_unit']}",
            f"Bl(diff, diff)  = {d['self_pairing']}",
            f"line check      : {'distinct' if self.line_distinct else 'same line'}",
            f"verdict         : P_{self.k1} {'!=' if self.distinct else '='} P_{self.k2}",
        ])


def _fr(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def lines_distinct(v: ModuleVector, w: ModuleVector) -> bool:
    """Whether v, w span different F-lines (2x2 determinant over F)."""
    return not (v.first * w.second - v.second * w.first).is_zero()


def kernels_distinct(k1: int, k2: int) -> KernelCertificate:
    if k1 < 0 or k2 < 0:
        raise ValueError("k must be nonnegative")
    w1, w2 = w_k(k1), w_k(k2)
    diff = w1 - w2
    if not diff.first.is_zero():
        raise AssertionError("first coordinates of w_k must agree")
    c, d = diff.second.c1, diff.second.c0
    quad = c * c + c * d + d * d
    sp = blanchfield_pair(diff, diff)
    if sp != bl_unit() * quad:
        raise AssertionError("self-pairing disagrees with (c^2+cd+d^2) Bl(1,1)")
    return KernelCertificate(k1, k2, w1, w2, diff, c, d, quad, sp,
                             pairing_distinct=not sp.is_zero(),
                             line_distinct=lines_distinct(w1, w2))


def f_monotone(kmax: int) -> bool:
    """f(k) > f(k+1) for 0 <= k < kmax, exactly."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    prev = f_value(0)
    for k in range(1, kmax + 1):
        cur = f_value(k)
        if not prev > cur:
            return False
        prev = cur
    return True


# ---------------------------------------------------------------------------
# Satellites


def litherland_sum(pattern: Sequence[Sequence], companion: Sequence[Sequence], w: int) -> Matrix:
    """Block sum of the pattern presentation and the companion's with t -> t^w."""
    if w == 0:
        raise ValueError("winding number must be nonzero")
    P = as_matrix(pattern)
    C = tuple(tuple(x.substitute_power(w) for x in row) for row in as_matrix(companion))
    n, m = len(P), len(C)
    rows = []
    for row in P:
        rows.append(tuple(row) + (ZERO,) * m)
    for row in C:
        rows.append((ZERO,) * n + tuple(row))
    return tuple(rows)


def order_ideal(P: Sequence[Sequence]) -> LaurentPoly:
    return order_ideal_generator(P)


NAMED_KNOTS = {
    "unknot": (),
    "trefoil": TREFOIL_BLOCK,
    "mirror-trefoil": MIRROR_BLOCK,
    "square": block_sum(TREFOIL_BLOCK, MIRROR_BLOCK),
}


def named_presentation(name: str) -> Matrix:
    try:
        A = NAMED_KNOTS[name]
    except KeyError:
        raise ValueError(f"unknown knot {name!r}; choose from {sorted(NAMED_KNOTS)}") from None
    if not A:
        return ()
    return presentation_matrix(SeifertData(A))


def format_matrix(M: Sequence[Sequence]) -> list:
    return [[str(x) for x in row] for row in M]
