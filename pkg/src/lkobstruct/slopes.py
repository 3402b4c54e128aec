"""Slope words on the punctured pillowcase.

A slope ``c/d`` with ``c`` even determines the alternating word
``omega = v^e1 u^e2 ... v^e(c-1)`` with ``e_i = (-1)^floor(i*d/c)``; the slope
curve itself is the commutator ``u omega u^-1 omega^-1``.  The grid walk
below recomputes the signs geometrically and is kept independent of the
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import List, Tuple

from .words import GroupWord, commutator

SignSequence = Tuple[int, ...]

# omega_{10/7} as printed next to the pillowcase figure.  It disagrees with the
# closed-form signs at positions 7 and 8; see discrepancy_10_7().
PRINTED_OMEGA_10_7 = "v u^-1 v u v^-1 u v^-1 u v"


class SlopeError(ValueError):
    """Invalid slope parameters."""


@dataclass(frozen=True, order=True)
class SlopeParam:
    c: int
    d: int

    def __post_init__(self):
        c, d = int(self.c), int(self.d)
        if d == 0:
            raise SlopeError("denominator must be nonzero")
        if d < 0:
            c, d = -c, -d
        if c % 2:
            raise SlopeError("numerator must be even")
        if c == 0 and d != 1:
            raise SlopeError("the zero slope must be written 0/1")
        if gcd(c, d) != 1:
            raise SlopeError("numerator and denominator must be coprime")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def parse(cls, text: str) -> "SlopeParam":
        s = text.strip()
        try:
            if "/" in s:
                c, d = s.split("/", 1)
                return cls(int(c), int(d))
            return cls(int(s), 1)
        except ValueError as exc:
            if isinstance(exc, SlopeError):
                raise
            raise SlopeError(f"cannot parse slope {text!r}") from exc

    def negate(self) -> "SlopeParam":
        return SlopeParam(-self.c, self.d)

    def as_fraction(self) -> Fraction:
        return Fraction(self.c, self.d)

    def __str__(self) -> str:
        return f"{self.c}/{self.d}"


def format_signs(signs: SignSequence) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def epsilon_sequence(s: SlopeParam) -> SignSequence:
    c, d = s.c, s.d
    if c == 0:
        return ()
    if c > 0:
        return tuple((-1) ** (floor(Fraction(i * d, c)) % 2) for i in range(1, c))
    # negative slope: ceiling rule, which reproduces omega of the mirror slope
    return tuple((-1) ** (ceil(Fraction(i * d, c)) % 2) for i in range(1, -c))


def word_from_signs(signs: SignSequence) -> GroupWord:
    """v^e1 u^e2 v^e3 ... (odd positions on v, even on u)."""
    return GroupWord(tuple(("v" if i % 2 == 0 else "u", e) for i, e in enumerate(signs)))


def omega_word(s: SlopeParam) -> GroupWord:
    return word_from_signs(epsilon_sequence(s))


def slope_relator(s: SlopeParam) -> GroupWord:
    return commutator(GroupWord.gen("u"), omega_word(s))


def twist_equivalent(s: SlopeParam, n: int) -> SlopeParam:
    """The slope c/(d - 2nc) obtained by n Dehn twists along the zero slope."""
    return SlopeParam(s.c, s.d - 2 * n * s.c)


def twist_family_word(n: int) -> GroupWord:
    """(vu)^|n|: the longer reading of omega_{2n/1}."""
    return GroupWord((("v", 1), ("u", 1))) ** abs(n)


# ---------------------------------------------------------------------------
# Grid-walk oracle


@dataclass(frozen=True)
class Crossing:
    param: Fraction      # position along the arc, 0 < param < 1
    kind: str            # "h" for a horizontal grid line, "v" for a vertical one
    line: int            # y-value (h) or x-value (v) of the grid line
    column: int          # column index of the crossed horizontal segment (h only)


def grid_crossings(c: int, d: int) -> List[Crossing]:
    """Crossings of the straight arc across the interior grid lines.

    The cut-open pillowcase tiles a rectangle ``d`` unit columns wide and ``c``
    unit rows tall (``c/2`` tiles of height two, ``d`` across).  For ``c > 0``
    the arc runs from (0, 0) to (d, c); for ``c < 0`` it is mirrored and runs
    from (d, 0) to (0, |c|).
    """
    h = abs(c)
    mirrored = c < 0
    out: List[Crossing] = []
    for j in range(1, h):
        s = Fraction(j, h)
        x = s * d if not mirrored else d - s * d
        out.append(Crossing(s, "h", j, floor(x)))
    for k in range(1, d):
        s = Fraction(k, d) if not mirrored else Fraction(d - k, d)
        out.append(Crossing(s, "v", k, -1))
    out.sort(key=lambda cr: (cr.param, cr.kind))
    for a, b in zip(out, out[1:]):
        if a.param == b.param:
            raise AssertionError(f"arc of slope {c}/{d} meets a lattice point at parameter {a.param}")
    return out


def grid_label(line: int, column: int, d: int, mirrored: bool) -> Tuple[str, int]:
    """Label of the horizontal grid segment on row-line ``line`` in ``column``.

    Lines alternate u, v, u, ... upward from the bottom edge (which is u), and
    the exponent alternates from column to column starting with +1 at the
    arc's starting corner.
    """
    var = "u" if line % 2 == 0 else "v"
    col = (d - 1 - column) if mirrored else column
    return var, (-1) ** (col % 2)


def grid_walk_letters(s: SlopeParam) -> GroupWord:
    c, d = s.c, s.d
    if c == 0:
        return GroupWord()
    letters = []
    for cr in grid_crossings(c, d):
        if cr.kind == "h":
            letters.append(grid_label(cr.line, cr.column, d, c < 0))
    word = GroupWord(tuple(letters))
    for i, (g, _) in enumerate(word.letters):
        expected = "v" if i % 2 == 0 else "u"
        if g != expected:
            raise AssertionError(f"grid walk for {s} does not alternate v/u at step {i + 1}")
    return word


def grid_walk_oracle(s: SlopeParam) -> SignSequence:
    return tuple(e for _, e in grid_walk_letters(s).letters)


def discrepancy_10_7() -> dict:
    """Compare the closed form, the grid walk and the printed word for 10/7."""
    s = SlopeParam(10, 7)
    formula = epsilon_sequence(s)
    oracle = grid_walk_oracle(s)
    printed_word = GroupWord.parse(PRINTED_OMEGA_10_7)
    printed = tuple(e for _, e in printed_word.letters)
    diff = [i + 1 for i, (a, b) in enumerate(zip(formula, printed)) if a != b]
    return {
        "slope": str(s),
        "formula": format_signs(formula),
        "oracle": format_signs(oracle),
        "printed": format_signs(printed),
        "printed_word": str(printed_word),
        "formula_word": str(omega_word(s)),
        "differing_positions": diff,
        "oracle_supports": "formula" if oracle == formula else ("printed" if oracle == printed else "neither"),
        "same_sign_multiset": sorted(formula) == sorted(printed),
    }
