"""Words in free groups and normal forms in Z_p * Z_q."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence, Tuple

Letter = Tuple[str, int]


def _reduce_letters(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: list = []
    for g, e in letters:
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            e += stack[-1][1]
            stack.pop()
            if e:
                stack.append((g, e))
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True)
class GroupWord:
    """A word as a sequence of ``(generator, exponent)`` letters.

    The constructor keeps the letters as given; :func:`free_reduce` (or
    multiplication) produces the reduced form.
    """

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((str(g), int(e)) for g, e in self.letters))

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        return parse_word(text)

    @classmethod
    def gen(cls, g: str, e: int = 1) -> "GroupWord":
        return cls(((g, e),))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(_reduce_letters(self.letters + other.letters))

    def __pow__(self, n: int) -> "GroupWord":
        base = self if n >= 0 else self.inverse()
        return GroupWord(_reduce_letters(base.letters * abs(n)))

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def is_reduced(self) -> bool:
        return _reduce_letters(self.letters) == self.letters

    def generators(self) -> frozenset:
        return frozenset(g for g, _ in self.letters)

    def syllable_length(self) -> int:
        """Total number of unit letters, i.e. the free-group word length."""
        return sum(abs(e) for _, e in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.letters)


_LETTER = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)(?:\s*\^\s*\(?\s*([+-]?\d+)\s*\)?)?")


def parse_word(text: str) -> GroupWord:
    """Parse ``u v^-1 u^2``; ``1`` or the empty string is the identity."""
    s = text.strip()
    if s in ("", "1", "e"):
        return GroupWord()
    letters = []
    pos = 0
    while pos < len(s):
        m = _LETTER.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word {text!r} at {s[pos:]!r}")
        letters.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        pos = m.end()
        while pos < len(s) and s[pos] in " *":
            pos += 1
    return GroupWord(tuple(letters))


def free_reduce(w: GroupWord) -> GroupWord:
    return GroupWord(_reduce_letters(w.letters))


def cyclic_reduce(w: GroupWord) -> Tuple[GroupWord, GroupWord]:
    """Return ``(core, conjugator)`` with ``w == conjugator * core * conjugator^-1``.

    The core is cyclically reduced: its first and last letters involve
    different generators (or it has at most one letter).
    """
    letters = list(_reduce_letters(w.letters))
    conj: list = []
    while len(letters) >= 2 and letters[0][0] == letters[-1][0]:
        g, a = letters[0]
        b = letters[-1][1]
        conj.append((g, a))
        middle = letters[1:-1]
        letters = middle + ([(g, a + b)] if a + b else [])
    return GroupWord(tuple(letters)), GroupWord(_reduce_letters(conj))


def substitute(w: GroupWord, images: Mapping[str, GroupWord]) -> GroupWord:
    out: list = []
    for g, e in w.letters:
        if g not in images:
            raise KeyError(f"no image given for generator {g!r}")
        img = images[g]
        piece = img.letters if e > 0 else img.inverse().letters
        out.extend(piece * abs(e))
    return GroupWord(_reduce_letters(out))


def commutator(g: GroupWord, h: GroupWord) -> GroupWord:
    """g h g^-1 h^-1, reduced."""
    return GroupWord(_reduce_letters(g.letters + h.letters + g.inverse().letters + h.inverse().letters))


def abelianize(w: GroupWord, weights: Mapping[str, int]) -> int:
    total = 0
    for g, e in w.letters:
        if g not in weights:
            raise KeyError(f"no weight given for generator {g!r}")
        total += e * weights[g]
    return total


# ---------------------------------------------------------------------------
# Z_p * Z_q


@dataclass(frozen=True)
class FreeProductWord:
    """Normal form in Z_p * Z_q: alternating syllables ``('x', e)``, ``('y', f)``
    with ``0 < e < p`` and ``0 < f < q``."""

    p: int
    q: int
    syllables: Tuple[Letter, ...] = ()
    gens: Tuple[str, str] = field(default=("x", "y"), compare=False)

    def __post_init__(self):
        if self.p < 2 or self.q < 2 or gcd(self.p, self.q) != 1:
            raise ValueError("p, q must be coprime integers > 1")
        object.__setattr__(self, "syllables", tuple((str(g), int(e)) for g, e in self.syllables))
        orders = dict(zip(self.gens, (self.p, self.q)))
        prev = None
        for g, e in self.syllables:
            if g not in orders or not 0 < e < orders[g]:
                raise ValueError(f"syllable {g}^{e} not in canonical range")
            if g == prev:
                raise ValueError("syllables must alternate")
            prev = g

    def __len__(self):
        return len(self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def order_of(self, g: str) -> int:
        return self.p if g == self.gens[0] else self.q

    def to_word(self) -> GroupWord:
        return GroupWord(self.syllables)

    def __mul__(self, other: "FreeProductWord") -> "FreeProductWord":
        return fp_normal_form(self.to_word() * other.to_word(), self.p, self.q, self.gens)

    def inverse(self) -> "FreeProductWord":
        return fp_normal_form(self.to_word().inverse(), self.p, self.q, self.gens)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)

    def describe(self) -> str:
        return f"{self} in Z_{self.p} * Z_{self.q}"


def fp_normal_form(w: GroupWord, p: int, q: int, gens: Tuple[str, str] = ("x", "y")) -> FreeProductWord:
    """Image of ``w`` under x^p = y^q = 1, in normal form.

    One left-to-right pass with a stack reaches the fixed point: a syllable
    that vanishes exposes its left neighbour to the next letter, which is
    exactly the merge the rewriting rules would perform.
    """
    orders = {gens[0]: p, gens[1]: q}
    stack: list = []
    for g, e in w.letters:
        if g not in orders:
            raise KeyError(f"generator {g!r} is not one of {gens}")
        e %= orders[g]
        if e == 0:
            continue
        if stack and stack[-1][0] == g:
            e = (stack[-1][1] + e) % orders[g]
            stack.pop()
            if e:
                stack.append((g, e))
        else:
            stack.append((g, e))
    return FreeProductWord(p, q, tuple(stack), gens)


def syllable_length(w: FreeProductWord) -> int:
    return len(w.syllables)


def fp_cyclic_reduce(w: FreeProductWord) -> Tuple[FreeProductWord, FreeProductWord]:
    """Cyclic reduction in Z_p * Z_q: ``(core, conjugator)`` with
    ``w = conjugator * core * conjugator^-1`` and the core's end syllables in
    different factors (or the core of length <= 1)."""
    syl = list(w.syllables)
    conj: list = []
    while len(syl) >= 2 and syl[0][0] == syl[-1][0]:
        g, a = syl[0]
        n = w.order_of(g)
        s = (a + syl[-1][1]) % n
        conj.append((g, a))
        syl = syl[1:-1]
        if s:
            # the middle ends in the other factor, so appending cannot merge
            syl.append((g, s))
    core = FreeProductWord(w.p, w.q, tuple(syl), w.gens)
    conjugator = fp_normal_form(GroupWord(tuple(conj)), w.p, w.q, w.gens)
    return core, conjugator


def all_fp_words(p: int, q: int, max_syllables: int, gens: Tuple[str, str] = ("x", "y")):
    """Every normal form with at most ``max_syllables`` syllables (small test oracle)."""
    yield FreeProductWord(p, q, (), gens)
    frontier = [()]
    orders = {gens[0]: p, gens[1]: q}
    for _ in range(max_syllables):
        nxt = []
        for syl in frontier:
            for g in gens:
                if syl and syl[-1][0] == g:
                    continue
                for e in range(1, orders[g]):
                    s = syl + ((g, e),)
                    nxt.append(s)
                    yield FreeProductWord(p, q, s, gens)
        frontier = nxt


def fp_word_from_text(text: str, p: int, q: int) -> FreeProductWord:
    return fp_normal_form(parse_word(text), p, q)
