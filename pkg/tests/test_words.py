import itertools

import pytest
from hypothesis import given, settings, strategies as st

from lkobstruct.words import (
    FreeProductWord,
    GroupWord,
    abelianize,
    all_fp_words,
    commutator,
    cyclic_reduce,
    fp_cyclic_reduce,
    fp_normal_form,
    free_reduce,
    parse_word,
    substitute,
    syllable_length,
)

from conftest import words

W = parse_word
PQ = [(3, 2), (5, 2), (5, 3), (7, 4)]


def test_parse_and_print():
    w = W("u v^-1 u^2")
    assert w.letters == (("u", 1), ("v", -1), ("u", 2))
    assert str(w) == "u v^-1 u^2"
    assert str(GroupWord()) == "1"
    assert W("x^(-3)y") == GroupWord((("x", -3), ("y", 1)))
    with pytest.raises(ValueError):
        W("u ^ ^")


def test_free_reduce_examples():
    assert free_reduce(W("u v v^-1 u^-1")) == GroupWord()
    assert free_reduce(W("u u^2")) == W("u^3")
    assert free_reduce(W("u v u^-1 v^-1")) == W("u v u^-1 v^-1")


@given(words(max_len=12))
def test_free_reduce_idempotent_and_shrinking(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert len(r) <= len(w)
    assert r.is_reduced()


@given(words(), words(), words())
def test_multiplication_is_a_group(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert free_reduce(a) * a.inverse() == GroupWord()


def test_cyclic_reduce_examples():
    assert cyclic_reduce(W("u v u^-1")) == (W("v"), W("u"))
    w = W("v u v^-1 u^-1")
    assert cyclic_reduce(w) == (w, GroupWord())
    assert cyclic_reduce(GroupWord()) == (GroupWord(), GroupWord())


@given(words(max_len=10))
def test_cyclic_reduce_contract(w):
    w = free_reduce(w)
    core, conj = cyclic_reduce(w)
    assert conj * core * conj.inverse() == w
    if len(core) >= 2:
        (g0, _), (g1, _) = core.letters[0], core.letters[-1]
        assert g0 != g1


def _conjugates(w, pool):
    for c in pool:
        yield c * w * c.inverse()


def _free_pool(gens=("u", "v"), length=3):
    letters = [GroupWord.gen(g, e) for g in gens for e in (1, -1)]
    pool = {GroupWord()}
    for n in range(1, length + 1):
        for combo in itertools.product(letters, repeat=n):
            w = GroupWord()
            for l in combo:
                w = w * l
            pool.add(w)
    return pool


_FREE_POOL = _free_pool()


@settings(max_examples=40)
@given(words(max_len=6, max_exp=2))
def test_cyclic_reduce_minimal_in_free_group(w):
    # brute force: no conjugate by a word of length <= 3 is shorter than the core
    w = free_reduce(w)
    core, _ = cyclic_reduce(w)
    assert all(len(x) >= len(core) for x in _conjugates(w, _FREE_POOL))


def test_substitute_examples():
    images = {"u": W("x^-1"), "v": W("y")}
    assert substitute(W("v"), images) == W("y")
    assert substitute(W("u v u^-1 v^-1"), images) == W("x^-1 y x y^-1")
    w = W("u^2 v^-1 u")
    assert substitute(w, {"u": W("u"), "v": W("v")}) == w
    with pytest.raises(KeyError):
        substitute(w, {"u": W("x")})


def test_commutator_examples():
    u = W("u")
    assert commutator(u, GroupWord()) == GroupWord()
    assert commutator(u, W("u^3")) == GroupWord()
    for n in range(1, 6):
        expected = W("u v") ** n * W("u^-1 v^-1") ** n
        assert commutator(u, W("v u") ** n) == expected


@given(words(), words(), st.integers(-5, 5), st.integers(-5, 5))
def test_commutators_abelianize_to_zero(g, h, a, b):
    assert abelianize(commutator(g, h), {"u": a, "v": b}) == 0


def test_abelianize_examples():
    for p, q, a, b in [(3, 2, 1, -1), (7, 5, 3, -4)]:
        assert abelianize(GroupWord((("y", a), ("x", b))), {"x": q, "y": p}) == 1
        assert abelianize(GroupWord.gen("x", p), {"x": q}) == p * q
    with pytest.raises(KeyError):
        abelianize(W("x y"), {"x": 1})


# --- Z_p * Z_q ---------------------------------------------------------------


def test_fp_normal_form_examples():
    nf = fp_normal_form(W("x^4 y^3 x^-1"), 3, 2)
    assert nf.syllables == (("x", 1), ("y", 1), ("x", 2))
    nf = fp_normal_form(W("x^-1 y x y^-1"), 3, 2)
    assert nf.syllables == (("x", 2), ("y", 1), ("x", 1), ("y", 1))
    assert str(nf) == "x^2 y x y"
    assert syllable_length(nf) == 4
    for p, q in PQ:
        assert fp_normal_form(GroupWord.gen("x", p), p, q).is_identity()
    assert syllable_length(FreeProductWord(3, 2)) == 0
    assert syllable_length(FreeProductWord(3, 2, (("x", 1),))) == 1
    with pytest.raises(KeyError):
        fp_normal_form(W("x z"), 3, 2)


def test_fp_word_validation():
    with pytest.raises(ValueError):
        FreeProductWord(4, 2)
    with pytest.raises(ValueError):
        FreeProductWord(3, 2, (("x", 3),))
    with pytest.raises(ValueError):
        FreeProductWord(3, 2, (("x", 1), ("x", 1)))


def _rewrite_oracle(w, p, q):
    """Naive fixed-point rewriting, independent of the stack pass."""
    orders = {"x": p, "y": q}
    letters = [(g, e % orders[g]) for g, e in w.letters]
    changed = True
    while changed:
        changed = False
        out = []
        for g, e in letters:
            if e == 0:
                changed = True
                continue
            if out and out[-1][0] == g:
                out[-1] = (g, (out[-1][1] + e) % orders[g])
                changed = True
            else:
                out.append((g, e))
        letters = out
    return tuple(letters)


pq_pairs = st.sampled_from(PQ)
xy_words = words(gens=("x", "y"), max_len=12, max_exp=9)


@given(xy_words, pq_pairs)
def test_normal_form_matches_rewriting(w, pq):
    assert fp_normal_form(w, *pq).syllables == _rewrite_oracle(w, *pq)


@given(xy_words, xy_words, pq_pairs)
def test_normal_form_multiplicative(w1, w2, pq):
    p, q = pq
    n1, n2 = fp_normal_form(w1, p, q), fp_normal_form(w2, p, q)
    assert fp_normal_form(w1 * w2, p, q) == fp_normal_form(n1.to_word() * n2.to_word(), p, q)
    assert n1 * n2 == fp_normal_form(w1 * w2, p, q)


@given(xy_words, pq_pairs, st.integers(0, 12), st.sampled_from(["x", "y"]), st.integers(-2, 2))
def test_inserting_relators_is_invisible(w, pq, pos, g, k):
    p, q = pq
    pos = min(pos, len(w.letters))
    power = (p if g == "x" else q) * k
    w2 = GroupWord(w.letters[:pos] + ((g, power),) + w.letters[pos:])
    assert fp_normal_form(w2, p, q) == fp_normal_form(w, p, q)


@given(xy_words, pq_pairs)
def test_word_times_inverse_is_trivial(w, pq):
    assert fp_normal_form(w * w.inverse(), *pq).is_identity()
    # concatenation without free reduction, too
    assert fp_normal_form(GroupWord(w.letters + w.inverse().letters), *pq).is_identity()


def test_normal_forms_are_unique_on_small_words():
    # every enumerated normal form is a fixed point and none repeats
    seen = set()
    for w in all_fp_words(3, 2, 5):
        assert fp_normal_form(w.to_word(), 3, 2) == w
        assert w.syllables not in seen
        seen.add(w.syllables)


_FP_POOLS = {pq: list(all_fp_words(*pq, 3)) for pq in [(3, 2), (5, 2)]}


@settings(max_examples=60)
@given(words(gens=("x", "y"), max_len=6, max_exp=4), st.sampled_from([(3, 2), (5, 2)]))
def test_fp_cyclic_reduce_minimal(w, pq):
    p, q = pq
    nf = fp_normal_form(w, p, q)
    core, conj = fp_cyclic_reduce(nf)
    assert conj * core * conj.inverse() == nf
    assert len(core) <= 1 or core.syllables[0][0] != core.syllables[-1][0]
    # brute force over conjugation by every element of <= 3 syllables
    best = min(len(c * nf * c.inverse()) for c in _FP_POOLS[pq])
    assert len(core) <= best
