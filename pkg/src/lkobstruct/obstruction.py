"""Triviality obstruction for the slope relators in the torus-knot group.

Pipeline: slope c/d -> relator [u, omega] in u, v -> substitute into x, y ->
project to Z_p * Z_q -> count syllables.  A nonzero slope always gives 2|c|
syllables; the zero slope gives the identity.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

from .slopes import SlopeParam, slope_relator
from .words import (
    FreeProductWord,
    GroupWord,
    abelianize,
    fp_cyclic_reduce,
    fp_normal_form,
    substitute,
)

log = logging.getLogger(__name__)

# Substitution conventions for (u, v) in terms of (x, y).
PROOF = "proof"        # u -> x^b,  v -> y^a
PRESENTATION = "presentation"  # u -> x^-b, v -> y^-a
CONVENTIONS = (PROOF, PRESENTATION)

DEFAULT_PQ = ((3, 2), (5, 2), (5, 3), (7, 2), (7, 3), (7, 5), (11, 2))


class ParameterError(ValueError):
    """Invalid torus-knot parameters."""


class ObstructionInvariantError(AssertionError):
    """The syllable count of a relator differs from 2|c|."""


@dataclass(frozen=True)
class TorusKnotParams:
    p: int
    q: int
    a: int
    b: int

    def __post_init__(self):
        p, q, a, b = self.p, self.q, self.a, self.b
        if not p > q > 1:
            raise ParameterError("need p > q > 1")
        if gcd(p, q) != 1:
            raise ParameterError("p,q must be coprime")
        if a * p + b * q != 1 or not 0 < a < q:
            raise ParameterError("(a, b) must satisfy ap + bq = 1 with 0 < a < q")


def torus_params(p: int, q: int) -> TorusKnotParams:
    """The unique (a, b) with ap + bq = 1 and 0 < a < q."""
    if not p > q > 1:
        raise ParameterError("need p > q > 1")
    if gcd(p, q) != 1:
        raise ParameterError("p,q must be coprime")
    a = pow(p, -1, q)
    b = (1 - a * p) // q
    return TorusKnotParams(p, q, a, b)


def parse_pq(text: str) -> TorusKnotParams:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParameterError(f"cannot parse p,q from {text!r}") from exc
    return torus_params(p, q)


def uv_images(t: TorusKnotParams, convention: str = PROOF) -> Dict[str, GroupWord]:
    if convention == PROOF:
        return {"u": GroupWord.gen("x", t.b), "v": GroupWord.gen("y", t.a)}
    if convention == PRESENTATION:
        return {"u": GroupWord.gen("x", -t.b), "v": GroupWord.gen("y", -t.a)}
    raise ValueError(f"unknown convention {convention!r}")


def relator_in_xy(s: SlopeParam, t: TorusKnotParams, convention: str = PROOF) -> GroupWord:
    return substitute(slope_relator(s), uv_images(t, convention))


def meridian_word(t: TorusKnotParams) -> GroupWord:
    """[mu_J] = y^a x^b."""
    return GroupWord((("y", t.a), ("x", t.b)))


def abelian_weights(t: TorusKnotParams) -> Dict[str, int]:
    return {"x": t.q, "y": t.p}


@dataclass(frozen=True)
class ObstructionReport:
    params: TorusKnotParams
    slope: SlopeParam
    relator_uv: GroupWord
    relator_xy: GroupWord
    normal_form: FreeProductWord
    syllable_count: int
    nontrivial: bool
    convention: str = PROOF

    def to_dict(self) -> dict:
        return {
            "p": self.params.p,
            "q": self.params.q,
            "a": self.params.a,
            "b": self.params.b,
            "c": self.slope.c,
            "d": self.slope.d,
            "relator_uv": str(self.relator_uv),
            "relator_xy": str(self.relator_xy),
            "normal_form": str(self.normal_form),
            "syllables": self.syllable_count,
            "nontrivial": self.nontrivial,
            "requires_external_diffeomorphism": False,
            "convention": self.convention,
        }

    def render(self) -> str:
        t, s = self.params, self.slope
        verdict = "nontrivial" if self.nontrivial else "trivial"
        return "\n".join([
            f"(p,q) = ({t.p},{t.q})   (a,b) = ({t.a},{t.b})   slope c/d = {s}",
            f"[V_{s}] in u,v : {self.relator_uv}",
            f"[V_{s}] in x,y : {self.relator_xy}   ({self.convention} convention)",
            f"rho([V_{s}])   : {self.normal_form}   in Z_{t.p} * Z_{t.q}",
            f"syllables      : {self.syllable_count}",
            f"verdict        : {verdict}",
        ])


def obstruct_triviality(s: SlopeParam, t: TorusKnotParams, convention: str = PROOF,
                        strict: bool = True) -> ObstructionReport:
    ruv = slope_relator(s)
    rxy = substitute(ruv, uv_images(t, convention))
    nf = fp_normal_form(rxy, t.p, t.q)
    n = len(nf)
    report = ObstructionReport(t, s, ruv, rxy, nf, n, n > 0, convention)
    if strict:
        expected = 2 * abs(s.c)
        if n != expected:
            log.error("syllable count %d != %d for slope %s, (p,q)=(%d,%d): %s",
                      n, expected, s, t.p, t.q, rxy)
            raise ObstructionInvariantError(
                f"slope {s}, (p,q)=({t.p},{t.q}): {n} syllables, expected {expected}; word {rxy}")
    return report


def is_cyclically_reduced_fp(nf: FreeProductWord) -> bool:
    core, _ = fp_cyclic_reduce(nf)
    return len(core) == len(nf)


def kernel_distinctness_certificate(s1: SlopeParam, s2: SlopeParam, t: TorusKnotParams) -> dict:
    """Computable part of the kernel comparison for two slopes.

    Equal slopes give equal kernels.  When exactly one slope is zero the
    nontriviality of the other relator already separates the kernels.  Two
    distinct nonzero slopes need an external diffeomorphism that moves one of
    them to the zero slope; that step is recorded as an assumption only.
    """
    r1 = obstruct_triviality(s1, t)
    r2 = obstruct_triviality(s2, t)
    same = s1 == s2
    one_zero = (s1.c == 0) != (s2.c == 0)
    external = (not same) and s1.c != 0 and s2.c != 0
    if same:
        verdict, basis = "equal", "identical slopes"
    elif one_zero:
        verdict = "distinct"
        basis = "the nonzero slope's relator is nontrivial in pi_1(Z_0); the zero slope's is trivial"
    else:
        verdict = "distinct"
        basis = "assumes the external diffeomorphism Z_{c/d} -> Z_0; not computed here"
    return {
        "p": t.p, "q": t.q, "a": t.a, "b": t.b,
        "slope1": str(s1), "slope2": str(s2),
        "relator1_xy": str(r1.relator_xy), "relator2_xy": str(r2.relator_xy),
        "normal_form1": str(r1.normal_form), "normal_form2": str(r2.normal_form),
        "nontrivial1": r1.nontrivial, "nontrivial2": r2.nontrivial,
        "relators_identical": r1.relator_xy == r2.relator_xy,
        "kernels": verdict,
        "basis": basis,
        "requires_external_diffeomorphism": external,
    }


# ---------------------------------------------------------------------------
# Sweeps


def sweep_slopes(cmax: int, extra_d: int = 9, include_negative: bool = True) -> List[SlopeParam]:
    """All valid slopes with 0 < |c| <= cmax and 1 <= d <= 2|c| + extra_d."""
    out = []
    for c in range(2, cmax + 1, 2):
        for d in range(1, 2 * c + extra_d + 1):
            if gcd(c, d) == 1:
                out.append(SlopeParam(c, d))
                if include_negative:
                    out.append(SlopeParam(-c, d))
    return sorted(out, key=lambda s: (s.c, s.d))


def _sweep_one(args: Tuple[int, int, Sequence[Tuple[int, int]]]) -> List[dict]:
    p, q, slopes = args
    t = torus_params(p, q)
    rows = []
    for c, d in slopes:
        s = SlopeParam(c, d)
        r = obstruct_triviality(s, t)
        rows.append({
            "p": p, "q": q, "c": c, "d": d,
            "syllables": r.syllable_count,
            "nontrivial": r.nontrivial,
            "cyclically_reduced": is_cyclically_reduced_fp(r.normal_form),
            "abelian": abelianize(r.relator_xy, abelian_weights(t)),
        })
    return rows


def run_sweep(pq: Iterable[Tuple[int, int]] = DEFAULT_PQ, cmax: int = 20, pmax: int | None = None,
              parallelism: int = 1) -> List[dict]:
    """Obstruction report rows for every (p,q) and slope, sorted by (p,q,c,d).

    Raises :class:`ObstructionInvariantError` on the first slope whose
    syllable count is not 2|c|.
    """
    pairs = sorted(x for x in pq if pmax is None or x[0] <= pmax)
    slopes = [(s.c, s.d) for s in sweep_slopes(cmax)]
    jobs = [(p, q, slopes) for p, q in pairs]
    if parallelism > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as ex:
            chunks = list(ex.map(_sweep_one, jobs))
    else:
        chunks = [_sweep_one(j) for j in jobs]
    rows = [r for chunk in chunks for r in chunk]
    rows.sort(key=lambda r: (r["p"], r["q"], r["c"], r["d"]))
    return rows
