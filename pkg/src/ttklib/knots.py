"""Horadam twisted torus knots and their knot-type bookkeeping.

Three consecutive terms of an (m,n)-Horadam sequence can be arranged as
K(p,q,r,+-1) in six essentially distinct ways (types 1-6).  This module
resolves those types to parameters, computes surface slopes, decides
torus-knot membership via the three closed-form detection theorems, and
verifies the isotopy/mirror statements by comparing braid-closure
invariants.  Equal invariants corroborate a claim; unequal invariants
falsify the implementation, so verification reports carry a hard
verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .braids import TTKParams, braid_for
from .errors import BudgetError, DomainError
from .horadam import HoradamSpec, fibonacci, is_maximal_pair
from .invariants import (DEFAULT_CROSSING_BUDGET, DEFAULT_STRAND_LIMIT,
                         DEFAULT_TL_OPS, alexander, jones, torus_alexander)

# type index -> (p, q, r, sign) as offsets into the Horadam sequence
_TYPE_TABLE = {
    1: (2, 0, 1, -1),
    2: (2, 0, 1, +1),
    3: (2, 1, 0, -1),
    4: (2, 1, 0, +1),
    5: (1, 0, 2, -1),
    6: (1, 0, 2, +1),
}


@dataclass(frozen=True)
class HoradamTTK:
    seed_m: int
    seed_n: int
    k: int
    type_index: int

    def __post_init__(self):
        if self.type_index not in _TYPE_TABLE:
            raise DomainError(f"type index must be 1..6, got {self.type_index}")
        if self.seed_m < 1 or self.seed_n < 1 or gcd(self.seed_m, self.seed_n) != 1:
            raise DomainError("seeds must be positive and coprime")
        if self.k < 0:
            raise DomainError("index k must be >= 0")


def resolve(h, strict=True):
    """TTKParams of a Horadam twisted torus knot.  With strict=True the
    smallest parameter must be at least 2 (degenerate seeds rejected)."""
    dp, dq, dr, sign = _TYPE_TABLE[h.type_index]
    seq = HoradamSpec(h.seed_m, h.seed_n).terms(h.k + 3)
    p, q, r = seq[h.k + dp], seq[h.k + dq], seq[h.k + dr]
    if strict and min(p, q, r) < 2:
        raise DomainError(
            f"degenerate Horadam parameters (H_{h.k} = {seq[h.k]} < 2)")
    return TTKParams(p=p, q=q, r=r, twist_n=sign)


def surface_slope(params):
    """Integer framing induced by the genus-2 surface: p*q + n*r^2."""
    if params.cable_m != 1:
        raise DomainError("surface slope is implemented for cable_m = 1")
    return params.p * params.q + params.twist_n * params.r ** 2


@dataclass(frozen=True)
class TorusMatch:
    matched: bool
    a: int | None = None
    b: int | None = None
    torus_p: int | None = None
    torus_q: int | None = None  # negative value encodes the mirror


def lee_torus_pos(p, q, r, s):
    """Positive-twist detection: K(p,q,r,s) with s >= 1 full positive
    twists is a torus knot iff (p,q,r,s) = (ab+1, b, b-1, 1) for some
    a >= 1, b >= 3."""
    if not (2 <= q < p and gcd(p, q) == 1):
        raise DomainError("out of theorem scope: need 2 <= q < p coprime")
    if not (2 <= r <= p + q) or r == p or r % q == 0:
        raise DomainError("out of theorem scope: need 2 <= r <= p+q, r != p, q does not divide r")
    if s < 1:
        raise DomainError("out of theorem scope: need s >= 1")
    if s == 1 and r == q - 1 and q >= 3 and (p - 1) % q == 0 and (p - 1) // q >= 1:
        return TorusMatch(True, a=(p - 1) // q, b=q)
    return TorusMatch(False)


def lee_torus_neg_kq(p, q, k):
    """Negative-twist detection at r = p - kq with 2 <= p-kq < q:
    torus iff (p, q, p-kq) = ((a+1)b - 1, b, b-1), a >= 1, b >= 3."""
    if not (2 <= q < p and gcd(p, q) == 1 and k >= 1):
        raise DomainError("out of theorem scope: need 2 <= q < p coprime, k >= 1")
    r = p - k * q
    if not (2 <= r < q):
        raise DomainError(f"out of theorem scope: need 2 <= p-kq < q, got {r}")
    if q >= 3 and r == q - 1 and (p + 1) % q == 0 and (p + 1) // q - 1 >= 1:
        return TorusMatch(True, a=(p + 1) // q - 1, b=q)
    return TorusMatch(False)


def lee_torus_qsmall(p, q):
    """Detection for K(p,q,p-q,-1) with q < p-q, by scanning the two
    Fibonacci-coefficient families.  A match names T(a+1, (-1)^b a).

    The second family is scanned from a = 1 rather than a = 2: at a = 1
    it degenerates to the Fibonacci triples (F_{b+3}, F_{b+1}, F_{b+2}),
    whose knots are unknots, reported as the trivial torus knot T(2,
    +-1).  Counting those keeps the detection aligned with the
    maximal-pair correspondence (consecutive-Fibonacci seeds are
    maximal pairs)."""
    if not (p >= 3 and q >= 2 and gcd(p, q) == 1 and q < p - q):
        raise DomainError("out of theorem scope: need p >= 3, q >= 2 coprime, q < p-q")
    r = p - q
    # family 1: (a F_{b+3} - F_{b+2}, a F_{b+1} - F_b, a F_{b+2} - F_{b+1})
    b = 1
    while fibonacci(b + 1) <= q + fibonacci(b):
        fb, fb1 = fibonacci(b), fibonacci(b + 1)
        num = q + fb
        if num % fb1 == 0:
            a = num // fb1
            if (a >= 2 and (a, b) != (2, 1)
                    and a * fibonacci(b + 3) - fibonacci(b + 2) == p
                    and a * fibonacci(b + 2) - fibonacci(b + 1) == r):
                return TorusMatch(True, a=a, b=b, torus_p=a + 1,
                                  torus_q=a if b % 2 == 0 else -a)
        b += 1
    # family 2: (a F_{b+1} + F_{b+2}, a F_{b-1} + F_b, a F_b + F_{b+1})
    b = 2
    while fibonacci(b) < q:
        fbm, fb = fibonacci(b - 1), fibonacci(b)
        num = q - fb
        if num > 0 and num % fbm == 0:
            a = num // fbm
            if (a >= 1
                    and a * fibonacci(b + 1) + fibonacci(b + 2) == p
                    and a * fb + fibonacci(b + 1) == r):
                return TorusMatch(True, a=a, b=b, torus_p=a + 1,
                                  torus_q=a if b % 2 == 0 else -a)
        b += 1
    return TorusMatch(False)


@dataclass
class CorollaryReport:
    seed_m: int
    seed_n: int
    maximal: bool
    per_k: list  # (k, matched)
    consistent: bool


def corollary_maximal_pair_check(seed_m, seed_n, k_max):
    """The type-1 knot K(H_{k+2}, H_k, H_{k+1}, -1) is a torus knot
    exactly when (m, n) is a maximal pair; checked for k <= k_max."""
    if not (1 < seed_m < seed_n) or gcd(seed_m, seed_n) != 1:
        raise DomainError("need coprime seeds with 1 < m < n")
    maximal = is_maximal_pair(seed_m, seed_n)
    seq = HoradamSpec(seed_m, seed_n).terms(k_max + 3)
    per_k = []
    consistent = True
    for k in range(k_max + 1):
        match = lee_torus_qsmall(seq[k + 2], seq[k])
        per_k.append((k, match.matched))
        if match.matched != maximal:
            consistent = False
    return CorollaryReport(seed_m, seed_n, maximal, per_k, consistent)


def type1_reduce(seed_m, seed_n, k):
    """One step of the type-1 reduction: K(H_{k+2}, H_k, H_{k+1}, -1)
    is the mirror image of K(H_{k+1}, H_{k-1}, H_k, -1).  Returns the
    reduced knot (index k-1) and the mirror flag (always True: each
    step contributes one mirror, so parity after k steps is (-1)^k)."""
    if k < 1:
        raise DomainError("reduction needs k >= 1")
    return HoradamTTK(seed_m, seed_n, k - 1, 1), True


# ----------------------------------------------------------------------
# Invariant-based lemma verification
# ----------------------------------------------------------------------

@dataclass
class Limits:
    crossing_budget: int = DEFAULT_CROSSING_BUDGET
    strand_limit: int = DEFAULT_STRAND_LIMIT
    tl_ops: int = DEFAULT_TL_OPS


@dataclass
class VerificationReport:
    claim: str
    params: dict
    invariants: dict  # e.g. {"alexander": "equal", "jones": "mirror"|"skipped"}
    verdict: str      # "consistent" or "inconsistent"
    details: list = field(default_factory=list)

    def to_json_dict(self):
        return {"claim": self.claim, "params": self.params,
                "invariants": self.invariants, "verdict": self.verdict}


def _normalized_params(p, q, r, n):
    """Apply the p/q swap so the braid constructors apply."""
    if q > p:
        p, q = q, p
    return TTKParams(p=p, q=q, r=r, twist_n=n)


def _jones_or_none(word, limits):
    try:
        return jones(word, "tl", strand_limit=limits.strand_limit,
                     tl_ops=limits.tl_ops)
    except BudgetError:
        return None


def _compare_pair(word_a, word_b, relation, limits):
    """Compare Alexander (always) and Jones (budget permitting) of two
    braid closures under the asserted relation "equal" or "mirror"."""
    alex_a, alex_b = alexander(word_a), alexander(word_b)
    inv = {"alexander": "equal" if alex_a == alex_b else "unequal"}
    ok = alex_a == alex_b
    va, vb = _jones_or_none(word_a, limits), _jones_or_none(word_b, limits)
    if va is None or vb is None:
        inv["jones"] = "skipped"
    else:
        target = va if relation == "equal" else va.mirrored()
        if vb == target:
            inv["jones"] = relation
        else:
            inv["jones"] = "mismatch"
            ok = False
    return inv, ok


def verify_lemma7(p, q, limits=None):
    """K(p,q,p-q,+1) isotopic to K(p,p-q,q,+1), for coprime p > 2q."""
    limits = limits or Limits()
    if not (p > 2 * q and q >= 2 and gcd(p, q) == 1):
        raise DomainError("lemma 7 needs coprime p, q >= 2 with p > 2q")
    wa = braid_for(TTKParams(p=p, q=q, r=p - q, twist_n=1))
    wb = braid_for(TTKParams(p=p, q=p - q, r=q, twist_n=1))
    inv, ok = _compare_pair(wa, wb, "equal", limits)
    return VerificationReport("lemma7", {"p": p, "q": q}, inv,
                              "consistent" if ok else "inconsistent")


def verify_lemma8(p, q, limits=None):
    """K(p,q,p+q,-1) is the mirror image of K(p,p+q,q,+1), p > q."""
    limits = limits or Limits()
    if not (p > q >= 2 and gcd(p, q) == 1):
        raise DomainError("lemma 8 needs coprime p > q >= 2")
    wa = braid_for(TTKParams(p=p, q=q, r=p + q, twist_n=-1))
    wb = braid_for(_normalized_params(p, p + q, q, 1))
    inv, ok = _compare_pair(wa, wb, "mirror", limits)
    return VerificationReport("lemma8", {"p": p, "q": q}, inv,
                              "consistent" if ok else "inconsistent")


def verify_lemma9(seed_m, seed_n, k, limits=None):
    """K(H_{k+3}, H_{k+2}, H_{k+1}, -1) isotopic to
    K(H_{k+1}, H_k, H_{k+2}, +1)."""
    limits = limits or Limits()
    if seed_m < 1 or seed_n < 1 or gcd(seed_m, seed_n) != 1 or k < 0:
        raise DomainError("lemma 9 needs positive coprime seeds and k >= 0")
    H = HoradamSpec(seed_m, seed_n).terms(k + 4)
    wa = braid_for(TTKParams(p=H[k + 3], q=H[k + 2], r=H[k + 1], twist_n=-1))
    wb = braid_for(TTKParams(p=H[k + 1], q=H[k], r=H[k + 2], twist_n=1))
    inv, ok = _compare_pair(wa, wb, "equal", limits)
    return VerificationReport("lemma9", {"m": seed_m, "n": seed_n, "k": k},
                              inv, "consistent" if ok else "inconsistent")


def verify_prop12_1(seed_m, seed_n, k_max, limits=None):
    """The type-1 reduction chain: each K(H_{k+2}, H_k, H_{k+1}, -1) has
    the Alexander polynomial of its reduction (Alexander is mirror
    blind), and the Jones polynomials are mirror images step by step."""
    limits = limits or Limits()
    if seed_m < 1 or seed_n < 1 or gcd(seed_m, seed_n) != 1 or k_max < 1:
        raise DomainError("need positive coprime seeds and k_max >= 1")
    H = HoradamSpec(seed_m, seed_n).terms(k_max + 3)
    words = [braid_for(TTKParams(p=H[k + 2], q=H[k], r=H[k + 1], twist_n=-1))
             for k in range(k_max + 1)]
    details = []
    ok = True
    jones_overall = "skipped"
    for k in range(k_max, 0, -1):
        inv, step_ok = _compare_pair(words[k], words[k - 1], "mirror", limits)
        details.append({"k": k, **inv})
        ok = ok and step_ok
        if inv["jones"] in ("mirror", "mismatch") and jones_overall == "skipped":
            jones_overall = inv["jones"]
        if inv["jones"] == "mismatch":
            jones_overall = "mismatch"
    alex_overall = ("equal" if all(d["alexander"] == "equal" for d in details)
                    else "unequal")
    return VerificationReport(
        "prop12-1", {"m": seed_m, "n": seed_n, "k_max": k_max},
        {"alexander": alex_overall, "jones": jones_overall},
        "consistent" if ok else "inconsistent", details)


def verify_corollary(seed_m, seed_n, k_max):
    """Corollary wrapper producing a verification report."""
    rep = corollary_maximal_pair_check(seed_m, seed_n, k_max)
    return VerificationReport(
        "corollary", {"m": seed_m, "n": seed_n, "k_max": k_max},
        {"maximal": rep.maximal,
         "torus": [m for _, m in rep.per_k]},
        "consistent" if rep.consistent else "inconsistent",
        [{"k": k, "torus": m} for k, m in rep.per_k])


def verify_lemma(which, params, limits=None):
    """Dispatch by claim name; ``params`` is a mapping of arguments."""
    if which == "lemma7":
        return verify_lemma7(params["p"], params["q"], limits)
    if which == "lemma8":
        return verify_lemma8(params["p"], params["q"], limits)
    if which == "lemma9":
        return verify_lemma9(params["m"], params["n"], params.get("k", 0), limits)
    if which in ("prop12-1", "prop12_1"):
        return verify_prop12_1(params["m"], params["n"], params.get("k_max", 1), limits)
    if which == "corollary":
        return verify_corollary(params["m"], params["n"], params.get("k_max", 1))
    raise DomainError(f"unknown claim {which!r}")


def torus_alexander_matches(params, match):
    """Cross-check a qsmall torus detection: the braid's Alexander must
    equal the named torus knot's (mirror-blind)."""
    if not match.matched:
        raise DomainError("no torus match to check")
    delta = alexander(braid_for(params))
    return delta == torus_alexander(match.torus_p, abs(match.torus_q))
