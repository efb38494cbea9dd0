"""Congruence classification of twisted torus knots.

The primitive/primitive predicate on a triple (p,q,r) is
    r = +-1 or +-q (mod p)  and  r = +-1 or +-p (mod q),
middle-Seifert (with respect to the first handlebody) needs a witness
beta with 2 <= beta < p/q and r = +-beta*q (mod p), and primitivity
with respect to the second handlebody is r = +-1 or +-p (mod q).  The
closed-form families are enumerated exactly as parameterized, and the
censuses compare them against the predicates, which are always the
ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError


@dataclass(frozen=True, order=True)
class Triple:
    """A normalized parameter triple: p > q >= 2 coprime, 2 <= r <= p+q."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.q < 2 or self.p <= self.q:
            raise DomainError(f"need p > q >= 2, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise DomainError(f"({self.p}, {self.q}) are not coprime")
        if not (2 <= self.r <= self.p + self.q):
            raise DomainError(f"need 2 <= r <= p+q, got r = {self.r}")


def normalized_triple(p, q, r):
    """Swap p and q if needed (the two orders give the same knot type)
    and validate; returns None for parameter combinations outside the
    triple domain."""
    if q > p:
        p, q = q, p
    if q < 2 or p == q or gcd(p, q) != 1 or not (2 <= r <= p + q):
        return None
    return Triple(p, q, r)


@dataclass(frozen=True)
class FamilyMatch:
    theorem: str  # "pp" or "ps"
    family_index: int
    witness: dict

    def __post_init__(self):
        object.__setattr__(self, "witness", dict(self.witness))

    def to_json_dict(self):
        return {"index": self.family_index, "witness": dict(sorted(self.witness.items()))}


# ----------------------------------------------------------------------
# Predicates
# ----------------------------------------------------------------------

def is_pp(t):
    """Primitive/primitive congruence test."""
    rp = t.r % t.p
    rq = t.r % t.q
    ok_p = rp in {1 % t.p, (-1) % t.p, t.q % t.p, (-t.q) % t.p}
    ok_q = rq in {1 % t.q, (-1) % t.q, t.p % t.q, (-t.p) % t.q}
    return ok_p and ok_q


def is_primitive_Hprime(t):
    """Primitive with respect to the second handlebody:
    r = +-1 or +-p (mod q)."""
    rq = t.r % t.q
    return rq in {1 % t.q, (-1) % t.q, t.p % t.q, (-t.p) % t.q}


def middle_seifert_beta(t):
    """Least beta with 2 <= beta < p/q and r = +-beta*q (mod p), or
    None when no witness exists (the range is empty whenever p < 2q)."""
    rp = t.r % t.p
    beta = 2
    while beta * t.q < t.p:
        bq = beta * t.q % t.p
        if rp == bq or rp == (-bq) % t.p:
            return beta
        beta += 1
    return None


def is_p_hyperseifert(params):
    """Hyper-Seifert w.r.t. the first handlebody and primitive w.r.t.
    the second: |cable_m| > 1 with a primitive/primitive triple."""
    t = normalized_triple(params.p, params.q, params.r)
    if t is None:
        raise DomainError(f"{params.label()} is outside the triple domain")
    return abs(params.cable_m) > 1 and is_pp(t)


# ----------------------------------------------------------------------
# Family enumerators
# ----------------------------------------------------------------------

def _emit(acc, p, q, r, theorem, index, witness):
    t = normalized_triple(p, q, r)
    if t is None:
        return
    acc.setdefault(t, []).append(FamilyMatch(theorem, index, witness))


def pp_families(bound):
    """All primitive/primitive family triples with normalized p <= bound,
    mapped to the family matches that produce them (duplicates kept)."""
    if bound < 3:
        raise DomainError("bound must be >= 3")
    acc = {}
    for p in range(3, bound + 1):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            _emit(acc, p, q, p + q, "pp", 1, {"p": p, "q": q})
            if p - q >= 2:
                _emit(acc, p, q, p - q, "pp", 2, {"p": p, "q": q})
    for j in range(1, (bound - 1) // 2 + 1):
        q = 2 * j + 1
        if q > bound:
            break
        for delta in (1, -1):
            i = 0
            while True:
                p = 2 * i * j + i + j + (1 + delta) // 2
                if p > bound and p > q:
                    break
                r = 2 * i * j + i + j + (1 - delta) // 2
                if max(p, q) <= bound:
                    _emit(acc, p, q, r, "pp", 3, {"i": i, "j": j, "delta": delta})
                i += 1
        for eps in (1, -1):
            p = 3 * j + 1 + (1 + eps) // 2
            r = 4 * j + 2 + eps
            if max(p, q) <= bound:
                _emit(acc, p, q, r, "pp", 4, {"j": j, "eps": eps})
        for eps in (1, -1):
            k = 1
            while True:
                p = 2 * j * k + k + 2 * eps
                if p > bound and p > q:
                    break
                r = 2 * j * k + k + eps
                if max(p, q) <= bound and (j, k, eps) != (1, 1, -1):
                    _emit(acc, p, q, r, "pp", 5, {"j": j, "k": k, "eps": eps})
                k += 1
    return acc


def ps_families(bound):
    """Primitive/middle-Seifert family triples with normalized p <= bound.
    Family-generated triples that fail the beta-existence predicate are
    kept and reported by the census as flagged instances."""
    if bound < 5:
        raise DomainError("bound must be >= 5")
    acc = {}
    for p in range(3, bound + 1):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            k = 2
            while k * q < p:
                _emit(acc, p, q, p - k * q, "ps", 1, {"p": p, "q": q, "k": k})
                k += 1
    for p in range(4, bound + 1):
        i = p % 3
        if i in (1, 2):
            _emit(acc, p, 3, p + i, "ps", 2, {"p": p, "i": i})
    for j in range(1, (bound - 1) // 2 + 1):
        q = 2 * j + 1
        if q > bound:
            break
        for eps in (1, -1):
            i = 1
            while True:
                p = i * q + j + (1 + eps) // 2
                if p > bound:
                    break
                r = (i + 1) * q + eps
                _emit(acc, p, q, r, "ps", 3, {"i": i, "j": j, "eps": eps})
                i += 1
    return acc


def pp_family_formula(index, witness):
    """Raw (p, q, r) produced by a pp family formula at the witness
    parameters, before the p/q swap normalization."""
    w = witness
    if index == 1:
        return w["p"], w["q"], w["p"] + w["q"]
    if index == 2:
        return w["p"], w["q"], w["p"] - w["q"]
    if index == 3:
        i, j, d = w["i"], w["j"], w["delta"]
        return (2 * i * j + i + j + (1 + d) // 2, 2 * j + 1,
                2 * i * j + i + j + (1 - d) // 2)
    if index == 4:
        j, e = w["j"], w["eps"]
        return 3 * j + 1 + (1 + e) // 2, 2 * j + 1, 4 * j + 2 + e
    if index == 5:
        j, k, e = w["j"], w["k"], w["eps"]
        return 2 * j * k + k + 2 * e, 2 * j + 1, 2 * j * k + k + e
    raise DomainError(f"no pp family {index}")


def ps_family_formula(index, witness):
    """Raw (p, q, r) produced by a ps family formula at the witness."""
    w = witness
    if index == 1:
        return w["p"], w["q"], w["p"] - w["k"] * w["q"]
    if index == 2:
        return w["p"], 3, w["p"] + w["i"]
    if index == 3:
        i, j, e = w["i"], w["j"], w["eps"]
        q = 2 * j + 1
        return i * q + j + (1 + e) // 2, q, (i + 1) * q + e
    raise DomainError(f"no ps family {index}")


def ps_flag_shape(triple, match):
    """Classify a predicate-invalid family instance into the two known
    small-parameter shapes; None if it fits neither."""
    if match.family_index == 2 and triple.p < 7:
        return "family2-p<7"
    if match.family_index == 3 and match.witness.get("i") == 1:
        return "family3-i=1"
    return None


# ----------------------------------------------------------------------
# Censuses
# ----------------------------------------------------------------------

def all_triples(bound):
    """Every valid normalized triple with p <= bound, sorted."""
    out = []
    for p in range(3, bound + 1):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            for r in range(2, p + q + 1):
                out.append(Triple(p, q, r))
    return out


@dataclass
class CensusReport:
    kind: str
    bound: int
    missing: list  # predicate-true triples not covered by any family
    extra: list    # family triples (predicate-valid for ps) outside the predicate set
    flagged: list  # (triple, match, shape) for predicate-invalid family instances

    @property
    def ok(self):
        if self.kind == "pp":
            return not self.missing and not self.extra
        return not self.missing and all(shape for _, _, shape in self.flagged)

    def summary(self):
        if self.kind == "pp":
            return f"pp: {len(self.missing)} missing, {len(self.extra)} extra"
        shapes = {}
        for _, _, shape in self.flagged:
            shapes[shape or "unexpected"] = shapes.get(shape or "unexpected", 0) + 1
        parts = ", ".join(f"{k}: {v}" for k, v in sorted(shapes.items()))
        return (f"ps: {len(self.missing)} uncovered, {len(self.flagged)} flagged"
                + (f" ({parts})" if parts else ""))


def pp_census(bound):
    """Exhaustive comparison of the pp predicate against the five-family
    union; both difference sets should be empty."""
    fam = pp_families(bound)
    missing, extra = [], []
    for t in all_triples(bound):
        pred = is_pp(t)
        cov = t in fam
        if pred and not cov:
            missing.append(t)
        if cov and not pred:
            extra.append(t)
    return CensusReport("pp", bound, missing, extra, [])


def ps_census(bound):
    """Comparison of the middle-Seifert/primitive predicate against the
    three-family union.  Predicate-true triples must all be covered;
    family instances failing the predicate are flagged with their shape."""
    fam = ps_families(bound)
    missing = []
    for t in all_triples(bound):
        if middle_seifert_beta(t) is not None and is_primitive_Hprime(t):
            if t not in fam:
                missing.append(t)
    flagged = []
    for t, matches in sorted(fam.items()):
        if middle_seifert_beta(t) is not None and is_primitive_Hprime(t):
            continue
        for m in matches:
            flagged.append((t, m, ps_flag_shape(t, m)))
    return CensusReport("ps", bound, missing, [], flagged)


def census_rows(bound):
    """One classification row per valid triple, sorted; the row schema
    is shared by the JSON-lines and CSV census outputs."""
    pp_fam = pp_families(bound)
    ps_fam = ps_families(bound)
    for t in all_triples(bound):
        beta = middle_seifert_beta(t)
        ps_ok = beta is not None and is_primitive_Hprime(t)
        flags = []
        for m in ps_fam.get(t, []):
            if not ps_ok:
                shape = ps_flag_shape(t, m)
                flags.append(f"predicate-invalid:{shape or 'unexpected'}")
        yield {
            "p": t.p,
            "q": t.q,
            "r": t.r,
            "pp": is_pp(t),
            "pp_families": [m.to_json_dict() for m in pp_fam.get(t, [])],
            "ps": ps_ok,
            "ps_beta": beta,
            "ps_families": [m.to_json_dict() for m in ps_fam.get(t, [])],
            "flags": flags,
        }
