"""Braid words and the twisted-torus-knot braids.

A braid word on ``strands`` strands is a sequence of nonzero integers:
letter i > 0 is the generator sigma_i (strand i crosses OVER strand
i+1), letter -i is its inverse.  K(p,q,r,n) with r <= p closes the
p-strand word (s_{p-1}...s_1)^q (s_{r-1}...s_1)^{n*r}; the twist block
exponent n*r realizes n FULL twists on r strands.  For r = p+q the
braid lives on p+q strands: n full twists on everything followed by the
q leftmost strands passing under the p rightmost.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import DomainError, UnsupportedRangeError


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if self.strands < 1:
            raise DomainError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not isinstance(x, int) or x == 0 or abs(x) > self.strands - 1:
                raise DomainError(f"letter {x} out of range for {self.strands} strands")

    @property
    def crossing_count(self):
        return len(self.letters)

    @property
    def writhe(self):
        return sum(1 if x > 0 else -1 for x in self.letters)

    def mirror(self):
        """Negate every crossing; the closure is the mirror link."""
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def __mul__(self, other):
        if self.strands != other.strands:
            raise DomainError("cannot concatenate braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def permutation(self):
        """perm[i] = final position of the strand entering at position i."""
        pos = list(range(self.strands))  # pos[j] = strand currently at position j
        for x in self.letters:
            i = abs(x) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        perm = [0] * self.strands
        for j, strand in enumerate(pos):
            perm[strand] = j
        return tuple(perm)

    def component_count(self):
        """Number of components of the closure (cycles of the permutation)."""
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for i in range(self.strands):
            if seen[i]:
                continue
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
        return count

    def is_knot(self):
        return self.component_count() == 1

    def to_text(self):
        body = " ".join(str(x) for x in self.letters)
        return f"B{self.strands}:" + (" " + body if body else "")

    @classmethod
    def from_text(cls, text):
        head, _, body = text.strip().partition(":")
        if not head.startswith("B"):
            raise DomainError(f"bad braid text {text!r}")
        try:
            strands = int(head[1:])
            letters = tuple(int(tok) for tok in body.split())
        except ValueError as exc:
            raise DomainError(f"bad braid text {text!r}") from exc
        return cls(strands, letters)


@dataclass(frozen=True)
class TTKParams:
    """Parameters (p, q, r, cable_m, twist_n) of a twisted torus knot.

    q = 1 and r = 1 are tolerated so that the degenerate small members
    of the Fibonacci unknot family still resolve to braids.
    """

    p: int
    q: int
    r: int
    twist_n: int
    cable_m: int = 1

    def __post_init__(self):
        if self.p < 2 or self.q < 1:
            raise DomainError(f"need p >= 2 and q >= 1, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise DomainError(f"p = {self.p} and q = {self.q} are not coprime")
        if not (1 <= self.r <= self.p + self.q):
            raise DomainError(f"need 1 <= r <= p+q, got r = {self.r}")
        if self.twist_n == 0:
            raise DomainError("twist_n must be nonzero")
        if gcd(self.cable_m, self.twist_n) != 1:
            raise DomainError("cable_m and twist_n must be coprime")

    def label(self):
        if self.cable_m == 1:
            return f"K({self.p},{self.q},{self.r},{self.twist_n})"
        return f"K({self.p},{self.q},{self.r},{self.cable_m},{self.twist_n})"


def _descending_run(top):
    """(sigma_top ... sigma_1) as letters; empty when top < 1."""
    return list(range(top, 0, -1))


def _block_power(run, exponent):
    """run^exponent, a negative exponent giving inverted, reversed copies."""
    if exponent >= 0:
        return run * exponent
    inv = [-x for x in reversed(run)]
    return inv * (-exponent)


def torus_braid(p, q):
    """The (p,q) torus braid on p strands: (sigma_{p-1}...sigma_1)^q."""
    if p < 2:
        raise DomainError("torus braid needs p >= 2")
    return BraidWord(p, _block_power(_descending_run(p - 1), q))


def ttk_braid(params):
    """K(p,q,r,n) with r <= p as a p-strand braid."""
    if params.cable_m != 1:
        raise DomainError("braid construction requires cable_m = 1")
    if params.r > params.p:
        raise DomainError(f"ttk_braid needs r <= p, got r = {params.r}")
    letters = _block_power(_descending_run(params.p - 1), params.q)
    letters += _block_power(_descending_run(params.r - 1),
                            params.twist_n * params.r)
    return BraidWord(params.p, letters)


def pass_under_block(q, p):
    """U(q, p): the q leftmost strands pass across the p rightmost, on
    p+q strands: product for i from q down to 1 of
    (sigma_i sigma_{i+1} ... sigma_{i+p-1}).

    The crossing sign is pinned by requiring the mirror relation between
    K(p,q,p+q,-1) and K(p,p+q,q,+1) to hold exactly on Jones polynomials
    (with negative letters the closure is the mirror of the intended
    knot, and that relation fails).
    """
    letters = []
    for i in range(q, 0, -1):
        letters.extend(range(i, i + p))
    return letters


def ttk_braid_full(params):
    """K(p,q,p+q,n) as a braid on p+q strands: n full twists on all
    strands, then the q leftmost strands pass under the p rightmost."""
    if params.cable_m != 1:
        raise DomainError("braid construction requires cable_m = 1")
    if params.r != params.p + params.q:
        raise DomainError(f"ttk_braid_full needs r = p + q, got r = {params.r}")
    total = params.p + params.q
    letters = _block_power(_descending_run(total - 1), params.twist_n * total)
    letters += pass_under_block(params.q, params.p)
    return BraidWord(total, letters)


def braid_for(params):
    """Dispatch on r: r <= p uses the standard word, r = p+q the
    full-twist word; p < r < p+q is not constructible here."""
    if params.r <= params.p:
        return ttk_braid(params)
    if params.r == params.p + params.q:
        return ttk_braid_full(params)
    raise UnsupportedRangeError(
        f"unsupported range: no braid word for p < r < p+q "
        f"(p = {params.p}, q = {params.q}, r = {params.r})")
