"""Unit ranks of the norm-one groups from signatures alone."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from ..errors import EmptySignature, HypothesisViolated
from ..exact_arith.integers import is_prime


@dataclass(frozen=True)
class Signature:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 0 or self.s < 0:
            raise ValueError("signature entries must be nonnegative")

    @property
    def degree(self) -> int:
        return self.r + 2 * self.s

    def to_json(self):
        return {"r": self.r, "s": self.s}


def dirichlet_rank(sig: Signature) -> int:
    if sig.r == 0 and sig.s == 0:
        raise EmptySignature("signature (0, 0) describes no field")
    return sig.r + sig.s - 1


@dataclass(frozen=True)
class RankReport:
    rank_A_GM: int
    rank_A_GMH: int
    rank_A_E2GM: int
    rank_A_E2M: int
    inequality_holds: bool
    equality_E2_holds: bool
    closed_forms_agree: bool = True

    @property
    def passed(self) -> bool:
        return self.inequality_holds and self.equality_E2_holds and self.closed_forms_agree

    def to_json(self):
        return asdict(self)


def _signature_route(r: int, s: int, p2: int) -> tuple[int, int, int, int]:
    """The four ranks as differences of Dirichlet ranks of the fields involved.

    GM has signature (r, s); adjoining the CM-type quadratic H turns every
    real place complex; the totally real E2 multiplies places by p2.  HM has
    the real and complex counts of GM swapped in the sense (2s, r/2).
    """
    gm = Signature(r, s)
    gmh = Signature(0, r + 2 * s)
    e2gm = Signature(p2 * r, p2 * s)
    top = Signature(0, p2 * (r + 2 * s))
    n = (r + 2 * s) // 2
    e2m = Signature(p2 * n, 0)
    he2m = Signature(2 * p2 * s, p2 * r // 2)
    u_top = dirichlet_rank(top)
    return (
        u_top - dirichlet_rank(gm),
        u_top - dirichlet_rank(gmh),
        u_top - dirichlet_rank(e2gm),
        dirichlet_rank(he2m) - dirichlet_rank(e2m),
    )


def check_rank_inequality(r_GM: int, s_GM: int, p2: int) -> RankReport:
    """rank A_GMH + rank A_E2GM > rank A_GM and rank A_E2M = rank A_E2GM."""
    if s_GM < 1:
        raise HypothesisViolated("s_GM must be at least 1")
    if r_GM < 0:
        raise ValueError("r_GM must be nonnegative")
    if (r_GM + 2 * s_GM) % 2:
        raise ValueError("r_GM + 2 s_GM must be even")
    if p2 < 3 or p2 % 2 == 0 or not is_prime(p2):
        raise ValueError("p2 must be an odd prime")
    r, s, p = r_GM, s_GM, p2
    a_gm = p * r + 2 * p * s - r - s
    a_gmh = p * r + 2 * p * s - r - 2 * s
    a_e2gm = p * s
    a_e2m = p * s
    agree = (a_gm, a_gmh, a_e2gm, a_e2m) == _signature_route(r, s, p)
    return RankReport(a_gm, a_gmh, a_e2gm, a_e2m, a_gmh + a_e2gm > a_gm, a_e2m == a_e2gm, agree)


def rank_grid(n_max: int = 8, p2s=(3, 5, 7)):
    """Every (r, s, p2) with r + 2s = 2n, 1 <= n <= n_max, s >= 1."""
    for p2 in p2s:
        for n in range(1, n_max + 1):
            for s in range(1, n + 1):
                yield 2 * n - 2 * s, s, p2
