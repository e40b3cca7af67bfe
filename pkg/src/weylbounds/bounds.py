"""Explicit upper bounds for dim H^1(G, V), G finite of Lie type.

Generic-h formulas use the exponents ``floor(h^3/6)`` and ``ceil(h^2/2)``;
halved quantities are rounded up.  Both choices keep every output an integer
upper bound.  Everything is exact integer arithmetic except the log columns
of the growth table.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional

from .errors import DomainError
from .jantzen import floor_cube_log, geometric_sum
from .rootsys import RootSystemSpec, build
from .weights import is_prime

TWISTS = ("untwisted", "graph-twisted", "ree-suzuki")
REE_SUZUKI_SHAPES = {("B", 2, 2), ("G", 2, 3), ("F", 4, 2)}
CASE_TAGS = ("ReeSuzuki", "BNP-i", "BNP-ii", "small-q-a", "small-q-b", "blanket")


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


def _check_h(h: int) -> None:
    if not isinstance(h, int) or h < 2:
        raise DomainError(f"Coxeter number must be an integer >= 2, got {h!r}")


def _check_p(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"p={p!r} is not a prime")


def half_h_squared(h: int) -> int:
    return (h * h + 1) // 2


def z_p(h: int, p: int) -> int:
    """floor(h^3/6 (1 + log_p(h-1))), or floor(h^3/6) when p >= h."""
    _check_h(h)
    _check_p(p)
    return h ** 3 // 6 if p >= h else floor_cube_log(h, p)


@lru_cache(maxsize=256)
def weyl_length_term(h: int, p: int) -> int:
    """Geometric sum over i = 0..floor(h^3/6) of z_p^i."""
    return geometric_sum(z_p(h, p), h ** 3 // 6)


def finite_group_term(h: int, exponent: Optional[int] = None) -> int:
    """ceil(1/2 (h^2 (3h-3)^3)^e), e = ceil(h^2/2) unless given."""
    _check_h(h)
    e = half_h_squared(h) if exponent is None else exponent
    return _ceil_half((h * h * (3 * h - 3) ** 3) ** e)


@lru_cache(maxsize=256)
def theorem_a_bound(h: int, p: int) -> int:
    _check_h(h)
    _check_p(p)
    return max(weyl_length_term(h, p), finite_group_term(h))


@lru_cache(maxsize=256)
def theorem_c_bound(h: int) -> int:
    _check_h(h)
    return max((2 * h) ** half_h_squared(h), finite_group_term(h))


def lcf_length_bound(rs) -> int:
    """(2h)^{|Phi+|}: the Weyl-module length bound under the Lusztig formula."""
    return (2 * rs.coxeter) ** rs.num_pos_roots


def steinberg_trivial_bound(rs, p: int, r: int = 1) -> int:
    """p^{r |Phi+|}, the dimension of the r-th Steinberg module."""
    _check_p(p)
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return p ** (r * rs.num_pos_roots)


def cross_char_bound(rs, e: int) -> int:
    """|W| + e, e the twisted rank."""
    if not 1 <= e <= rs.rank:
        raise DomainError(f"twisted rank must lie in [1, {rs.rank}], got {e}")
    return rs.weyl_order + e


@dataclass(frozen=True)
class FiniteGroupQuery:
    spec: RootSystemSpec
    p: int
    r: int = 1
    twist: str = "untwisted"
    twisted_rank: Optional[int] = None

    def __post_init__(self):
        _check_p(self.p)
        if self.r < 1:
            raise DomainError(f"r must be >= 1, got {self.r}")
        if self.twist not in TWISTS:
            raise DomainError(f"unknown twist {self.twist!r}; expected one of {', '.join(TWISTS)}")
        if self.twist == "ree-suzuki" and (self.spec.family, self.spec.rank, self.p) not in REE_SUZUKI_SHAPES:
            raise DomainError(
                f"Ree/Suzuki groups exist only for B2 and F4 at p=2 and G2 at p=3, not {self.spec} at p={self.p}"
            )
        if self.twisted_rank is not None and not 1 <= self.twisted_rank <= self.spec.rank:
            raise DomainError(f"twisted rank must lie in [1, {self.spec.rank}]")

    @property
    def q(self) -> int:
        return self.p ** self.r

    def to_json(self) -> dict:
        return {
            "type": str(self.spec),
            "p": self.p,
            "r": self.r,
            "twist": self.twist,
            "twisted_rank": self.twisted_rank,
        }


@dataclass
class BoundReport:
    query: FiniteGroupQuery
    case_tag: str
    bound: int
    formula: str
    blanket: int
    h: int
    num_pos_roots: int
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "query": self.query.to_json(),
            "case": self.case_tag,
            "bound": str(self.bound),
            "formula": self.formula,
            "blanket": str(self.blanket),
            "h": self.h,
            "num_pos_roots": self.num_pos_roots,
            "notes": list(self.notes),
        }


def finite_group_bound(query: FiniteGroupQuery, b_alg: int) -> BoundReport:
    """Bound dim H^1(G_sigma, L) given a bound ``b_alg`` for the algebraic group.

    Case order: Ree/Suzuki, then p >= 3h-3, then (r >= 2 and
    p^(s-1)(p-1) > h) with s = floor(r/2), where cohomology agrees with the
    algebraic group; otherwise half the largest simple dimension.
    """
    if b_alg < 1:
        raise DomainError(f"algebraic-group bound must be >= 1, got {b_alg}")
    rs = build(query.spec)
    h, N = rs.coxeter, rs.num_pos_roots
    p, r, q = query.p, query.r, query.q
    big = h * h * (3 * h - 3) ** 3
    blanket = max(b_alg, _ceil_half(big ** N))
    report = lambda tag, bound, formula, notes=(): BoundReport(
        query, tag, bound, formula, blanket, h, N, list(notes)
    )

    if query.twist == "ree-suzuki":
        return report("ReeSuzuki", 2, "2")
    if query.spec.family == "A" and query.spec.rank == 1:
        return report(
            "blanket",
            blanket,
            "max{b, ceil(1/2 (h^2 (3h-3)^3)^|Phi+|)}",
            ["type A1 lies outside the case analysis; blanket bound reported"],
        )
    if p >= 3 * h - 3:
        return report("BNP-ii", b_alg, "b  (p >= 3h-3)")
    s = r // 2
    if r >= 2 and p ** (s - 1) * (p - 1) > h:
        return report("BNP-i", b_alg, "b  (r >= 2, p^(s-1)(p-1) > h)")
    if r == 1:
        return report("small-q-a", _ceil_half(q ** N), "ceil(1/2 q^|Phi+|)")
    bound = min(_ceil_half((h * h * p ** 3) ** N), _ceil_half(big ** N))
    return report("small-q-b", bound, "min{ceil(1/2 (h^2 p^3)^|Phi+|), ceil(1/2 (h^2 (3h-3)^3)^|Phi+|)}")


def log2_int(n: int) -> float:
    """log2 of a positive big integer from its bit length plus the top 53 bits."""
    if n <= 0:
        raise DomainError("log2 needs a positive integer")
    shift = max(n.bit_length() - 53, 0)
    return shift + math.log2(n >> shift)


def coxeter_number(family: str, rank: int) -> int:
    if family == "A":
        return rank + 1
    if family in "BC":
        return 2 * rank
    if family == "D":
        return 2 * rank - 2
    return build(RootSystemSpec(family, rank)).coxeter


GROWTH_HEADER = ("family", "rank", "h", "log2_theorem_a", "log2_theorem_c", "ratio_a_l3logl", "ratio_c_l2logl")


@dataclass(frozen=True)
class GrowthRow:
    family: str
    rank: int
    h: int
    log2_a: float
    log2_c: float

    @property
    def ratio_a(self) -> float:
        return self.log2_a / (self.rank ** 3 * math.log2(self.rank))

    @property
    def ratio_c(self) -> float:
        return self.log2_c / (self.rank ** 2 * math.log2(self.rank))

    def cells(self) -> list:
        g = lambda x: f"{x:.6g}"
        return [self.family, str(self.rank), str(self.h), g(self.log2_a), g(self.log2_c), g(self.ratio_a), g(self.ratio_c)]


def growth_row(family: str, rank: int, p: int = 2) -> GrowthRow:
    RootSystemSpec(family, rank)  # validates
    h = coxeter_number(family, rank)
    return GrowthRow(family, rank, h, log2_int(theorem_a_bound(h, p)), log2_int(theorem_c_bound(h)))


def growth_table(l_max: int, families: str = "ABCD", exceptional: bool = True, p: int = 2) -> List[GrowthRow]:
    if l_max < 2:
        raise DomainError(f"growth table needs lmax >= 2, got {l_max}")
    rows = []
    for fam in families:
        lo = 4 if fam == "D" else 2
        rows += [growth_row(fam, l, p) for l in range(lo, l_max + 1)]
    if exceptional:
        rows += [growth_row(f, n, p) for f, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2))]
    return rows
