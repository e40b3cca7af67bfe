"""Brute-force ground truth for SL_2: simple characters from Steinberg's
tensor product theorem, Weyl modules decomposed by triangular elimination."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict

from .errors import DomainError


def _digits(lam: int, p: int) -> list:
    out = []
    while lam:
        lam, a = divmod(lam, p)
        out.append(a)
    return out


def sl2_simple_dim(lam: int, p: int) -> int:
    if lam < 0:
        raise DomainError(f"SL2 highest weight must be >= 0, got {lam}")
    dim = 1
    for a in _digits(lam, p):
        dim *= a + 1
    return dim


def sl2_simple_char(lam: int, p: int) -> Counter:
    """Weight multiset of L(lam) = tensor of L(a_i)^{[i]} over base-p digits."""
    ch = Counter({0: 1})
    scale = 1
    for a in _digits(lam, p):
        layer = [(a - 2 * k) * scale for k in range(a + 1)]
        nxt = Counter()
        for w, c in ch.items():
            for v in layer:
                nxt[w + v] += c
        ch = nxt
        scale *= p
    return ch


def sl2_weyl_char(lam: int) -> Counter:
    return Counter({lam - 2 * k: 1 for k in range(lam + 1)})


@dataclass
class Sl2Decomposition:
    lam: int
    p: int
    factors: Dict[int, int] = field(default_factory=dict)

    @property
    def length(self) -> int:
        return sum(self.factors.values())

    def dimension(self) -> int:
        return sum(m * sl2_simple_dim(mu, self.p) for mu, m in self.factors.items())


def sl2_weyl_factors(lam: int, p: int) -> Sl2Decomposition:
    if lam < 0:
        raise DomainError(f"SL2 highest weight must be >= 0, got {lam}")
    rest = sl2_weyl_char(lam)
    factors = {}
    while True:
        live = [w for w, c in rest.items() if c]
        if not live:
            break
        mu = max(live)
        c = rest[mu]
        if c < 0 or mu < 0:
            raise AssertionError(f"elimination produced {c} at weight {mu}")
        factors[mu] = c
        for w, k in sl2_simple_char(mu, p).items():
            rest[w] -= c * k
    return Sl2Decomposition(lam, p, factors)


def sl2_exact_length(lam: int, p: int) -> int:
    return sl2_weyl_factors(lam, p).length
