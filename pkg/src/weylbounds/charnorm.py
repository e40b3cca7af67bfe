"""Normalisation of Weyl characters at arbitrary weights, and Weyl's dimension formula."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .rootsys import RootSystem, Weight, pairing, simple_reflect
from .weights import is_dominant, shifted


@dataclass(frozen=True)
class NormalizedChar:
    """chi(nu) rewritten as ``sign * chi(mu)`` with mu dominant, or zero."""

    sign: int = 0
    mu: Optional[Weight] = None

    @property
    def is_zero(self) -> bool:
        return self.sign == 0


ZERO = NormalizedChar()


def normalize_char(rs: RootSystem, nu) -> NormalizedChar:
    """Move nu into the dominant chamber under the dot action of W.

    chi(w . nu) = det(w) chi(nu); if nu + rho lies on a reflecting hyperplane
    the character vanishes.
    """
    x = list(shifted(nu))
    sign = 1
    while True:
        for i, c in enumerate(x):
            if c == 0:
                return ZERO
            if c < 0:
                x = list(simple_reflect(rs, x, i))
                sign = -sign
                break
        else:
            return NormalizedChar(sign, tuple(c - 1 for c in x))


def weyl_dim(rs: RootSystem, lam) -> int:
    if not is_dominant(lam):
        raise DomainError(f"Weyl dimension formula needs a dominant weight, got {list(lam)}")
    mu = shifted(lam)
    q = Fraction(1)
    for k, r in enumerate(rs.pos_roots):
        q *= Fraction(pairing(rs, mu, k), sum(r.coroot))
    if q.denominator != 1:
        raise AssertionError(f"non-integral Weyl dimension {q} for {lam}")
    return q.numerator
