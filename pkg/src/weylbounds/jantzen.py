"""Jantzen sum formula and composition-length bounds for Weyl modules."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Dict, Iterator, NamedTuple, Optional, Tuple

from .charnorm import normalize_char
from .errors import DomainError
from .rootsys import RootSystem, Weight, pairing
from .weights import _p, d_lambda, dot_reflect, is_dominant, next_prime, restricted_max_d, shifted


def p_valuation(x: int, p: int) -> int:
    if x <= 0:
        raise DomainError(f"p-valuation needs a positive integer, got {x}")
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


class CharCombo(dict):
    """Integer combination of Weyl characters chi(mu), mu dominant.

    Zero coefficients are never stored.
    """

    def add(self, mu: Weight, c: int) -> None:
        if not is_dominant(mu):
            raise DomainError(f"CharCombo keys must be dominant, got {list(mu)}")
        v = self.get(mu, 0) + c
        if v:
            self[mu] = v
        else:
            self.pop(mu, None)

    def sorted_items(self):
        return sorted(self.items())

    def to_json(self) -> dict:
        return {"terms": [{"weight": list(mu), "coeff": c} for mu, c in self.sorted_items()]}

    @classmethod
    def from_json(cls, doc: dict) -> "CharCombo":
        out = cls()
        for t in doc["terms"]:
            out.add(tuple(t["weight"]), int(t["coeff"]))
        return out


class RawTerm(NamedTuple):
    root_idx: int
    m: int
    valuation: int
    sign: int  # 0 when the character vanishes
    target: Optional[Weight]


def raw_terms(rs: RootSystem, lam, ctx) -> Iterator[RawTerm]:
    """The (alpha, m) summands with 0 < mp < <lam+rho, alpha^vee>, normalised."""
    p = _p(ctx)
    mu = shifted(lam)
    for k in range(rs.num_pos_roots):
        x = pairing(rs, mu, k)
        m = 1
        while m * p < x:
            nc = normalize_char(rs, dot_reflect(rs, lam, k, m, p))
            yield RawTerm(k, m, p_valuation(m * p, p), nc.sign, nc.mu)
            m += 1


def jantzen_sum(rs: RootSystem, lam, ctx) -> CharCombo:
    """Collected right-hand side of the sum formula for V(lam)."""
    if not is_dominant(lam):
        raise DomainError(f"sum formula needs a dominant weight, got {list(lam)}")
    out = CharCombo()
    for t in raw_terms(rs, lam, ctx):
        if t.sign:
            out.add(t.target, t.sign * t.valuation)
    return out


@dataclass
class LengthCache:
    """Memo table (system, weight, p) -> length bound.

    The system label is part of the key so one cache can serve several root
    systems.  Reads and writes are locked; two threads may still compute
    the same entry, which is harmless since values are deterministic.
    """

    entries: Dict[Tuple[str, Weight, int], int] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def get(self, key):
        with self._lock:
            return self.entries.get(key)

    def put(self, key, value: int) -> None:
        with self._lock:
            self.entries[key] = value

    def __len__(self):
        return len(self.entries)


def length_bound_exact(rs: RootSystem, lam, ctx, cache: Optional[LengthCache] = None) -> int:
    """Upper bound 1 + sum_{c_mu > 0} c_mu Lb(mu) on the composition length of V(lam).

    Recursion runs over the collected sum; it terminates because d strictly
    drops along every surviving term.  Negative collected coefficients do
    occur outside type A_1/A_2 (e.g. B2, p=5, lam=(2,2)); they only subtract
    genuine lengths, so they are dropped to keep the result an upper bound.
    """
    p = _p(ctx)
    if not is_dominant(lam):
        raise DomainError(f"length bound needs a dominant weight, got {list(lam)}")
    cache = LengthCache() if cache is None else cache
    label = str(rs.spec)
    lam = tuple(lam)

    # explicit stack; recursion depth would track d(lam), which reaches the hundreds
    stack = [lam]
    while stack:
        top = stack[-1]
        key = (label, top, p)
        if cache.get(key) is not None:
            stack.pop()
            continue
        combo = jantzen_sum(rs, top, p)
        combo = {mu: c for mu, c in combo.items() if c > 0}
        missing = [mu for mu in combo if cache.get((label, mu, p)) is None]
        if missing:
            stack.extend(missing)
            continue
        cache.put(key, 1 + sum(c * cache.get((label, mu, p)) for mu, c in combo.items()))
        stack.pop()
    return cache.get((label, lam, p))


def geometric_sum(z: int, d: int) -> int:
    """sum_{i=0}^{d} z^i, well defined for z in {0, 1}."""
    if d < 0:
        raise DomainError("geometric sum needs d >= 0")
    if z == 1:
        return d + 1
    if z == 0:
        return 1
    return (z ** (d + 1) - 1) // (z - 1)


def floor_log(x: int, p: int) -> int:
    """Largest e with p^e <= x (x >= 1)."""
    if x < 1:
        raise DomainError(f"floor log needs x >= 1, got {x}")
    e, q = 0, p
    while q <= x:
        e += 1
        q *= p
    return e


def length_bound_closed(d: int, b: int, p: int) -> int:
    """Closed-form length bound with z = d * floor(log_p(b - 1))."""
    if b < 2:
        raise DomainError(f"closed length bound needs b >= 2, got {b}")
    if d < 0:
        raise DomainError(f"closed length bound needs d >= 0, got {d}")
    z = d * floor_log(b - 1, p)
    return geometric_sum(z, d)


def b_of(rs: RootSystem, lam) -> int:
    """<lam + rho, alpha_0^vee>."""
    return pairing(rs, shifted(lam), rs.alpha_zero)


def length_bound_closed_at(rs: RootSystem, lam, ctx) -> int:
    """Closed form at lam with b = <lam+rho, alpha_0^vee>, raised to 2 for lam = 0 in A1."""
    p = _p(ctx)
    return length_bound_closed(d_lambda(rs, lam, p), max(b_of(rs, lam), 2), p)


def floor_cube_log(h: int, p: int) -> int:
    """floor(h^3/6 * (1 + log_p(h - 1))), exact.

    The log is rational only when h - 1 is a power of p; otherwise the value
    is irrational and a 60-digit evaluation decides the floor, with an
    integer-power comparison as fallback near an integer.
    """
    a = floor_log(h - 1, p)
    if p ** a == h - 1:
        return h ** 3 * (1 + a) // 6
    import mpmath

    with mpmath.workdps(60):
        x = mpmath.mpf(h) ** 3 / 6 * (1 + mpmath.log(h - 1) / mpmath.log(p))
        k = int(mpmath.floor(x))
        frac = x - k
        if mpmath.mpf(10) ** -40 < frac < 1 - mpmath.mpf(10) ** -40:
            return k
    # k <= x  <=>  p^(6k) <= (p(h-1))^(h^3)
    rhs = (p * (h - 1)) ** (h ** 3)
    while p ** (6 * (k + 1)) <= rhs:
        k += 1
    while p ** (6 * k) > rhs:
        k -= 1
    return k


class RestrictedBound(NamedTuple):
    z: int
    exponent: int
    bound: int
    sharp_exponent: Optional[int]
    sharp_bound: Optional[int]


def restricted_length_bound(rs: RootSystem, ctx) -> RestrictedBound:
    """Length bound for Weyl modules with restricted highest weight.

    Exponent count ``floor(h^3/6)``; z is ``floor(h^3/6 (1 + log_p(h-1)))``,
    or ``floor(h^3/6)`` when p >= h.  For p >= h the sharper variant swaps the
    exponent for the exact maximum of d on restricted weights.
    """
    p = _p(ctx)
    h = rs.coxeter
    D = h ** 3 // 6
    z = D if p >= h else floor_cube_log(h, p)
    coarse = geometric_sum(z, D)
    if p >= h:
        dmax = restricted_max_d(rs, next_prime(h))
        return RestrictedBound(z, D, coarse, dmax, geometric_sum(z, dmax))
    return RestrictedBound(z, D, coarse, None, None)
