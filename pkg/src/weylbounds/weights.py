"""Weight combinatorics: dominance, restrictedness, the dot action of the
affine Weyl group, alcove depth and linkage representatives."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .rootsys import RootSystem, Weight, pairing


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


def primes_from(n: int, count: int) -> list:
    out = []
    p = next_prime(n)
    while len(out) < count:
        out.append(p)
        p = next_prime(p + 1)
    return out


@dataclass(frozen=True)
class PrimeContext:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise DomainError(f"p={self.p!r} is not a prime")


def _p(ctx) -> int:
    return ctx.p if isinstance(ctx, PrimeContext) else PrimeContext(ctx).p


def as_weight(rs: RootSystem, lam) -> Weight:
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise DomainError(f"weight {list(lam)} has length {len(lam)}, expected rank {rs.rank} for {rs}")
    return lam


def is_dominant(lam) -> bool:
    return all(x >= 0 for x in lam)


def is_restricted(lam, ctx, r: int = 1) -> bool:
    """True iff 0 <= lam_i <= p^r - 1 for every coordinate (lam in X_r)."""
    q = _p(ctx) ** r
    return all(0 <= x < q for x in lam)


def shifted(lam) -> Weight:
    return tuple(x + 1 for x in lam)


def dot_reflect(rs: RootSystem, lam, root_idx: int, m: int, ctx) -> Weight:
    """s_{alpha,mp} . lam = lam - (<lam + rho, alpha^vee> - mp) alpha."""
    p = _p(ctx)
    k = pairing(rs, shifted(lam), root_idx) - m * p
    alpha = rs.pos_roots[root_idx].weight
    return tuple(x - k * a for x, a in zip(lam, alpha))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def d_lambda(rs: RootSystem, lam, ctx, floor: bool = False) -> int:
    """Alcove depth d(lam) of a dominant weight.

    Each positive root contributes n_alpha where <lam+rho, alpha^vee> =
    n_alpha p + d_alpha with 0 < d_alpha <= p, i.e. ceil(x/p) - 1.  With
    ``floor=True`` the contribution is floor(x/p) instead; the two differ
    exactly when p divides some <lam+rho, alpha^vee>.
    """
    p = _p(ctx)
    if not is_dominant(lam):
        raise DomainError(f"d(lambda) is only defined here for dominant weights, got {list(lam)}")
    mu = shifted(lam)
    total = 0
    for k in range(rs.num_pos_roots):
        x = pairing(rs, mu, k)
        total += x // p if floor else _ceil_div(x, p) - 1
    return total


def restricted_max_d(rs: RootSystem, ctx=None) -> int:
    """Maximum of d(lam) over restricted lam, attained at (p-2)rho.

    Defaults to the smallest prime p >= h; smaller primes are rejected since
    the value is then only an upper bound.
    """
    p = next_prime(rs.coxeter) if ctx is None else _p(ctx)
    if p < rs.coxeter:
        raise DomainError(f"restricted max d(lambda) needs p >= h = {rs.coxeter}, got p = {p}")
    return d_lambda(rs, tuple(p - 2 for _ in range(rs.rank)), p)


def in_closed_fundamental_alcove(rs: RootSystem, lam, ctx) -> bool:
    p = _p(ctx)
    mu = shifted(lam)
    return all(0 <= pairing(rs, mu, k) <= p for k in range(rs.num_pos_roots))


def linkage_rep(rs: RootSystem, lam, ctx) -> Weight:
    """Representative of the dot-orbit W_p . lam in the closed fundamental alcove.

    Reflects in the most violated wall (largest deficit, lowest root index on
    ties).  Every such wall separates lam + rho from the alcove interior, so
    each step strictly shrinks the Euclidean distance from lam + rho to a
    fixed interior point; the orbit is discrete, hence the loop terminates.
    """
    p = _p(ctx)
    lam = tuple(lam)
    n = rs.num_pos_roots
    while True:
        mu = shifted(lam)
        best, best_k, best_m = 0, -1, 0
        for k in range(n):
            x = pairing(rs, mu, k)
            if x < 0 and -x > best:
                best, best_k, best_m = -x, k, 0
            elif x > p and x - p > best:
                best, best_k, best_m = x - p, k, 1
        if best_k < 0:
            return lam
        lam = dot_reflect(rs, lam, best_k, best_m, p)


def linked(rs: RootSystem, lam, mu, ctx) -> bool:
    return linkage_rep(rs, lam, ctx) == linkage_rep(rs, mu, ctx)
