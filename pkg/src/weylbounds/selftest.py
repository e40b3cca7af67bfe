"""Built-in consistency checks run by ``weylbounds selftest``."""
from __future__ import annotations

import itertools
import random

from .charnorm import weyl_dim
from .jantzen import LengthCache, jantzen_sum, length_bound_closed_at, length_bound_exact, raw_terms
from .rootsys import RootSystemSpec, build, build_label, supported_systems
from .sl2oracle import sl2_exact_length
from .weights import d_lambda, linkage_rep, next_prime, restricted_max_d

# exceptional maxima of d on restricted weights, p >= h
EXCEPTIONAL_MAX_D = {"E6": 120, "E7": 336, "E8": 1120, "F4": 86, "G2": 10}


def expected_max_d(spec: RootSystemSpec) -> int:
    n = spec.rank
    if spec.family == "A":
        return (n - 1) * n * (n + 1) // 6
    if spec.family in "BC":
        return (n - 1) * n * (4 * n + 1) // 6
    if spec.family == "D":
        return 2 * (n - 2) * (n - 1) * n // 3
    return EXCEPTIONAL_MAX_D[str(spec)]


def check_max_d(max_rank: int = 8):
    bad = []
    for spec in supported_systems(max_rank):
        rs = build(spec)
        got = restricted_max_d(rs, next_prime(rs.coxeter))
        if got != expected_max_d(spec):
            bad.append(f"{spec}: {got} != {expected_max_d(spec)}")
    return not bad, bad


def check_sl2_sandwich(lam_max: int = 100, primes=(2, 3, 5, 7)):
    rs = build_label("A1")
    bad = []
    for p in primes:
        cache = LengthCache()
        for lam in range(lam_max + 1):
            exact = sl2_exact_length(lam, p)
            lb = length_bound_exact(rs, (lam,), p, cache)
            closed = length_bound_closed_at(rs, (lam,), p)
            if not exact <= lb <= closed:
                bad.append(f"lam={lam} p={p}: {exact} <= {lb} <= {closed} fails")
    return not bad, bad


def restricted_weights(rs, p, samples=None, seed=0):
    if samples is None:
        return list(itertools.product(range(p), repeat=rs.rank))
    rng = random.Random(seed)
    return [tuple(rng.randrange(p) for _ in range(rs.rank)) for _ in range(samples)]


def jantzen_violations(rs, lam, p, nonnegative=True):
    """Failed properties of the collected sum at lam, as short strings."""
    out = []
    combo = jantzen_sum(rs, lam, p)
    d = d_lambda(rs, lam, p)
    rep = linkage_rep(rs, lam, p)
    raw = list(raw_terms(rs, lam, p))
    if len(raw) != d:
        out.append(f"{len(raw)} raw terms, d={d}")
    raw_dim = sum(t.sign * t.valuation * weyl_dim(rs, t.target) for t in raw if t.sign)
    if raw_dim != sum(c * weyl_dim(rs, mu) for mu, c in combo.items()):
        out.append("dimension bookkeeping")
    for mu, c in combo.items():
        if nonnegative and c < 0:
            out.append(f"coefficient {c} at {list(mu)}")
        if d_lambda(rs, mu, p) >= d:
            out.append(f"d({list(mu)}) >= d({list(lam)})")
        if linkage_rep(rs, mu, p) != rep:
            out.append(f"{list(mu)} not linked to {list(lam)}")
    return out


def check_jantzen(systems=("A1", "A2"), primes=(2, 3, 5, 7), nonnegative=True):
    bad = []
    for label in systems:
        rs = build_label(label)
        for p in primes:
            samples = None if rs.rank <= 2 else 500
            for lam in restricted_weights(rs, p, samples):
                for v in jantzen_violations(rs, lam, p, nonnegative):
                    bad.append(f"{label} p={p} lam={list(lam)}: {v}")
    return not bad, bad


def run_selftest():
    """Yield (name, ok, failures) for each built-in check."""
    yield ("restricted max d table", *check_max_d())
    yield ("A1 oracle sandwich", *check_sl2_sandwich())
    yield ("Jantzen nonnegativity (A1, A2)", *check_jantzen(("A1", "A2")))
    yield (
        "Jantzen descent/linkage/bookkeeping (A1, A2, A3, B2, G2)",
        *check_jantzen(("A1", "A2", "A3", "B2", "G2"), nonnegative=False),
    )
