import itertools

import pytest
from hypothesis import given, strategies as st

from weylbounds import DomainError
from weylbounds.charnorm import weyl_dim
from weylbounds.jantzen import (
    CharCombo,
    LengthCache,
    b_of,
    floor_cube_log,
    floor_log,
    geometric_sum,
    jantzen_sum,
    length_bound_closed,
    length_bound_closed_at,
    length_bound_exact,
    p_valuation,
    raw_terms,
    restricted_length_bound,
)
from weylbounds.rootsys import build_label
from weylbounds.weights import d_lambda, linkage_rep

PRIMES = (2, 3, 5, 7)


def restricted(rs, p):
    return itertools.product(range(p), repeat=rs.rank)


def test_p_valuation():
    assert p_valuation(8, 2) == 3
    assert p_valuation(6, 3) == 1
    assert p_valuation(7, 5) == 0
    with pytest.raises(DomainError):
        p_valuation(0, 2)


def test_jantzen_examples():
    a1, a2 = build_label("A1"), build_label("A2")
    assert jantzen_sum(a1, (2,), 2) == {(0,): 1}
    assert jantzen_sum(a1, (1,), 3) == {}
    assert jantzen_sum(a1, (3,), 2) == {}
    assert jantzen_sum(a2, (1, 1), 2) == {}
    with pytest.raises(DomainError):
        jantzen_sum(a2, (-1, 0), 2)


def test_b2_negative_coefficient():
    """chi(2,0) - chi(0,0) is the simple character L(2 omega_1) at p=5 (dim 13)."""
    b2 = build_label("B2")
    assert jantzen_sum(b2, (2, 0), 5) == {(0, 0): 1}
    assert jantzen_sum(b2, (2, 2), 5) == {(0, 0): -1, (2, 0): 1}
    assert weyl_dim(b2, (2, 0)) - weyl_dim(b2, (0, 0)) == 13


@pytest.mark.parametrize("label", ["A1", "A2"])
def test_nonnegative_in_type_a_small(label):
    rs = build_label(label)
    for p in PRIMES:
        for lam in restricted(rs, p):
            assert all(c > 0 for c in jantzen_sum(rs, lam, p).values())


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "C2", "G2"])
def test_raw_terms_count_and_valuation(label):
    rs = build_label(label)
    for p in PRIMES:
        for lam in itertools.product(range(2 * p), repeat=rs.rank):
            raw = list(raw_terms(rs, lam, p))
            assert len(raw) == d_lambda(rs, lam, p)
            if raw:
                assert max(t.valuation for t in raw) <= floor_log(b_of(rs, lam) - 1, p)


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_descent_linkage_bookkeeping(label):
    rs = build_label(label)
    for p in PRIMES:
        for lam in restricted(rs, p):
            combo = jantzen_sum(rs, lam, p)
            d, rep = d_lambda(rs, lam, p), linkage_rep(rs, lam, p)
            for mu in combo:
                assert d_lambda(rs, mu, p) < d
                assert linkage_rep(rs, mu, p) == rep
            raw = sum(t.sign * t.valuation * weyl_dim(rs, t.target) for t in raw_terms(rs, lam, p) if t.sign)
            assert raw == sum(c * weyl_dim(rs, mu) for mu, c in combo.items())


def test_charcombo_json_roundtrip():
    c = jantzen_sum(build_label("B2"), (3, 2), 5)
    doc = c.to_json()
    assert doc["terms"] == sorted(doc["terms"], key=lambda t: t["weight"])
    assert CharCombo.from_json(doc) == c
    with pytest.raises(DomainError):
        CharCombo().add((-1, 0), 1)
    z = CharCombo()
    z.add((1,), 2)
    z.add((1,), -2)
    assert z == {}


def test_length_bound_exact_examples():
    a1, a2, b2 = build_label("A1"), build_label("A2"), build_label("B2")
    assert length_bound_exact(a2, (0, 0), 3) == 1
    assert length_bound_exact(a1, (2,), 2) == 2
    assert length_bound_exact(a2, (1, 1), 2) == 1
    # negative term dropped: 1 + Lb(2,0) = 1 + 2
    assert length_bound_exact(b2, (2, 2), 5) == 3


def test_length_cache_coherence():
    rs = build_label("G2")
    warm = LengthCache()
    vals = {lam: length_bound_exact(rs, lam, 7, warm) for lam in restricted(rs, 7)}
    assert len(warm) >= len(vals)
    for lam, v in vals.items():
        assert length_bound_exact(rs, lam, 7, LengthCache()) == v
    # one cache serves two systems without collision
    length_bound_exact(build_label("B2"), (2, 2), 7, warm)
    assert {k[0] for k in warm.entries} == {"G2", "B2"}


def test_geometric_sum():
    assert geometric_sum(0, 5) == 1
    assert geometric_sum(1, 5) == 6
    assert geometric_sum(3, 3) == 40
    assert geometric_sum(7, 0) == 1


def test_length_bound_closed_examples():
    assert length_bound_closed(0, 17, 3) == 1
    assert length_bound_closed(1, 4, 2) == 2
    assert length_bound_closed(2, 9, 2) == 43
    with pytest.raises(DomainError):
        length_bound_closed(1, 1, 2)


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_exact_below_closed(label):
    rs = build_label(label)
    for p in PRIMES:
        cache = LengthCache()
        for lam in restricted(rs, p):
            assert length_bound_exact(rs, lam, p, cache) <= length_bound_closed_at(rs, lam, p)


def _floor_cube_log_exact(h, p):
    rhs = (p * (h - 1)) ** (h ** 3)
    k = 0
    while p ** (6 * (k + 1)) <= rhs:
        k += 1
    return k


@pytest.mark.parametrize("h", range(2, 11))
@pytest.mark.parametrize("p", [2, 3, 5])
def test_floor_cube_log_against_integer_powers(h, p):
    assert floor_cube_log(h, p) == _floor_cube_log_exact(h, p)


def test_restricted_length_bound_examples():
    a1, a2, g2 = build_label("A1"), build_label("A2"), build_label("G2")
    assert restricted_length_bound(a1, 2).bound == 2
    assert restricted_length_bound(a1, 5).bound == 2
    rb = restricted_length_bound(a2, 2)
    assert (rb.z, rb.exponent, rb.bound) == (9, 4, 7381)
    rb = restricted_length_bound(g2, 7)
    assert (rb.z, rb.exponent) == (36, 36)
    assert rb.bound == (36 ** 37 - 1) // 35
    assert rb.sharp_exponent == 10
    assert rb.sharp_bound == (36 ** 11 - 1) // 35


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_restricted_length_bound_dominates_exact(label):
    rs = build_label(label)
    for p in PRIMES:
        rb = restricted_length_bound(rs, p)
        cache = LengthCache()
        worst = max(length_bound_exact(rs, lam, p, cache) for lam in restricted(rs, p))
        assert worst <= rb.bound
        if rb.sharp_bound is not None:
            assert worst <= rb.sharp_bound


@given(st.integers(0, 60), st.sampled_from(PRIMES))
def test_a1_closed_at_is_monotone_in_b(lam, p):
    a1 = build_label("A1")
    d = d_lambda(a1, (lam,), p)
    b = max(b_of(a1, (lam,)), 2)
    assert length_bound_closed(d, b, p) <= length_bound_closed(d, b + p, p)
