import random

import pytest
from hypothesis import given, strategies as st

from weylbounds import DomainError
from weylbounds.charnorm import normalize_char, weyl_dim
from weylbounds.rootsys import build, build_label, simple_reflect, supported_systems
from weylbounds.weights import is_restricted


def test_normalize_examples():
    a1, a2 = build_label("A1"), build_label("A2")
    n = normalize_char(a2, (2, 1))
    assert (n.sign, n.mu) == (1, (2, 1))
    assert normalize_char(a1, (-1,)).is_zero
    n = normalize_char(a1, (-2,))
    assert (n.sign, n.mu) == (-1, (0,))
    assert normalize_char(a2, (-1, -1)).is_zero


def _dot_simple(rs, nu, i):
    x = simple_reflect(rs, [c + 1 for c in nu], i)
    return tuple(c - 1 for c in x)


@given(st.sampled_from(["A1", "A2", "A3", "B2", "C3", "G2"]), st.data())
def test_normalize_sign_coherence(label, data):
    rs = build_label(label)
    nu = tuple(data.draw(st.lists(st.integers(-25, 25), min_size=rs.rank, max_size=rs.rank)))
    i = data.draw(st.integers(0, rs.rank - 1))
    a, b = normalize_char(rs, nu), normalize_char(rs, _dot_simple(rs, nu, i))
    assert a.is_zero == b.is_zero
    if not a.is_zero:
        assert a.mu == b.mu
        assert a.sign == -b.sign
        again = normalize_char(rs, a.mu)
        assert (again.sign, again.mu) == (1, a.mu)


def _sl_dim(lam):
    """Dimension of the SL_{n+1} irreducible via the partition form of the formula."""
    n = len(lam)
    parts = [sum(lam[i:]) for i in range(n)] + [0]
    num = den = 1
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            num *= parts[i] - parts[j] + j - i
            den *= j - i
    return num // den


def test_weyl_dim_examples():
    assert weyl_dim(build_label("A1"), (7,)) == 8
    assert weyl_dim(build_label("A2"), (1, 1)) == 8
    assert weyl_dim(build_label("G2"), (3, 3)) == 4 ** 6
    with pytest.raises(DomainError):
        weyl_dim(build_label("A2"), (-1, 0))


@given(st.integers(1, 5), st.data())
def test_weyl_dim_type_a_partitions(n, data):
    rs = build_label(f"A{n}")
    lam = tuple(data.draw(st.lists(st.integers(0, 8), min_size=n, max_size=n)))
    assert weyl_dim(rs, lam) == _sl_dim(lam)


SMALL_RANK = [s for s in supported_systems(4)]


@pytest.mark.parametrize("spec", SMALL_RANK, ids=str)
@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_steinberg_dimension(spec, p, r):
    rs = build(spec)
    st_weight = tuple(p ** r - 1 for _ in range(rs.rank))
    assert weyl_dim(rs, st_weight) == p ** (r * rs.num_pos_roots)


@pytest.mark.parametrize("spec", SMALL_RANK, ids=str)
def test_steinberg_bounds_restricted(spec):
    rs = build(spec)
    rng = random.Random(str(spec))
    for p, r in [(2, 1), (3, 1), (2, 2), (3, 2)]:
        for _ in range(50):
            lam = tuple(rng.randrange(p ** r) for _ in range(rs.rank))
            assert is_restricted(lam, p, r)
            assert weyl_dim(rs, lam) <= p ** (r * rs.num_pos_roots)
