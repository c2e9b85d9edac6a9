import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurkit.characters import (
    COMPLETE,
    EXTERIOR,
    TRUNCATED,
    SymChar,
    char_from_expr,
    decompose_schur,
    dim_complete,
    frobenius_twist,
    is_deficient,
    kostka,
    power_char,
    schur_char,
    zero_char,
)
from schurkit.errors import DegreeMixed, LengthExceedsN, VariableCountMismatch
from schurkit.partitions import (
    Dominance,
    dominance_leq,
    partition,
    partitions_of,
    partitions_up_to,
    subtract,
)


# --- independent oracles -------------------------------------------------------


def ssyt_count(shape, content):
    """Count semistandard tableaux cell by cell: weakly increasing along rows,
    strictly increasing down columns, letter i used content[i-1] times.
    Independent of the horizontal-strip recursion used by the library."""
    rows = [[0] * w for w in shape]
    remaining = list(content)
    letters = len(content)
    cells = [(i, j) for i, w in enumerate(shape) for j in range(w)]

    def rec(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        total = 0
        for v in range(lo, letters + 1):
            if remaining[v - 1] > 0:
                remaining[v - 1] -= 1
                rows[i][j] = v
                total += rec(idx + 1)
                remaining[v - 1] += 1
        return total

    return rec(0)


def poly_of_char(chi):
    """Full composition->coefficient dict (the character as a polynomial)."""
    return chi.full_weights()


def poly_mul(f, g, n):
    out = {}
    for w1, c1 in f.items():
        for w2, c2 in g.items():
            key = tuple(a + b for a, b in zip(w1, w2))
            out[key] = out.get(key, 0) + c1 * c2
    return out


def test_kostka_against_ssyt_enumeration():
    for lam in partitions_up_to(7, max_len=4):
        for mu in partitions_of(sum(lam), max_len=4):
            assert kostka(lam, mu) == ssyt_count(lam, mu), (lam, mu)


def test_schur_char_examples():
    chi = schur_char((2, 1), 3)
    assert chi.coeffs == {(2, 1): 1, (1, 1, 1): 2}
    assert schur_char((1, 1, 1), 4).coeffs == {(1, 1, 1): 1}
    for lam in partitions_up_to(8, max_len=3):
        assert schur_char(lam, 3).coeffs.get(lam) == 1
    with pytest.raises(LengthExceedsN):
        schur_char((1, 1, 1), 2)


def test_kostka_triangularity():
    for lam in partitions_up_to(9, max_len=4):
        for mu, k in schur_char(lam, 4).coeffs.items():
            assert k > 0
            assert dominance_leq(mu, lam) is Dominance.LEQ


def test_power_char_examples():
    assert power_char(COMPLETE, 2, 2).coeffs == {(2,): 1, (1, 1): 1}
    assert power_char(TRUNCATED, 3, 3, p=2).coeffs == {(1, 1, 1): 1}
    assert power_char(EXTERIOR, 2, 3).coeffs == {(1, 1): 1}
    assert power_char(EXTERIOR, 4, 3).is_zero()
    assert power_char(TRUNCATED, 7, 3, p=2).is_zero()  # above n(p-1)


def test_multiply_examples():
    h1 = power_char(COMPLETE, 1, 2)
    assert (h1 * h1).coeffs == {(2,): 1, (1, 1): 2}
    assert (h1 * zero_char(2, 3)).is_zero()
    e2h1 = power_char(EXTERIOR, 2, 3) * power_char(COMPLETE, 1, 3)
    assert decompose_schur(e2h1) == {(2, 1): 1, (1, 1, 1): 1}
    with pytest.raises(VariableCountMismatch):
        power_char(COMPLETE, 1, 2) * power_char(COMPLETE, 1, 3)


def test_multiply_against_polynomial_oracle():
    n = 3
    atoms = [
        power_char(COMPLETE, 2, n),
        power_char(EXTERIOR, 2, n),
        schur_char((2, 1), n),
        power_char(TRUNCATED, 2, n, p=2),
    ]
    for c1, c2 in itertools.product(atoms, repeat=2):
        prod = c1 * c2
        expect = poly_mul(poly_of_char(c1), poly_of_char(c2), n)
        got = poly_of_char(prod)
        assert {k: v for k, v in expect.items() if v} == {k: v for k, v in got.items() if v}


def test_decompose_schur_examples():
    n = 3
    h2h1 = power_char(COMPLETE, 2, n) * power_char(COMPLETE, 1, n)
    assert decompose_schur(h2h1) == {(3,): 1, (2, 1): 1}
    assert decompose_schur(power_char(EXTERIOR, 3, n)) == {(1, 1, 1): 1}
    for a in range(5):
        for b in range(a + 1):
            n2 = 4
            prod = power_char(COMPLETE, a, n2) * power_char(COMPLETE, b, n2)
            want = {}
            for i in range(b + 1):
                lam = partition((a + b - i, i))
                if len(lam) <= n2:
                    want[lam] = 1
            assert decompose_schur(prod) == want


def test_decompose_schur_roundtrip():
    for lam in partitions_up_to(9, max_len=4):
        assert decompose_schur(schur_char(lam, 4)) == {lam: 1}


def test_pieri_rules():
    # row rule: s_lam * h_r supported on horizontal-strip extensions, coeff 1;
    # column rule: s_lam * e_r on vertical strips
    n = 4
    for lam in partitions_up_to(5, max_len=n):
        for r in range(4):
            row = decompose_schur(schur_char(lam, n) * power_char(COMPLETE, r, n))
            for mu, c in row.items():
                assert c == 1
                d = subtract(mu, lam)
                assert d is not None or _is_strip(mu, lam, horizontal=True)
                assert _is_strip(mu, lam, horizontal=True)
            col = decompose_schur(schur_char(lam, n) * power_char(EXTERIOR, r, n))
            for mu, c in col.items():
                assert c == 1
                assert _is_strip(mu, lam, horizontal=False)


def _is_strip(mu, lam, horizontal):
    """mu/lam is a horizontal (resp. vertical) strip."""
    if any((lam[i] if i < len(lam) else 0) > (mu[i] if i < len(mu) else 0) for i in range(len(lam))):
        return False
    if horizontal:
        return all(
            (mu[i + 1] if i + 1 < len(mu) else 0) <= (lam[i] if i < len(lam) else 0)
            for i in range(len(mu))
        )
    return all((mu[i] if i < len(mu) else 0) - (lam[i] if i < len(lam) else 0) <= 1 for i in range(len(mu)))


def test_dim_consistency():
    for n in (2, 3, 4):
        for r in range(7):
            assert power_char(COMPLETE, r, n).dim() == dim_complete(r, n)
            from math import comb

            assert power_char(EXTERIOR, r, n).dim() == comb(n, r)
            assert schur_char(partition([r]), n).dim() == dim_complete(r, n)


def test_is_deficient():
    assert not is_deficient(schur_char((3,), 3), 1, 1)
    assert is_deficient(schur_char((2, 2, 2), 3), 2, 1)
    # deficiency is stable under multiplying by any good-filtration character
    base = schur_char((2, 2, 2), 3)
    for lam in partitions_up_to(3, max_len=3):
        prod = base * schur_char(lam, 3)
        assert is_deficient(prod, 2, 1)


def test_frobenius_twist():
    assert frobenius_twist(SymChar(2, 1, {(1,): 1}), 2).coeffs == {(2,): 1}
    assert frobenius_twist(zero_char(3), 5).is_zero()


def test_degree_mixed_rejected():
    with pytest.raises(DegreeMixed):
        SymChar(2, 2, {(2,): 1, (1,): 1})


def test_char_from_expr():
    assert char_from_expr("h2*h1", 3) == power_char(COMPLETE, 2, 3) * power_char(COMPLETE, 1, 3)
    assert char_from_expr("sbar3@2", 3) == power_char(TRUNCATED, 3, 3, p=2)
    assert char_from_expr("s[2,1]", 3) == schur_char((2, 1), 3)
    assert char_from_expr("e2 * h1", 3) == power_char(EXTERIOR, 2, 3) * power_char(COMPLETE, 1, 3)
    with pytest.raises(ValueError):
        char_from_expr("q3", 2)


# --- randomized ring-axiom fuzz -------------------------------------------------

small_partition = st.lists(st.integers(min_value=1, max_value=3), min_size=0, max_size=3).map(
    lambda xs: partition(sorted(xs, reverse=True))
)


@st.composite
def small_char(draw, n=3):
    lam = draw(small_partition)
    kind = draw(st.sampled_from(["schur", "h", "e"]))
    if kind == "schur":
        return schur_char(lam, n)
    r = sum(lam) % 4
    return power_char(COMPLETE if kind == "h" else EXTERIOR, r, n)


@given(small_char(), small_char())
@settings(max_examples=40, deadline=None)
def test_multiplication_commutes(c1, c2):
    assert c1 * c2 == c2 * c1


@given(small_char(), small_char(), small_char())
@settings(max_examples=25, deadline=None)
def test_multiplication_associates(c1, c2, c3):
    assert (c1 * c2) * c3 == c1 * (c2 * c3)


@given(small_char(), small_char(), st.sampled_from([2, 3, 5]))
@settings(max_examples=25, deadline=None)
def test_twist_is_ring_homomorphism(c1, c2, p):
    assert frobenius_twist(c1 * c2, p) == frobenius_twist(c1, p) * frobenius_twist(c2, p)
