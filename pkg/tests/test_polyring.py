import random

import pytest

from conftest import F2, F3, F4, F5, F8, F9
from ffdyn import DomainError, Poly, factorize, resultant
from ffdyn.errors import ResourceLimitError
from ffdyn.polyring import (NEG_INF, divrem, ext_gcd, gcd, geometric_sum,
                            is_irreducible, mult_order_int, mult_order_mod,
                            powmod, squarefree_decomposition, t_pow_minus_one)


def rand_poly(spec, max_deg, rng, nonzero=False):
    while True:
        p = Poly(spec, [rng.randrange(spec.q) for _ in range(rng.randrange(max_deg + 2))])
        if not (nonzero and p.is_zero):
            return p


# -- representation ---------------------------------------------------------


def test_canonical_form_strips_trailing_zeros():
    p = Poly(F2, [1, 1, 0, 0])
    assert p.coeff_encs == (1, 1)
    assert p.degree == 1


def test_zero_degree_marker_is_not_an_integer():
    z = Poly.zero(F3)
    assert z.degree == NEG_INF
    assert not isinstance(z.degree, int)
    assert z.degree < 0


def test_text_round_trip():
    p = Poly.from_text(F3, "1,0,2")
    assert str(p) == "1,0,2"
    assert p(F3.one).enc == 0  # 1 + 2 = 0 mod 3


# -- division ----------------------------------------------------------------


def test_divrem_char2_example():
    q, r = divrem(Poly(F2, [1, 0, 0, 1]), Poly(F2, [1, 1]))
    assert q == Poly(F2, [1, 1, 1])
    assert r.is_zero


def test_divrem_f3_example():
    # t^2 = (t+1)(t-1) + 1
    q, r = divrem(Poly(F3, [0, 0, 1]), Poly(F3, [2, 1]))
    assert q == Poly(F3, [1, 1])
    assert r == Poly(F3, [1])


def test_divrem_self():
    for spec in (F2, F3, F4):
        a = Poly(spec, [1, 0, 1, 1])
        q, r = divrem(a, a)
        assert q == Poly.one(spec) and r.is_zero


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        divrem(Poly(F2, [1]), Poly.zero(F2))


def test_divrem_reconstruction_random():
    rng = random.Random(42)
    for spec in (F2, F3, F5, F4, F9):
        for _ in range(60):
            a = rand_poly(spec, 8, rng)
            b = rand_poly(spec, 5, rng, nonzero=True)
            q, r = divrem(a, b)
            assert q * b + r == a
            assert r.degree < b.degree


# -- gcd -----------------------------------------------------------------------


def test_gcd_legendre_n5_coprimality():
    assert gcd(Poly(F2, [0, 0, 1, 1]), geometric_sum(F2, 5)) == Poly.one(F2)


def test_gcd_with_zero_is_monic_normalization():
    a = Poly(F3, [2, 2])
    assert gcd(a, Poly.zero(F3)) == Poly(F3, [1, 1])
    with pytest.raises(DomainError):
        gcd(Poly.zero(F3), Poly.zero(F3))


def test_gcd_perfect_square_char2():
    sq = Poly(F2, [1, 1, 1]) * Poly(F2, [1, 1, 1])
    assert sq == Poly(F2, [1, 0, 1, 0, 1])
    assert gcd(Poly(F2, [1, 1, 1]), sq) == Poly(F2, [1, 1, 1])


def test_gcd_symmetry_and_idempotence():
    rng = random.Random(3)
    for spec in (F2, F3, F4):
        for _ in range(40):
            a = rand_poly(spec, 6, rng, nonzero=True)
            b = rand_poly(spec, 6, rng)
            assert gcd(a, b) == gcd(b, a)
            assert gcd(a, a) == a.monic()


def test_ext_gcd_bezout_witness():
    rng = random.Random(11)
    for spec in (F2, F3, F5, F9):
        for _ in range(40):
            a = rand_poly(spec, 6, rng, nonzero=True)
            b = rand_poly(spec, 6, rng)
            g, u, v = ext_gcd(a, b)
            assert u * a + v * b == g
            assert (a % g).is_zero
            assert b.is_zero or (b % g).is_zero


# -- powmod ---------------------------------------------------------------------


def test_powmod_order_three_example():
    assert powmod(Poly(F2, [1, 1]), 3, Poly(F2, [1, 1, 1])) == Poly.one(F2)


def test_powmod_zero_exponent():
    m = Poly(F3, [1, 1, 1])
    assert powmod(Poly(F3, [2, 1]), 0, m) == Poly.one(F3)


def test_powmod_t_to_the_n_mod_cyclic():
    m = t_pow_minus_one(F3, 5)
    assert powmod(Poly.x(F3), 5, m) == Poly.one(F3)


def test_powmod_zero_modulus():
    with pytest.raises(ZeroDivisionError):
        powmod(Poly(F2, [1]), 2, Poly.zero(F2))


# -- factorization ----------------------------------------------------------------


def test_factor_cyclic_sum_n5():
    fac = factorize(geometric_sum(F2, 5))
    assert len(fac.factors) == 1
    poly, mult = fac.factors[0]
    assert poly.degree == 4 and mult == 1


def test_factor_cyclic_sum_n7():
    fac = factorize(geometric_sum(F2, 7))
    assert {str(p) for p, _ in fac.factors} == {"1,1,0,1", "1,0,1,1"}
    assert all(m == 1 for _, m in fac.factors)


def test_factor_t6_minus_1_char2():
    fac = factorize(t_pow_minus_one(F2, 6))
    assert dict((str(p), m) for p, m in fac.factors) == {"1,1": 2, "1,1,1": 2}


def test_factor_zero_rejected():
    with pytest.raises(DomainError):
        factorize(Poly.zero(F2))


def test_factor_determinism_and_seed_independence_of_result():
    f = t_pow_minus_one(F3, 8) * Poly(F3, [2])
    a = factorize(f, seed=0)
    b = factorize(f, seed=0)
    c = factorize(f, seed=99)
    assert a == b
    assert set(a.factors) == set(c.factors)


def _independent_irreducible(f):
    # t^(q^k) == t mod f must hold at k = deg f and fail for smaller k >= 1
    spec = f.spec
    t = Poly.x(spec)
    d = f.degree
    for k in range(1, d + 1):
        holds = powmod(t, spec.q**k, f) == t % f
        if k < d and d % k == 0 and holds:
            return False
        if k == d and not holds:
            return False
    return True


def test_factor_reconstruction_and_irreducibility_random():
    rng = random.Random(5)
    for spec in (F2, F3, F4, F5, F8, F9):
        for _ in range(12):
            f = rand_poly(spec, 7, rng, nonzero=True)
            fac = factorize(f)
            assert fac.expand() == f
            seen = set()
            for p, mult in fac.factors:
                assert mult >= 1
                assert p.lc().enc == 1
                assert p not in seen
                seen.add(p)
                assert _independent_irreducible(p)
                assert is_irreducible(p)


def test_squarefree_decomposition_char_p_powers():
    # (t+1)^3 * (t^2+t+1) over GF(2) mixes p-th powers with plain factors
    f = Poly(F2, [1, 1]) ** 3 * Poly(F2, [1, 1, 1])
    parts = squarefree_decomposition(f)
    assert (Poly(F2, [1, 1]), 3) in parts
    assert (Poly(F2, [1, 1, 1]), 1) in parts
    prod = Poly.one(F2)
    for g, m in parts:
        prod = prod * g**m
    assert prod == f


def test_is_irreducible_examples():
    assert is_irreducible(Poly(F2, [1, 1, 1]))
    assert not is_irreducible(Poly(F2, [1, 0, 1]))
    assert is_irreducible(Poly(F3, [1, 0, 1]))
    assert not is_irreducible(Poly.one(F3))


# -- resultants --------------------------------------------------------------------


def _sylvester_resultant(a, b):
    """Direct Sylvester-matrix determinant by Gaussian elimination."""
    spec = a.spec
    m, n = a.degree, b.degree
    if m == 0 and n == 0:
        return spec.one
    size = m + n
    rows = []
    ac = list(reversed(a.coeff_encs))
    bc = list(reversed(b.coeff_encs))
    for i in range(n):
        rows.append([0] * i + ac + [0] * (size - i - len(ac)))
    for i in range(m):
        rows.append([0] * i + bc + [0] * (size - i - len(bc)))
    det = spec.one
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            return spec.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det = det * spec.element(rows[col][col])
        inv = spec.inv_enc(rows[col][col])
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = spec.mul_enc(rows[r][col], inv)
                for c in range(col, size):
                    rows[r][c] = spec.sub_enc(
                        rows[r][c], spec.mul_enc(factor, rows[col][c]))
    return det


def test_resultant_linear_example():
    assert resultant(Poly(F3, [2, 1]), Poly(F3, [1, 1])).enc == 2


def test_resultant_legendre_n5_example():
    assert resultant(geometric_sum(F2, 5), Poly(F2, [0, 0, 1, 1])).enc == 1


def test_resultant_against_constant_one():
    for spec in (F2, F3, F4):
        a = Poly(spec, [1, 1, 0, 1])
        assert resultant(a, Poly.one(spec)).enc == 1


def test_resultant_zero_inputs_rejected():
    with pytest.raises(DomainError):
        resultant(Poly.zero(F2), Poly(F2, [1]))


def test_resultant_matches_sylvester_determinant():
    rng = random.Random(17)
    for spec in (F2, F3, F5, F4):
        for _ in range(60):
            a = rand_poly(spec, 6, rng, nonzero=True)
            b = rand_poly(spec, 6, rng, nonzero=True)
            assert resultant(a, b) == _sylvester_resultant(a, b)


def test_resultant_multiplicativity():
    rng = random.Random(23)
    for spec in (F2, F3, F9):
        for _ in range(40):
            a = rand_poly(spec, 4, rng, nonzero=True)
            b = rand_poly(spec, 4, rng, nonzero=True)
            c = rand_poly(spec, 4, rng, nonzero=True)
            assert resultant(a * b, c) == resultant(a, c) * resultant(b, c)


# -- multiplicative orders ------------------------------------------------------------


def test_mult_order_int_examples():
    assert mult_order_int(2, 5) == 4
    assert mult_order_int(2, 7) == 3
    assert mult_order_int(3, 13) == 3


def test_mult_order_int_domain_errors():
    with pytest.raises(DomainError):
        mult_order_int(2, 9)
    with pytest.raises(DomainError):
        mult_order_int(10, 5)


def test_mult_order_mod_examples():
    m = Poly(F2, [1, 1, 1])
    assert mult_order_mod(Poly(F2, [1, 1]), m) == 3
    assert mult_order_mod(Poly.x(F2), m) == 3
    assert mult_order_mod(Poly.one(F2), m) == 1
    assert mult_order_mod(Poly.one(F3), Poly(F3, [1, 0, 1])) == 1


def test_mult_order_mod_divides_group_order():
    rng = random.Random(31)
    for spec, m in [(F2, Poly(F2, [1, 1, 0, 1])), (F3, Poly(F3, [1, 0, 1])),
                    (F4, Poly(F4, [2, 1]))]:
        group = spec.q**m.degree - 1
        for _ in range(20):
            a = rand_poly(spec, m.degree - 1, rng, nonzero=True)
            k = mult_order_mod(a, m)
            assert group % k == 0
            assert powmod(a, k, m) == Poly.one(spec)


def test_mult_order_mod_non_unit_rejected():
    with pytest.raises(DomainError):
        mult_order_mod(Poly(F2, [1, 1]), Poly(F2, [1, 1]) * Poly(F2, [1, 1, 1]))


def test_mult_order_mod_prime_power_modulus():
    # unit group of GF(2)[t]/(t+1)^2 has order 2
    m = Poly(F2, [1, 1]) ** 2
    assert mult_order_mod(Poly.x(F2), m) == 2


def test_mult_order_mod_effort_cap_propagates(monkeypatch):
    import ffdyn.polyring as pr

    def tiny_factor(n, trial_bound=10, rho_budget=5):
        raise ResourceLimitError("forced")

    monkeypatch.setattr(pr, "factor_int", tiny_factor)
    with pytest.raises(ResourceLimitError):
        mult_order_mod(Poly(F2, [1, 1]), Poly(F2, [1, 1, 1]))
