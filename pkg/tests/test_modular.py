import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padquat.modular import (
    LeadingCoefficientNotInvertible,
    PrimeModulus,
    QuadCongruence,
    ResidueClass,
    ZeroNotInvertible,
    is_prime,
    jacobi,
    legendre,
    mod_inverse,
    mod_pow,
    primes_upto,
    solve_quadratic,
    sqrt_mod,
    twin_primes_upto,
)

ODD_PRIMES_1000 = [p for p in primes_upto(1000) if p > 2]


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


class TestIsPrime:
    def test_examples(self):
        assert is_prime(181)
        assert not is_prime(1)
        assert not is_prime(237)  # 3 * 79; 239 - 2

    def test_agrees_with_trial_division(self):
        for n in range(0, 5000):
            assert is_prime(n) == trial_division(n), n

    def test_large_values(self):
        assert is_prime(2**61 - 1)  # Mersenne prime
        assert not is_prime(2**62 - 1)
        assert not is_prime((2**31 - 1) * (2**31 + 11))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            is_prime(-7)


class TestTwinPrimes:
    def test_examples(self):
        assert twin_primes_upto(7) == [(3, 5), (5, 7)]
        assert twin_primes_upto(13) == [(3, 5), (5, 7), (11, 13)]
        assert twin_primes_upto(4) == []

    def test_upto_200(self):
        uppers = [p for _, p in twin_primes_upto(200)]
        assert uppers == [5, 7, 13, 19, 31, 43, 61, 73, 103, 109, 139, 151, 181, 193, 199]

    def test_against_trial_division(self):
        expected = [
            (p - 2, p)
            for p in range(5, 500)
            if trial_division(p) and trial_division(p - 2)
        ]
        assert twin_primes_upto(499) == expected


class TestPrimeModulus:
    def test_rejects_non_primes(self):
        for bad in (0, 1, 2, 4, 9, 15):
            with pytest.raises(ValueError):
                PrimeModulus(bad)

    def test_residue_constructor(self):
        p = PrimeModulus(7)
        assert p.residue(10).value == 3
        assert p.residue(-1).value == 6


class TestResidueClass:
    def test_arithmetic(self):
        p = PrimeModulus(13)
        x = p.residue(7)
        assert (x + 8).value == 2
        assert (x - 9).value == 11
        assert (3 * x).value == 8
        assert (-x).value == 6
        assert (x * p.residue(2)).value == 1
        assert x == 7 and x == p.residue(20)

    def test_mixed_moduli_rejected(self):
        x = PrimeModulus(7).residue(3)
        y = PrimeModulus(11).residue(3)
        with pytest.raises(ValueError):
            x + y

    def test_pow_and_inverse(self):
        p = PrimeModulus(13)
        assert (p.residue(2) ** 6).value == 12
        assert p.residue(2).inverse().value == 7
        with pytest.raises(ValueError):
            p.residue(2) ** -1


class TestModPow:
    def test_small(self):
        p = PrimeModulus(7)
        assert mod_pow(p.residue(2), 3).value == 1
        x = p.residue(5)
        assert mod_pow(x, 1) == x
        assert mod_pow(x, 0).value == 1

    def test_inverse_of_27_mod_181(self):
        # 27^(p-1) = 1, so the inverse is 27^(p-2) = 114, and 4*114 = 94
        p = PrimeModulus(181)
        assert mod_pow(p.residue(27), 180).value == 1
        assert mod_pow(p.residue(27), 179).value == 114
        assert (4 * 114) % 181 == 94


class TestModInverse:
    def test_anchor_values(self):
        assert mod_inverse(27, 181) == 114
        assert mod_inverse(5, 7) == 3
        p = PrimeModulus(101)
        assert mod_inverse(p.residue(1)).value == 1

    def test_zero_not_invertible(self):
        with pytest.raises(ZeroNotInvertible):
            mod_inverse(0, 7)
        with pytest.raises(ZeroNotInvertible):
            PrimeModulus(7).residue(14).inverse()

    def test_exhaustive_all_primes_upto_1000(self):
        for p in ODD_PRIMES_1000:
            for x in range(1, p):
                assert mod_inverse(x, p) * x % p == 1


class TestLegendre:
    def test_examples(self):
        assert legendre(-1, 13) == 1  # 13 = 1 (mod 4)
        assert legendre(-1, 7) == -1  # 7 = 3 (mod 4)
        assert legendre(0, 7) == 0

    def test_matches_square_tables(self):
        for p in ODD_PRIMES_1000[:25]:
            sq = squares_mod(p)
            for a in range(p):
                expected = 0 if a == 0 else (1 if a in sq else -1)
                assert legendre(a, p) == expected

    def test_supplement_laws(self):
        for p in ODD_PRIMES_1000:
            assert legendre(-1, p) == (-1) ** ((p - 1) // 2)
            assert legendre(2, p) == (-1) ** ((p * p - 1) // 8)

    def test_reduces_input_first(self):
        assert legendre(-1448, 181) == 0  # -1448 = -8*181
        assert legendre(181 * 181 + 3, 181) == legendre(3, 181)

    @given(
        a=st.integers(-1000, 1000),
        b=st.integers(-1000, 1000),
        p=st.sampled_from(ODD_PRIMES_1000),
    )
    @settings(max_examples=300, derandomize=True)
    def test_multiplicative(self, a, b, p):
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)

    def test_quadratic_reciprocity(self):
        primes = [p for p in ODD_PRIMES_1000 if p <= 200]
        for p in primes:
            for q in primes:
                if p == q:
                    continue
                sign = (-1) ** (((p - 1) // 2) * ((q - 1) // 2))
                assert legendre(q, p) * legendre(p, q) == sign


class TestJacobi:
    def test_examples(self):
        assert jacobi(1, 3107) == 1
        assert jacobi(2, 15) == 1  # (2/3)(2/5) = (-1)(-1)

    def test_requires_odd_n(self):
        with pytest.raises(ValueError):
            jacobi(2, 8)
        with pytest.raises(ValueError):
            jacobi(2, 1)

    def test_zero_on_shared_factor(self):
        assert jacobi(13, 3107) == 0
        assert jacobi(239, 3107) == 0
        assert jacobi(6, 15) == 0

    def test_splits_over_prime_factors(self):
        # 3107 = 13 * 239
        for p in primes_upto(1000):
            if p in (13, 239):
                continue
            assert jacobi(p, 3107) == legendre(p, 13) * legendre(p, 239)

    def test_matches_legendre_on_primes(self):
        for p in ODD_PRIMES_1000[:30]:
            for a in range(p):
                assert jacobi(a, p) == legendre(a, p)


class TestSqrtMod:
    def test_examples(self):
        p13 = PrimeModulus(13)
        pair = sqrt_mod(p13.residue(-1))
        assert pair is not None
        assert {r.value for r in pair} == {5, 8}

        p7 = PrimeModulus(7)
        assert sqrt_mod(p7.residue(3)) is None  # 3 is a non-residue mod 7
        zero_pair = sqrt_mod(p7.residue(0))
        assert zero_pair is not None
        assert {r.value for r in zero_pair} == {0}

    def test_roundtrip_all_small_primes(self):
        for p in ODD_PRIMES_1000[:25]:
            mod = PrimeModulus(p)
            for a in range(p):
                pair = sqrt_mod(mod.residue(a))
                if legendre(a, p) == -1:
                    assert pair is None
                else:
                    assert pair is not None
                    for r in pair:
                        assert r.value * r.value % p == a
                    assert pair[0].value <= pair[1].value

    def test_tonelli_shanks_branch(self):
        # primes with p = 1 (mod 4) exercise the full algorithm
        for p in (13, 17, 29, 97, 101, 109, 181, 193):
            mod = PrimeModulus(p)
            sq = squares_mod(p)
            for a in sorted(sq):
                pair = sqrt_mod(mod.residue(a))
                assert pair is not None and pair[0].value ** 2 % p == a


class TestSolveQuadratic:
    def test_anchor_case_mod_181(self):
        q = QuadCongruence(27, -8, 14, PrimeModulus(181))
        assert q.discriminant == -1448
        assert q.discriminant_mod == 0
        sol = solve_quadratic(q)
        assert sol.roots == (94,)
        assert sol.solvable

    def test_unsolvable_mod_5(self):
        q = QuadCongruence(63, 26, 52, PrimeModulus(5))
        sol = solve_quadratic(q)
        assert sol.roots == ()
        assert not sol.solvable
        assert [x for x in range(5) if q.evaluate(x) == 0] == []

    def test_leading_coefficient_must_be_invertible(self):
        with pytest.raises(LeadingCoefficientNotInvertible):
            solve_quadratic(QuadCongruence(0, 5, -4, PrimeModulus(7)))
        with pytest.raises(LeadingCoefficientNotInvertible):
            solve_quadratic(QuadCongruence(14, 1, 1, PrimeModulus(7)))

    def test_roots_verify_and_match_exhaustive_scan(self):
        cases = [(27, -8, 14), (63, 26, 52), (1, 0, 1), (2, 3, 5), (5, 0, -1)]
        for p in ODD_PRIMES_1000:
            mod = PrimeModulus(p)
            for c2, c1, c0 in cases:
                if c2 % p == 0:
                    continue
                q = QuadCongruence(c2, c1, c0, mod)
                sol = solve_quadratic(q)
                scan = tuple(x for x in range(p) if q.evaluate(x) == 0)
                assert sol.roots == scan
                for r in sol.roots:
                    assert q.evaluate(r) == 0

    @given(
        c2=st.integers(-50, 50),
        c1=st.integers(-50, 50),
        c0=st.integers(-50, 50),
        p=st.sampled_from([p for p in ODD_PRIMES_1000 if p <= 100]),
    )
    @settings(max_examples=200, derandomize=True)
    def test_root_sets_complete(self, c2, c1, c0, p):
        if c2 % p == 0:
            return
        q = QuadCongruence(c2, c1, c0, PrimeModulus(p))
        sol = solve_quadratic(q)
        assert set(sol.roots) == {x for x in range(p) if q.evaluate(x) == 0}
