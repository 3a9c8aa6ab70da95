import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import primerange

import oracles
from hcube.conference import (
    NEITHER,
    SKEW,
    SYMMETRIC,
    ConferenceMatrix,
    character_table,
    diagonal_normalize,
    paley_conference,
    quadratic_character,
    sign_switch,
    verify_conference,
)
from hcube.core import PMZ, Hypercube, InputError

PRIMES = list(primerange(3, 50))


class TestCharacter:
    @pytest.mark.parametrize("q", PRIMES)
    def test_zero_and_one(self, q):
        assert quadratic_character(0, q) == 0
        assert quadratic_character(1, q) == 1

    def test_mod_five(self):
        assert quadratic_character(2, 5) == -1
        assert quadratic_character(4, 5) == 1

    @pytest.mark.parametrize("q", PRIMES)
    def test_table_matches_enumeration(self, q):
        assert character_table(q).tolist() == [oracles.legendre(a, q) for a in range(q)]

    @given(st.sampled_from(PRIMES), st.data())
    def test_multiplicative(self, q, data):
        a, b = data.draw(st.integers(0, q - 1)), data.draw(st.integers(0, q - 1))
        assert quadratic_character(a * b % q, q) == quadratic_character(a, q) * quadratic_character(b, q)

    @pytest.mark.parametrize("q", [1, 2, 4, 9, 15])
    def test_rejects_non_odd_primes(self, q):
        with pytest.raises(InputError):
            quadratic_character(1, q)

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            quadratic_character(5, 5)


class TestPaley:
    def test_order_six(self):
        C = paley_conference(5)
        assert C.order == 6 and C.kind == SYMMETRIC
        assert np.array_equal(C.array @ C.array.T, 5 * np.eye(6, dtype=np.int64))

    def test_order_four_is_skew_hadamard(self):
        C = paley_conference(3)
        assert C.kind == SKEW
        M = C.array + np.eye(4, dtype=np.int64)
        assert np.array_equal(M @ M.T, 4 * np.eye(4, dtype=np.int64))

    def test_prime_power_rejected(self):
        with pytest.raises(InputError):
            paley_conference(9)

    @pytest.mark.parametrize("q", PRIMES)
    def test_kind_law_and_gram(self, q):
        C = paley_conference(q)
        n = q + 1
        assert n % 2 == 0
        assert C.kind == (SYMMETRIC if q % 4 == 1 else SKEW)
        assert np.array_equal(C.array @ C.array.T, q * np.eye(n, dtype=np.int64))
        if C.kind == SKEW:
            M = C.array + np.eye(n, dtype=np.int64)
            assert np.array_equal(M @ M.T, n * np.eye(n, dtype=np.int64))

    @pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
    def test_entries_match_oracle(self, q):
        assert paley_conference(q).array.tolist() == oracles.paley_conference_rows(q)


class TestVerify:
    def test_order_two(self):
        report = verify_conference(Hypercube([[0, 1], [1, 0]], PMZ))
        assert report and report.info["kind"] == SYMMETRIC

    def test_paley(self):
        report = verify_conference(paley_conference(5).matrix)
        assert report and report.info["kind"] == SYMMETRIC

    def test_nonzero_diagonal(self):
        M = paley_conference(5).matrix.with_entry((2, 2), 1)
        report = verify_conference(M)
        assert not report and str(report).startswith("FAIL entry=(2,2)")

    def test_zero_off_diagonal(self):
        report = verify_conference(paley_conference(5).matrix.with_entry((0, 3), 0))
        assert not report and "off-diagonal" in report.message

    def test_non_orthogonal_rows(self):
        M = paley_conference(5).matrix.with_entry((1, 2), -paley_conference(5).array[1, 2])
        report = verify_conference(M)
        assert not report and report.message.startswith("rows=")

    def test_neither_kind_is_reported(self):
        # switching a Paley matrix by a diagonal that is not +-I keeps it a conference matrix;
        # scaling only rows breaks symmetry
        C = paley_conference(5).array.copy()
        C[1] *= -1
        report = verify_conference(C)
        assert report and report.info["kind"] == NEITHER

    def test_non_square(self):
        with pytest.raises(InputError):
            verify_conference(np.zeros((2, 3), dtype=int))

    def test_declared_kind_checked(self):
        with pytest.raises(InputError):
            ConferenceMatrix(paley_conference(5).matrix, SKEW)


class TestNormalize:
    @pytest.mark.parametrize("q", [3, 5, 7, 13])
    def test_paley_is_fixed(self, q):
        C = paley_conference(q)
        assert diagonal_normalize(C).matrix == C.matrix

    def test_switch_round_trip(self):
        C = paley_conference(3)
        switched = sign_switch(C, [2])
        assert switched.matrix != C.matrix
        assert diagonal_normalize(switched).matrix == C.matrix

    @given(st.sampled_from([5, 7, 11, 13]), st.data())
    def test_idempotent_and_gram(self, q, data):
        C = paley_conference(q)
        rows = data.draw(st.sets(st.integers(0, q)))
        N = diagonal_normalize(sign_switch(C, rows))
        assert diagonal_normalize(N).matrix == N.matrix
        assert (N.array[0, 1:] == 1).all()
        assert np.array_equal(N.array @ N.array.T, q * np.eye(q + 1, dtype=np.int64))
