import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgapdim.errors import DomainError, InputError, NumericError
from sgapdim.language import (
    GapSet,
    RunProfile,
    core_counts,
    count_core,
    count_language,
    enumerate_core,
    enumerate_language,
    gap_contains,
    gap_enumerate,
    is_allowable,
    is_prime,
    primes_upto,
    sample_word,
)

from oracles import all_words, brute_core_count, brute_language_count, definitional_language, is_core

N0 = GapSet.naturals_from(0)
N = GapSet.naturals_from(1)

TEST_SETS = [
    N,
    N0,
    GapSet.primes(),
    GapSet.finite([0]),
    GapSet.finite([1]),
    GapSet.finite([2, 5]),
    GapSet.finite([1, 3]),
    GapSet.arithmetic(1, 3),
    GapSet.naturals_from(2),
]
SET_IDS = [S.describe() for S in TEST_SETS]


# -- gap sets ---------------------------------------------------------------


@pytest.mark.parametrize(
    "S, s, expected",
    [
        (GapSet.primes(), 7, True),
        (GapSet.arithmetic(1, 2), 4, False),
        (GapSet.finite([0, 2, 5]), 5, True),
        (GapSet.finite([0, 2, 5]), 3, False),
        (GapSet.naturals_from(2), 1, False),
        (GapSet.primes(), 1, False),
    ],
)
def test_gap_contains(S, s, expected):
    assert gap_contains(S, s) is expected


@pytest.mark.parametrize(
    "S, s_max, expected",
    [
        (GapSet.primes(), 10, [2, 3, 5, 7]),
        (GapSet.naturals_from(0), 3, [0, 1, 2, 3]),
        (GapSet.finite([1, 4, 9]), 5, [1, 4]),
        (GapSet.arithmetic(1, 3), 11, [1, 4, 7, 10]),
        (GapSet.finite([3]), 2, []),
    ],
)
def test_gap_enumerate(S, s_max, expected):
    assert gap_enumerate(S, s_max) == expected


@pytest.mark.parametrize("S", TEST_SETS, ids=SET_IDS)
def test_enumerate_agrees_with_membership(S):
    listed = gap_enumerate(S, 200)
    assert listed == [s for s in range(201) if s in S]
    assert all(b > a for a, b in zip(listed, listed[1:]))


def test_infinite_flag():
    assert N.is_infinite and GapSet.primes().is_infinite and GapSet.arithmetic(0, 2).is_infinite
    assert not GapSet.finite([1, 2]).is_infinite


def test_sieve_matches_miller_rabin():
    ps = primes_upto(5000)
    assert list(ps) == [n for n in range(5001) if is_prime(n)]
    assert is_prime(2_147_483_647) and not is_prime(2_147_483_649)


@pytest.mark.parametrize("bad", [[], [-1, 2]])
def test_finite_set_rejects_bad_values(bad):
    with pytest.raises(DomainError):
        GapSet.finite(bad)


def test_file_backed(tmp_path):
    p = tmp_path / "gaps.txt"
    p.write_text("1\n4\n\n9\n")
    S = GapSet.from_file(p)
    assert not S.is_infinite
    assert gap_enumerate(S, 100) == [1, 4, 9]
    assert S == GapSet(kind="file", values=(1, 4, 9))


@pytest.mark.parametrize("text", ["1\n1\n", "4\n2\n", "x\n", "-3\n", ""])
def test_file_backed_rejects(tmp_path, text):
    p = tmp_path / "gaps.txt"
    p.write_text(text)
    with pytest.raises(InputError):
        GapSet.from_file(p)


def test_file_backed_unreadable(tmp_path):
    with pytest.raises(InputError):
        GapSet.from_file(tmp_path / "missing.txt")


# -- membership ---------------------------------------------------------------


def test_allowable_examples():
    assert is_allowable("0101", GapSet.finite([1]))
    assert not is_allowable("110", GapSet.finite([1]))
    assert is_allowable("0001", GapSet.naturals_from(2))
    assert is_allowable("", GapSet.finite([0]))


def test_allowable_examples_match_definition():
    assert "0101" in definitional_language(4, GapSet.finite([1]))
    assert "110" not in definitional_language(3, GapSet.finite([1]))
    assert "0001" in definitional_language(4, GapSet.naturals_from(2))


@pytest.mark.parametrize("S", TEST_SETS, ids=SET_IDS)
def test_membership_matches_definition(S):
    for n in range(11):
        built = definitional_language(n, S)
        checked = {w for w in all_words(n) if is_allowable(w, S)}
        assert built == checked, n


def test_bad_word_rejected():
    with pytest.raises(DomainError):
        is_allowable("012", N)


@given(st.text(alphabet="01", max_size=40))
def test_run_profile_round_trip(w):
    prof = RunProfile.of(w)
    assert prof.to_word() == w
    assert prof.length == len(w)
    assert RunProfile.of(prof.to_word()) == prof


# -- counting -------------------------------------------------------------------


@pytest.mark.parametrize(
    "n, S, expected",
    [
        (3, N, 5),
        (0, GapSet.primes(), 1),
        (0, GapSet.finite([4]), 1),
        # brute force over 16 words: only 1111 survives, since max(S) = 0
        # bounds every zero run (frozen from the definitional oracle)
        (4, GapSet.finite([0]), 1),
    ],
)
def test_count_language_examples(n, S, expected):
    assert brute_language_count(n, S) == expected
    assert count_language(n, S) == expected


@pytest.mark.parametrize("n, S, expected", [(3, N, 1), (0, GapSet.primes(), 1), (5, GapSet.finite([1]), 0)])
def test_count_core_examples(n, S, expected):
    assert brute_core_count(n, S) == expected
    assert count_core(n, S) == expected


@pytest.mark.parametrize("S", TEST_SETS, ids=SET_IDS)
def test_count_language_matches_brute_force(S):
    for n in range(13):
        assert count_language(n, S) == brute_language_count(n, S), n


def test_fibonacci_for_golden_mean():
    a = [count_language(n, N) for n in range(21)]
    assert a[1:3] == [2, 3]
    for n in range(3, 21):
        assert a[n] == a[n - 1] + a[n - 2]


@pytest.mark.parametrize("S", TEST_SETS, ids=SET_IDS)
def test_core_renewal_and_enumeration(S):
    g = core_counts(20, S)
    for n in range(1, 21):
        assert g[n] == sum(g[n - s - 1] for s in range(n) if s in S)
    for n in range(15):
        assert g[n] == brute_core_count(n, S), n
    for n in range(15, 21):
        words = list(enumerate_core(n, S))
        assert len(set(words)) == len(words) == g[n]
        assert all(len(w) == n and is_core(w, S) for w in words)


@pytest.mark.parametrize("S", TEST_SETS, ids=SET_IDS)
def test_core_is_subset_of_language(S):
    for n in range(25):
        assert count_core(n, S) <= count_language(n, S)
    for w in enumerate_core(10, S):
        assert is_allowable(w, S)


def test_counts_are_exact_big_integers():
    assert count_language(64, N0) == 2**64
    with pytest.raises(NumericError):
        count_language(65, N0)
    assert count_language(100, N0, max_n=128) == 2**100


# -- enumeration and sampling ---------------------------------------------------


def test_enumerate_language_examples():
    assert list(enumerate_language(2, N, 10)) == ["00", "01", "10"]
    assert list(enumerate_language(1, GapSet.finite([0]), 10)) == ["1"]
    assert list(enumerate_language(5, N, 0)) == []


@pytest.mark.parametrize("S", TEST_SETS, ids=SET_IDS)
def test_enumerate_language_is_sorted_and_complete(S):
    for n in range(9):
        words = list(enumerate_language(n, S, 10_000))
        assert words == sorted(w for w in all_words(n) if is_allowable(w, S))
    assert len(list(enumerate_language(12, S, 7))) == min(7, count_language(12, S))


def test_sample_word_examples():
    assert is_allowable(sample_word(5, N0, 1), N0)
    w = sample_word(4, GapSet.finite([1]), 7)
    assert len(w) == 4 and is_allowable(w, GapSet.finite([1]))
    assert sample_word(9, GapSet.primes(), 3) == sample_word(9, GapSet.primes(), 3)


def test_sample_word_when_gaps_exceed_length():
    assert sample_word(3, GapSet.finite([7]), 0) == "000"


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(TEST_SETS),
    st.integers(min_value=0, max_value=30),
    st.integers(min_value=0, max_value=2**32),
)
def test_sampled_words_are_factorial(S, n, seed):
    w = sample_word(n, S, seed)
    assert len(w) == n and is_allowable(w, S)
    for i in range(len(w)):
        for j in range(i, len(w) + 1):
            assert is_allowable(w[i:j], S)
