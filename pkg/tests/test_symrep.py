"""Characters, Kostka numbers, Specht modules, and stable layer counts."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ficalc.combinat import conjugacy_class_word, permutation_from_word
from ficalc.exactla import Matrix
from ficalc.symrep import (
    ClassFunction,
    NotACharacterError,
    SpechtRepresentation,
    StableRangeError,
    character_table,
    check_partition,
    class_size,
    conjugate_partition,
    decompose_class_function,
    gn_character,
    gn_dimension,
    inner_product,
    irreducible_character,
    irreducible_class_function,
    kostka,
    kostka_reduction,
    pad_partition,
    partitions_of,
    specht_dimension,
    specht_matrices,
    standard_tableaux,
    unpad_partition,
    weight,
    young_permutation_character,
)


def partitions_upto(max_n):
    return st.integers(min_value=0, max_value=max_n).flatmap(
        lambda n: st.sampled_from(partitions_of(n))
    )


def test_partition_counts_and_order():
    counts = [len(partitions_of(n)) for n in range(9)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions_of(2) == ((2,), (1, 1))
    assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))
    # the identity cycle type is always listed last
    for n in range(1, 8):
        assert partitions_of(n)[-1] == (1,) * n


def test_check_partition():
    assert check_partition([3, 1]) == (3, 1)
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))


def test_class_sizes_sum_to_group_order():
    for n in range(7):
        assert sum(class_size(ct) for ct in partitions_of(n)) == math.factorial(n)
    assert class_size((2, 1)) == 3
    assert class_size((3,)) == 2


def test_conjugate_partition():
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    assert conjugate_partition(()) == ()
    for lam in partitions_of(6):
        assert conjugate_partition(conjugate_partition(lam)) == lam


def test_specht_dimension_examples():
    assert specht_dimension(()) == 1
    assert specht_dimension((5,)) == 1
    assert specht_dimension((1, 1, 1, 1)) == 1
    assert specht_dimension((2, 1)) == 2
    assert specht_dimension((2, 2)) == 2
    assert specht_dimension((3, 2)) == 5
    assert specht_dimension((4, 1)) == 4


def test_dimension_squares_sum_to_factorial():
    for n in range(8):
        total = sum(specht_dimension(lam) ** 2 for lam in partitions_of(n))
        assert total == math.factorial(n)


def test_standard_tableaux_count_matches_hook_formula():
    for n in range(7):
        for lam in partitions_of(n):
            assert len(standard_tableaux(lam)) == specht_dimension(lam)


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((2, 2), (2, 1, 1)) == 1
    assert kostka((1, 1), (2,)) == 0


def test_kostka_triangularity():
    for n in range(7):
        for lam in partitions_of(n):
            assert kostka(lam, lam) == 1
            assert kostka(lam, (1,) * n) == specht_dimension(lam)


def test_youngs_rule_dimension_count():
    # sum over lam of K_{lam,mu} f^lam = n! / prod(mu_i!)
    for n in range(7):
        for mu in partitions_of(n):
            total = sum(kostka(lam, mu) * specht_dimension(lam) for lam in partitions_of(n))
            expected = math.factorial(n)
            for part in mu:
                expected //= math.factorial(part)
            assert total == expected


def test_character_values_s3_s4():
    # classes of S3 in order ((3,), (2,1), (1,1,1))
    assert [irreducible_character((3,), ct) for ct in partitions_of(3)] == [1, 1, 1]
    assert [irreducible_character((1, 1, 1), ct) for ct in partitions_of(3)] == [1, -1, 1]
    assert [irreducible_character((2, 1), ct) for ct in partitions_of(3)] == [-1, 0, 2]
    # the self-conjugate row of S4
    values = [irreducible_character((2, 2), ct) for ct in partitions_of(4)]
    assert values == [0, -1, 2, 0, 2]


def test_character_table_rows():
    for n in range(1, 6):
        table = character_table(n)
        parts = partitions_of(n)
        for i, lam in enumerate(parts):
            assert table[i] == tuple(irreducible_character(lam, ct) for ct in parts)


def test_character_orthogonality():
    for n in range(7):
        for a in partitions_of(n):
            fa = irreducible_class_function(a)
            for b in partitions_of(n):
                expected = Fraction(1 if a == b else 0)
                assert inner_product(fa, irreducible_class_function(b)) == expected


def test_regular_character_fixed_point_oracle():
    # sum of f^lam * chi_lam is n! at the identity and 0 elsewhere
    for n in range(1, 7):
        parts = partitions_of(n)
        for idx, ct in enumerate(parts):
            total = sum(
                specht_dimension(lam) * irreducible_character(lam, ct) for lam in parts
            )
            assert total == (math.factorial(n) if ct == (1,) * n else 0)


def test_young_permutation_character_decomposes_by_kostka():
    for n in range(6):
        for mu in partitions_of(n):
            table = decompose_class_function(young_permutation_character(mu))
            for lam in partitions_of(n):
                assert table.multiplicities[lam] == kostka(lam, mu)


def test_decompose_rejects_non_characters():
    sign = irreducible_class_function((1, 1, 1))
    trivial = irreducible_class_function((3,))
    fake = ClassFunction(3, tuple(s - 2 * t for s, t in zip(sign.values, trivial.values)))
    with pytest.raises(NotACharacterError):
        decompose_class_function(fake)


def test_class_function_dimension():
    chi = irreducible_class_function((2, 1))
    assert chi.dimension == 2
    assert chi((1, 1, 1)) == 2
    assert chi((3,)) == -1


def test_specht_matrices_satisfy_coxeter_relations():
    for lam in [(2, 1), (2, 2), (3, 1), (2, 1, 1)]:
        mats = specht_matrices(lam)
        d = specht_dimension(lam)
        n = sum(lam)
        assert len(mats) == n - 1
        eye = Matrix.identity(d)
        for g in mats:
            assert g.rows == g.cols == d
            assert g @ g == eye
        for i in range(len(mats) - 1):
            a, b = mats[i], mats[i + 1]
            assert (a @ b) @ a == (b @ a) @ b
        for i in range(len(mats)):
            for j in range(i + 2, len(mats)):
                assert mats[i] @ mats[j] == mats[j] @ mats[i]


def test_specht_traces_match_characters():
    for n in range(2, 6):
        for lam in partitions_of(n):
            rep = SpechtRepresentation(lam)
            for ct in partitions_of(n):
                perm = permutation_from_word(conjugacy_class_word(ct), n)
                mat = rep.matrix(perm)
                trace = sum(mat.entry(i, i) for i in range(mat.rows))
                assert trace == irreducible_character(lam, ct)


def test_padding_and_weight():
    assert pad_partition((1,), 3) == (2, 1)
    assert pad_partition((), 4) == (4,)
    assert pad_partition((2, 1), 6) == (3, 2, 1)
    assert unpad_partition((3, 2, 1)) == (2, 1)
    assert weight((3, 2, 1)) == 3
    assert weight(()) == 0
    with pytest.raises(ValueError):
        pad_partition((2, 2), 5)  # needs k >= lam_1 + |lam| = 6


@given(partitions_upto(5), st.integers(min_value=0, max_value=14))
def test_pad_unpad_roundtrip(lam, k):
    first = lam[0] if lam else 0
    if k >= first + sum(lam):
        padded = pad_partition(lam, k)
        assert sum(padded) == k
        assert unpad_partition(padded) == lam
    else:
        with pytest.raises(ValueError):
            pad_partition(lam, k)


def test_gn_dimension_closed_forms():
    for k in range(1, 9):
        assert gn_dimension(1, k) == k - 1
    assert gn_dimension(2, 4) == 5
    assert gn_dimension(3, 5) == 14
    assert gn_dimension(0, 3) == 1
    for n, k in [(2, 5), (3, 6), (4, 8)]:
        alternating = sum(
            (-1) ** (n - i) * math.comb(n, i) * math.factorial(k) // math.factorial(k - i)
            for i in range(n + 1)
        )
        assert gn_dimension(n, k) == alternating
    with pytest.raises(StableRangeError):
        gn_dimension(3, 4)


def test_gn_character_weight_concentration():
    for n in range(4):
        for k in range(2 * n, 9):
            for lam in partitions_of(k):
                value = gn_character(n, k, lam)
                if weight(lam) != n:
                    assert value == 0
                else:
                    content = tuple(x for x in (k - n,) + (1,) * n if x)
                    assert value == kostka(lam, content)


def test_gn_character_range_and_input_checks():
    with pytest.raises(StableRangeError):
        gn_character(2, 3, (2, 1))
    with pytest.raises(ValueError):
        gn_character(1, 4, (2, 1))


def test_gn_dimension_equals_weighted_specht_sum():
    for n in range(4):
        for k in range(max(1, 2 * n - 1), 8):
            total = 0
            for mu in partitions_of(n):
                first = mu[0] if mu else 0
                if k >= first + n:
                    total += specht_dimension(mu) * specht_dimension(pad_partition(mu, k))
            assert gn_dimension(n, k) == total


def test_kostka_reduction_identity():
    for k in range(1, 11):
        for lam in partitions_of(k):
            if lam[0] < k - 4:
                continue
            for i in range(0, min(4, lam[0], k - 1) + 1):
                lhs, rhs = kostka_reduction(lam, i)
                assert lhs == rhs, (lam, i)


def test_kostka_reduction_input_checks():
    with pytest.raises(ValueError):
        kostka_reduction((), 0)
    with pytest.raises(ValueError):
        kostka_reduction((2, 1), 3)
    with pytest.raises(StableRangeError):
        kostka_reduction((1, 1, 1), 2)


@given(partitions_upto(6))
@settings(max_examples=50)
def test_irreducible_norm_one(lam):
    chi = irreducible_class_function(lam)
    assert inner_product(chi, chi) == 1
    assert chi.dimension == specht_dimension(lam)
