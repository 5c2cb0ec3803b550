import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dgquiver import RowSpace, SparseMatrix, is_in_span, quotient_dim, rank


def test_rank_empty_matrix():
    assert rank(SparseMatrix(0, 0)) == 0


def test_rank_identity():
    assert rank(SparseMatrix.identity(3)) == 3


def test_rank_proportional_rows():
    m = SparseMatrix.from_rows([[1, 2], [2, 4]])
    assert rank(m) == 1


def test_is_in_span_zero_vector():
    basis = SparseMatrix.from_rows([[1, 2], [0, 1]])
    assert is_in_span([0, 0], basis)


def test_is_in_span_orthogonal_coordinate():
    basis = SparseMatrix.from_rows([[0, 1]])
    assert not is_in_span([1, 0], basis)


def test_is_in_span_scalar_multiple():
    basis = SparseMatrix.from_rows([[1, 2]])
    assert is_in_span([3, 6], basis)


def test_is_in_span_dimension_mismatch():
    basis = SparseMatrix.from_rows([[1, 2]])
    try:
        is_in_span([1, 0, 0], basis)
    except ValueError:
        pass
    else:
        raise AssertionError("expected a dimension mismatch error")


def test_quotient_dim_examples():
    assert quotient_dim(5, SparseMatrix(0, 5)) == 5
    assert quotient_dim(3, SparseMatrix.identity(3)) == 0
    assert quotient_dim(2, SparseMatrix.from_rows([[1, 1]])) == 1


def test_rowspace_normal_form_is_canonical():
    space = RowSpace()
    space.add({0: Fraction(1), 1: Fraction(2)})
    space.add({1: Fraction(1), 2: Fraction(1)})
    # reduce twice -> same residual; residual has no pivot columns
    row = {0: Fraction(3), 2: Fraction(5)}
    r1 = space.reduce(row)
    r2 = space.reduce(row)
    assert r1 == r2
    assert not set(r1) & set(space.pivot_columns())


small_fraction = st.fractions(
    min_value=-10**6, max_value=10**6, max_denominator=997
)


@st.composite
def small_matrix(draw):
    rows = draw(st.integers(min_value=1, max_value=5))
    cols = draw(st.integers(min_value=1, max_value=5))
    data = draw(
        st.lists(
            st.lists(small_fraction, min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return SparseMatrix.from_rows(data)


@given(small_matrix())
@settings(max_examples=60, deadline=None)
def test_rank_equals_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(small_matrix(), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_rank_invariant_under_scaling_and_permutation(m, rnd):
    r = rank(m)
    perm = list(range(m.rows))
    rnd.shuffle(perm)
    scaled = m
    for i in range(m.rows):
        c = Fraction(rnd.randint(1, 7), rnd.randint(1, 7))
        scaled = scaled.scale_row(i, c)
    assert rank(scaled.permute_rows(perm)) == r


@given(small_matrix())
@settings(max_examples=60, deadline=None)
def test_quotient_plus_rank_is_ambient(m):
    assert quotient_dim(m.cols, m) + rank(m) == m.cols


@given(st.integers(min_value=1, max_value=6))
@settings(max_examples=12, deadline=None)
def test_huge_entry_hilbert_block_has_full_rank(n):
    # Hilbert-style matrices are notoriously ill conditioned in floating
    # point; scaled by 2^256 the entries are astronomically large integers
    # divided by small ones, and the exact rank must still be n.
    scale = Fraction(2) ** 256
    m = SparseMatrix(
        n, n,
        {(i, j): scale / (i + j + 1) for i in range(n) for j in range(n)},
    )
    assert rank(m) == n


def test_huge_entry_singular_matrix_detected():
    scale = Fraction(2) ** 256
    rng = random.Random(7)
    rows = [[scale * rng.randint(-5, 5) for _ in range(4)] for _ in range(3)]
    # fourth row = combination of the first three
    combo = [sum(rows[k][j] * (k + 1) for k in range(3)) for j in range(4)]
    m = SparseMatrix.from_rows(rows + [combo])
    assert rank(m) == rank(SparseMatrix.from_rows(rows))


def test_matmul_and_zero_check():
    a = SparseMatrix.from_rows([[1, 1], [0, 1]])
    b = SparseMatrix.from_rows([[1, -1], [0, 0]])
    prod = a.matmul(b)
    assert prod.entry(0, 0) == 1 and prod.entry(0, 1) == -1
    zero = SparseMatrix.from_rows([[1, -1]]).matmul(SparseMatrix.from_rows([[1], [1]]))
    assert zero.is_zero()
