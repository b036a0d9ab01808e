"""Exact linear algebra: frozen cases plus randomized structural properties."""

import random
from fractions import Fraction

import pytest

from lclab.fields import GF2, QQ, PrimeField, RationalField
from lclab.errors import PreconditionError
from lclab.linalg import (
    IntegerMatrix,
    SparseMatrix,
    lattice_solve,
    smith_normal_form,
)


def dense(rows, field=QQ):
    entries = {}
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            entries[(r, c)] = field.of_int(v)
    nc = len(rows[0]) if rows else 0
    return SparseMatrix(len(rows), nc, entries, field)


def test_rank_identity():
    assert SparseMatrix.identity(2).rank() == 2


def test_rank_zero_matrix():
    assert SparseMatrix(3, 4).rank() == 0


def test_rank_all_ones_over_gf2():
    # row-reduce by hand: both rows identical mod 2
    m = dense([[1, 1], [1, 1]], GF2)
    assert m.rank() == 1
    assert dense([[1, 1], [1, 1]], QQ).rank() == 1


def test_kernel_identity_empty():
    assert SparseMatrix.identity(3).kernel_basis() == []


def test_kernel_zero_matrix_full():
    basis = SparseMatrix(2, 3).kernel_basis()
    assert len(basis) == 3


def test_kernel_single_row():
    # solve by hand: kernel of (1 1) is spanned by (1, -1)
    basis = dense([[1, 1]]).kernel_basis()
    assert len(basis) == 1
    v = basis[0]
    assert v[0] == -v[1] and v[0] != 0


def test_solve_consistent_and_inconsistent():
    m = dense([[1, 2], [0, 1]])
    x = m.solve([Fraction(5), Fraction(2)])
    assert x == [Fraction(1), Fraction(2)]
    m2 = dense([[1, 1], [1, 1]])
    assert m2.solve([Fraction(0), Fraction(1)]) is None


def test_entry_bounds_checked():
    with pytest.raises(PreconditionError):
        SparseMatrix(2, 2, {(2, 0): Fraction(1)})


def test_snf_identity():
    snf = smith_normal_form(IntegerMatrix.identity(2))
    assert snf.diagonal == [1, 1]


def test_snf_det_one():
    # hand elimination: determinant 1, invariant factors (1, 1)
    snf = smith_normal_form(IntegerMatrix([[1, 1], [1, 2]]))
    assert snf.diagonal == [1, 1]


def test_snf_already_diagonal():
    snf = smith_normal_form(IntegerMatrix([[2, 0], [0, 0]]))
    assert snf.diagonal == [2]


def _check_snf_reconstructs(a):
    snf = smith_normal_form(a)
    assert snf.U.mul(a).mul(snf.V) == snf.d_matrix()
    assert abs(snf.U.determinant()) == 1
    assert abs(snf.V.determinant()) == 1
    d = snf.diagonal
    assert all(x > 0 for x in d)
    assert all(d[k + 1] % d[k] == 0 for k in range(len(d) - 1))


def test_snf_random_unimodular_transforms():
    rng = random.Random(7)
    for _ in range(60):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = IntegerMatrix(
            [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        )
        _check_snf_reconstructs(a)


def test_rank_transpose_random():
    rng = random.Random(11)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        entries = {
            (r, c): Fraction(rng.choice([-1, 1]))
            for r in range(rows)
            for c in range(cols)
            if rng.random() < 0.4
        }
        m = SparseMatrix(rows, cols, entries, QQ)
        assert m.rank() == m.transpose().rank()


def test_rank_nullity_random():
    rng = random.Random(13)
    for field in (QQ, GF2, PrimeField(5)):
        for _ in range(30):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            entries = {
                (r, c): field.of_int(rng.randint(-2, 2))
                for r in range(rows)
                for c in range(cols)
                if rng.random() < 0.5
            }
            m = SparseMatrix(rows, cols, entries, field)
            assert m.rank() + len(m.kernel_basis()) == cols


def test_kernel_vectors_lie_in_kernel():
    rng = random.Random(17)
    for _ in range(30):
        rows = rng.randint(1, 5)
        cols = rng.randint(2, 5)
        entries = {
            (r, c): Fraction(rng.randint(-3, 3))
            for r in range(rows)
            for c in range(cols)
            if rng.random() < 0.6
        }
        m = SparseMatrix(rows, cols, entries, QQ)
        for v in m.kernel_basis():
            for r in range(rows):
                s = sum(m.get(r, c) * v[c] for c in range(cols))
                assert s == 0


def test_rational_rank_matches_large_prime_on_sign_matrices():
    # minors of small 0/+-1 matrices stay far below 32003, so ranks agree;
    # over GF(2) the rank may genuinely drop
    rng = random.Random(19)
    big = PrimeField(32003)
    for _ in range(40):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        cells = [
            (r, c, rng.choice([-1, 1]))
            for r in range(rows)
            for c in range(cols)
            if rng.random() < 0.5
        ]
        mq = SparseMatrix(
            rows, cols, {(r, c): Fraction(v) for r, c, v in cells}, QQ
        )
        mp = SparseMatrix(
            rows, cols, {(r, c): big.of_int(v) for r, c, v in cells}, big
        )
        assert mq.rank() == mp.rank()


def test_lattice_solve_roundtrip():
    rng = random.Random(23)
    for _ in range(50):
        rows = rng.randint(1, 3)
        cols = rng.randint(1, 4)
        a = IntegerMatrix(
            [[rng.randint(0, 3) for _ in range(cols)] for _ in range(rows)]
        )
        x = [rng.randint(-3, 3) for _ in range(rows)]
        b = [
            sum(x[r] * a.data[r][c] for r in range(rows)) for c in range(cols)
        ]
        sol = lattice_solve(a, b)
        assert sol is not None
        got = [
            sum(sol[r] * a.data[r][c] for r in range(rows))
            for c in range(cols)
        ]
        assert got == b


def test_lattice_solve_detects_nonmembers():
    a = IntegerMatrix([[1, 1, 0], [1, 0, 1]])
    # the row lattice is the plane b1 = b2 + b3
    assert lattice_solve(a, [1, 0, 0]) is None
    assert lattice_solve(a, [0, 1, -1]) is not None


def test_prime_field_validation():
    with pytest.raises(PreconditionError):
        PrimeField(4)
    with pytest.raises(PreconditionError):
        PrimeField(2**31 + 11)
    f = PrimeField(32003)
    assert f.of_int(-1) == 32002
    assert f.mul(f.of_int(12345), f.inv(f.of_int(12345))) == 1


def test_rational_field_normal_form():
    q = RationalField()
    v = q.div(q.of_int(2), q.of_int(-4))
    assert v.numerator == -1 and v.denominator == 2
