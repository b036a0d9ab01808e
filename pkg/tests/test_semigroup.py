"""Exponent lattices, Hilbert bases, saturation, clearing denominators."""

import random
from fractions import Fraction

import pytest

from lclab.errors import PreconditionError
from lclab.linalg import IntegerMatrix
from lclab.monomial import Monomial, MonomialSequence
from lclab.semigroup import (
    converse_search,
    exponent_rank,
    extreme_rays,
    fraction_field_membership,
    hilbert_basis,
    lattice_membership,
    saturation_check,
    saturation_criterion_check,
    semigroup_membership,
)


def seq(*items):
    return MonomialSequence(tuple(Monomial(m) for m in items))


A_UNSAT = IntegerMatrix([[1, 1], [1, 2]])
A_SAT = IntegerMatrix([[1, 1, 0], [1, 0, 1]])


def test_exponent_rank():
    assert exponent_rank(A_UNSAT) == 2
    assert exponent_rank(IntegerMatrix([[1, 1, 0], [2, 2, 0]])) == 1
    assert exponent_rank(A_SAT) == 2


def test_lattice_membership():
    # (0,1) = (1,2) - (1,1)
    assert lattice_membership((0, 1), A_UNSAT)
    assert not lattice_membership((1, 0, 0), A_SAT)
    assert lattice_membership((0, 0), A_UNSAT)


def test_semigroup_membership():
    assert semigroup_membership((2, 3), A_UNSAT)  # (1,1) + (1,2)
    assert not semigroup_membership((0, 1), A_UNSAT)
    assert semigroup_membership((0, 0), A_UNSAT)
    with pytest.raises(PreconditionError):
        semigroup_membership((-1, 0), A_UNSAT)


def test_extreme_rays():
    assert extreme_rays(A_UNSAT) == [(0, 1), (1, 0)]
    assert extreme_rays(A_SAT) == [(1, 0, 1), (1, 1, 0)]
    assert extreme_rays(IntegerMatrix([[1, 2]])) == [(1, 2)]


def test_hilbert_basis_cases():
    assert hilbert_basis(A_UNSAT) == [(0, 1), (1, 0)]
    assert hilbert_basis(A_SAT) == [(1, 0, 1), (1, 1, 0)]
    assert hilbert_basis(IntegerMatrix([[1, 2]])) == [(1, 2)]
    # numerical semigroup generated by 2 and 3: the lattice is all of Z
    assert hilbert_basis(IntegerMatrix([[2], [3]])) == [(1,)]


def test_saturation_unsaturated_with_witness():
    rep = saturation_check(A_UNSAT)
    assert rep.rank == 2 and not rep.saturated
    assert rep.witness == (0, 1)


def test_saturation_saturated_cases():
    assert saturation_check(A_SAT).saturated
    assert saturation_check(IntegerMatrix([[1, 2]])).saturated


def test_saturation_numerical_gap():
    rep = saturation_check(IntegerMatrix([[2], [3]]))
    assert not rep.saturated and rep.witness == (1,)


def test_saturation_rejects_bad_rows():
    with pytest.raises(PreconditionError):
        saturation_check(IntegerMatrix([[0, 0]]))


def test_criterion_fixtures():
    rep = saturation_criterion_check(3, seq((1, 1, 0), (1, 0, 1)))
    assert rep.h_nonzero and rep.rank == 2 and rep.saturated
    assert rep.implication_holds

    rep = saturation_criterion_check(2, seq((1, 1), (1, 2)))
    assert not rep.saturated and rep.witness == (0, 1)
    assert not rep.h_nonzero  # contrapositive of the criterion
    assert rep.implication_holds

    rep = saturation_criterion_check(2, seq((1, 0), (0, 1)))
    assert rep.h_nonzero and rep.rank_ok and rep.saturated
    assert rep.implication_holds


def test_fraction_field_second_variable():
    res = fraction_field_membership([((0, 1), Fraction(1))], A_UNSAT, 2)
    assert res.verdict == "yes"
    assert {e for e, _ in res.witness} == {(1, 1)}


def test_fraction_field_trivial_member():
    res = fraction_field_membership([((1, 1), Fraction(1))], A_UNSAT, 2)
    assert res.verdict == "yes"
    assert {e for e, _ in res.witness} == {(0, 0)}


def test_fraction_field_no_within_bound():
    res = fraction_field_membership([((1, 0, 0), Fraction(1))], A_SAT, 3)
    assert res.verdict == "no-within-bound"
    assert res.witness is None


def test_fraction_field_yes_implies_lattice():
    rng = random.Random(3)
    for _ in range(60):
        i = rng.randint(1, 3)
        n = rng.randint(1, 3)
        rows = []
        for _ in range(i):
            row = [rng.randint(0, 2) for _ in range(n)]
            if any(row):
                rows.append(row)
        if not rows:
            continue
        a = IntegerMatrix(rows)
        exps = tuple(rng.randint(0, 3) for _ in range(n))
        res = fraction_field_membership([(exps, Fraction(1))], a, 2)
        if res.verdict == "yes":
            assert lattice_membership(exps, a)


def test_converse_search_degenerate_and_slice():
    assert converse_search(2, 1, 1) == []
    # the length-one slice never produces a candidate
    assert converse_search(2, 3, 1) == []
    assert converse_search(3, 2, 1) == []


def test_converse_search_cap():
    with pytest.raises(PreconditionError):
        converse_search(3, 4, 3, cap=5)


def test_saturation_matches_naive_oracle():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 3)
        i = rng.randint(1, 3)
        rows = []
        for _ in range(i):
            row = [0] * n
            for _ in range(rng.randint(1, 3)):
                row[rng.randrange(n)] += 1
            rows.append(row)
        a = IntegerMatrix(rows)
        rep = saturation_check(a)
        bound = 3 * max(max(r) for r in rows)
        naive = True
        for b in _box(n, bound):
            if not any(b):
                continue
            if lattice_membership(b, a) and not semigroup_membership(b, a):
                naive = False
                break
        assert naive == rep.saturated, rows


def _box(n, bound):
    if n == 0:
        yield ()
        return
    for rest in _box(n - 1, bound):
        for v in range(bound + 1):
            yield rest + (v,)
