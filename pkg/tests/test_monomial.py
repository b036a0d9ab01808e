"""Staircase operations: frozen hand values and randomized ideal axioms."""

import random

import pytest

from lclab.errors import PreconditionError
from lclab.monomial import (
    Monomial,
    MonomialIdeal,
    MonomialSequence,
    is_regular_sequence,
)


def ideal(n, *gens):
    return MonomialIdeal(n, tuple(Monomial(g) for g in gens))


def test_contains_divisibility():
    i = ideal(2, (1, 1))
    assert i.contains(Monomial((2, 1)))
    assert not i.contains(Monomial((2, 0)))
    assert not MonomialIdeal.zero(2).contains(Monomial((2, 0)))


def test_minimal_generators():
    i = ideal(2, (1, 1), (2, 1), (1, 2))
    assert [g.exps for g in i.gens] == [(1, 1)]


def test_saturate_divides_out_support():
    # stabilize divisions by y1 by hand: (y1^2 y2) : y1^inf = (y2)
    i = ideal(2, (2, 1))
    assert i.saturate(Monomial((1, 0))) == ideal(2, (0, 1))
    # y2 * y2^-inf clears to 1
    assert ideal(2, (0, 1)).saturate(Monomial((0, 1))).is_unit()
    assert MonomialIdeal.zero(2).saturate(Monomial((1, 1))).is_zero()


def test_saturate_idempotent_and_extensive_random():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 4)
        gens = [
            tuple(rng.randint(0, 3) for _ in range(n))
            for _ in range(rng.randint(0, 4))
        ]
        gens = [g for g in gens if any(g)]
        i = ideal(n, *gens)
        w = Monomial(tuple(rng.randint(0, 2) for _ in range(n)))
        once = i.saturate(w)
        assert once.saturate(w) == once
        # extensive: I is contained in the saturation
        for g in i.gens:
            assert once.contains(g)


def test_krull_dim_fixed_cases():
    assert MonomialIdeal.zero(3).krull_dim() == 3
    # minimal primes (y1), (y2) by hand
    assert ideal(2, (1, 1)).krull_dim() == 1
    # minimal primes (y1) and (y2, y3)
    assert ideal(3, (1, 1, 0), (1, 0, 1)).krull_dim() == 2
    with pytest.raises(PreconditionError):
        MonomialIdeal.unit(2).krull_dim()


def test_radical():
    assert ideal(2, (2, 1)).radical() == ideal(2, (1, 1))
    sqfree = ideal(3, (1, 0, 1), (0, 1, 0))
    assert sqfree.radical() == sqfree
    assert ideal(1, (3,)).radical() == ideal(1, (1,))


def test_krull_dim_radical_invariance_random():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 4)
        gens = [
            tuple(rng.randint(0, 3) for _ in range(n))
            for _ in range(rng.randint(0, 4))
        ]
        gens = [g for g in gens if any(g)]
        i = ideal(n, *gens)
        assert i.krull_dim() == i.radical().krull_dim()


def test_contains_respects_multiplication_random():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 4)
        gens = [
            tuple(rng.randint(0, 3) for _ in range(n))
            for _ in range(rng.randint(1, 4))
        ]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        i = ideal(n, *gens)
        u = Monomial(tuple(rng.randint(0, 3) for _ in range(n)))
        v = Monomial(tuple(rng.randint(0, 2) for _ in range(n)))
        if i.contains(u):
            assert i.contains(u.mul(v))


def seq(*items):
    return MonomialSequence(tuple(Monomial(m) for m in items))


def test_regular_sequence_cases():
    # two monomials sharing the variable y1 fail regularity
    assert not is_regular_sequence(seq((1, 1, 0), (1, 0, 1)), MonomialIdeal.zero(3))
    assert is_regular_sequence(seq((1, 0), (0, 1)), MonomialIdeal.zero(2))
    # a repeated element is a zerodivisor modulo the first copy
    assert not is_regular_sequence(seq((1, 0), (1, 0)), MonomialIdeal.zero(2))


def test_regular_sequence_rejects_unit_quotient():
    assert not is_regular_sequence(seq((1, 0), (0, 2)), ideal(2, (0, 1)))


def test_sequence_validation():
    with pytest.raises(PreconditionError):
        seq((0, 0))
    with pytest.raises(PreconditionError):
        MonomialSequence(())
    m = seq((1, 2), (2, 0))
    assert m.exponent_matrix().data == [[1, 2], [2, 0]]
    assert m.subset_degree((0, 1)) == (3, 2)
    assert m.product_support((0,)) == frozenset({0, 1})
