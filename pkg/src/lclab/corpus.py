"""Seeded random instances for the verification corpora.

All generators take an explicit ``random.Random`` so corpora are
reproducible from a seed; sizes default to the documented desk-scale
bounds (n <= 4, at most 4 ideal generators of degree <= 3, sequences of
length <= 3 and degree <= 3).
"""

from __future__ import annotations

import random

from .monomial import Monomial, MonomialIdeal, MonomialSequence


def random_monomial(rng: random.Random, n: int, max_degree: int = 3) -> Monomial:
    """A random nonunit monomial of total degree in [1, max_degree]."""
    degree = rng.randint(1, max_degree)
    exps = [0] * n
    for _ in range(degree):
        exps[rng.randrange(n)] += 1
    return Monomial(tuple(exps))


def random_ideal(
    rng: random.Random,
    n: int,
    max_gens: int = 4,
    max_degree: int = 3,
) -> MonomialIdeal:
    gens = [
        random_monomial(rng, n, max_degree)
        for _ in range(rng.randint(0, max_gens))
    ]
    return MonomialIdeal(n, tuple(gens))


def random_sequence(
    rng: random.Random,
    n: int,
    max_len: int = 3,
    max_degree: int = 3,
) -> MonomialSequence:
    items = [
        random_monomial(rng, n, max_degree)
        for _ in range(rng.randint(1, max_len))
    ]
    return MonomialSequence(tuple(items))


def ideal_corpus(seed: int, count: int, max_n: int = 4, **kwargs):
    """Deterministic list of (nonunit) monomial ideals."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        ideal = random_ideal(rng, n, **kwargs)
        if not ideal.is_unit():
            out.append(ideal)
    return out


def sequence_corpus(seed: int, count: int, max_n: int = 4, **kwargs):
    """Deterministic list of monomial sequences (with their ambient n)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        out.append((n, random_sequence(rng, n, **kwargs)))
    return out


def pair_corpus(seed: int, count: int, max_n: int = 4, **kwargs):
    """Deterministic list of (ideal, sequence) pairs with R/I nonzero."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        ideal = random_ideal(rng, n, max_gens=kwargs.get("max_gens", 4))
        if ideal.is_unit():
            continue
        seq = random_sequence(
            rng,
            n,
            max_len=kwargs.get("max_len", 3),
            max_degree=kwargs.get("max_degree", 3),
        )
        out.append((ideal, seq))
    return out


def parameter_system_corpus(seed: int, count: int, max_n: int = 3):
    """(ideal, sequence, split) triples where the sequence has length
    dim R/I and R/I is finite over the sequence's subring (the staircase
    of I plus the sequence reaches a power of every variable)."""
    from .duality import module_finite_over_subring

    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < 10_000 * count:
        attempts += 1
        n = rng.randint(1, max_n)
        ideal = random_ideal(rng, n, max_gens=3, max_degree=3)
        if ideal.is_unit():
            continue
        d = ideal.krull_dim()
        if d < 1:
            continue
        items = tuple(random_monomial(rng, n, 2) for _ in range(d))
        seq = MonomialSequence(items)
        if not module_finite_over_subring(ideal, seq):
            continue
        split = rng.randint(1, d)
        out.append((ideal, seq, split))
    return out
