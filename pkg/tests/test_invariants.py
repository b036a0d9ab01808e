"""Cross-module invariants on small seeded corpora.

The acceptance module runs the battery at its full documented sizes; this
file keeps quick versions of the structural invariants so plain test runs
stay fast while still exercising every cross-check."""

import random

from lclab import verify
from lclab.fields import GF2, QQ
from lclab.monomial import Monomial, MonomialIdeal, MonomialSequence, is_regular_sequence
from lclab.cech import (
    cech_at_degree,
    chamber_decomposition,
    iter_box,
    koszul_at_degree,
)
from lclab.corpus import pair_corpus, random_ideal, random_sequence


def test_base_change_pieces_quick():
    assert verify.check_base_change_pieces(seed=1, count=40).passed


def test_saturation_vs_naive_quick():
    assert verify.check_saturation_vs_naive(seed=2, count=15).passed


def test_hom_lp_vs_integer_search_quick():
    assert verify.check_hom_lp_vs_integer_search(seed=3, count=40).passed


def test_composite_corpus_quick():
    assert verify.check_composite_corpus(seed=4, count=4).passed


def test_regular_sequence_sufficiency_quick():
    assert verify.check_regular_sequence_sufficiency(seed=5, count=40).passed


def test_low_dimension_vanishing_quick():
    assert verify.check_low_dimension_vanishing(seed=6, count=40).passed


def test_top_nonvanishing_equivalence_quick_gf2():
    assert verify.check_top_nonvanishing_equivalence(
        seed=7, count=40, field=GF2
    ).passed


def test_saturation_criterion_quick_gf2():
    assert verify.check_saturation_criterion(seed=8, count=60, field=GF2).passed


def test_chamber_sampling_matches_everywhere():
    rng = random.Random(9)
    for ideal, seq in pair_corpus(9, 20, max_n=3):
        decomp = chamber_decomposition(ideal, seq)
        for _ in range(15):
            a = tuple(rng.randint(-7, 7) for _ in range(ideal.n))
            assert decomp.vector_at(a) == cech_at_degree(ideal, seq, a)


def test_koszul_vanishes_beyond_complex_length():
    # vectors simply have length i+1: nothing survives past the top index,
    # matching the length bound of the complex
    for ideal, seq in pair_corpus(10, 15, max_n=3):
        for a in [(-1,) * ideal.n, (0,) * ideal.n, (2,) * ideal.n]:
            assert len(koszul_at_degree(ideal, seq, 1, a)) == seq.length + 1
            assert len(cech_at_degree(ideal, seq, a)) == seq.length + 1


def test_koszul_depth_sensitivity_on_regular_instances():
    rng = random.Random(11)
    found = 0
    while found < 8:
        n = rng.randint(1, 3)
        ideal = random_ideal(rng, n, max_gens=2, max_degree=2)
        if ideal.is_unit():
            continue
        seq = random_sequence(rng, n, max_len=min(2, n), max_degree=2)
        if not is_regular_sequence(seq, ideal):
            continue
        found += 1
        for a in iter_box(n, 2):
            dims = koszul_at_degree(ideal, seq, 1, a)
            assert all(dims[j] == 0 for j in range(seq.length))


def test_corpus_generation_is_deterministic():
    a = pair_corpus(123, 10)
    b = pair_corpus(123, 10)
    assert a == b
    c = pair_corpus(124, 10)
    assert a != c


def test_battery_passes_quick_both_fields():
    for field in (QQ, GF2):
        results = verify.run_battery(seed=17, quick=True, field=field)
        failed = [r.name for r in results if not r.passed]
        assert not failed, failed


# Minimal 6-vertex triangulation of the real projective plane (antipodal
# icosahedron); its face ring makes the coefficient field visible.
_RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 6), (1, 5, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


def _rp2_face_ring():
    from itertools import combinations

    facets = {frozenset(f) for f in _RP2_FACETS}
    # complete 1-skeleton: every vertex pair lies in some facet
    for pair in combinations(range(1, 7), 2):
        assert any(set(pair) <= f for f in facets)
    # minimal non-faces are exactly the triples that are not facets
    gens = []
    for triple in combinations(range(1, 7), 3):
        if frozenset(triple) not in facets:
            exps = tuple(1 if v + 1 in triple else 0 for v in range(6))
            gens.append(Monomial(exps))
    assert len(gens) == 10
    return MonomialIdeal(6, tuple(gens))


def test_projective_plane_sees_the_characteristic():
    """At the origin degree the variable-sequence complex on a face ring is
    the reduced simplicial cochain complex, so its cohomology is classical:
    the projective plane has none over Q or F3 but two F2 classes."""
    from lclab.fields import GF3

    ideal = _rp2_face_ring()
    variables = MonomialSequence(
        tuple(
            Monomial(tuple(1 if c == v else 0 for c in range(6)))
            for v in range(6)
        )
    )
    origin = (0,) * 6
    over_q = cech_at_degree(ideal, variables, origin, QQ)
    over_f2 = cech_at_degree(ideal, variables, origin, GF2)
    over_f3 = cech_at_degree(ideal, variables, origin, GF3)
    assert over_q == (0, 0, 0, 0, 0, 0, 0)
    assert over_f3 == (0, 0, 0, 0, 0, 0, 0)
    # reduced H^1 and H^2 of the projective plane are one-dimensional mod 2
    assert over_f2 == (0, 0, 1, 1, 0, 0, 0)


def test_projective_plane_cd_equals_dim_all_fields():
    from lclab.fields import GF3
    from lclab.cech import cd_vs_dim

    ideal = _rp2_face_ring()
    for field in (QQ, GF2, GF3):
        cd, dim, equal = cd_vs_dim(ideal, field)
        assert (cd, dim, equal) == (3, 3, True)


def test_cd_equals_dim_gf3_corpus():
    from lclab.fields import GF3
    from lclab.cech import cd_vs_dim
    from lclab.corpus import ideal_corpus

    for ideal in ideal_corpus(21, 40):
        cd, dim, equal = cd_vs_dim(ideal, GF3)
        assert equal
