"""The built-in verification battery.

Every formula, identity and criterion implemented by the engines is
exercised here, either on its fixed fixture or on a seeded random corpus,
with exact (zero-tolerance) comparisons throughout. Each check reports
pass/fail plus a counterexample dump on failure; the CLI's verify
subcommand and the acceptance test suite are both thin wrappers over
:func:`run_battery`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import corpus
from .cech import (
    brute_force_box,
    cd_vs_dim,
    chamber_decomposition,
    cech_at_degree,
    iter_box,
    iterated_cohomology_check,
    koszul_at_degree,
    koszul_colimit_check,
    local_cohomology_report,
    localized_piece,
    localized_piece_ray_oracle,
)
from .duality import (
    injective_hull_check,
    module_finite_over_subring,
    top_nonvanishing_criterion,
)
from .fields import GF2, GF3, QQ
from .linalg import IntegerMatrix
from .lp import rational_feasible
from .monomial import Monomial, MonomialIdeal, MonomialSequence, is_regular_sequence
from .semigroup import (
    fraction_field_membership,
    lattice_membership,
    saturation_check,
    saturation_criterion_check,
    semigroup_membership,
)

FIELDS_THREE = (QQ, GF2, GF3)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str
    counterexample: dict | None = None

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _fail(name, details, **ce):
    return CheckResult(name, False, details, ce or None)


def _ok(name, details):
    return CheckResult(name, True, details)


def _exps(seq_or_ideal):
    if isinstance(seq_or_ideal, MonomialSequence):
        return [list(m.exps) for m in seq_or_ideal.items]
    return [list(g.exps) for g in seq_or_ideal.gens]


def check_injective_hull(box_radius: int = 2) -> CheckResult:
    """Cohomology of the variables on k[X_1..X_i] is the expected hull,
    for i = 1, 2, 3, over three coefficient fields."""
    name = "injective_hull"
    for i in (1, 2, 3):
        for field in FIELDS_THREE:
            if not injective_hull_check(i, box_radius, field):
                return _fail(
                    name,
                    f"hull formula failed for i={i} over {field.describe()}",
                    i=i,
                    field=field.describe(),
                )
    return _ok(name, "i=1..3 over rational, p:2, p:3")


def check_cd_equals_dim(seed: int, count: int = 200) -> CheckResult:
    """Cohomological dimension of the maximal ideal equals Krull dimension
    on the whole ideal corpus, over Q and F2."""
    name = "cd_equals_dim"
    ideals = corpus.ideal_corpus(seed, count)
    for field in (QQ, GF2):
        for ideal in ideals:
            cd, dim, equal = cd_vs_dim(ideal, field)
            if not equal:
                return _fail(
                    name,
                    f"cd={cd} but dim={dim} over {field.describe()}",
                    ideal=_exps(ideal),
                    n=ideal.n,
                    field=field.describe(),
                )
    return _ok(name, f"{count} ideals, fields rational and p:2")


def check_low_dimension_vanishing(seed: int, count: int = 150, field=QQ) -> CheckResult:
    """dim R/I below the sequence length forces top vanishing."""
    name = "low_dimension_vanishing"
    pairs = corpus.pair_corpus(seed, count)
    hits = 0
    for ideal, seq in pairs:
        if ideal.krull_dim() >= seq.length:
            continue
        hits += 1
        report = local_cohomology_report(ideal, seq, field)
        if report.nonzero(seq.length):
            return _fail(
                name,
                "h^i nonzero although dim R/I < i",
                ideal=_exps(ideal),
                sequence=_exps(seq),
            )
    return _ok(name, f"{hits} low-dimensional instances of {count}")


def check_regular_sequence_sufficiency(seed: int, count: int = 150, field=QQ) -> CheckResult:
    """A regular sequence has nonvanishing top cohomology, and its Koszul
    cohomology at power 1 vanishes below the top on sampled degrees."""
    name = "regular_sequence_sufficiency"
    pairs = corpus.pair_corpus(seed, count)
    rng = random.Random(seed + 1)
    hits = 0
    for ideal, seq in pairs:
        if not is_regular_sequence(seq, ideal):
            continue
        hits += 1
        report = local_cohomology_report(ideal, seq, field)
        if not report.nonzero(seq.length):
            return _fail(
                name,
                "regular sequence with vanishing top cohomology",
                ideal=_exps(ideal),
                sequence=_exps(seq),
            )
        for _ in range(10):
            a = tuple(rng.randint(-3, 3) for _ in range(ideal.n))
            dims = koszul_at_degree(ideal, seq, 1, a, field)
            if any(dims[j] for j in range(seq.length)):
                return _fail(
                    name,
                    "Koszul cohomology below the top for a regular sequence",
                    ideal=_exps(ideal),
                    sequence=_exps(seq),
                    degree=list(a),
                )
    return _ok(name, f"{hits} regular instances of {count}")


def check_top_nonvanishing_equivalence(seed: int, count: int = 200, field=QQ) -> CheckResult:
    """h^i != 0 iff (full exponent rank and nonzero Hom), on every
    module-finite corpus instance."""
    name = "top_nonvanishing_equivalence"
    pairs = corpus.pair_corpus(seed, count)
    applicable = 0
    for ideal, seq in pairs:
        report = top_nonvanishing_criterion(ideal, seq, field)
        if not report.applicable:
            continue
        applicable += 1
        if report.equivalence_holds is not True:
            return _fail(
                name,
                f"equivalence failed: h={report.h_nonzero} "
                f"rank_ok={report.rank_ok} hom={report.hom_nonzero}",
                ideal=_exps(ideal),
                sequence=_exps(seq),
            )
    return _ok(name, f"{applicable} module-finite instances of {count}")


def check_saturation_criterion(seed: int, count: int = 500, field=QQ) -> CheckResult:
    """Top nonvanishing on R forces full rank and a saturated semigroup."""
    name = "saturation_criterion"
    seqs = corpus.sequence_corpus(seed, count)
    for n, seq in seqs:
        report = saturation_criterion_check(n, seq, field)
        if not report.implication_holds:
            return _fail(
                name,
                f"h nonzero with rank_ok={report.rank_ok} "
                f"saturated={report.saturated}",
                sequence=_exps(seq),
                n=n,
            )
    return _ok(name, f"{count} sequences on the zero ideal")


def check_koszul_colimit(seed: int, count: int = 50, box_radius: int = 3, field=QQ) -> CheckResult:
    """Stabilized Koszul cohomology equals Cech cohomology degreewise."""
    name = "koszul_colimit"
    pairs = corpus.pair_corpus(seed, count, max_n=3)
    for ideal, seq in pairs:
        if not koszul_colimit_check(ideal, seq, box_radius, field):
            return _fail(
                name,
                "stable Koszul value differs from the Cech value",
                ideal=_exps(ideal),
                sequence=_exps(seq),
            )
    return _ok(name, f"{count} instances, box radius {box_radius}")


def check_chamber_vs_oracle(seed: int, count: int = 100, box_radius: int = 3, field=QQ) -> CheckResult:
    """Chamber vectors equal the per-degree brute force at every box degree."""
    name = "chamber_vs_oracle"
    pairs = corpus.pair_corpus(seed, count)
    for ideal, seq in pairs:
        decomp = chamber_decomposition(ideal, seq, field)
        table = brute_force_box(ideal, seq, box_radius, field)
        for a, dims in table.dims.items():
            if dims != decomp.vector_at(a):
                return _fail(
                    name,
                    f"box value {dims} vs chamber value {decomp.vector_at(a)}",
                    ideal=_exps(ideal),
                    sequence=_exps(seq),
                    degree=list(a),
                )
    return _ok(name, f"{count} instances, box radius {box_radius}")


def check_base_change_pieces(seed: int, count: int = 200) -> CheckResult:
    """Localize-then-quotient equals quotient-then-localize degreewise:
    the saturation formula for each Cech piece agrees with the direct
    localization colimit."""
    name = "base_change_pieces"
    rng = random.Random(seed)
    pairs = corpus.pair_corpus(seed, count, max_n=3)
    for ideal, seq in pairs:
        for _ in range(10):
            subset = tuple(
                j for j in range(seq.length) if rng.random() < 0.5
            )
            a = tuple(rng.randint(-4, 4) for _ in range(ideal.n))
            lhs = localized_piece(ideal, seq, subset, a)
            rhs = localized_piece_ray_oracle(ideal, seq, subset, a)
            if lhs != rhs:
                return _fail(
                    name,
                    f"piece {lhs} vs colimit {rhs}",
                    ideal=_exps(ideal),
                    sequence=_exps(seq),
                    subset=list(subset),
                    degree=list(a),
                )
    return _ok(name, f"{count} instances, 10 sampled pieces each")


def check_composite_fixtures(box_radius: int = 4, field=QQ) -> CheckResult:
    """Iterated-cohomology collapse on the two fixed examples."""
    name = "composite_fixtures"
    zero3 = MonomialIdeal.zero(3)
    inner = MonomialSequence((Monomial((1, 0, 0)), Monomial((0, 1, 0))))
    if not iterated_cohomology_check(
        zero3, inner, (Monomial((0, 0, 1)),), box_radius, field
    ):
        return _fail(name, "failed on the polynomial-ring fixture")
    quot = MonomialIdeal(2, (Monomial((1, 1)),))
    if not iterated_cohomology_check(
        quot, MonomialSequence((Monomial((1, 0)),)), (Monomial((0, 1)),), box_radius, field
    ):
        return _fail(name, "failed on the quotient fixture")
    return _ok(name, f"two fixtures, box radius {box_radius}")


def check_composite_corpus(seed: int, count: int = 10, box_radius: int = 2, field=QQ) -> CheckResult:
    """Iterated-cohomology collapse on random parameter systems."""
    name = "composite_corpus"
    triples = corpus.parameter_system_corpus(seed, count)
    for ideal, seq, split in triples:
        inner = MonomialSequence(seq.items[:split])
        outer = seq.items[split:]
        if not iterated_cohomology_check(ideal, inner, outer, box_radius, field):
            return _fail(
                name,
                "composite identity failed",
                ideal=_exps(ideal),
                sequence=_exps(seq),
                split=split,
            )
    return _ok(name, f"{len(triples)} parameter systems, box radius {box_radius}")


def check_remark_fixture_nonregular() -> CheckResult:
    """The fixed 3-variable fixture: a non-regular sequence whose top
    cohomology is nonzero, with full rank and saturated semigroup."""
    name = "fixture_nonregular_nonvanishing"
    zero = MonomialIdeal.zero(3)
    seq = MonomialSequence((Monomial((1, 1, 0)), Monomial((1, 0, 1))))
    if is_regular_sequence(seq, zero):
        return _fail(name, "sequence unexpectedly regular")
    report = local_cohomology_report(zero, seq)
    if not report.nonzero(2) or report.cd != 2:
        return _fail(name, f"expected nonzero h^2 and cd=2, got cd={report.cd}")
    sat = saturation_check(seq.exponent_matrix())
    if sat.rank != 2 or not sat.saturated:
        return _fail(
            name, f"expected rank 2 saturated, got rank={sat.rank} "
            f"saturated={sat.saturated}"
        )
    return _ok(name, "non-regular sequence, h^2 != 0, cd 2, rank 2, saturated")


def check_remark_fixture_unsaturated() -> CheckResult:
    """The fixed 2-variable fixture: unsaturated semigroup with witness
    (0,1), denominator witness for the second variable, vanishing h^2."""
    name = "fixture_unsaturated_vanishing"
    a = IntegerMatrix([[1, 1], [1, 2]])
    sat = saturation_check(a)
    if sat.saturated or sat.witness != (0, 1):
        return _fail(
            name, f"expected witness (0, 1), got {sat.witness}"
        )
    res = fraction_field_membership([((0, 1), Fraction(1))], a, 2)
    if res.verdict != "yes":
        return _fail(name, "clearing-denominator search found no witness")
    witness_exps = {e for e, _ in res.witness}
    if witness_exps != {(1, 1)}:
        return _fail(
            name, f"expected denominator witness (1,1), got {sorted(witness_exps)}"
        )
    seq = MonomialSequence((Monomial((1, 1)), Monomial((1, 2))))
    report = local_cohomology_report(MonomialIdeal.zero(2), seq)
    if report.nonzero(2):
        return _fail(name, "h^2 unexpectedly nonzero")
    return _ok(name, "witness (0,1), denominator y1*y2, h^2 = 0")


def check_saturation_vs_naive(seed: int, count: int = 60) -> CheckResult:
    """Hilbert-basis verdict equals a naive bounded enumeration: every
    lattice point of the orthant box whose coordinates stay within three
    times the largest generator coordinate must lie in the semigroup."""
    name = "saturation_vs_naive"
    seqs = corpus.sequence_corpus(seed, count, max_n=3)
    for n, seq in seqs:
        a = seq.exponent_matrix()
        report = saturation_check(a)
        bound = 3 * max(max(row) for row in a.data)
        naive_ok = True
        naive_witness = None
        for b in _orthant_box(n, bound):
            if not any(b):
                continue
            if lattice_membership(b, a) and not semigroup_membership(b, a):
                naive_ok = False
                naive_witness = b
                break
        if naive_ok != report.saturated:
            return _fail(
                name,
                f"naive oracle says saturated={naive_ok} "
                f"(witness {naive_witness}), engine says {report.saturated}",
                sequence=_exps(seq),
                n=n,
            )
    return _ok(name, f"{count} sequences, naive box factor 3")


def _orthant_box(n, bound):
    if n == 0:
        yield ()
        return
    for rest in _orthant_box(n - 1, bound):
        for v in range(bound + 1):
            yield rest + (v,)


def check_converse_slice_i1(max_degree: int = 4, max_n: int = 3) -> CheckResult:
    """For every single nonunit monomial: rank 1, saturated semigroup and
    nonvanishing h^1 (the length-one slice where the converse holds)."""
    name = "converse_slice_i1"
    for n in range(1, max_n + 1):
        for exps in _positive_exponents(n, max_degree):
            seq = MonomialSequence((Monomial(exps),))
            report = saturation_criterion_check(n, seq)
            if not (report.rank == 1 and report.saturated and report.h_nonzero):
                return _fail(
                    name,
                    f"rank={report.rank} saturated={report.saturated} "
                    f"h={report.h_nonzero}",
                    monomial=list(exps),
                    n=n,
                )
    return _ok(name, f"all monomials of degree <= {max_degree}, n <= {max_n}")


def _positive_exponents(n, max_degree):
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for total in range(1, max_degree + 1):
        yield from compositions(total, n)


def check_hom_lp_vs_integer_search(seed: int, count: int = 120) -> CheckResult:
    """The rational feasibility used by the Hom criterion agrees with an
    exhaustive bounded integer search (scaling soundness)."""
    name = "hom_lp_vs_integer_search"
    rng = random.Random(seed)
    for _ in range(count):
        i = rng.randint(1, 3)
        n = rng.randint(1, 3)
        a = [[rng.randint(0, 4) for _ in range(n)] for _ in range(i)]
        g = [rng.randint(0, 4) for _ in range(n)]
        ineqs = []
        for j in range(i):
            coeffs = [Fraction(0)] * i
            coeffs[j] = Fraction(1)
            ineqs.append((coeffs, Fraction(0)))
        for c in range(n):
            ineqs.append(
                ([Fraction(a[j][c]) for j in range(i)], Fraction(g[c]))
            )
        lp = rational_feasible(ineqs, i)
        # exhaustive search: coefficients up to a generous box
        limit = max(g) + 1 if any(g) else 1
        found = False
        for alpha in _orthant_box(i, limit * 4):
            if all(
                sum(alpha[j] * a[j][c] for j in range(i)) >= g[c]
                for c in range(n)
            ):
                found = True
                break
        if lp != found:
            return _fail(
                name,
                f"LP feasible={lp} but integer search found={found}",
                matrix=a,
                target=g,
            )
    return _ok(name, f"{count} random systems")


def run_battery(seed: int = 0, quick: bool = False, field=QQ) -> list[CheckResult]:
    """Run every check; ``quick`` shrinks corpus sizes for smoke runs."""
    shrink = 5 if quick else 1

    def sized(k):
        return max(3, k // shrink)

    return [
        check_injective_hull(),
        check_cd_equals_dim(seed, sized(200)),
        check_low_dimension_vanishing(seed + 1, sized(150), field),
        check_regular_sequence_sufficiency(seed + 2, sized(150), field),
        check_top_nonvanishing_equivalence(seed + 3, sized(200), field),
        check_saturation_criterion(seed + 4, sized(500), field),
        check_koszul_colimit(seed + 5, sized(50), field=field),
        check_chamber_vs_oracle(seed + 6, sized(100), field=field),
        check_base_change_pieces(seed + 7, sized(200)),
        check_composite_fixtures(field=field),
        check_composite_corpus(seed + 8, sized(10), field=field),
        check_remark_fixture_nonregular(),
        check_remark_fixture_unsaturated(),
        check_saturation_vs_naive(seed + 9, sized(60)),
        check_converse_slice_i1(),
        check_hom_lp_vs_integer_search(seed + 10, sized(120)),
    ]
