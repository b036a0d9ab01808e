"""Graded Matlis duality and the top-nonvanishing equivalence.

The dual of a graded piece table negates degrees and keeps dimensions;
the injective-hull checker confirms that the Cech cohomology of the full
variable sequence on the polynomial ring is concentrated in the top index,
with support exactly the all-coordinates-negative orthant.

The top-nonvanishing criterion couples three decidable conditions: h^i of
the sequence on R/I, the rank of the exponent matrix (the dimension of the
monomial subring k[x_1..x_i]), and nonvanishing of Hom into the subring,
the last reduced to an annihilator feasibility test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cech import (
    GradedPieceTable,
    brute_force_box,
    chamber_decomposition,
    local_cohomology_report,
)
from .errors import PreconditionError
from .fields import QQ
from .lp import rational_feasible
from .monomial import Monomial, MonomialIdeal, MonomialSequence


@dataclass(frozen=True)
class DualPieceTable:
    """Degreewise dimensions of the graded dual: D(M)_a = dim M_{-a}."""

    n: int
    dims: dict

    def get(self, a) -> int:
        key = tuple(a)
        if key not in self.dims:
            raise PreconditionError(
                f"degree {key} is outside the computed region"
            )
        return self.dims[key]


def matlis_dual_piece(table: GradedPieceTable, j: int, a) -> int:
    """Dimension of the dual of H^j at degree ``a`` (reads degree -a)."""
    neg = tuple(-x for x in a)
    return table.get(neg)[j]


def matlis_dual_table(table: GradedPieceTable, j: int) -> DualPieceTable:
    return DualPieceTable(
        table.n,
        {tuple(-x for x in a): dims[j] for a, dims in table.dims.items()},
    )


def injective_hull_check(i: int, box_radius: int = 2, field=QQ) -> bool:
    """Top cohomology of the variables on k[X_1..X_i] is the expected hull.

    Verifies on every chamber that h^j = 0 for j != i and that h^i = 1
    exactly on the all-coordinates-negative chamber, then cross-checks the
    chamber values against the per-degree box oracle.
    """
    if not 1 <= i <= 4:
        raise PreconditionError("injective hull check supports 1 <= i <= 4")
    zero = MonomialIdeal.zero(i)
    variables = MonomialSequence(
        tuple(
            Monomial(tuple(1 if c == v else 0 for c in range(i)))
            for v in range(i)
        )
    )
    decomp = chamber_decomposition(zero, variables, field)
    all_negative = tuple(0 for _ in range(i))  # lowest interval everywhere
    for chamber in decomp.chambers:
        for j, h in enumerate(chamber.dims):
            if j != i and h != 0:
                return False
        expected = 1 if chamber.index == all_negative else 0
        if chamber.dims[i] != expected:
            return False
    table = brute_force_box(zero, variables, box_radius, field)
    for a, dims in table.dims.items():
        if dims != decomp.vector_at(a):
            return False
    return True


def module_finite_over_subring(
    ideal: MonomialIdeal, seq: MonomialSequence
) -> bool:
    """R/I is module-finite over k[x_1..x_i] iff I + (x_1..x_i) is primary
    to the maximal ideal, i.e. its staircase contains a power of every
    variable."""
    if ideal.is_unit():
        raise PreconditionError("zero module: R/I must be nonzero")
    if ideal.n != seq.n:
        raise PreconditionError("ideal and sequence arities differ")
    full = ideal.add_monomials(seq.items)
    covered = set()
    for g in full.gens:
        supp = g.support()
        if len(supp) == 1:
            covered |= supp
    return len(covered) == ideal.n


def hom_nonzero(ideal: MonomialIdeal, seq: MonomialSequence) -> bool:
    """Nonvanishing of Hom(R/I, k[x_1..x_i]) via the annihilator criterion.

    With R/I module-finite over the subring and the subring of full
    dimension i, the Hom module vanishes exactly when some monomial of the
    subring lies in I, i.e. some alpha in N^i with alpha.A >= g for a
    generator g. Rational feasibility suffices: the right-hand sides are
    nonnegative, so a feasible rational alpha scales to an integer one.
    """
    if not module_finite_over_subring(ideal, seq):
        raise PreconditionError(
            "not applicable: R/I is not module-finite over the subring"
        )
    a = seq.exponent_matrix()
    if a.rational_rank() != seq.length:
        raise PreconditionError(
            "not applicable: exponent matrix rank is below the sequence length"
        )
    i, n = seq.length, seq.n
    for g in ideal.gens:
        ineqs = []
        for j in range(i):
            coeffs = [Fraction(0)] * i
            coeffs[j] = Fraction(1)
            ineqs.append((coeffs, Fraction(0)))
        for c in range(n):
            ineqs.append(
                (
                    [Fraction(a.data[j][c]) for j in range(i)],
                    Fraction(g.exps[c]),
                )
            )
        if rational_feasible(ineqs, i):
            return False
    return True


@dataclass(frozen=True)
class TopNonvanishingReport:
    """Equivalence record: h^i != 0 iff (subring has dimension i and the
    Hom module is nonzero), decided only on module-finite instances."""

    applicable: bool
    h_nonzero: bool
    rank: int
    rank_ok: bool
    hom_nonzero: bool | None
    equivalence_holds: bool | None


def top_nonvanishing_criterion(
    ideal: MonomialIdeal, seq: MonomialSequence, field=QQ
) -> TopNonvanishingReport:
    """Check the duality criterion for H^i of the sequence on R/I.

    When the exponent rank drops below i the claim degenerates to plain
    vanishing of h^i (low-dimensional support), which is asserted instead;
    non-module-finite instances are reported as not applicable.
    """
    if ideal.is_unit():
        raise PreconditionError("zero module: R/I must be nonzero")
    i = seq.length
    report = local_cohomology_report(ideal, seq, field)
    h_top = report.nonzero(i)
    applicable = module_finite_over_subring(ideal, seq)
    rank = seq.exponent_matrix().rational_rank()
    rank_ok = rank == i
    if not applicable:
        return TopNonvanishingReport(False, h_top, rank, rank_ok, None, None)
    if not rank_ok:
        return TopNonvanishingReport(
            True, h_top, rank, False, None, h_top is False
        )
    hom = hom_nonzero(ideal, seq)
    return TopNonvanishingReport(
        True, h_top, rank, True, hom, h_top == hom
    )
