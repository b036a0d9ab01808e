"""Exponent semigroups and the saturation criterion for top nonvanishing.

The monomial subring k[x_1..x_i] is encoded by the exponent matrix A: its
fraction field corresponds to the lattice ZA, the subring itself to the
semigroup NA, and the saturation question "is NA all of ZA cap N^n?" is
the combinatorial form of "does the ambient ring meet the fraction field
exactly in the subring?".

The decision runs in two independent stages. A cone stage checks by exact
LP that every extreme ray of span(A) cap orthant already lies in the
nonnegative span of the rows; a lattice stage computes the Hilbert basis
of ZA cap N^n by a Contejean-Devie completion over exact integers and
tests each basis element for membership in NA. The two stages must agree
(a failing cone forces a failing lattice stage), and every negative
verdict is cross-validated by the clearing-denominator oracle; any
disagreement is raised as an engine bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .cech import local_cohomology_report
from .errors import InternalConsistencyError, PreconditionError
from .fields import QQ
from .linalg import IntegerMatrix, SparseMatrix, lattice_solve
from .lp import cone_membership
from .monomial import Monomial, MonomialIdeal, MonomialSequence

DEFAULT_HILBERT_CAP = 10**4
DEFAULT_COMPLETION_CAP = 500_000


def exponent_rank(a: IntegerMatrix) -> int:
    """Rank of the exponent matrix = Krull dimension of the subring."""
    return a.rational_rank()


def lattice_membership(b, a: IntegerMatrix) -> bool:
    """Is ``b`` an integer combination of the rows of ``a``?"""
    return lattice_solve(a, list(b)) is not None


def semigroup_membership(b, a: IntegerMatrix) -> bool:
    """Is ``b`` a nonnegative integer combination of the rows of ``a``?

    Bounded search: every row is nonzero with nonnegative coordinates, so
    the coefficient of row j is capped by the remaining budget in any of
    its positive coordinates.
    """
    b = tuple(b)
    if any(x < 0 for x in b):
        raise PreconditionError("semigroup membership expects b in N^n")
    rows = a.data
    memo = {}

    def rec(j, remaining):
        if all(x == 0 for x in remaining):
            return True
        if j == len(rows):
            return False
        key = (j, remaining)
        if key in memo:
            return memo[key]
        row = rows[j]
        cap = min(
            (remaining[c] // row[c] for c in range(len(row)) if row[c] > 0),
            default=0,
        )
        ok = False
        for coeff in range(cap + 1):
            rest = tuple(r - coeff * e for r, e in zip(remaining, row))
            if all(x >= 0 for x in rest) and rec(j + 1, rest):
                ok = True
                break
        memo[key] = ok
        return ok

    return rec(0, b)


def _primitive(vec):
    from math import gcd

    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g == 0:
        return None
    return tuple(x // g for x in vec)


def _span_constraints(a: IntegerMatrix):
    """Integer rows spanning the orthogonal complement of the row span."""
    m = SparseMatrix(
        a.rows,
        a.cols,
        {
            (r, c): Fraction(v)
            for r, row in enumerate(a.data)
            for c, v in enumerate(row)
            if v
        },
        QQ,
    )
    out = []
    for vec in m.kernel_basis():
        denom = 1
        for x in vec:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        out.append(tuple(int(x * denom) for x in vec))
    return out


def _gcd(a, b):
    from math import gcd

    return gcd(a, b)


def extreme_rays(a: IntegerMatrix):
    """Primitive extreme rays of span(rows of a) cap nonnegative orthant.

    Enumerates coordinate-zero patterns; a pattern whose solution space is
    one-dimensional with a sign-definite generator yields a ray, and the
    active-constraint rank is then automatically n-1.
    """
    n = a.cols
    span_rows = _span_constraints(a)
    rays = set()
    for mask in range(2**n):
        zeros = [c for c in range(n) if mask >> c & 1]
        entries = {}
        row_idx = 0
        for row in span_rows:
            for c, v in enumerate(row):
                if v:
                    entries[(row_idx, c)] = Fraction(v)
            row_idx += 1
        for c in zeros:
            entries[(row_idx, c)] = Fraction(1)
            row_idx += 1
        m = SparseMatrix(row_idx, n, entries, QQ)
        basis = m.kernel_basis()
        if len(basis) != 1:
            continue
        denom = 1
        for x in basis[0]:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        vec = [int(x * denom) for x in basis[0]]
        if all(x <= 0 for x in vec):
            vec = [-x for x in vec]
        if any(x < 0 for x in vec):
            continue
        prim = _primitive(vec)
        if prim is not None:
            rays.add(prim)
    return sorted(rays)


def minimal_homogeneous_solutions(matrix_cols, n_eqs: int, cap: int):
    """Minimal nonzero solutions in N^m of a homogeneous integer system.

    ``matrix_cols[k]`` is the value vector contributed by one unit of
    variable k. Contejean-Devie completion: grow frontier tuples by unit
    steps whose value vector has negative inner product with the current
    value, prune anything dominating a known solution.
    """
    m = len(matrix_cols)
    minimal = []
    frontier = {}
    for k in range(m):
        t = tuple(1 if j == k else 0 for j in range(m))
        frontier[t] = tuple(matrix_cols[k])
    explored = 0
    while frontier:
        explored += len(frontier)
        if explored > cap:
            raise PreconditionError(
                f"instance too large: completion explored more than {cap} nodes"
            )
        next_frontier = {}
        for t, value in frontier.items():
            if all(v == 0 for v in value):
                if not any(_dominates(t, s) for s in minimal):
                    minimal = [s for s in minimal if not _dominates(s, t)]
                    minimal.append(t)
                continue
            for k in range(m):
                col = matrix_cols[k]
                if sum(v * c for v, c in zip(value, col)) >= 0:
                    continue
                t2 = tuple(
                    x + 1 if j == k else x for j, x in enumerate(t)
                )
                if t2 in next_frontier:
                    continue
                if any(_dominates(t2, s) for s in minimal):
                    continue
                next_frontier[t2] = tuple(
                    v + c for v, c in zip(value, col)
                )
        frontier = next_frontier
    return sorted(minimal)


def _dominates(t, s) -> bool:
    return all(x >= y for x, y in zip(t, s))


def hilbert_basis(a: IntegerMatrix, cap: int = DEFAULT_COMPLETION_CAP):
    """Hilbert basis of the semigroup ZA cap N^n (A = rows of ``a``).

    Solves x+ A - x- A - b = 0 over N by completion; the b-parts of the
    minimal solutions generate ZA cap N^n, and the componentwise-minimal
    nonzero b-parts are exactly the irreducible elements.
    """
    i, n = a.rows, a.cols
    cols = []
    for j in range(i):  # x+ block
        cols.append(tuple(a.data[j]))
    for j in range(i):  # x- block
        cols.append(tuple(-v for v in a.data[j]))
    for c in range(n):  # -b block
        cols.append(tuple(-1 if k == c else 0 for k in range(n)))
    minimal = minimal_homogeneous_solutions(cols, n, cap)
    parts = {t[2 * i :] for t in minimal}
    parts.discard(tuple([0] * n))
    basis = [
        b
        for b in sorted(parts)
        if not any(
            other != b and all(x <= y for x, y in zip(other, b))
            for other in parts
        )
    ]
    return basis


@dataclass(frozen=True)
class SemigroupReport:
    """Saturation verdict for the exponent semigroup of a sequence."""

    rank: int
    dim_subring: int
    saturated: bool
    witness: tuple[int, ...] | None
    hilbert_basis: tuple[tuple[int, ...], ...]


def saturation_check(
    a: IntegerMatrix,
    hilbert_cap: int = DEFAULT_HILBERT_CAP,
    completion_cap: int = DEFAULT_COMPLETION_CAP,
) -> SemigroupReport:
    """Decide NA = ZA cap N^n exactly.

    Cone stage: every extreme ray of span(A) cap orthant must lie in
    cone(A) (exact LP). Lattice stage: every Hilbert-basis element of
    ZA cap N^n must lie in NA (bounded search). The stages must agree and
    any witness is confirmed by the clearing-denominator oracle.
    """
    for row in a.data:
        if any(v < 0 for v in row) or not any(row):
            raise PreconditionError(
                "exponent rows must be nonzero and nonnegative"
            )
    rank = exponent_rank(a)
    cone_ok = all(cone_membership(a.data, ray) for ray in extreme_rays(a))
    basis = hilbert_basis(a, completion_cap)
    if len(basis) > hilbert_cap:
        raise PreconditionError(
            f"instance too large: Hilbert basis exceeds the cap {hilbert_cap}"
        )
    witness = None
    for b in basis:
        if not semigroup_membership(b, a):
            witness = b
            break
    saturated = witness is None
    if not cone_ok and saturated:
        raise InternalConsistencyError(
            "cone stage rejects an extreme ray but the Hilbert basis lies "
            "in the semigroup"
        )
    if witness is not None:
        _confirm_witness(witness, a)
    return SemigroupReport(rank, rank, saturated, witness, tuple(basis))


def _confirm_witness(witness, a: IntegerMatrix):
    """Cross-validate a saturation witness with the independent oracle.

    The witness must be in the lattice but not the semigroup, and the
    clearing-denominator search must succeed with the bound read off an
    explicit integer lattice decomposition.
    """
    x = lattice_solve(a, list(witness))
    if x is None:
        raise InternalConsistencyError(
            f"saturation witness {witness} is not in the lattice"
        )
    if semigroup_membership(witness, a):
        raise InternalConsistencyError(
            f"saturation witness {witness} lies in the semigroup"
        )
    bound = max(1, sum(max(-v, 0) for v in x))
    result = fraction_field_membership(
        [(witness, Fraction(1))], a, bound
    )
    if result.verdict != "yes":
        raise InternalConsistencyError(
            f"clearing-denominator oracle failed to confirm witness {witness}"
        )


@dataclass(frozen=True)
class FractionFieldResult:
    """Outcome of the bounded clearing-denominator search."""

    verdict: str  # "yes" or "no-within-bound"
    witness: tuple | None  # ((exponent, coefficient), ...) when found

    @property
    def found(self) -> bool:
        return self.verdict == "yes"


def fraction_field_membership(
    poly, a: IntegerMatrix, degree_bound: int
) -> FractionFieldResult:
    """Search for a subring denominator g with g * poly inside the subring.

    Candidates g range over combinations of the subring monomials with
    combination-degree at most ``degree_bound`` (deduplicated by exponent,
    so repeated exponents cannot fake a nonzero g). The product constraint
    "every exponent outside NA cancels" is a kernel computation over Q;
    an empty kernel is reported honestly as "no-within-bound".
    """
    if degree_bound < 1:
        raise PreconditionError("degree bound must be >= 1")
    terms = [(tuple(e), Fraction(c)) for e, c in poly if Fraction(c) != 0]
    for e, _ in terms:
        if any(x < 0 for x in e):
            raise PreconditionError("polynomial exponents must be in N^n")
    one = tuple([0] * a.cols)
    if not terms:
        return FractionFieldResult("yes", ((one, Fraction(1)),))

    i = a.rows
    gammas = []
    seen = set()
    for total in range(degree_bound + 1):
        for alpha in _compositions(total, i):
            gamma = tuple(
                sum(alpha[j] * a.data[j][c] for j in range(i))
                for c in range(a.cols)
            )
            if gamma not in seen:
                seen.add(gamma)
                gammas.append(gamma)

    member_cache = {}

    def in_semigroup(e):
        if e not in member_cache:
            member_cache[e] = semigroup_membership(e, a)
        return member_cache[e]

    constraints = {}
    for col, gamma in enumerate(gammas):
        for b, coef in terms:
            e = tuple(x + y for x, y in zip(gamma, b))
            if in_semigroup(e):
                continue
            row = constraints.setdefault(e, {})
            row[col] = row.get(col, Fraction(0)) + coef
    rows = sorted(constraints)
    entries = {}
    for r, e in enumerate(rows):
        for col, coef in constraints[e].items():
            if coef != 0:
                entries[(r, col)] = coef
    m = SparseMatrix(len(rows), len(gammas), entries, QQ)
    kernel = m.kernel_basis()
    if not kernel:
        return FractionFieldResult("no-within-bound", None)
    vec = kernel[0]
    witness = tuple(
        (gammas[k], vec[k]) for k in range(len(gammas)) if vec[k] != 0
    )
    _verify_denominator(witness, terms, a, in_semigroup)
    return FractionFieldResult("yes", witness)


def _verify_denominator(witness, terms, a, in_semigroup):
    product = {}
    for gamma, cg in witness:
        for b, cb in terms:
            e = tuple(x + y for x, y in zip(gamma, b))
            product[e] = product.get(e, Fraction(0)) + cg * cb
    for e, coef in product.items():
        if coef != 0 and not in_semigroup(e):
            raise InternalConsistencyError(
                f"denominator witness leaves exponent {e} outside the semigroup"
            )


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class SaturationCriterionReport:
    """Top nonvanishing forces full rank and a saturated semigroup."""

    h_nonzero: bool
    rank: int
    rank_ok: bool
    saturated: bool
    witness: tuple[int, ...] | None
    implication_holds: bool


def saturation_criterion_check(
    n: int, seq: MonomialSequence, field=QQ
) -> SaturationCriterionReport:
    """Evaluate the criterion on R itself (zero ideal keeps R a domain)."""
    if seq.n != n:
        raise PreconditionError("sequence arity does not match n")
    report = local_cohomology_report(MonomialIdeal.zero(n), seq, field)
    h_top = report.nonzero(seq.length)
    sat = saturation_check(seq.exponent_matrix())
    rank_ok = sat.rank == seq.length
    implication = (not h_top) or (rank_ok and sat.saturated)
    return SaturationCriterionReport(
        h_top, sat.rank, rank_ok, sat.saturated, sat.witness, implication
    )


def converse_search(
    n: int,
    max_degree: int,
    max_i: int,
    field=QQ,
    cap: int = 20_000,
):
    """Enumerate sequences whose semigroup data would allow top
    nonvanishing and report those where it fails anyway.

    Pure exploration: a returned candidate is data for further study, not
    a counterexample claim.
    """
    if n < 1 or max_i < 1:
        raise PreconditionError("need n >= 1 and max_i >= 1")
    monos = []
    for exps in _exponents_up_to(n, max_degree):
        if any(exps):
            monos.append(Monomial(exps))
    monos.sort(key=lambda m: m.exps)
    candidates = []
    total = 0
    for i in range(1, max_i + 1):
        for items in combinations_with_replacement(monos, i):
            total += 1
            if total > cap:
                raise PreconditionError(
                    f"instance too large: more than {cap} candidate sequences"
                )
            seq = MonomialSequence(tuple(items))
            report = saturation_criterion_check(n, seq, field)
            if report.rank_ok and report.saturated and not report.h_nonzero:
                candidates.append((tuple(m.exps for m in items), report))
    return candidates


def _exponents_up_to(n, max_degree):
    for total in range(max_degree + 1):
        yield from _compositions(total, n)
