"""Degreewise Cech and Koszul cohomology of a monomial sequence on R/I.

The module M = R/I is Z^n-graded with every graded piece 0- or
1-dimensional, and each localization M[x_S^{-1}] stays that way degreewise.
The degree-a slice of the Cech complex is therefore a complex of tiny
vector spaces whose differentials have entries +-1, and cohomology
dimensions come out of exact ranks.

Two finiteness devices make global statements decidable:

* a chamber decomposition of Z^n — thresholds collected from 0 and from the
  generator coordinates of the saturated ideals J_S = (I : x_S^infinity)
  cut Z^n into finitely many boxes on which the whole degree-a complex is
  literally constant, so one representative per chamber decides global
  (non)vanishing and the cohomological dimension;
* direct-limit stabilization — Koszul cohomology of the t-th powers agrees
  degreewise with Cech cohomology once t clears every threshold, and
  localizations of a cohomology module along a monomial ray become constant
  once the ray enters its terminal chamber.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations

from .errors import InternalConsistencyError, PreconditionError
from .fields import QQ
from .linalg import SparseMatrix
from .monomial import Monomial, MonomialIdeal, MonomialSequence

DEFAULT_BOX_RADIUS = 5
DEFAULT_CHAMBER_CAP = 10**6
DEFAULT_BOX_CAP = 250_000


def insertion_sign(subset: tuple[int, ...], j: int) -> int:
    """Sign (-1)^pos for inserting index ``j`` into the sorted ``subset``."""
    pos = sum(1 for x in subset if x < j)
    return -1 if pos % 2 else 1


def iter_box(n: int, radius: int):
    """All degrees in [-radius, radius]^n, lexicographically."""
    if n == 0:
        yield ()
        return
    for rest in iter_box(n - 1, radius):
        for v in range(-radius, radius + 1):
            yield rest + (v,)


class CechContext:
    """Precomputed combinatorics of the Cech complex of ``s`` on R/I.

    Holds, for every subset S of sequence indices: the saturation
    J_S = (I : x_S^infinity), the support of the inverted product, and the
    exponent sum of the subset. All public cohomology entry points funnel
    through here.
    """

    def __init__(self, ideal: MonomialIdeal, seq: MonomialSequence):
        if ideal.n != seq.n:
            raise PreconditionError("ideal and sequence arities differ")
        if ideal.is_unit():
            raise PreconditionError("zero module: R/I must be nonzero")
        self.ideal = ideal
        self.seq = seq
        self.n = ideal.n
        self.i = seq.length
        self.levels = [
            [tuple(c) for c in combinations(range(self.i), p)]
            for p in range(self.i + 1)
        ]
        self.sat = {}
        self.outside = {}
        for level in self.levels:
            for subset in level:
                supp = seq.product_support(subset)
                prod = Monomial(seq.subset_degree(subset))
                self.sat[subset] = ideal.saturate(prod)
                self.outside[subset] = tuple(
                    c for c in range(self.n) if c not in supp
                )

    def piece(self, subset: tuple[int, ...], a) -> int:
        """dim_k of ((R/I)[x_S^{-1}])_a: 0 or 1.

        The degree-a slice survives iff a is nonnegative outside the
        inverted support and no saturated generator fits under a there.
        """
        outside = self.outside[subset]
        for c in outside:
            if a[c] < 0:
                return 0
        for g in self.sat[subset].gens:
            ge = g.exps
            if all(ge[c] <= a[c] for c in outside):
                return 0
        return 1

    def matrices_at(self, a, field=QQ):
        """Present pieces per level and the differential matrices at ``a``."""
        present = [
            [S for S in level if self.piece(S, a)] for level in self.levels
        ]
        mats = []
        for p in range(self.i):
            src = {S: k for k, S in enumerate(present[p])}
            dst = {S: k for k, S in enumerate(present[p + 1])}
            entries = {}
            for S, col in src.items():
                for j in range(self.i):
                    if j in S:
                        continue
                    T = tuple(sorted(S + (j,)))
                    row = dst.get(T)
                    if row is not None:
                        entries[(row, col)] = field.of_int(
                            insertion_sign(S, j)
                        )
            mats.append(
                SparseMatrix(len(present[p + 1]), len(present[p]), entries, field)
            )
        return present, mats

    def cohomology_at(self, a, field=QQ) -> tuple[int, ...]:
        present, mats = self.matrices_at(a, field)
        ranks = [m.rank() for m in mats]
        dims = []
        for p in range(self.i + 1):
            h = len(present[p])
            if p < self.i:
                h -= ranks[p]
            if p > 0:
                h -= ranks[p - 1]
            if h < 0:
                raise InternalConsistencyError(
                    f"broken complex: negative dimension {h} at index {p}, "
                    f"degree {tuple(a)}"
                )
            dims.append(h)
        return tuple(dims)


def localized_piece(
    ideal: MonomialIdeal, seq: MonomialSequence, subset, a
) -> int:
    """Graded dimension of the degree-a slice of (R/I)[x_S^{-1}]."""
    ctx = CechContext(ideal, seq)
    return ctx.piece(tuple(sorted(subset)), tuple(a))


def localized_piece_ray_oracle(
    ideal: MonomialIdeal, seq: MonomialSequence, subset, a
) -> int:
    """Independent evaluation of the same piece as a direct limit.

    Walks the ray a, a+sigma, a+2*sigma, ... (sigma = exponent of the
    inverted product) far enough that plain staircase membership in I is
    stable, never touching the saturation formula. Quotient-then-localize
    against localize-then-quotient.
    """
    subset = tuple(sorted(subset))
    sigma = seq.subset_degree(subset)
    maxgen = 0
    for g in ideal.gens:
        maxgen = max(maxgen, max(g.exps, default=0))
    lo = min(a)
    # past this many steps every moving coordinate clears 0 and every
    # generator coordinate, so the membership pattern is constant
    steps = max(1, maxgen - lo + 1)

    def module_dim(b):
        if any(x < 0 for x in b):
            return 0
        return 0 if ideal.contains_exponent(b) else 1

    def at(m):
        return module_dim(tuple(x + m * s for x, s in zip(a, sigma)))

    v1, v2 = at(steps), at(steps + 1)
    if v1 != v2:
        raise InternalConsistencyError(
            f"localization ray failed to stabilize at degree {tuple(a)}"
        )
    return v1


def cech_at_degree(
    ideal: MonomialIdeal, seq: MonomialSequence, a, field=QQ
) -> tuple[int, ...]:
    """Cohomology dimensions (h^0, ..., h^i) of the Cech complex at ``a``."""
    return CechContext(ideal, seq).cohomology_at(tuple(a), field)


@dataclass(frozen=True)
class Chamber:
    """One product-of-intervals region with its representative degree."""

    index: tuple[int, ...]
    rep: tuple[int, ...]
    dims: tuple[int, ...]


@dataclass
class ChamberDecomposition:
    """Finite partition of Z^n on which the Cech complex is constant.

    Per-coordinate thresholds t_1 < ... < t_m split Z into the intervals
    (-inf, t_1), [t_1, t_2), ..., [t_m, inf); chambers are products of
    these. Every chamber carries the cohomology vector of its
    representative degree.
    """

    n: int
    length: int
    thresholds: list[list[int]]
    chambers: list[Chamber] = dataclass_field(default_factory=list)
    _by_index: dict = dataclass_field(default_factory=dict)

    def chamber_index_of(self, a) -> tuple[int, ...]:
        return tuple(
            bisect_right(self.thresholds[c], a[c]) for c in range(self.n)
        )

    def vector_at(self, a) -> tuple[int, ...]:
        return self._by_index[self.chamber_index_of(a)].dims

    def interval_bounds(self, c: int, k: int):
        """(lo, hi) of interval k in coordinate c; None encodes infinity."""
        ts = self.thresholds[c]
        lo = ts[k - 1] if k > 0 else None
        hi = ts[k] if k < len(ts) else None
        return lo, hi

    def max_threshold_magnitude(self) -> int:
        return max(
            (abs(t) for ts in self.thresholds for t in ts), default=0
        )


def chamber_thresholds(ideal: MonomialIdeal, seq: MonomialSequence):
    """Threshold grid: 0 plus every generator coordinate of every J_S."""
    ctx = CechContext(ideal, seq)
    thresholds = [{0} for _ in range(ctx.n)]
    for sat in ctx.sat.values():
        for g in sat.gens:
            for c, e in enumerate(g.exps):
                thresholds[c].add(e)
    return [sorted(ts) for ts in thresholds]


def chamber_decomposition(
    ideal: MonomialIdeal,
    seq: MonomialSequence,
    field=QQ,
    cap: int = DEFAULT_CHAMBER_CAP,
) -> ChamberDecomposition:
    ctx = CechContext(ideal, seq)
    thresholds = chamber_thresholds(ideal, seq)
    count = 1
    for ts in thresholds:
        count *= len(ts) + 1
    if count > cap:
        raise PreconditionError(
            f"instance too large: {count} chambers exceed the cap {cap}"
        )
    decomp = ChamberDecomposition(ctx.n, ctx.i, thresholds)

    def reps_for(c):
        ts = thresholds[c]
        return [ts[0] - 1] + list(ts)

    rep_choices = [reps_for(c) for c in range(ctx.n)]

    def rec(c, idx, rep):
        if c == ctx.n:
            dims = ctx.cohomology_at(tuple(rep), field)
            chamber = Chamber(tuple(idx), tuple(rep), dims)
            decomp.chambers.append(chamber)
            decomp._by_index[chamber.index] = chamber
            return
        for k, r in enumerate(rep_choices[c]):
            rec(c + 1, idx + [k], rep + [r])

    rec(0, [], [])
    return decomp


@dataclass(frozen=True)
class IndexVerdict:
    """(Non)vanishing verdict for one cohomological index."""

    j: int
    nonzero: bool
    witness: tuple[int, ...] | None


@dataclass(frozen=True)
class LocalCohomologyReport:
    """Global vanishing verdicts per index and the cohomological dimension.

    ``cd`` is None exactly when every index vanishes; that cannot happen
    for a nonzero module, so None doubles as a consistency tripwire.
    """

    n: int
    length: int
    verdicts: tuple[IndexVerdict, ...]
    cd: int | None

    def nonzero(self, j: int) -> bool:
        return self.verdicts[j].nonzero

    def witness(self, j: int):
        return self.verdicts[j].witness


def local_cohomology_report(
    ideal: MonomialIdeal,
    seq: MonomialSequence,
    field=QQ,
    cap: int = DEFAULT_CHAMBER_CAP,
) -> LocalCohomologyReport:
    decomp = chamber_decomposition(ideal, seq, field, cap)
    verdicts = []
    cd = None
    for j in range(seq.length + 1):
        witness = None
        for chamber in decomp.chambers:
            if chamber.dims[j] >= 1:
                witness = chamber.rep
                break
        nonzero = witness is not None
        if nonzero:
            cd = j
        verdicts.append(IndexVerdict(j, nonzero, witness))
    return LocalCohomologyReport(
        decomp.n, seq.length, tuple(verdicts), cd
    )


def cd_vs_dim(ideal: MonomialIdeal, field=QQ):
    """Cohomological dimension of the full variable sequence vs Krull dim."""
    if ideal.is_unit():
        raise PreconditionError("zero module: R/I must be nonzero")
    n = ideal.n
    variables = MonomialSequence(
        tuple(
            Monomial(tuple(1 if c == v else 0 for c in range(n)))
            for v in range(n)
        )
    )
    report = local_cohomology_report(ideal, variables, field)
    dim = ideal.krull_dim()
    return report.cd, dim, report.cd == dim


def koszul_at_degree(
    ideal: MonomialIdeal,
    seq: MonomialSequence,
    t: int,
    a,
    field=QQ,
) -> tuple[int, ...]:
    """Cohomology at degree ``a`` of the Koszul complex on the t-th powers.

    The summand for subset S sits at internal degree a + t*sigma_S, which
    makes every multiplication-by-x_j^t differential degree preserving;
    entries are +-1 exactly where both 0/1-dimensional endpoints survive.
    """
    if t < 1:
        raise PreconditionError("Koszul power t must be >= 1")
    if ideal.n != seq.n:
        raise PreconditionError("ideal and sequence arities differ")
    if ideal.is_unit():
        raise PreconditionError("zero module: R/I must be nonzero")
    a = tuple(a)
    n, i = ideal.n, seq.length
    levels = [
        [tuple(c) for c in combinations(range(i), p)] for p in range(i + 1)
    ]

    def module_dim(b):
        if any(x < 0 for x in b):
            return 0
        return 0 if ideal.contains_exponent(b) else 1

    def shifted(subset):
        sigma = seq.subset_degree(subset)
        return tuple(x + t * s for x, s in zip(a, sigma))

    present = [
        [S for S in level if module_dim(shifted(S))] for level in levels
    ]
    ranks = []
    for p in range(i):
        src = {S: k for k, S in enumerate(present[p])}
        dst = {S: k for k, S in enumerate(present[p + 1])}
        entries = {}
        for S, col in src.items():
            for j in range(i):
                if j in S:
                    continue
                T = tuple(sorted(S + (j,)))
                row = dst.get(T)
                if row is not None:
                    entries[(row, col)] = field.of_int(insertion_sign(S, j))
        ranks.append(
            SparseMatrix(
                len(present[p + 1]), len(present[p]), entries, field
            ).rank()
        )
    dims = []
    for p in range(i + 1):
        h = len(present[p])
        if p < i:
            h -= ranks[p]
        if p > 0:
            h -= ranks[p - 1]
        if h < 0:
            raise InternalConsistencyError(
                f"broken Koszul complex: negative dimension at index {p}, "
                f"degree {a}, power {t}"
            )
        dims.append(h)
    return tuple(dims)


def koszul_colimit_check(
    ideal: MonomialIdeal,
    seq: MonomialSequence,
    box_radius: int,
    field=QQ,
) -> bool:
    """Koszul cohomology of large powers equals Cech cohomology degreewise.

    Stabilization is declared once t clears every chamber threshold plus
    the box radius and two consecutive powers agree; failure of the latter
    is an engine bug and raises, while a stable value differing from the
    Cech value makes the check return False.
    """
    thresholds = chamber_thresholds(ideal, seq)
    tmax = max(abs(t) for ts in thresholds for t in ts)
    t0 = tmax + box_radius + 1
    for a in iter_box(ideal.n, box_radius):
        k1 = koszul_at_degree(ideal, seq, t0, a, field)
        k2 = koszul_at_degree(ideal, seq, t0 + 1, a, field)
        if k1 != k2:
            raise InternalConsistencyError(
                f"stabilization failure at degree {a}: {k1} vs {k2}"
            )
        if k1 != cech_at_degree(ideal, seq, a, field):
            return False
    return True


@dataclass(frozen=True)
class GradedPieceTable:
    """Cohomology dimension vectors indexed by degree over a finite region."""

    n: int
    length: int
    dims: dict

    def get(self, a) -> tuple[int, ...]:
        key = tuple(a)
        if key not in self.dims:
            raise PreconditionError(
                f"degree {key} is outside the computed region"
            )
        return self.dims[key]

    def degrees(self):
        return sorted(self.dims)


def brute_force_box(
    ideal: MonomialIdeal,
    seq: MonomialSequence,
    box_radius: int,
    field=QQ,
    cap: int = DEFAULT_BOX_CAP,
) -> GradedPieceTable:
    """Cech cohomology at every degree of [-r, r]^n, one complex per degree.

    This is the independent oracle: no chamber structure is consulted and
    every degree is evaluated from scratch.
    """
    volume = (2 * box_radius + 1) ** ideal.n
    if volume > cap:
        raise PreconditionError(
            f"instance too large: box volume {volume} exceeds the cap {cap}"
        )
    ctx = CechContext(ideal, seq)
    dims = {}
    for a in iter_box(ideal.n, box_radius):
        dims[a] = ctx.cohomology_at(a, field)
    return GradedPieceTable(ideal.n, seq.length, dims)


class CohomologyModuleHandle:
    """H^q of the Cech complex as a graded module, degree by degree.

    For each queried degree the handle produces an explicit basis of
    cocycles modulo coboundaries, written in the full subset coordinate
    system of the q-th Cech term, plus matrices for multiplication by a
    monomial between degrees. Multiplication is the identity-like chain
    map that copies a subset coordinate whenever the localization piece
    survives at both ends.
    """

    def __init__(self, ideal: MonomialIdeal, seq: MonomialSequence, q: int, field=QQ):
        if not 0 <= q <= seq.length:
            raise PreconditionError(f"index q={q} outside 0..{seq.length}")
        self.ctx = CechContext(ideal, seq)
        self.q = q
        self.field = field
        self.subsets = self.ctx.levels[q]
        self._slot = {S: k for k, S in enumerate(self.subsets)}
        self._cache = {}

    def _full_coords(self, vec, present):
        f = self.field
        out = [f.zero] * len(self.subsets)
        for value, S in zip(vec, present):
            out[self._slot[S]] = value
        return out

    def _data_at(self, a):
        """(present pieces, image vectors, cohomology basis vectors) at a."""
        a = tuple(a)
        if a in self._cache:
            return self._cache[a]
        f = self.field
        present, mats = self.ctx.matrices_at(a, f)
        pres_q = present[self.q]
        # kernel of the outgoing differential, in full subset coordinates
        if self.q < self.ctx.i:
            kernel = [
                self._full_coords(v, pres_q)
                for v in mats[self.q].kernel_basis()
            ]
        else:
            kernel = [
                self._full_coords(
                    [f.one if k == j else f.zero for k in range(len(pres_q))],
                    pres_q,
                )
                for j in range(len(pres_q))
            ]
        # image of the incoming differential
        image = []
        if self.q > 0:
            m = mats[self.q - 1]
            for col in range(m.cols):
                vec = [m.get(r, col) for r in range(m.rows)]
                image.append(self._full_coords(vec, pres_q))
        image = _independent_subset(image, f)
        basis = []
        span = list(image)
        for v in kernel:
            if _grows_span(span, v, f):
                span.append(v)
                basis.append(v)
        data = (pres_q, image, basis)
        self._cache[a] = data
        return data

    def dim(self, a) -> int:
        return len(self._data_at(a)[2])

    def basis(self, a):
        return self._data_at(a)[2]

    def mult_matrix(self, u_exps, a) -> SparseMatrix:
        """Matrix of multiplication by y^u from H^q at ``a`` to ``a + u``."""
        f = self.field
        a = tuple(a)
        b = tuple(x + u for x, u in zip(a, u_exps))
        _, _, src_basis = self._data_at(a)
        tgt_present, tgt_image, tgt_basis = self._data_at(b)
        tgt_set = set(tgt_present)
        columns = []
        for v in src_basis:
            w = [
                v[k] if S in tgt_set else f.zero
                for k, S in enumerate(self.subsets)
            ]
            coeffs = _express(w, tgt_image, tgt_basis, f)
            if coeffs is None:
                raise InternalConsistencyError(
                    f"multiplication image at degree {b} is not a cocycle"
                )
            columns.append(coeffs)
        entries = {}
        for col, coeffs in enumerate(columns):
            for row, value in enumerate(coeffs):
                if not f.is_zero(value):
                    entries[(row, col)] = value
        return SparseMatrix(len(tgt_basis), len(src_basis), entries, f)


def _independent_subset(vectors, f):
    out = []
    for v in vectors:
        if _grows_span(out, v, f):
            out.append(v)
    return out


def _grows_span(span, v, f):
    if all(f.is_zero(x) for x in v):
        return False
    if not span:
        return True
    width = len(v)
    m = SparseMatrix(
        width,
        len(span),
        {
            (r, c): span[c][r]
            for c in range(len(span))
            for r in range(width)
            if not f.is_zero(span[c][r])
        },
        f,
    )
    return m.solve(v) is None


def _express(w, image, basis, f):
    """Coordinates of ``w`` on ``basis`` modulo the span of ``image``.

    Returns None if ``w`` is not in the combined span.
    """
    cols = basis + image
    if not cols:
        return [] if all(f.is_zero(x) for x in w) else None
    width = len(w)
    m = SparseMatrix(
        width,
        len(cols),
        {
            (r, c): cols[c][r]
            for c in range(len(cols))
            for r in range(width)
            if not f.is_zero(cols[c][r])
        },
        f,
    )
    sol = m.solve(w)
    if sol is None:
        return None
    return sol[: len(basis)]


def iterated_cohomology_check(
    ideal: MonomialIdeal,
    inner: MonomialSequence,
    outer: tuple[Monomial, ...],
    box_radius: int,
    field=QQ,
) -> bool:
    """Degreewise collapse of iterated local cohomology.

    Compares dim H^d of the concatenated sequence at every box degree with
    dim H^{d-i} of the outer sequence applied to the graded module
    H^i(inner), the latter realized by stabilized localization colimits:
    each outer-subset summand is the inner cohomology evaluated far enough
    along its monomial ray that consecutive multiplication maps are
    isomorphisms.
    """
    outer = tuple(outer)
    for z in outer:
        if z.n != ideal.n:
            raise PreconditionError("outer item arity mismatch")
        if z.is_one():
            raise PreconditionError("outer items must not equal 1")
    i = inner.length
    d = i + len(outer)
    concat = MonomialSequence(inner.items + outer)
    handle = CohomologyModuleHandle(ideal, inner, i, field)
    thresholds = chamber_thresholds(ideal, inner)
    tmax = max(abs(t) for ts in thresholds for t in ts)
    m_star = max(1, tmax + box_radius)

    subsets = [
        tuple(c)
        for p in range(len(outer) + 1)
        for c in combinations(range(len(outer)), p)
    ]

    def sigma(subset):
        acc = [0] * ideal.n
        for j in subset:
            for c, e in enumerate(outer[j].exps):
                acc[c] += e
        return tuple(acc)

    def outer_top_dim(a, m):
        degree_of = {
            S: tuple(x + m * sg for x, sg in zip(a, sigma(S)))
            for S in subsets
        }
        by_level = {}
        for S in subsets:
            by_level.setdefault(len(S), []).append(S)
        q_top = len(outer)
        dims_by_level = {
            p: [handle.dim(degree_of[S]) for S in by_level[p]]
            for p in by_level
        }
        ranks = {}
        for p in range(q_top):
            src = by_level[p]
            dst = by_level[p + 1]
            src_off, acc = {}, 0
            for S in src:
                src_off[S] = acc
                acc += handle.dim(degree_of[S])
            total_src = acc
            dst_off, acc = {}, 0
            for S in dst:
                dst_off[S] = acc
                acc += handle.dim(degree_of[S])
            total_dst = acc
            entries = {}
            for S in src:
                if handle.dim(degree_of[S]) == 0:
                    continue
                for j in range(len(outer)):
                    if j in S:
                        continue
                    T = tuple(sorted(S + (j,)))
                    if handle.dim(degree_of[T]) == 0:
                        continue
                    step = tuple(m * e for e in outer[j].exps)
                    block = handle.mult_matrix(step, degree_of[S])
                    sign = insertion_sign(S, j)
                    for (r, c), v in block.entries.items():
                        value = v if sign == 1 else field.neg(v)
                        entries[(dst_off[T] + r, src_off[S] + c)] = value
            ranks[p] = SparseMatrix(total_dst, total_src, entries, field).rank()
        h = sum(dims_by_level[q_top])
        if q_top > 0:
            h -= ranks[q_top - 1]
        if h < 0:
            raise InternalConsistencyError(
                f"broken outer complex at degree {a}: negative dimension"
            )
        return h

    for a in iter_box(ideal.n, box_radius):
        lhs = cech_at_degree(ideal, concat, a, field)[d]
        rhs = outer_top_dim(a, m_star)
        rhs_next = outer_top_dim(a, m_star + 1)
        if rhs != rhs_next:
            raise PreconditionError(
                f"increase box: outer colimit not stable at degree {a} "
                f"({rhs} vs {rhs_next})"
            )
        if lhs != rhs:
            return False
    return True
