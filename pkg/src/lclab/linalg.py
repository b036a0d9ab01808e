"""Exact sparse linear algebra over a field, and integer Smith normal form.

All Cech and Koszul differentials in this package are sparse matrices with
entries ``+-1``; ranks and kernels of those matrices are what turns graded
pieces into cohomology dimensions. Elimination uses a deterministic pivot
rule (first usable row, columns left to right) so kernel bases are
reproducible across runs.

The integer side provides the Smith normal form with unimodular transforms,
which is the workhorse for exponent-lattice membership.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .fields import QQ


class SparseMatrix:
    """Immutable sparse matrix over a field.

    Entries are a map ``(row, col) -> scalar``; zeros are never stored.
    """

    __slots__ = ("rows", "cols", "field", "entries")

    def __init__(self, rows: int, cols: int, entries=None, field=QQ):
        if rows < 0 or cols < 0:
            raise PreconditionError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        self.field = field
        clean = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for (r, c), v in items:
                if not (0 <= r < rows and 0 <= c < cols):
                    raise PreconditionError(
                        f"entry index ({r},{c}) outside {rows}x{cols} matrix"
                    )
                v = field.of_int(v) if isinstance(v, int) else v
                if not field.is_zero(v):
                    clean[(r, c)] = v
        self.entries = clean

    @classmethod
    def identity(cls, n: int, field=QQ) -> "SparseMatrix":
        return cls(n, n, {(i, i): field.one for i in range(n)}, field)

    def get(self, r: int, c: int):
        return self.entries.get((r, c), self.field.zero)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols,
            self.rows,
            {(c, r): v for (r, c), v in self.entries.items()},
            self.field,
        )

    def to_dense(self):
        out = [[self.field.zero] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def _row_maps(self):
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def _echelon(self):
        """Row reduce; returns (pivot columns, reduced rows as dicts).

        Pivot selection: scan columns in increasing order, take the first
        remaining row with a nonzero entry in that column.
        """
        f = self.field
        rows = self._row_maps()
        pivots = []
        pivot_row_of = {}
        next_row = 0
        for col in range(self.cols):
            # find pivot among rows not yet used
            pr = None
            for r in range(next_row, self.rows):
                if col in rows[r]:
                    pr = r
                    break
            if pr is None:
                continue
            if pr != next_row:
                rows[pr], rows[next_row] = rows[next_row], rows[pr]
            pr = next_row
            piv = rows[pr][col]
            inv = f.inv(piv)
            rows[pr] = {c: f.mul(inv, v) for c, v in rows[pr].items()}
            # eliminate everywhere else (full reduction, for kernel reading)
            for r in range(self.rows):
                if r == pr:
                    continue
                factor = rows[r].get(col)
                if factor is None:
                    continue
                target = rows[r]
                for c, v in rows[pr].items():
                    nv = f.sub(target.get(c, f.zero), f.mul(factor, v))
                    if f.is_zero(nv):
                        target.pop(c, None)
                    else:
                        target[c] = nv
            pivot_row_of[col] = pr
            pivots.append(col)
            next_row += 1
            if next_row == self.rows:
                break
        return pivots, rows

    def rank(self) -> int:
        pivots, _ = self._echelon()
        return len(pivots)

    def kernel_basis(self):
        """Basis of the right kernel, one vector per free column.

        The basis is the standard one read off the reduced row echelon form
        (free column set to 1, pivots back-substituted), listed in increasing
        free-column order.
        """
        f = self.field
        pivots, rows = self._echelon()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec = [f.zero] * self.cols
            vec[free] = f.one
            for idx, col in enumerate(pivots):
                coeff = rows[idx].get(free)
                if coeff is not None:
                    vec[col] = f.neg(coeff)
            basis.append(vec)
        return basis

    def solve(self, b):
        """One solution ``x`` of ``M x = b``, or ``None`` if inconsistent."""
        f = self.field
        if len(b) != self.rows:
            raise PreconditionError("right-hand side length mismatch")
        aug = SparseMatrix(
            self.rows,
            self.cols + 1,
            dict(self.entries)
            | {
                (r, self.cols): v
                for r, v in enumerate(b)
                if not f.is_zero(f.of_int(v) if isinstance(v, int) else v)
            },
            f,
        )
        pivots, rows = aug._echelon()
        if pivots and pivots[-1] == self.cols:
            return None  # pivot in the augmented column
        x = [f.zero] * self.cols
        for idx, col in enumerate(pivots):
            x[col] = rows[idx].get(self.cols, f.zero)
        return x

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


def rank(m: SparseMatrix) -> int:
    return m.rank()


def kernel_basis(m: SparseMatrix):
    return m.kernel_basis()


class IntegerMatrix:
    """Dense integer matrix (rows x cols), used for exponent matrices."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = [list(row) for row in data]
        if data and any(len(row) != len(data[0]) for row in data):
            raise PreconditionError("ragged integer matrix")
        for row in data:
            for v in row:
                if not isinstance(v, int):
                    raise PreconditionError(f"integer matrix entry {v!r} is not an int")
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def copy(self) -> "IntegerMatrix":
        return IntegerMatrix([row[:] for row in self.data])

    def mul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise PreconditionError("shape mismatch in integer matrix product")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.data[i]
            for k, a in enumerate(row):
                if a == 0:
                    continue
                orow = other.data[k]
                orow_out = out[i]
                for j, b in enumerate(orow):
                    if b:
                        orow_out[j] += a * b
        return IntegerMatrix(out)

    def rational_rank(self) -> int:
        m = SparseMatrix(
            self.rows,
            self.cols,
            {
                (i, j): Fraction(v)
                for i, row in enumerate(self.data)
                for j, v in enumerate(row)
                if v
            },
            QQ,
        )
        return m.rank()

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise PreconditionError("determinant of a non-square matrix")
        # fraction-free Bareiss elimination
        n = self.rows
        a = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerMatrix) and self.data == other.data

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.data!r})"


class SmithNormalForm:
    """Result of the Smith decomposition ``U * A * V = D``.

    ``diagonal`` lists the nonzero invariant factors d1 | d2 | ... ; ``U``
    and ``V`` are unimodular.
    """

    __slots__ = ("diagonal", "U", "V", "rows", "cols")

    def __init__(self, diagonal, U, V, rows, cols):
        self.diagonal = diagonal
        self.U = U
        self.V = V
        self.rows = rows
        self.cols = cols

    def d_matrix(self) -> IntegerMatrix:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, d in enumerate(self.diagonal):
            out[i][i] = d
        return IntegerMatrix(out)


def smith_normal_form(a: IntegerMatrix) -> SmithNormalForm:
    """Smith normal form with transforms, by repeated pivoting on the
    smallest remaining entry.

    Returns invariant factors ``d1 | d2 | ...`` (positive, divisibility
    chain) together with unimodular ``U`` (rows x rows) and ``V``
    (cols x cols) satisfying ``U A V = D``.
    """
    m, n = a.rows, a.cols
    mat = [row[:] for row in a.data]
    U = IntegerMatrix.identity(m).data
    V = IntegerMatrix.identity(n).data

    def row_op(i, j, q):  # row_i -= q * row_j
        for c in range(n):
            mat[i][c] -= q * mat[j][c]
        for c in range(m):
            U[i][c] -= q * U[j][c]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(m):
            mat[r][i] -= q * mat[r][j]
        for r in range(n):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        mat[i], mat[j] = mat[j], mat[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(m):
            mat[r][i], mat[r][j] = mat[r][j], mat[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def negate_row(i):
        for c in range(n):
            mat[i][c] = -mat[i][c]
        for c in range(m):
            U[i][c] = -U[i][c]

    t = 0
    while t < min(m, n):
        # locate smallest nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(mat[i][j])
                if v and (best is None or v < abs(mat[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        if mat[t][t] < 0:
            negate_row(t)
        # clear the row and column below/right of the pivot
        dirty = False
        for i in range(t + 1, m):
            if mat[i][t]:
                q = mat[i][t] // mat[t][t]
                row_op(i, t, q)
                if mat[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if mat[t][j]:
                q = mat[t][j] // mat[t][t]
                col_op(j, t, q)
                if mat[t][j]:
                    dirty = True
        if dirty:
            continue  # remainders left; re-pick the smallest pivot
        # enforce divisibility: pivot must divide every trailing entry
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if mat[i][j] % mat[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)  # fold the offending row into the pivot row
            continue
        t += 1

    diagonal = [mat[i][i] for i in range(min(m, n)) if mat[i][i] != 0]
    return SmithNormalForm(diagonal, IntegerMatrix(U), IntegerMatrix(V), m, n)


def lattice_solve(a: IntegerMatrix, b) -> list | None:
    """Integer row vector ``x`` with ``x A = b``, or ``None``.

    Existence is decided through the Smith form: with ``U A V = D`` the
    system becomes ``y D = b V`` whose solvability over the integers is a
    divisibility check along the diagonal.
    """
    if len(b) != a.cols:
        raise PreconditionError("vector length does not match matrix columns")
    snf = smith_normal_form(a)
    c = [
        sum(b[r] * snf.V.data[r][j] for r in range(a.cols))
        for j in range(a.cols)
    ]
    r = len(snf.diagonal)
    y = [0] * a.rows
    for j in range(a.cols):
        if j < r:
            d = snf.diagonal[j]
            if c[j] % d:
                return None
            y[j] = c[j] // d
        elif c[j]:
            return None
    # x = y U
    return [
        sum(y[k] * snf.U.data[k][j] for k in range(a.rows))
        for j in range(a.rows)
    ]
