"""Exact linear algebra over the rationals and the integers.

Everything here is exact: entries are python ints or ``fractions.Fraction``,
never floats.  Dense matrices are small row-tuples aimed at desk-scale
problems; the sparse column format and the incremental reducer exist for the
larger, very sparse systems produced by the module calculus (permutation
actions, chain complexes of posets).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class ShapeMismatchError(ValueError):
    """Raised when matrix shapes are incompatible for the requested operation."""


class ComplexInvalidError(ValueError):
    """Raised when a chain complex fails d . d = 0; carries the offending degree."""

    def __init__(self, degree: int, message: str | None = None):
        self.degree = degree
        super().__init__(message or f"d . d != 0 entering degree {degree}")


def _coerce(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")


class Matrix:
    """Immutable dense matrix with exact rational entries (row-major)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = [_coerce(x) for x in entries]
        if len(entries) != rows * cols:
            raise ShapeMismatchError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(
            self,
            "data",
            tuple(tuple(entries[r * cols : (r + 1) * cols]) for r in range(rows)),
        )

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Matrix is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0]) if cols is None else cols
            if any(len(r) != cols for r in rows):
                raise ShapeMismatchError("ragged rows")
        elif cols is None:
            cols = 0
        flat = [x for r in rows for x in r]
        return cls(len(rows), cols, flat)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [0] * (rows * cols))

    # -- basic protocol ------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(self.data[i][j] for i in range(self.rows))

    @property
    def entries(self) -> list:
        """Row-major flat list of entries."""
        return [x for r in self.data for x in r]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.data for x in r)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatchError("addition shape mismatch")
        return Matrix(
            self.rows,
            self.cols,
            [a + b for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-x for r in self.data for x in r])

    def scale(self, c) -> "Matrix":
        c = _coerce(c)
        return Matrix(self.rows, self.cols, [c * x for r in self.data for x in r])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ot = list(zip(*other.data)) if other.data else [()] * other.cols
        out = []
        for r in self.data:
            for c in ot:
                out.append(sum(a * b for a, b in zip(r, c) if a and b))
        if not self.data or not other.data:
            out = [Fraction(0)] * (self.rows * other.cols)
        return Matrix(self.rows, other.cols, out)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows, [self.data[i][j] for j in range(self.cols) for i in range(self.rows)]
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeMismatchError("hstack row mismatch")
        return Matrix.from_rows(
            [list(a) + list(b) for a, b in zip(self.data, other.data)], self.cols + other.cols
        )


# ---------------------------------------------------------------------------
# dense elimination
# ---------------------------------------------------------------------------


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c]
        if inv != 1:
            rows[r] = [_coerce(x) / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(a: Matrix) -> int:
    """Rank over Q, by fraction-free (Bareiss-style) elimination.

    Rows are cleared to integers first; the elimination then stays in Z,
    which keeps intermediate entries small compared to naive Fraction
    pivoting.
    """
    rows = []
    for r in a.data:
        lcm = 1
        for x in r:
            if x.denominator != 1:
                g = _gcd(lcm, x.denominator)
                lcm = lcm // g * x.denominator
        rows.append([int(x * lcm) for x in r])
    m, n = len(rows), a.cols
    rk = 0
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            if any(rows[i]):
                fi = rows[i][c]
                rows[i] = [(piv * rows[i][j] - fi * rows[r][j]) // prev for j in range(n)]
        prev = piv
        rk += 1
        r += 1
    return rk


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def determinant(a: Matrix) -> Fraction:
    """Exact determinant (Bareiss over a common denominator)."""
    if a.rows != a.cols:
        raise ShapeMismatchError("determinant of non-square matrix")
    n = a.rows
    if n == 0:
        return Fraction(1)
    denom = Fraction(1)
    rows = []
    for r in a.data:
        lcm = 1
        for x in r:
            if x.denominator != 1:
                g = _gcd(lcm, x.denominator)
                lcm = lcm // g * x.denominator
        denom *= lcm
        rows.append([int(x * lcm) for x in r])
    sign = 1
    prev = 1
    for c in range(n - 1):
        pr = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            sign = -sign
        piv = rows[c][c]
        for i in range(c + 1, n):
            rows[i] = [(piv * rows[i][j] - rows[i][c] * rows[c][j]) // prev for j in range(n)]
        prev = piv
    return Fraction(sign * rows[n - 1][n - 1], 1) / denom


def kernel_basis(a: Matrix) -> Matrix:
    """Basis of the right kernel, as columns; deterministic (RREF back-fill)."""
    rows = [list(r) for r in a.data]
    rows, pivots = _rref(rows)
    pivset = set(pivots)
    free = [c for c in range(a.cols) if c not in pivset]
    cols = []
    for f in free:
        v = [Fraction(0)] * a.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        cols.append(v)
    return Matrix(a.cols, len(free), [v[i] for i in range(a.cols) for v in cols])


def cokernel(a: Matrix) -> tuple[int, Matrix]:
    """Cokernel of ``a`` as (dimension, projection matrix).

    The projection has full row rank, kills the image of ``a``, and its
    restriction to the chosen complement is the identity.  The complement is
    the lexicographically first maximal set of standard basis vectors that is
    independent modulo the image.
    """
    img = _column_space_reducer(a)
    chosen: list[int] = []
    probe = VectorReducer()
    for piv, row in img.rows():
        probe.insert(dict(row))
    for j in range(a.rows):
        if probe.insert({j: Fraction(1)}) is not None:
            chosen.append(j)
    q = len(chosen)
    # express each standard basis vector in the chosen complement, modulo im(a)
    # solve [image_basis | e_chosen] x = e_j  and read off the chosen part
    basis_cols = [dict(row) for _, row in img.rows()]
    for j in chosen:
        basis_cols.append({j: Fraction(1)})
    ncols = len(basis_cols)
    dense = [[Fraction(0)] * (ncols + a.rows) for _ in range(a.rows)]
    for cidx, col in enumerate(basis_cols):
        for r, v in col.items():
            dense[r][cidx] = v
    for j in range(a.rows):
        dense[j][ncols + j] = Fraction(1)
    dense, pivots = _rref(dense)
    # pivots must be exactly the first ncols columns (basis_cols independent, spanning)
    proj = [[Fraction(0)] * a.rows for _ in range(q)]
    for r, p in enumerate(pivots):
        if p >= ncols:
            break
        if p >= ncols - q:  # a chosen-complement column
            ci = p - (ncols - q)
            for j in range(a.rows):
                proj[ci][j] = dense[r][ncols + j]
    return q, Matrix.from_rows(proj, a.rows)


def solve_columns(a: Matrix, b: Matrix) -> Matrix:
    """Solve a @ x = b column-wise; raises ValueError if inconsistent."""
    if a.rows != b.rows:
        raise ShapeMismatchError("solve shape mismatch")
    aug = [list(ra) + list(rb) for ra, rb in zip(a.data, b.data)]
    if a.rows == 0:
        aug = []
    aug, pivots = _rref(aug)
    for r in range(len(pivots), a.rows):
        if any(aug[r][a.cols :]):
            raise ValueError("inconsistent linear system")
    if any(p >= a.cols for p in pivots):
        raise ValueError("inconsistent linear system")
    x = [[Fraction(0)] * b.cols for _ in range(a.cols)]
    for r, p in enumerate(pivots):
        for j in range(b.cols):
            x[p][j] = aug[r][a.cols + j]
    return Matrix.from_rows(x, b.cols)


# ---------------------------------------------------------------------------
# sparse vectors / matrices
# ---------------------------------------------------------------------------

SparseVec = dict  # index -> Fraction, zero entries absent


def vec_add(u: SparseVec, v: SparseVec, c=1) -> SparseVec:
    """u + c*v as a new sparse vector."""
    out = dict(u)
    for i, x in v.items():
        y = out.get(i, 0) + c * x
        if y:
            out[i] = y
        else:
            out.pop(i, None)
    return out


class SparseMatrix:
    """Column-sparse exact matrix: one dict {row: value} per column."""

    __slots__ = ("rows", "cols", "columns")

    def __init__(self, rows: int, cols: int, columns: Sequence[dict] | None = None):
        self.rows = rows
        self.cols = cols
        self.columns = [dict() for _ in range(cols)] if columns is None else [dict(c) for c in columns]
        if len(self.columns) != cols:
            raise ShapeMismatchError("column count mismatch")

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    @classmethod
    def from_matrix(cls, a: Matrix) -> "SparseMatrix":
        cols = [dict() for _ in range(a.cols)]
        for i, row in enumerate(a.data):
            for j, x in enumerate(row):
                if x:
                    cols[j][i] = x
        return cls(a.rows, a.cols, cols)

    def to_matrix(self) -> Matrix:
        entries = [Fraction(0)] * (self.rows * self.cols)
        for j, col in enumerate(self.columns):
            for i, x in col.items():
                entries[i * self.cols + j] = x
        return Matrix(self.rows, self.cols, entries)

    def set(self, i: int, j: int, value) -> None:
        value = _coerce(value)
        if value:
            self.columns[j][i] = value
        else:
            self.columns[j].pop(i, None)

    def apply(self, vec: SparseVec) -> SparseVec:
        """Matrix-vector product for a sparse vector (dict of column coords)."""
        out: SparseVec = {}
        for j, c in vec.items():
            for i, x in self.columns[j].items():
                y = out.get(i, 0) + c * x
                if y:
                    out[i] = y
                else:
                    del out[i]
        return out

    def compose(self, other: "SparseMatrix") -> "SparseMatrix":
        """self @ other."""
        if self.cols != other.rows:
            raise ShapeMismatchError("sparse compose shape mismatch")
        cols = [self.apply(c) for c in other.columns]
        return SparseMatrix(self.rows, other.cols, cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)


class VectorReducer:
    """Incremental fully-reduced echelon basis of a span of sparse vectors.

    Rows are kept normalized (pivot entry 1) and mutually reduced, so
    ``reduce`` of any vector leaves a remainder supported away from all
    pivots.  Pivot of a new row is its smallest coordinate, which makes the
    result deterministic and independent of dict ordering.
    """

    def __init__(self):
        self._rows: dict[int, SparseVec] = {}  # pivot -> row
        self._where: dict[int, set[int]] = {}  # coord -> pivots of rows touching it

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def rows(self):
        for p in sorted(self._rows):
            yield p, self._rows[p]

    def reduce(self, vec: SparseVec) -> SparseVec:
        v = dict(vec)
        while True:
            hit = None
            for c in v:
                if c in self._rows:
                    hit = c
                    break
            if hit is None:
                return v
            coeff = v[hit]
            row = self._rows[hit]
            for i, x in row.items():
                y = v.get(i, 0) - coeff * x
                if y:
                    v[i] = y
                else:
                    v.pop(i, None)
        # unreachable

    def insert(self, vec: SparseVec) -> int | None:
        """Insert a vector; returns the new pivot, or None if dependent."""
        v = self.reduce(vec)
        if not v:
            return None
        p = min(v)
        inv = v[p]
        if inv != 1:
            v = {i: Fraction(x) / inv for i, x in v.items()}
        # eliminate the new pivot coordinate from existing rows
        touching = self._where.get(p)
        if touching:
            for q in list(touching):
                row = self._rows[q]
                coeff = row.get(p)
                if not coeff:
                    continue
                for i, x in v.items():
                    y = row.get(i, 0) - coeff * x
                    if y:
                        row[i] = y
                        if i != q:
                            self._where.setdefault(i, set()).add(q)
                    else:
                        row.pop(i, None)
                        w = self._where.get(i)
                        if w:
                            w.discard(q)
        self._rows[p] = v
        for i in v:
            if i != p:
                self._where.setdefault(i, set()).add(p)
        return p

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)


def sparse_rank(a: SparseMatrix) -> int:
    red = VectorReducer()
    for col in a.columns:
        if col:
            red.insert(col)
    return red.rank


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


class _SnfWorker:
    """Shared integer elimination core for Smith normal form.

    Operates on a dict-of-dicts sparse copy; pivots are chosen with smallest
    absolute value first, then smallest Markowitz fill, then position, which
    keeps both fill-in and coefficient growth tame on incidence-like inputs.
    When ``accumulate`` is set, the unimodular row/column transforms are
    tracked densely (fine at desk scale).
    """

    def __init__(self, a: Matrix, accumulate: bool):
        if not a.is_integral():
            raise ValueError("Smith normal form requires an integer matrix")
        self.nrows, self.ncols = a.rows, a.cols
        self.row: dict[int, dict[int, int]] = {}
        self.colix: dict[int, set[int]] = {}
        for i, r in enumerate(a.data):
            for j, x in enumerate(r):
                if x:
                    self.row.setdefault(i, {})[j] = int(x)
                    self.colix.setdefault(j, set()).add(i)
        self.accumulate = accumulate
        if accumulate:
            self.U = [[1 if i == j else 0 for j in range(self.nrows)] for i in range(self.nrows)]
            self.V = [[1 if i == j else 0 for j in range(self.ncols)] for i in range(self.ncols)]

    # elementary operations (mirrored into U/V when accumulating) ---------
    def _set(self, i: int, j: int, v: int) -> None:
        if v:
            self.row.setdefault(i, {})[j] = v
            self.colix.setdefault(j, set()).add(i)
        else:
            r = self.row.get(i)
            if r and j in r:
                del r[j]
                if not r:
                    del self.row[i]
                s = self.colix.get(j)
                if s:
                    s.discard(i)
                    if not s:
                        del self.colix[j]

    def row_axpy(self, dst: int, src: int, c: int) -> None:
        """row[dst] += c * row[src]"""
        if not c:
            return
        for j, v in list(self.row.get(src, {}).items()):
            self._set(dst, j, self.row.get(dst, {}).get(j, 0) + c * v)
        if self.accumulate:
            ur = self.U
            ur[dst] = [a + c * b for a, b in zip(ur[dst], ur[src])]

    def col_axpy(self, dst: int, src: int, c: int) -> None:
        """col[dst] += c * col[src]"""
        if not c:
            return
        for i in list(self.colix.get(src, set())):
            v = self.row.get(i, {}).get(src, 0)
            self._set(i, dst, self.row.get(i, {}).get(dst, 0) + c * v)
        if self.accumulate:
            for r in self.V:
                r[dst] += c * r[src]

    def row_swap(self, a: int, b: int) -> None:
        if a == b:
            return
        ra, rb = self.row.get(a, {}), self.row.get(b, {})
        for j in set(ra) | set(rb):
            s = self.colix.setdefault(j, set())
            s.discard(a)
            s.discard(b)
        if ra:
            self.row[b] = ra
        else:
            self.row.pop(b, None)
        if rb:
            self.row[a] = rb
        else:
            self.row.pop(a, None)
        for j in self.row.get(a, {}):
            self.colix.setdefault(j, set()).add(a)
        for j in self.row.get(b, {}):
            self.colix.setdefault(j, set()).add(b)
        if self.accumulate:
            self.U[a], self.U[b] = self.U[b], self.U[a]

    def col_swap(self, a: int, b: int) -> None:
        if a == b:
            return
        rows = self.colix.get(a, set()) | self.colix.get(b, set())
        for i in rows:
            r = self.row.get(i, {})
            va, vb = r.get(a, 0), r.get(b, 0)
            self._set(i, a, vb)
            self._set(i, b, va)
        if self.accumulate:
            for r in self.V:
                r[a], r[b] = r[b], r[a]

    def row_negate(self, i: int) -> None:
        for j, v in list(self.row.get(i, {}).items()):
            self.row[i][j] = -v
        if self.accumulate:
            self.U[i] = [-x for x in self.U[i]]

    # main loop ------------------------------------------------------------
    def run(self) -> list[int]:
        t = 0
        limit = min(self.nrows, self.ncols)
        diag: list[int] = []
        while t < limit:
            pivot = self._pick_pivot(t)
            if pivot is None:
                break
            pr, pc = pivot
            self.row_swap(t, pr)
            self.col_swap(t, pc)
            while True:
                # clear column t
                changed = False
                for i in sorted(self.colix.get(t, set())):
                    if i == t or i < t:
                        continue
                    a = self.row[i].get(t, 0)
                    if not a:
                        continue
                    p = self.row[t][t]
                    q = a // p
                    self.row_axpy(i, t, -q)
                    rem = self.row.get(i, {}).get(t, 0)
                    if rem:
                        # remainder strictly smaller than |p|: promote it
                        self.row_swap(t, i)
                        changed = True
                        break
                if changed:
                    continue
                # clear row t
                changed = False
                for j in sorted(self.row.get(t, {})):
                    if j <= t:
                        continue
                    a = self.row[t][j]
                    p = self.row[t][t]
                    q = a // p
                    self.col_axpy(j, t, -q)
                    rem = self.row.get(t, {}).get(j, 0)
                    if rem:
                        self.col_swap(t, j)
                        changed = True
                        break
                if changed:
                    continue
                # both clear; enforce divisibility of the remaining block
                p = self.row[t][t]
                bad = self._find_nondivisible(t, p)
                if bad is None:
                    break
                self.row_axpy(t, bad, 1)
            p = self.row[t][t]
            if p < 0:
                self.row_negate(t)
                p = -p
            diag.append(p)
            t += 1
        return diag

    def _pick_pivot(self, t: int) -> tuple[int, int] | None:
        best = None
        for i in sorted(self.row):
            if i < t:
                continue
            ri = self.row[i]
            rlen = sum(1 for j in ri if j >= t)
            for j, v in ri.items():
                if j < t:
                    continue
                clen = sum(1 for r in self.colix.get(j, ()) if r >= t)
                key = (abs(v), (rlen - 1) * (clen - 1), i, j)
                if best is None or key < best[0]:
                    best = (key, (i, j))
                    if key[0] == 1 and key[1] == 0:
                        return best[1]
        return None if best is None else best[1]

    def _find_nondivisible(self, t: int, p: int) -> int | None:
        if p in (1, -1):
            return None
        for i in sorted(self.row):
            if i <= t:
                continue
            for j, v in self.row[i].items():
                if j > t and v % p:
                    return i
        return None


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form of an integer matrix.

    Returns unimodular ``U`` (rows x rows), diagonal ``D``, unimodular ``V``
    (cols x cols) with ``U @ a @ V == D`` and the diagonal entries
    non-negative with each dividing the next.
    """
    w = _SnfWorker(a, accumulate=True)
    diag = w.run()
    d = [[0] * a.cols for _ in range(a.rows)]
    for i, x in enumerate(diag):
        d[i][i] = x
    return (
        Matrix.from_rows(w.U, a.rows),
        Matrix.from_rows(d, a.cols),
        Matrix.from_rows(w.V, a.cols),
    )


def invariant_factors(a: Matrix) -> list[int]:
    """Nonzero diagonal of the Smith normal form (no transform tracking)."""
    return _SnfWorker(a, accumulate=False).run()


# ---------------------------------------------------------------------------
# chain complexes and homology
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainComplex:
    """A finite chain complex; ``differentials[i]`` maps degree i+1 to degree i."""

    dims: tuple[int, ...]
    differentials: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "differentials", tuple(self.differentials))
        if len(self.differentials) != max(len(self.dims) - 1, 0):
            raise ShapeMismatchError("need exactly one differential per adjacent degree pair")
        for i, d in enumerate(self.differentials):
            if (d.rows, d.cols) != (self.dims[i], self.dims[i + 1]):
                raise ShapeMismatchError(
                    f"differential {i} has shape {d.rows}x{d.cols}, expected {self.dims[i]}x{self.dims[i+1]}"
                )

    def validate(self) -> None:
        """Check d . d = 0 (sparse composition, cheap for sparse inputs)."""
        for i in range(len(self.differentials) - 1):
            lo = SparseMatrix.from_matrix(self.differentials[i])
            hi = SparseMatrix.from_matrix(self.differentials[i + 1])
            for col in hi.columns:
                if lo.apply(col):
                    raise ComplexInvalidError(i)


@dataclass(frozen=True)
class HomologyResult:
    """Per-degree Betti numbers, torsion invariant factors, optional cycle reps."""

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    representatives: tuple[Matrix, ...] | None = None


def homology(c: ChainComplex, integral: bool = False, representatives: bool = False) -> HomologyResult:
    """Homology of a validated chain complex.

    Rational mode reports Betti numbers (and optionally representative
    cycles); integral mode additionally reports the invariant factors > 1 of
    each incoming differential (the torsion of that degree).
    """
    c.validate()
    n = len(c.dims)
    if integral:
        ranks = []
        torsions = []
        for d in c.differentials:
            facs = invariant_factors(d)
            ranks.append(len(facs))
            torsions.append(tuple(f for f in facs if f > 1))
        betti = []
        tors = []
        for i in range(n):
            z = c.dims[i] - (ranks[i - 1] if i > 0 else 0)
            b = ranks[i] if i < n - 1 else 0
            betti.append(z - b)
            tors.append(torsions[i] if i < n - 1 else ())
        result = HomologyResult(tuple(betti), tuple(tors), None)
    else:
        solver = RationalComplexHomology(c)
        betti = list(solver.dims())
        reps = tuple(solver.representatives(i) for i in range(n)) if representatives else None
        result = HomologyResult(tuple(betti), tuple(() for _ in range(n)), reps)
    # Euler characteristic invariant: alternating sums agree
    lhs = sum((-1) ** i * c.dims[i] for i in range(n))
    rhs = sum((-1) ** i * result.betti[i] for i in range(n))
    assert lhs == rhs, "Euler characteristic mismatch - elimination bug"
    return result


class RationalComplexHomology:
    """Rational homology with representative cycles and coordinate solving.

    For each degree: a cycle basis, the boundary image basis, homology
    representatives chosen greedily among the cycle basis, and an ``express``
    map writing any cycle in homology coordinates (raising ``ValueError`` if
    the vector is not a cycle modulo boundaries).
    """

    def __init__(self, c: ChainComplex):
        self.complex = c
        n = len(c.dims)
        self._reps: list[list[list[Fraction]]] = []
        self._solvers: list = []
        for i in range(n):
            # cycles: kernel of the outgoing differential (degree i -> i-1)
            if i > 0:
                z = kernel_basis(c.differentials[i - 1])
                zcols = [z.column(j) for j in range(z.cols)]
            else:
                zcols = [
                    tuple(Fraction(1) if t == j else Fraction(0) for t in range(c.dims[i]))
                    for j in range(c.dims[i])
                ]
            # boundaries: independent columns of the incoming differential
            bred = VectorReducer()
            bcols = []
            if i < n - 1:
                d = c.differentials[i]
                for j in range(d.cols):
                    col = {r: d.data[r][j] for r in range(d.rows) if d.data[r][j]}
                    if col and bred.insert(col) is not None:
                        bcols.append(d.column(j))
            # homology representatives: cycle columns independent mod boundaries
            hred = VectorReducer()
            for b in bcols:
                hred.insert({r: x for r, x in enumerate(b) if x})
            reps = []
            for zc in zcols:
                if hred.insert({r: x for r, x in enumerate(zc) if x}) is not None:
                    reps.append(list(zc))
            self._reps.append(reps)
            self._solvers.append((bcols, reps, None))

    def dims(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self._reps)

    def representatives(self, degree: int) -> Matrix:
        reps = self._reps[degree]
        d = self.complex.dims[degree]
        return Matrix(d, len(reps), [reps[j][i] for i in range(d) for j in range(len(reps))])

    def _solver(self, degree: int):
        bcols, reps, cached = self._solvers[degree]
        if cached is not None:
            return cached
        d = self.complex.dims[degree]
        cols = [list(b) for b in bcols] + [list(r) for r in reps]
        m = len(cols)
        aug = [[Fraction(0)] * (m + d) for _ in range(d)]
        for j, col in enumerate(cols):
            for i in range(d):
                aug[i][j] = col[i]
        for i in range(d):
            aug[i][m + i] = Fraction(1)
        aug, pivots = _rref(aug)
        solver = (aug, pivots, len(bcols), m, d)
        self._solvers[degree] = (bcols, reps, solver)
        return solver

    def express(self, degree: int, vec: Sequence[Fraction]) -> list[Fraction]:
        """Coordinates of a cycle in the homology basis of the given degree."""
        aug, pivots, nb, m, d = self._solver(degree)
        coords = [Fraction(0)] * m
        for r, p in enumerate(pivots):
            if p >= m:
                continue
            coords[p] = sum(aug[r][m + i] * vec[i] for i in range(d) if vec[i])
        # consistency: rows with pivot beyond the column block must annihilate vec
        for r, p in enumerate(pivots):
            if p >= m:
                if sum(aug[r][m + i] * vec[i] for i in range(d) if vec[i]) != 0:
                    raise ValueError("vector is not a cycle modulo boundaries")
        # verify reconstruction (cheap and catches non-cycles when rref lacks extra rows)
        return coords[nb:]


# ---------------------------------------------------------------------------
# colimits of vector-space diagrams over finite posets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PosetColimit:
    dimension: int
    structure_maps: tuple[Matrix, ...]


def poset_colimit(
    vertex_dims: Sequence[int], covers: Sequence[tuple[int, int, Matrix]]
) -> PosetColimit:
    """Colimit of a poset-shaped diagram of rational vector spaces.

    ``covers`` lists (source vertex, target vertex, edge matrix) for the
    cover relations; the colimit is the cokernel of the map sending v at
    source to v at source minus edge(v) at target.  Returns the dimension and
    one structure map per vertex (from the vertex into the colimit).
    """
    offs = []
    total = 0
    for d in vertex_dims:
        offs.append(total)
        total += d
    cols = []
    for (s, t, e) in covers:
        if (e.rows, e.cols) != (vertex_dims[t], vertex_dims[s]):
            raise ShapeMismatchError(
                f"edge {s}->{t} has shape {e.rows}x{e.cols}, expected {vertex_dims[t]}x{vertex_dims[s]}"
            )
        for b in range(vertex_dims[s]):
            col = [Fraction(0)] * total
            col[offs[s] + b] = Fraction(1)
            for r in range(e.rows):
                if e.data[r][b]:
                    col[offs[t] + r] -= e.data[r][b]
            cols.append(col)
    rel = Matrix(total, len(cols), [c[i] for i in range(total) for c in cols]) if cols else Matrix.zero(total, 0)
    dim, proj = cokernel(rel)
    maps = []
    for v, d in enumerate(vertex_dims):
        entries = [proj.data[r][offs[v] + b] for r in range(dim) for b in range(d)]
        maps.append(Matrix(dim, d, entries))
    return PosetColimit(dim, tuple(maps))


def _column_space_reducer(a: Matrix) -> VectorReducer:
    red = VectorReducer()
    for j in range(a.cols):
        col = {i: a.data[i][j] for i in range(a.rows) if a.data[i][j]}
        if col:
            red.insert(col)
    return red
