"""Dense matrices over an exact field (rationals or rational functions).

Inversion is fraction-free: denominators are cleared row by row, determinants
and cofactors run over the polynomial (or integer) ring with Bareiss-style
exact divisions, and a single division pass at the end produces the inverse.
This bounds intermediate expression swell over rational-function fields.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .poly import MultiPoly, poly_gcd
from .ratfunc import RatFunc


class SingularMatrixError(ArithmeticError):
    """Raised when inverting a matrix whose determinant is zero."""

    def __init__(self, message: str, determinant=None):
        super().__init__(message)
        self.determinant = determinant


class FieldMatrix:
    """Row-major dense matrix; entries are Fraction, RatFunc, or MultiPoly
    (one kind per matrix)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "FieldMatrix":
        r = len(rows)
        c = len(rows[0])
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int, one) -> "FieldMatrix":
        zero = one - one
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, zero) -> "FieldMatrix":
        return cls(rows, cols, [zero] * (rows * cols))

    # -- access ------------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]):
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for a, b in zip(self.entries, other.entries))
        )

    __hash__ = None

    @property
    def is_zero(self) -> bool:
        return all(not e for e in self.entries)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                e = self[i, j]
                if i == j:
                    if not _is_one(e):
                        return False
                elif e:
                    return False
        return True

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "FieldMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shapes differ")

    def __add__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_same_shape(other)
        return FieldMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_same_shape(other)
        return FieldMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "FieldMatrix":
        return FieldMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, FieldMatrix):
            if self.cols != other.rows:
                raise ValueError(f"incompatible shapes {self.rows}x{self.cols} and {other.rows}x{other.cols}")
            n, m, k = self.rows, other.cols, self.cols
            out = []
            for i in range(n):
                arow = self.row(i)
                for j in range(m):
                    acc = None
                    for t in range(k):
                        a = arow[t]
                        if not a:
                            continue
                        prod = a * other.entries[t * m + j]
                        acc = prod if acc is None else acc + prod
                    if acc is None:
                        acc = arow[0] - arow[0]
                    out.append(acc)
            return FieldMatrix(n, m, out)
        return self.scale(other)

    def scale(self, scalar) -> "FieldMatrix":
        return FieldMatrix(self.rows, self.cols, [e * scalar for e in self.entries])

    def __rmul__(self, other):
        return self.scale(other)

    def map_entries(self, fn: Callable) -> "FieldMatrix":
        return FieldMatrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = self[0, 0]
        for i in range(1, self.rows):
            acc = acc + self[i, i]
        return acc

    def kron(self, other: "FieldMatrix") -> "FieldMatrix":
        """Tensor (Kronecker) product."""
        r, c = self.rows * other.rows, self.cols * other.cols
        out = [None] * (r * c)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self[i, j]
                for p in range(other.rows):
                    for q in range(other.cols):
                        out[(i * other.rows + p) * c + (j * other.cols + q)] = a * other[p, q]
        return FieldMatrix(r, c, out)

    def partial_trace_first(self, dim_first: int) -> "FieldMatrix":
        """Trace out the first tensor factor of size dim_first."""
        if self.rows != self.cols or self.rows % dim_first:
            raise ValueError("matrix is not square with a compatible tensor split")
        m = self.rows // dim_first
        out = []
        for i in range(m):
            for j in range(m):
                acc = None
                for a in range(dim_first):
                    e = self[a * m + i, a * m + j]
                    acc = e if acc is None else acc + e
                out.append(acc)
        return FieldMatrix(m, m, out)

    # -- determinant and inverse ---------------------------------------------

    def det(self):
        """Exact determinant via fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        kind = _entry_kind(self.entries)
        if kind is RatFunc:
            mat, rowdens = _clear_ratfunc_rows(self)
            d = _bareiss_det(mat.to_rows(), _poly_div)
            vars = self.entries[0].vars
            denom = MultiPoly.const(vars, 1)
            for rd in rowdens:
                denom = denom * rd
            return RatFunc(d, denom)
        d = _bareiss_det([list(r) for r in self.to_rows()], lambda a, b: a / b)
        return d

    def adjugate_det(self) -> tuple["FieldMatrix", object]:
        """(adj, det) over the entry ring, with adj * self = det * identity.

        Entries must be ring elements (MultiPoly or Fraction); cofactor
        determinants run through fraction-free Bareiss elimination.
        """
        if self.rows != self.cols:
            raise ValueError("adjugate of a non-square matrix")
        n = self.rows
        kind = _entry_kind(self.entries)
        div = _poly_div if kind is MultiPoly else (lambda a, b: a / b)
        det = _bareiss_det([list(r) for r in self.to_rows()], div)
        if n == 1:
            one = _ring_one(self.entries)
            return FieldMatrix(1, 1, [one]), det
        adj = [None] * (n * n)
        for i in range(n):
            for j in range(n):
                minor = [
                    [self[r, c] for c in range(n) if c != j]
                    for r in range(n) if r != i
                ]
                cof = _bareiss_det(minor, div)
                if (i + j) % 2:
                    cof = -cof
                adj[j * n + i] = cof  # adjugate is the transposed cofactor matrix
        return FieldMatrix(n, n, adj), det

    def inv(self) -> "FieldMatrix":
        """Exact two-sided inverse; raises SingularMatrixError when det = 0."""
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        kind = _entry_kind(self.entries)
        if kind is RatFunc:
            vars = self.entries[0].vars
            mat, rowdens = _clear_ratfunc_rows(self)
            adj, det = mat.adjugate_det()
            if det.is_zero:
                raise SingularMatrixError("singular matrix: determinant is 0", determinant=RatFunc.zero(vars))
            detrf = RatFunc(det)
            out = []
            # inv(A) = adj(M) * diag(rowdens) / det(M) with M = diag(rowdens) * A
            for i in range(n):
                for j in range(n):
                    out.append(RatFunc(adj[i, j] * rowdens[j]) / detrf)
            return FieldMatrix(n, n, out)
        adj, det = self.adjugate_det()
        if not det:
            raise SingularMatrixError("singular matrix: determinant is 0", determinant=Fraction(0))
        return adj.map_entries(lambda e: e / det)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows)) + "]"

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols}, {self})"


def _is_one(e) -> bool:
    if isinstance(e, RatFunc):
        return e.is_one()
    if isinstance(e, MultiPoly):
        return e.is_constant() and e.constant_value() == 1
    return e == 1


def _entry_kind(entries):
    for e in entries:
        if isinstance(e, RatFunc):
            return RatFunc
        if isinstance(e, MultiPoly):
            return MultiPoly
    return Fraction


def _poly_div(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a.divexact(b)


def _ring_one(entries):
    e = entries[0]
    if isinstance(e, RatFunc):
        return RatFunc.one(e.vars)
    if isinstance(e, MultiPoly):
        return MultiPoly.const(e.vars, 1)
    return Fraction(1)


def _clear_ratfunc_rows(mat: FieldMatrix) -> tuple[FieldMatrix, list[MultiPoly]]:
    """Clear denominators row by row: returns (M, rowdens) with M = diag(rowdens) * mat."""
    vars = mat.entries[0].vars
    rowdens = []
    out = []
    for i in range(mat.rows):
        den = MultiPoly.const(vars, 1)
        for e in mat.row(i):
            if e.den.is_constant():
                den = den * e.den
                continue
            g = poly_gcd(den, e.den)
            den = den.divexact(g) * e.den  # lcm
        rowdens.append(den)
        for e in mat.row(i):
            out.append(e.num * den.divexact(e.den))
    return FieldMatrix(mat.rows, mat.cols, out), rowdens


def _bareiss_det(rows: list[list], div: Callable):
    """Fraction-free Bareiss determinant; mutates its argument.

    Intermediate entries are minors of the input, so every division by the
    previous pivot is exact over the entry ring.
    """
    n = len(rows)
    if n == 1:
        return rows[0][0]
    zero = rows[0][0] - rows[0][0]
    sign = 1
    prev = None
    for k in range(n - 1):
        if not rows[k][k]:
            for r in range(k + 1, n):
                if rows[r][k]:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = rows[k][k]
        for i in range(k + 1, n):
            aik = rows[i][k]
            rowi, rowk = rows[i], rows[k]
            for j in range(k + 1, n):
                num = pivot * rowi[j] - aik * rowk[j]
                rowi[j] = num if prev is None else div(num, prev)
            rowi[k] = zero
        prev = pivot
    d = rows[n - 1][n - 1]
    return d if sign > 0 else -d
