"""Dense matrices over exact cyclotomic scalars.

Row-major storage, immutable after construction.  Composite (Kronecker)
indices always put the first tensor factor in the most significant
position.  Gaussian elimination takes the first nonzero pivot in each
column; exact arithmetic needs no magnitude pivoting and this keeps every
result deterministic.
"""

from __future__ import annotations

import itertools

from .groupalg import AlgebraElement, GroupSpec, TensorElement
from .scalar import CyclotomicNumber, as_scalar, rational


class SingularMatrixError(ValueError):
    def __init__(self, column: int):
        super().__init__(f"matrix is singular: no pivot available in column {column}")
        self.column = column


class Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        entries = [as_scalar(e) for e in entries]
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match the shape")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = rational(1), rational(0)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = rational(0)
        return cls(rows, cols, [zero] * (rows * cols))

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), n, [e for r in rows for e in r])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        out = []
        oc = other.cols
        for i in range(self.rows):
            base = i * self.cols
            row_terms = [
                (k, self.entries[base + k])
                for k in range(self.cols)
                if not self.entries[base + k].is_zero
            ]
            for j in range(oc):
                acc = None
                for k, a in row_terms:
                    b = other.entries[k * oc + j]
                    if b.is_zero:
                        continue
                    p = a * b
                    acc = p if acc is None else acc + p
                out.append(acc if acc is not None else rational(0))
        return Matrix(self.rows, oc, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, scalar) -> "Matrix":
        c = as_scalar(scalar)
        return Matrix(self.rows, self.cols, [a * c for a in self.entries])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and all(a == b for a, b in zip(self.entries, other.entries)))

    __hash__ = None

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self.entries[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def conjugate_transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self.entries[i * self.cols + j].conjugate()
                       for j in range(self.cols) for i in range(self.rows)])

    def to_complex(self) -> list[list[complex]]:
        return [[self.entries[i * self.cols + j].to_complex() for j in range(self.cols)]
                for i in range(self.rows)]

    def __repr__(self):
        body = "\n".join(
            "  [" + ", ".join(str(self.entries[i * self.cols + j]) for j in range(self.cols)) + "]"
            for i in range(self.rows)
        )
        return f"Matrix {self.rows}x{self.cols}\n{body}"


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; the first factor is the most significant index."""
    out = []
    zero = rational(0)
    for i1 in range(a.rows):
        for i2 in range(b.rows):
            for j1 in range(a.cols):
                av = a[i1, j1]
                if av.is_zero:
                    out.extend([zero] * b.cols)
                    continue
                row2 = i2 * b.cols
                out.extend(av * b.entries[row2 + j2] for j2 in range(b.cols))
    return Matrix(a.rows * b.rows, a.cols * b.cols, out)


def conjugate_transpose(a: Matrix) -> Matrix:
    return a.conjugate_transpose()


def invert_matrix(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination over the cyclotomic field."""
    if a.rows != a.cols:
        raise ValueError("only square matrices can be inverted")
    n = a.rows
    left = [list(a.entries[i * n:(i + 1) * n]) for i in range(n)]
    one, zero = rational(1), rational(0)
    right = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not left[r][col].is_zero), None)
        if piv is None:
            raise SingularMatrixError(col)
        if piv != col:
            left[col], left[piv] = left[piv], left[col]
            right[col], right[piv] = right[piv], right[col]
        inv = left[col][col].invert()
        left[col] = [v * inv for v in left[col]]
        right[col] = [v * inv for v in right[col]]
        for r in range(n):
            if r == col:
                continue
            f = left[r][col]
            if f.is_zero:
                continue
            left[r] = [v - f * w for v, w in zip(left[r], left[col])]
            right[r] = [v - f * w for v, w in zip(right[r], right[col])]
    return Matrix(n, n, [e for row in right for e in row])


def exact_rank(a: Matrix) -> int:
    """Rank by exact row echelon reduction."""
    work = [list(a.entries[i * a.cols:(i + 1) * a.cols]) for i in range(a.rows)]
    rank = 0
    for col in range(a.cols):
        piv = next((r for r in range(rank, a.rows) if not work[r][col].is_zero), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = work[rank][col].invert()
        work[rank] = [v * inv for v in work[rank]]
        for r in range(rank + 1, a.rows):
            f = work[r][col]
            if not f.is_zero:
                work[r] = [v - f * w for v, w in zip(work[r], work[rank])]
        rank += 1
        if rank == a.rows:
            break
    return rank


def cyclic_shift(order: int) -> Matrix:
    """Permutation matrix of the +1 shift on Z/order: e_j -> e_(j+1)."""
    m = Matrix.zeros(order, order)
    one = rational(1)
    for j in range(order):
        m.entries[((j + 1) % order) * order + j] = one
    return m


def flip_pair(p: int, q: int) -> Matrix:
    """Swap of tensor factors of dimensions p and q: e_i (x) f_j -> f_j (x) e_i."""
    m = Matrix.zeros(p * q, p * q)
    one = rational(1)
    for i in range(p):
        for j in range(q):
            m.entries[(j * p + i) * (p * q) + (i * q + j)] = one
    return m


def flip_operator(d: int) -> Matrix:
    """The d^2 x d^2 swap of two factors of equal dimension d."""
    if d < 1:
        raise ValueError("dimension must be positive")
    return flip_pair(d, d)


class RegularRepresentation:
    """Left regular action of the group algebra on itself.

    Basis element g^(a_1..a_k) acts as the Kronecker product of cyclic
    shift powers, one per factor; the map extends linearly to algebra
    elements and, Kronecker-wise, to tensor elements (k legs give a
    d^k-dimensional image).
    """

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self._index = {exps: i for i, exps in enumerate(spec.basis())}
        self._basis_list = list(spec.basis())
        self._perm_cache: dict = {}
        self._matrix_cache: dict = {}

    @property
    def dimension(self) -> int:
        return self.spec.dimension

    def _perm(self, exps) -> tuple[int, ...]:
        exps = self.spec.reduce(exps)
        perm = self._perm_cache.get(exps)
        if perm is None:
            orders = self.spec.orders
            perm = tuple(
                self._index[tuple((c + e) % n for c, e, n in zip(col, exps, orders))]
                for col in self._basis_list
            )
            self._perm_cache[exps] = perm
        return perm

    def on_basis(self, exps) -> Matrix:
        exps = self.spec.reduce(exps)
        m = self._matrix_cache.get(exps)
        if m is None:
            d = self.dimension
            m = Matrix.zeros(d, d)
            one = rational(1)
            perm = self._perm(exps)
            for col, row in enumerate(perm):
                m.entries[row * d + col] = one
            self._matrix_cache[exps] = m
        return m

    def on_element(self, x: AlgebraElement) -> Matrix:
        if x.spec != self.spec:
            raise ValueError("group spec mismatch")
        d = self.dimension
        cells: dict = {}
        for exps, c in x.terms.items():
            perm = self._perm(exps)
            for col, row in enumerate(perm):
                key = row * d + col
                prev = cells.get(key)
                cells[key] = c if prev is None else prev + c
        entries = [rational(0)] * (d * d)
        for key, c in cells.items():
            entries[key] = c
        return Matrix(d, d, entries)

    def on_tensor(self, t: TensorElement) -> Matrix:
        if t.spec != self.spec:
            raise ValueError("group spec mismatch")
        d = self.dimension
        k = t.legs
        size = d ** k
        cols_digits = list(itertools.product(range(d), repeat=k))
        cells: dict = {}
        for key, c in t.terms.items():
            perms = [self._perm(e) for e in key]
            for col, digs in enumerate(cols_digits):
                row = 0
                for perm, dig in zip(perms, digs):
                    row = row * d + perm[dig]
                cell = row * size + col
                prev = cells.get(cell)
                cells[cell] = c if prev is None else prev + c
        entries = [rational(0)] * (size * size)
        for cell, c in cells.items():
            entries[cell] = c
        return Matrix(size, size, entries)


def regular_representation(spec: GroupSpec) -> RegularRepresentation:
    return RegularRepresentation(spec)


# -- JSON interchange ------------------------------------------------------


def matrix_to_json(m: Matrix, float_entries: bool = False) -> dict:
    if float_entries:
        entries = [[z.real, z.imag] for z in (e.to_complex() for e in m.entries)]
    else:
        entries = [e.to_json() for e in m.entries]
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def matrix_from_json(data: dict) -> Matrix:
    entries = data["entries"]
    if entries and not isinstance(entries[0], dict):
        raise ValueError("float-backend matrix exports cannot be re-imported exactly")
    return Matrix(int(data["rows"]), int(data["cols"]),
                  [CyclotomicNumber.from_json(e) for e in entries])
