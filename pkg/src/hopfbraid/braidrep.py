"""Braided R-matrices, braid group generators and relation checkers, and
the braiding isomorphisms between module tensor products.

The braided matrix R' is the flip composed with the regular image of
universal_r; it satisfies the braid relation and powers the generators

    R'_i = I^(x)(i-1) (x) R' (x) I^(x)(N-i-1)

on N strands (generator count N-1, total dimension d^N).  Braid words are
applied to states in written order: the first letter is the generator that
hits the state first, i.e. the rightmost factor of the evaluated matrix
product.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groupalg import AlgebraElement, GroupSpec, TensorElement, universal_r
from .linalg import (
    Matrix,
    SingularMatrixError,
    flip_operator,
    flip_pair,
    invert_matrix,
    kron,
    regular_representation,
)


@dataclass(frozen=True)
class BraidedRMatrix:
    """An invertible solution of the braid relation on V (x) V."""

    dimension: int
    matrix: Matrix
    provenance: str = "external"

    def __post_init__(self):
        d = self.dimension
        if self.matrix.rows != d * d or self.matrix.cols != d * d:
            raise ValueError("matrix must be d^2 x d^2 for local dimension d")


def braided_r(spec: GroupSpec) -> BraidedRMatrix:
    """flip . (regular image of universal_r), the braided gate for a spec."""
    rep = regular_representation(spec)
    d = spec.dimension
    m = flip_operator(d) @ rep.on_tensor(universal_r(spec))
    return BraidedRMatrix(d, m, provenance=f"orders {spec.orders}")


def check_braided_ybe(r: BraidedRMatrix) -> bool:
    """Exact check of (R' x I)(I x R')(R' x I) = (I x R')(R' x I)(I x R')."""
    eye = Matrix.identity(r.dimension)
    a = kron(r.matrix, eye)
    b = kron(eye, r.matrix)
    return a @ b @ a == b @ a @ b


def braid_generator(index: int, strands: int, r: BraidedRMatrix) -> Matrix:
    """The index-th braid generator on the given number of strands."""
    if strands < 2:
        raise ValueError("need at least two strands")
    if not 1 <= index <= strands - 1:
        raise ValueError(f"generator index {index} out of range for {strands} strands")
    d = r.dimension
    m = r.matrix
    if index > 1:
        m = kron(Matrix.identity(d ** (index - 1)), m)
    tail = strands - index - 1
    if tail:
        m = kron(m, Matrix.identity(d ** tail))
    return m


def check_braid_relations(strands: int, r: BraidedRMatrix) -> bool:
    """All far commutations (|i-j| >= 2) and adjacent braid relations,
    verified exactly on d^strands-dimensional matrices."""
    if strands < 2:
        raise ValueError("need at least two strands")
    gens = [braid_generator(i, strands, r) for i in range(1, strands)]
    for i in range(len(gens)):
        for j in range(i + 2, len(gens)):
            if gens[i] @ gens[j] != gens[j] @ gens[i]:
                return False
    for i in range(len(gens) - 1):
        a, b = gens[i], gens[i + 1]
        if a @ b @ a != b @ a @ b:
            return False
    return True


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators; letter +i / -i is the i-th generator
    or its inverse, 1 <= i <= strands - 1."""

    strands: int
    letters: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 2:
            raise ValueError("need at least two strands")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise ValueError(f"letter {letter} is invalid for {self.strands} strands")


def evaluate_braid_word(word: BraidWord, r: BraidedRMatrix) -> Matrix:
    """Matrix of the word, letters applied to states in written order
    (first letter = rightmost factor of the product); empty word gives I."""
    d = r.dimension
    acc = Matrix.identity(d ** word.strands)
    cache: dict[int, Matrix] = {}
    inverse_r = None
    for letter in word.letters:
        g = cache.get(letter)
        if g is None:
            if letter > 0:
                g = braid_generator(letter, word.strands, r)
            else:
                if inverse_r is None:
                    inverse_r = BraidedRMatrix(d, invert_matrix(r.matrix), "inverse")
                g = braid_generator(-letter, word.strands, inverse_r)
            cache[letter] = g
        acc = g @ acc
    return acc


class ModuleAction:
    """An action of the group algebra on a vector space: one matrix per
    basis element, multiplicative, with the unit acting as the identity."""

    def __init__(self, spec: GroupSpec, matrices: dict):
        self.spec = spec
        expected = set(spec.basis())
        if set(matrices) != expected:
            raise ValueError("an action needs a matrix for every basis element")
        dims = {m.rows for m in matrices.values()} | {m.cols for m in matrices.values()}
        if len(dims) != 1:
            raise ValueError("all action matrices must be square of equal size")
        self.dimension = dims.pop()
        self._matrices = matrices

    @classmethod
    def regular(cls, spec: GroupSpec) -> "ModuleAction":
        rep = regular_representation(spec)
        return cls(spec, {e: rep.on_basis(e) for e in spec.basis()})

    @classmethod
    def trivial(cls, spec: GroupSpec) -> "ModuleAction":
        one = Matrix.identity(1)
        return cls(spec, {e: one for e in spec.basis()})

    def on_basis(self, exps) -> Matrix:
        return self._matrices[self.spec.reduce(exps)]

    def on_element(self, x: AlgebraElement) -> Matrix:
        if x.spec != self.spec:
            raise ValueError("group spec mismatch")
        acc = Matrix.zeros(self.dimension, self.dimension)
        for exps, c in x.terms.items():
            acc = acc + self.on_basis(exps) * c
        return acc

    def validate(self) -> bool:
        """Unit acts as identity and the assignment is multiplicative."""
        if self.on_basis(self.spec.identity) != Matrix.identity(self.dimension):
            return False
        orders = self.spec.orders
        for a in self.spec.basis():
            for b in self.spec.basis():
                ab = tuple((x + y) % n for x, y, n in zip(a, b, orders))
                if self.on_basis(a) @ self.on_basis(b) != self.on_basis(ab):
                    return False
        return True


def braiding_map(v: ModuleAction, w: ModuleAction, r: TensorElement) -> Matrix:
    """Matrix of the braiding V (x) W -> W (x) V induced by a two-leg
    element r: the flip composed with the action of r on V (x) W.  For two
    copies of the regular module this is exactly braided_r's matrix."""
    if v.spec != w.spec:
        raise ValueError("module actions live over different specs")
    if r.spec != v.spec or r.legs != 2:
        raise ValueError("expected a two-leg element over the modules' spec")
    p, q = v.dimension, w.dimension
    acc = Matrix.zeros(p * q, p * q)
    for (s, t), c in r.terms.items():
        acc = acc + kron(v.on_basis(s), w.on_basis(t)) * c
    return flip_pair(p, q) @ acc


def check_module_morphism(c: Matrix, v: ModuleAction, w: ModuleAction) -> bool:
    """True when c is invertible and intertwines the diagonal action:
    c . (rho_V x rho_W)(D(x)) = (rho_W x rho_V)(D(x)) . c on every basis x."""
    try:
        invert_matrix(c)
    except SingularMatrixError:
        return False
    for exps in v.spec.basis():
        rv = v.on_basis(exps)
        rw = w.on_basis(exps)
        if c @ kron(rv, rw) != kron(rw, rv) @ c:
            return False
    return True


def check_hexagon(u: ModuleAction, v: ModuleAction, w: ModuleAction,
                  r: TensorElement) -> bool:
    """Exact check of the hexagon identity for the braiding maps of the
    triple (U, V, W); for U = V = W it is the braid relation itself."""
    if not (u.spec == v.spec == w.spec):
        raise ValueError("module actions live over different specs")
    c_uv = braiding_map(u, v, r)
    c_uw = braiding_map(u, w, r)
    c_vw = braiding_map(v, w, r)
    iu = Matrix.identity(u.dimension)
    iv = Matrix.identity(v.dimension)
    iw = Matrix.identity(w.dimension)
    lhs = kron(c_vw, iu) @ kron(iv, c_uw) @ kron(c_uv, iw)
    rhs = kron(iw, c_uv) @ kron(c_uw, iv) @ kron(iu, c_vw)
    return lhs == rhs
