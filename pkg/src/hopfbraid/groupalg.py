"""Group algebras of products of finite cyclic groups, with Hopf structure.

The algebra for orders (n_1, ..., n_k) has basis g^(a_1, ..., a_k) indexed
by exponent tuples; multiplication adds exponents componentwise mod n_j.
Every basis element is group-like: the coproduct sends g to g (x) g, the
counit to 1, and the antipode to g^(-1).

``universal_r`` builds the distinguished invertible element of the two-fold
tensor power whose coefficient carries one root-of-unity phase per cyclic
factor.  ``universal_r_fused_phase`` is the variant whose exponent fuses
all factor contributions into a single fraction; it coincides with the
per-factor form for one cyclic factor but is a genuinely different element
for two or more nontrivial factors (any zero a_k b_k kills the whole fused
exponent), so it is kept only for side-by-side comparison and the command
line reports its checks as "recorded" rather than pass/fail.

The check_* functions verify the quasitriangularity identities by exact
expansion over the basis; nothing is approximated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod

from .scalar import CyclotomicNumber, as_scalar, rational, root_of_unity


@dataclass(frozen=True)
class GroupSpec:
    """A product of finite cyclic groups, one order per factor."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if not orders:
            raise ValueError("at least one cyclic factor is required")
        if any(n < 1 for n in orders):
            raise ValueError("cyclic group orders must be >= 1")
        object.__setattr__(self, "orders", orders)

    @property
    def dimension(self) -> int:
        return prod(self.orders)

    @property
    def field_order(self) -> int:
        """Order of the smallest cyclotomic field holding all phases."""
        return lcm(*self.orders)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.orders)

    def reduce(self, exps) -> tuple[int, ...]:
        exps = tuple(exps)
        if len(exps) != len(self.orders):
            raise ValueError("exponent tuple has the wrong number of factors")
        return tuple(e % n for e, n in zip(exps, self.orders))

    def basis(self):
        """All exponent tuples, in lexicographic order."""
        return itertools.product(*(range(n) for n in self.orders))


def _prune(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if not v.is_zero}


class AlgebraElement:
    """Sparse linear combination of group basis elements."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: GroupSpec, terms: dict):
        self.spec = spec
        self.terms = terms  # exponent tuple -> nonzero CyclotomicNumber

    @classmethod
    def zero(cls, spec: GroupSpec) -> "AlgebraElement":
        return cls(spec, {})

    @classmethod
    def unit(cls, spec: GroupSpec) -> "AlgebraElement":
        return cls(spec, {spec.identity: rational(1)})

    @classmethod
    def basis(cls, spec: GroupSpec, exps, coeff=1) -> "AlgebraElement":
        c = as_scalar(coeff)
        if c.is_zero:
            return cls.zero(spec)
        return cls(spec, {spec.reduce(exps): c})

    @classmethod
    def from_terms(cls, spec: GroupSpec, pairs) -> "AlgebraElement":
        terms: dict = {}
        for exps, coeff in pairs:
            key = spec.reduce(exps)
            c = as_scalar(coeff)
            terms[key] = terms.get(key, rational(0)) + c
        return cls(spec, _prune(terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.spec != self.spec:
            raise ValueError("group spec mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, rational(0)) + c
        return AlgebraElement(self.spec, _prune(out))

    def __neg__(self):
        return AlgebraElement(self.spec, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            if other.spec != self.spec:
                raise ValueError("group spec mismatch")
            orders = self.spec.orders
            out: dict = {}
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    k = tuple((x + y) % n for x, y, n in zip(ka, kb, orders))
                    c = ca * cb
                    prev = out.get(k)
                    out[k] = c if prev is None else prev + c
            return AlgebraElement(self.spec, _prune(out))
        c = as_scalar(other)
        if c.is_zero:
            return AlgebraElement.zero(self.spec)
        return AlgebraElement(self.spec, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return NotImplemented
        return self * other

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if self.is_zero:
            return "0"
        bits = [f"({c})*g{list(k)}" for k, c in sorted(self.terms.items())]
        return " + ".join(bits)


class TensorElement:
    """Sparse element of the k-fold tensor power of the group algebra."""

    __slots__ = ("spec", "legs", "terms")

    def __init__(self, spec: GroupSpec, legs: int, terms: dict):
        if legs < 1:
            raise ValueError("a tensor element needs at least one leg")
        self.spec = spec
        self.legs = legs
        self.terms = terms  # tuple of exponent tuples -> nonzero scalar

    @classmethod
    def zero(cls, spec: GroupSpec, legs: int) -> "TensorElement":
        return cls(spec, legs, {})

    @classmethod
    def unit(cls, spec: GroupSpec, legs: int) -> "TensorElement":
        return cls(spec, legs, {(spec.identity,) * legs: rational(1)})

    @classmethod
    def from_terms(cls, spec: GroupSpec, legs: int, pairs) -> "TensorElement":
        terms: dict = {}
        for key, coeff in pairs:
            key = tuple(spec.reduce(e) for e in key)
            if len(key) != legs:
                raise ValueError("term has the wrong number of legs")
            c = as_scalar(coeff)
            terms[key] = terms.get(key, rational(0)) + c
        return cls(spec, legs, _prune(terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.spec != self.spec or other.legs != self.legs:
            raise ValueError("tensor shape mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, rational(0)) + c
        return TensorElement(self.spec, self.legs, _prune(out))

    def __neg__(self):
        return TensorElement(self.spec, self.legs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            if other.spec != self.spec or other.legs != self.legs:
                raise ValueError("tensor shape mismatch")
            orders = self.spec.orders
            out: dict = {}
            for ka, ca in self.terms.items():
                for kb, cb in other.terms.items():
                    k = tuple(
                        tuple((x + y) % n for x, y, n in zip(la, lb, orders))
                        for la, lb in zip(ka, kb)
                    )
                    c = ca * cb
                    prev = out.get(k)
                    out[k] = c if prev is None else prev + c
            return TensorElement(self.spec, self.legs, _prune(out))
        c = as_scalar(other)
        if c.is_zero:
            return TensorElement.zero(self.spec, self.legs)
        return TensorElement(self.spec, self.legs, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, TensorElement):
            return NotImplemented
        return self * other

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.spec == other.spec and self.legs == other.legs and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if self.is_zero:
            return "0"
        bits = [
            "({})*{}".format(c, " (x) ".join(f"g{list(leg)}" for leg in key))
            for key, c in sorted(self.terms.items())
        ]
        return " + ".join(bits)


# -- Hopf structure maps -----------------------------------------------


def coproduct(x: AlgebraElement) -> TensorElement:
    """Group-like coproduct, extended linearly: basis b maps to b (x) b."""
    return TensorElement(x.spec, 2, {(k, k): c for k, c in x.terms.items()})


def opposite_coproduct(x: AlgebraElement) -> TensorElement:
    """Coproduct followed by the swap of the two legs."""
    return TensorElement(x.spec, 2, {(k2, k1): c for (k1, k2), c in coproduct(x).terms.items()})


def counit(x: AlgebraElement) -> CyclotomicNumber:
    """Linear map sending every basis element to 1."""
    total = rational(0)
    for c in x.terms.values():
        total = total + c
    return total


def antipode(x: AlgebraElement) -> AlgebraElement:
    """Linear map sending each basis element to its group inverse."""
    spec = x.spec
    return AlgebraElement(
        spec, {spec.reduce(tuple(-e for e in k)): c for k, c in x.terms.items()}
    )


# -- leg operations on tensor elements ---------------------------------


def leg_embedding(t: TensorElement, legs: int, positions: tuple[int, int]) -> TensorElement:
    """Embed a two-leg element into a larger power, unit on the other legs."""
    if t.legs != 2:
        raise ValueError("only two-leg elements can be embedded this way")
    i, j = positions
    if not (0 <= i < j < legs):
        raise ValueError("leg positions must be increasing and in range")
    ident = t.spec.identity
    out = {}
    for (a, b), c in t.terms.items():
        key = [ident] * legs
        key[i] = a
        key[j] = b
        out[tuple(key)] = c
    return TensorElement(t.spec, legs, out)


def coproduct_on_leg(t: TensorElement, leg: int) -> TensorElement:
    """Apply the coproduct to one leg, duplicating it in place."""
    out: dict = {}
    for key, c in t.terms.items():
        b = key[leg]
        nk = key[:leg] + (b, b) + key[leg + 1:]
        out[nk] = out.get(nk, rational(0)) + c
    return TensorElement(t.spec, t.legs + 1, _prune(out))


def counit_on_leg(t: TensorElement, leg: int) -> TensorElement:
    """Contract one leg with the counit (every basis element counts 1)."""
    if t.legs < 2:
        raise ValueError("need at least two legs to contract one away")
    out: dict = {}
    for key, c in t.terms.items():
        nk = key[:leg] + key[leg + 1:]
        out[nk] = out.get(nk, rational(0)) + c
    return TensorElement(t.spec, t.legs - 1, _prune(out))


def as_single_leg(x: AlgebraElement) -> TensorElement:
    """View an algebra element as a one-leg tensor element."""
    return TensorElement(x.spec, 1, {(k,): c for k, c in x.terms.items()})


# -- distinguished invertible elements ----------------------------------


def universal_r(spec: GroupSpec) -> TensorElement:
    """The two-leg element whose coefficient at (g^a, g^b) is the product of
    one phase per cyclic factor:

        (prod_k 1/n_k) * prod_k zeta_{n_k}^(-a_k b_k)

    assembled in the cyclotomic field of order lcm(n_1, ..., n_k).  This is
    the element that passes every quasitriangularity check below.
    """
    big = spec.field_order
    norm = Fraction(1, spec.dimension)
    terms = {}
    for a in spec.basis():
        for b in spec.basis():
            e = -sum(ak * bk * (big // n) for ak, bk, n in zip(a, b, spec.orders)) % big
            terms[(a, b)] = root_of_unity(big, e) * norm
    return TensorElement(spec, 2, terms)


def universal_r_inverse(spec: GroupSpec) -> TensorElement:
    """Companion element with conjugated phases; the exact two-sided inverse
    of universal_r in the tensor-square algebra."""
    big = spec.field_order
    norm = Fraction(1, spec.dimension)
    terms = {}
    for a in spec.basis():
        for b in spec.basis():
            e = sum(ak * bk * (big // n) for ak, bk, n in zip(a, b, spec.orders)) % big
            terms[(a, b)] = root_of_unity(big, e) * norm
    return TensorElement(spec, 2, terms)


def universal_r_fused_phase(spec: GroupSpec) -> TensorElement:
    """Variant with a single fused exponent per coefficient:

        (1/N) * zeta_N^(-(a_1 b_1) * (a_2 b_2) * ... ),   N = prod_k n_k.

    Coincides with universal_r for a single cyclic factor.  For two or more
    nontrivial factors it is a different element and carries no guarantee of
    passing the quasitriangularity checks; it exists so the discrepancy can
    be demonstrated and recorded.
    """
    big = spec.dimension
    norm = Fraction(1, big)
    terms = {}
    for a in spec.basis():
        for b in spec.basis():
            e = -prod(ak * bk for ak, bk in zip(a, b)) % big
            terms[(a, b)] = root_of_unity(big, e) * norm
    return TensorElement(spec, 2, terms)


# -- exact identity checkers ---------------------------------------------


def _require_two_legs(spec: GroupSpec, r: TensorElement):
    if r.spec != spec or r.legs != 2:
        raise ValueError("expected a two-leg tensor element over the given spec")


def check_quasi_cocommutative(spec: GroupSpec, r: TensorElement) -> bool:
    """Exact check that Dop(x) * R equals R * D(x) for every basis x,
    with the products taken in the tensor-square algebra."""
    _require_two_legs(spec, r)
    for exps in spec.basis():
        x = AlgebraElement.basis(spec, exps)
        if opposite_coproduct(x) * r != r * coproduct(x):
            return False
    return True


def check_quasitriangular(spec: GroupSpec, r: TensorElement) -> bool:
    """Exact check of the two coproduct compatibility identities,
    (D x id)(R) = R13 R23 and (id x D)(R) = R13 R12, in three legs."""
    _require_two_legs(spec, r)
    r12 = leg_embedding(r, 3, (0, 1))
    r13 = leg_embedding(r, 3, (0, 2))
    r23 = leg_embedding(r, 3, (1, 2))
    if coproduct_on_leg(r, 0) != r13 * r23:
        return False
    return coproduct_on_leg(r, 1) == r13 * r12


def check_algebraic_ybe(spec: GroupSpec, r: TensorElement) -> bool:
    """Exact check that R12 R13 R23 = R23 R13 R12 in the three-fold power."""
    _require_two_legs(spec, r)
    r12 = leg_embedding(r, 3, (0, 1))
    r13 = leg_embedding(r, 3, (0, 2))
    r23 = leg_embedding(r, 3, (1, 2))
    return r12 * r13 * r23 == r23 * r13 * r12


def check_hopf_axioms(spec: GroupSpec) -> bool:
    """Coassociativity, the counit laws, and the antipode law, verified on
    every basis element by exact expansion."""
    unit = AlgebraElement.unit(spec)
    for exps in spec.basis():
        x = AlgebraElement.basis(spec, exps)
        d = coproduct(x)
        if coproduct_on_leg(d, 0) != coproduct_on_leg(d, 1):
            return False
        one_leg = as_single_leg(x)
        if counit_on_leg(d, 0) != one_leg or counit_on_leg(d, 1) != one_leg:
            return False
        left = AlgebraElement.zero(spec)
        right = AlgebraElement.zero(spec)
        for (u, v), c in d.terms.items():
            ue = AlgebraElement.basis(spec, u)
            ve = AlgebraElement.basis(spec, v)
            left = left + (antipode(ue) * ve) * c
            right = right + (ue * antipode(ve)) * c
        target = unit * counit(x)
        if left != target or right != target:
            return False
    return True


def specs_up_to(bound: int) -> list[GroupSpec]:
    """All specs with factor orders >= 2 (nondecreasing) and total dimension
    at most ``bound``, plus the trivial spec (1,).  Reorderings of the
    factors give isomorphic algebras, so one representative per multiset."""
    out = [GroupSpec((1,))]

    def extend(prefix: tuple[int, ...], start: int, room: int):
        for n in range(start, room + 1):
            out.append(GroupSpec(prefix + (n,)))
            extend(prefix + (n,), n, room // n)

    extend((), 2, bound)
    return out


# -- JSON interchange -----------------------------------------------------


def tensor_to_json(t: TensorElement) -> dict:
    return {
        "orders": list(t.spec.orders),
        "legs": t.legs,
        "terms": [
            {"exps": [list(leg) for leg in key], "coeff": c.to_json()}
            for key, c in sorted(t.terms.items())
        ],
    }


def tensor_from_json(data: dict) -> TensorElement:
    spec = GroupSpec(tuple(int(n) for n in data["orders"]))
    pairs = [
        (tuple(tuple(int(e) for e in leg) for leg in term["exps"]),
         CyclotomicNumber.from_json(term["coeff"]))
        for term in data["terms"]
    ]
    return TensorElement.from_terms(spec, int(data["legs"]), pairs)
