import random
from fractions import Fraction

import pytest

from hopfbraid.braidrep import (
    BraidedRMatrix,
    BraidWord,
    ModuleAction,
    braid_generator,
    braided_r,
    braiding_map,
    check_braid_relations,
    check_braided_ybe,
    check_hexagon,
    check_module_morphism,
    evaluate_braid_word,
)
from hopfbraid.groupalg import (
    GroupSpec,
    specs_up_to,
    universal_r,
    universal_r_fused_phase,
)
from hopfbraid.linalg import Matrix, conjugate_transpose, flip_operator, kron
from hopfbraid.scalar import rational, root_of_unity

S2 = GroupSpec((2,))
S3 = GroupSpec((3,))

EXPECTED_BRAIDED_2 = Matrix.from_rows([
    [Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2)],
    [Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2)],
    [Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 2)],
    [Fraction(-1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)],
])


def test_braided_r_order_two_matrix():
    assert braided_r(S2).matrix == EXPECTED_BRAIDED_2


def test_braided_r_trivial_spec():
    r = braided_r(GroupSpec((1,)))
    assert r.matrix == Matrix.identity(1)


def test_braided_r_order_three_entry_formula():
    # independent oracle: after the flip, the entry at row (i', j'), column
    # (i, j) is zeta_3^(-(j'-i)(i'-j)) / 3
    r = braided_r(S3).matrix
    third = Fraction(1, 3)
    for ip in range(3):
        for jp in range(3):
            for i in range(3):
                for j in range(3):
                    expected = root_of_unity(3, (-(jp - i) * (ip - j)) % 3) * third
                    assert r[ip * 3 + jp, i * 3 + j] == expected


def test_braided_r_order_two_is_involution():
    m = braided_r(S2).matrix
    assert m @ m == Matrix.identity(4)
    # real symmetric, so equal to its own conjugate transpose
    assert conjugate_transpose(m) == m


def test_braided_r_unitary_small_specs():
    for spec in specs_up_to(6):
        m = braided_r(spec).matrix
        assert m @ conjugate_transpose(m) == Matrix.identity(spec.dimension ** 2), spec


def test_check_braided_ybe():
    assert check_braided_ybe(braided_r(S2))
    assert check_braided_ybe(braided_r(S3))
    assert check_braided_ybe(BraidedRMatrix(2, flip_operator(2)))


def test_braid_generator_placement():
    r = braided_r(S2)
    assert braid_generator(1, 2, r) == r.matrix
    assert braid_generator(1, 3, r) == kron(r.matrix, Matrix.identity(2))
    assert braid_generator(2, 3, r) == kron(Matrix.identity(2), r.matrix)
    with pytest.raises(ValueError):
        braid_generator(3, 3, r)
    with pytest.raises(ValueError):
        braid_generator(0, 3, r)


def test_check_braid_relations():
    assert check_braid_relations(3, braided_r(S2))
    assert check_braid_relations(4, braided_r(S2))
    assert check_braid_relations(2, braided_r(S2))
    assert check_braid_relations(3, braided_r(S3))


def test_far_commutation_is_exercised():
    # four strands include the |i-j| = 2 pair (1, 3)
    r = braided_r(S2)
    g1 = braid_generator(1, 4, r)
    g3 = braid_generator(3, 4, r)
    assert g1 @ g3 == g3 @ g1


def test_evaluate_braid_word_basics():
    r = braided_r(S2)
    assert evaluate_braid_word(BraidWord(2, ()), r) == Matrix.identity(4)
    assert evaluate_braid_word(BraidWord(2, (1, -1)), r) == Matrix.identity(4)
    lhs = evaluate_braid_word(BraidWord(3, (1, 2, 1)), r)
    rhs = evaluate_braid_word(BraidWord(3, (2, 1, 2)), r)
    assert lhs == rhs


def test_evaluate_braid_word_concatenation():
    # letters apply to states in written order, so concatenation composes
    # with the second segment on the left of the matrix product
    rng = random.Random(8)
    r = braided_r(S2)
    for _ in range(10):
        n = rng.choice([2, 3, 4])
        letters = lambda: tuple(
            rng.choice([s * i for i in range(1, n) for s in (1, -1)])
            for _ in range(rng.randint(0, 4))
        )
        w1, w2 = letters(), letters()
        combined = evaluate_braid_word(BraidWord(n, w1 + w2), r)
        split = evaluate_braid_word(BraidWord(n, w2), r) @ evaluate_braid_word(BraidWord(n, w1), r)
        assert combined == split


def test_braid_word_validation():
    with pytest.raises(ValueError):
        BraidWord(3, (0,))
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        BraidWord(1, ())


def test_module_action_regular_validates():
    action = ModuleAction.regular(GroupSpec((2, 2)))
    assert action.validate()
    broken = dict(action._matrices)
    broken[(1, 1)] = Matrix.zeros(4, 4)
    assert not ModuleAction(action.spec, broken).validate()


def test_braiding_map_on_regular_modules_matches_braided_r():
    for spec in specs_up_to(6):
        reg = ModuleAction.regular(spec)
        assert braiding_map(reg, reg, universal_r(spec)) == braided_r(spec).matrix, spec


def test_braiding_map_trivial_modules():
    triv = ModuleAction.trivial(S2)
    assert braiding_map(triv, triv, universal_r(S2)) == Matrix.identity(1)


def test_braiding_map_fused_form_two_two_oracle():
    # independent oracle: expand the action sum directly from the fused
    # phases, mapping e_u (x) e_v to sum over (a, b) of
    # zeta_4^(-a1 b1 a2 b2)/4 * e_(v+b) (x) e_(u+a)
    spec = GroupSpec((2, 2))
    reg = ModuleAction.regular(spec)
    r = universal_r_fused_phase(spec)
    got = braiding_map(reg, reg, r)

    idx = {exps: i for i, exps in enumerate(spec.basis())}
    size = 16
    cells = {}
    quarter = Fraction(1, 4)
    for u in spec.basis():
        for v in spec.basis():
            col = idx[u] * 4 + idx[v]
            for a in spec.basis():
                for b in spec.basis():
                    phase = root_of_unity(4, (-(a[0] * b[0] * a[1] * b[1])) % 4) * quarter
                    vb = tuple((x + y) % 2 for x, y in zip(v, b))
                    ua = tuple((x + y) % 2 for x, y in zip(u, a))
                    row = idx[vb] * 4 + idx[ua]
                    key = row * size + col
                    cells[key] = cells.get(key, rational(0)) + phase
    entries = [rational(0)] * (size * size)
    for key, value in cells.items():
        entries[key] = value
    assert got == Matrix(size, size, entries)


def test_check_module_morphism():
    reg2 = ModuleAction.regular(S2)
    assert check_module_morphism(braiding_map(reg2, reg2, universal_r(S2)), reg2, reg2)
    reg3 = ModuleAction.regular(S3)
    assert check_module_morphism(braiding_map(reg3, reg3, universal_r(S3)), reg3, reg3)
    assert not check_module_morphism(Matrix.zeros(4, 4), reg2, reg2)


def test_check_hexagon_regular_triples():
    reg2 = ModuleAction.regular(S2)
    assert check_hexagon(reg2, reg2, reg2, universal_r(S2))
    reg3 = ModuleAction.regular(S3)
    assert check_hexagon(reg3, reg3, reg3, universal_r(S3))


def test_hexagon_on_equal_modules_matches_braided_ybe():
    reg = ModuleAction.regular(S2)
    assert check_hexagon(reg, reg, reg, universal_r(S2)) == check_braided_ybe(braided_r(S2))


def test_hexagon_mixed_modules():
    reg = ModuleAction.regular(S2)
    triv = ModuleAction.trivial(S2)
    assert check_hexagon(triv, reg, reg, universal_r(S2))
    assert check_hexagon(reg, triv, reg, universal_r(S2))


def test_braided_rmatrix_shape_validation():
    with pytest.raises(ValueError):
        BraidedRMatrix(3, Matrix.identity(4))
