import random

import pytest

from cayleykit.cosets import CapExceeded
from cayleykit.groups import enumerate_subgroups, identify, is_isomorphic, is_normal
from cayleykit.matrices import (
    CycInt,
    CycMatrix,
    LevelMismatch,
    cyc_add,
    cyc_mul,
    cyc_neg,
    diquaternion_group,
    f_matrix,
    j_matrix,
    kronecker,
    mat_mul,
    matrix_group_closure,
    pauli_group,
    rot_matrix,
)


def zeta(level, power=1):
    return CycInt.zeta(level, power)


def rand_cyc(rng, level, lo=-9, hi=9):
    span = 1 << (level - 1)
    return CycInt(level, tuple(rng.randint(lo, hi) for _ in range(span)))


# --- scalar arithmetic --------------------------------------------------------


def test_reduction_relation():
    assert zeta(3) * zeta(3, 3) == CycInt.from_int(-1)
    assert zeta(2) * zeta(2) == -1
    value = (zeta(3) + zeta(3, 3)) * (zeta(3) + zeta(3, 3))
    assert value == CycInt.from_int(-2)


def test_level_mismatch_raises():
    with pytest.raises(LevelMismatch):
        cyc_mul(zeta(2), zeta(3))
    with pytest.raises(LevelMismatch):
        cyc_add(zeta(2), zeta(3))
    assert cyc_mul(zeta(2).promote(3), zeta(3)) == zeta(3, 3)


def test_promotion_preserves_value_and_hash():
    i = zeta(2)
    lifted = i.promote(4)
    assert i == lifted
    assert hash(i) == hash(lifted)
    assert abs(i.complex_value() - lifted.complex_value()) < 1e-12
    with pytest.raises(LevelMismatch):
        lifted.promote(2)


def test_integer_coercion():
    assert zeta(2) * 0 == 0
    assert zeta(3) + 1 - 1 == zeta(3)
    assert cyc_neg(CycInt.from_int(5)) == -5


def test_string_rendering():
    assert str(CycInt.from_int(0, 3)) == "0"
    assert str(zeta(3)) == "z"
    assert str(-zeta(3, 3)) == "-z^3"
    assert str(zeta(3) + zeta(3, 3) + 2) == "z^3+z+2"
    assert str(CycInt(3, (1, 0, -2, 0))) == "-2z^2+1"


def test_ring_axioms_randomized():
    rng = random.Random(101)
    for _ in range(300):
        level = rng.randint(2, 4)
        a, b, c = (rand_cyc(rng, level) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a + b == b + a
        assert a + (-a) == 0


def test_float_shadow_small():
    rng = random.Random(2024)
    for _ in range(500):
        level = rng.randint(2, 4)
        a, b = rand_cyc(rng, level), rand_cyc(rng, level)
        got = (a * b).complex_value()
        expected = a.complex_value() * b.complex_value()
        assert abs(got - expected) < 1e-9


# --- matrices -----------------------------------------------------------------


def test_mat_mul_examples():
    eye = CycMatrix.identity(2, 2)
    rot = rot_matrix(2)
    assert mat_mul(rot, eye) == rot
    j = j_matrix()
    assert mat_mul(j, j) == CycMatrix(1, [[-1, 0], [0, -1]])
    f = f_matrix()
    assert mat_mul(f, f) == CycMatrix.identity(2)


def test_mat_mul_requires_matching_shapes():
    with pytest.raises(LevelMismatch):
        mat_mul(rot_matrix(2), rot_matrix(3))
    with pytest.raises(ValueError):
        mat_mul(j_matrix(), kronecker(j_matrix(), j_matrix()))


def test_matrix_equality_across_levels():
    j = j_matrix()
    assert j == j.promote(3)
    assert hash(j) == hash(j.promote(3))


def test_matrix_rendering():
    assert str(rot_matrix(2)) == "[[z,0],[0,-z]]"
    assert str(j_matrix()) == "[[0,-1],[1,0]]"
    assert str(rot_matrix(3)) == "[[z,0],[0,-z^3]]"


def test_kronecker():
    eye = CycMatrix.identity(2)
    a = j_matrix()
    block = kronecker(eye, a)
    assert block.dim == 4
    assert block.rows[0][1] == CycInt.from_int(-1)
    assert block.rows[2][3] == CycInt.from_int(-1)
    assert block.rows[0][2] == CycInt.from_int(0)

    f = f_matrix()
    ff = kronecker(f, f)
    for i in range(4):
        for j in range(4):
            assert ff.rows[i][j] == CycInt.from_int(1 if i + j == 3 else 0)

    jf = kronecker(j_matrix(), f_matrix())
    square = mat_mul(jf, jf)
    separate = kronecker(mat_mul(j_matrix(), j_matrix()), mat_mul(f, f))
    assert square == separate


def test_closure_trivial():
    G = matrix_group_closure([CycMatrix.identity(2)])
    assert G.order == 1


def test_closure_diquaternion_eight():
    G = matrix_group_closure(
        [rot_matrix(2), j_matrix(), f_matrix()], names=["i", "j", "f"]
    )
    assert G.order == 16
    assert G.element_names[0] == "[[1,0],[0,1]]"
    assert dict(G.generators).keys() == {"i", "j", "f"}


def test_closure_diquaternion_sixteen():
    G = matrix_group_closure([rot_matrix(3), j_matrix(), f_matrix()])
    assert G.order == 32


def test_closure_cap():
    with pytest.raises(CapExceeded):
        matrix_group_closure([rot_matrix(3), j_matrix(), f_matrix()], cap=16)


def test_generator_orders_divide_group_order():
    G = diquaternion_group(16)
    for _, el in G.generators:
        assert G.order % G.order_of(el) == 0


def test_diquaternion_structure():
    DQ8 = diquaternion_group(8)
    assert DQ8.order == 16
    halves = [s for s in enumerate_subgroups(DQ8) if s.index == 2]
    classes = {identify(s.as_group()).name for s in halves}
    assert classes == {"C_4xC_2", "D_4", "Q_8"}

    DQ16 = diquaternion_group(16)
    assert DQ16.order == 32
    halves16 = [s for s in enumerate_subgroups(DQ16) if s.index == 2]
    names16 = [identify(s.as_group()).name for s in halves16]
    # the quaternion, dihedral, and abelian halves each occur exactly once
    for wanted in ("Q_16", "D_8", "C_8xC_2"):
        assert names16.count(wanted) == 1
    for s in halves16:
        assert is_normal(DQ16, s)


def test_pauli_orders_and_identity():
    P1 = pauli_group(1)
    assert P1.order == 16
    assert is_isomorphic(P1, diquaternion_group(8)) is not None
    assert pauli_group(2).order == 64
    with pytest.raises(ValueError):
        pauli_group(4)
    with pytest.raises(ValueError):
        pauli_group(0)


def test_pauli_two_qubit_structure():
    P2 = pauli_group(2)
    hist = P2.order_histogram()
    assert P2.exponent() == 4
    assert hist[1] == 1
    assert len([g for g in range(P2.order) if P2.order_of(g) == 2]) == hist[2]


def test_bad_closure_inputs():
    with pytest.raises(ValueError):
        matrix_group_closure([])
    with pytest.raises(ValueError):
        matrix_group_closure([j_matrix()], names=["a", "b"])
    with pytest.raises(ValueError):
        diquaternion_group(12)
