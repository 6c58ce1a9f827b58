import pytest

from cayleykit import families
from cayleykit.families import FamilySpec
from cayleykit.groups import identify, is_isomorphic
from cayleykit.words import evaluate_word


@pytest.mark.parametrize(
    "spec, order",
    [
        (FamilySpec("cyclic", (1,)), 1),
        (FamilySpec("cyclic", (12,)), 12),
        (FamilySpec("abelian", (8, 2)), 16),
        (FamilySpec("dihedral", (4,)), 8),
        (FamilySpec("quaternion", (16,)), 16),
        (FamilySpec("semidihedral", (8,)), 16),
        (FamilySpec("semiabelian", (8,)), 16),
        (FamilySpec("sdp", (16, 9)), 32),
        (FamilySpec("diquaternion", (8,)), 16),
        (FamilySpec("pauli", (1,)), 16),
    ],
)
def test_make_orders(spec, order):
    assert families.make(spec).order == order


def test_make_direct_product():
    spec = FamilySpec(
        "direct-product",
        factors=(FamilySpec("dihedral", (3,)), FamilySpec("cyclic", (5,))),
    )
    G = families.make(spec)
    assert G.order == 30
    assert identify(G).name == "D_3xC_5"


def test_invalid_parameters():
    with pytest.raises(ValueError):
        families.quaternion(12)
    with pytest.raises(ValueError):
        families.sdp_c2(16, 3)  # 9 != 1 mod 16
    with pytest.raises(ValueError):
        families.semidihedral(12)
    with pytest.raises(ValueError):
        families.cyclic(0)
    with pytest.raises(ValueError):
        families.make(FamilySpec("nonsense", (1,)))


def test_sdp_reduces_twist_modulo_m():
    assert is_isomorphic(families.sdp_c2(8, 15), families.sdp_c2(8, 7)) is not None


def test_sdp_k1_is_abelian():
    G = families.sdp_c2(16, 1)
    assert G.is_abelian()
    assert identify(G).name == "C_16xC_2"


def test_sdp_known_names():
    assert identify(families.sdp_c2(16, 15)).name == "D_16"
    assert identify(families.sdp_c2(16, 7)).name == "SD_16"
    assert identify(families.sdp_c2(16, 9)).name == "SA_16"


def test_quaternion_has_single_involution():
    for order in (8, 16, 32):
        hist = families.quaternion(order).order_histogram()
        assert hist[2] == 1


def test_involutive_exponents():
    assert families.involutive_exponents(16) == [1, 7, 9, 15]
    assert families.involutive_exponents(2) == [1]
    assert families.involutive_exponents(8) == [1, 3, 5, 7]
    assert families.involutive_exponents(15) == [1, 4, 11, 14]
    with pytest.raises(ValueError):
        families.involutive_exponents(1)


@pytest.mark.parametrize("m", [8, 16, 32])
def test_four_twists_pairwise_distinct(m):
    ks = families.involutive_exponents(m)
    assert len(ks) == 4
    groups = [families.sdp_c2(m, k) for k in ks]
    for G in groups:
        assert G.order == 2 * m
        r = dict(G.generators)["r"]
        sub_order = len({G.power(r, i) for i in range(m)})
        assert sub_order == m  # index-2 cyclic subgroup
    for i in range(4):
        for j in range(i + 1, 4):
            assert is_isomorphic(groups[i], groups[j]) is None


@pytest.mark.parametrize("n", [4, 5])
def test_quaternion_never_a_twist(n):
    Q = families.quaternion(2**n)
    for k in families.involutive_exponents(2 ** (n - 1)):
        assert is_isomorphic(Q, families.sdp_c2(2 ** (n - 1), k)) is None


@pytest.mark.parametrize(
    "spec",
    [
        FamilySpec("cyclic", (9,)),
        FamilySpec("abelian", (4, 2, 2)),
        FamilySpec("dihedral", (7,)),
        FamilySpec("quaternion", (32,)),
        FamilySpec("semidihedral", (16,)),
        FamilySpec("semiabelian", (16,)),
        FamilySpec("sdp", (12, 5)),
    ],
)
def test_defining_relators_hold(spec):
    presentation = families.family_presentation(spec)
    G = families.make(spec)
    names = dict(G.generators)
    assignment = {
        i: names[g] for i, g in enumerate(presentation.generators)
    }
    for rel in presentation.relators:
        assert evaluate_word(G, assignment, rel) == 0


def test_matrix_families_have_no_presentation():
    assert families.family_presentation(FamilySpec("pauli", (1,))) is None
    assert families.family_presentation(FamilySpec("diquaternion", (8,))) is None


def test_dihedral_convention_is_double():
    for n in (1, 2, 3, 8, 16):
        assert families.dihedral(n).order == 2 * n


def test_catalog_has_expected_members():
    names = {name for name, _ in families.nonabelian_catalog(32)}
    assert {"D_16", "SD_16", "SA_16", "Q_32", "DQ_16"} <= names
    names16 = {name for name, _ in families.nonabelian_catalog(16)}
    assert {"D_8", "SD_8", "SA_8", "Q_16", "DQ_8", "D_4xC_2", "Q_8xC_2"} <= names16
