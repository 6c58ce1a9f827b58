import json
import pathlib

import pytest

from cayleykit import families
from cayleykit.cosets import group_from_presentation
from cayleykit.graphs import (
    ColoredDigraph,
    EdgeColor,
    GraphError,
    analyze,
    build_cayley_graph,
    color_permutations,
    dump_graph_json,
    export_dot,
    extract_presentation,
    fixture,
    fixture_names,
    is_cayley,
    load_graph_json,
)
from cayleykit.groups import is_isomorphic

DATA = pathlib.Path(__file__).parent / "data"
ORACLE = json.loads((DATA / "puzzle_oracle.json").read_text())


def perm_cycle_lengths(perm):
    seen = set()
    lengths = []
    for start in range(len(perm)):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        lengths.append(length)
    return sorted(lengths)


# --- building Cayley graphs ---------------------------------------------------


def test_build_dihedral_graph_shape():
    G = families.dihedral(4)
    g = build_cayley_graph(G)
    assert g.node_count == 8
    red, blue = g.colors
    assert red.name == "r" and red.directed
    assert blue.name == "f" and not blue.directed
    perms = color_permutations(g)
    assert perm_cycle_lengths(perms[0]) == [4, 4]
    assert perm_cycle_lengths(perms[1]) == [2, 2, 2, 2]
    assert len(blue.edges) == 4


def test_build_two_element_graph():
    G = families.cyclic(2)
    g = build_cayley_graph(G)
    assert g.node_count == 2
    (color,) = g.colors
    assert not color.directed
    assert color.edges == ((0, 1),)
    assert color_permutations(g)[0] == (1, 0)


def test_build_quaternion_graph_two_directed_colors():
    Q8 = families.quaternion(8)
    gens = dict(Q8.generators)
    g = build_cayley_graph(Q8, [("i", gens["r"]), ("j", gens["s"])])
    assert g.node_count == 8
    assert all(color.directed for color in g.colors)
    for perm in color_permutations(g):
        assert perm_cycle_lengths(perm) == [4, 4]


def test_build_rejects_identity_and_nongenerating():
    G = families.dihedral(4)
    gens = dict(G.generators)
    with pytest.raises(GraphError):
        build_cayley_graph(G, [("e", 0)])
    with pytest.raises(GraphError):
        build_cayley_graph(G, [("r", gens["r"])])  # <r> is proper


# --- color permutation validation ----------------------------------------------


def test_petersen_red_permutation():
    perms = color_permutations(fixture("petersen"))
    red = perms[0]
    assert red[:5] == (1, 2, 3, 4, 0)
    assert red[5] == 7 and red[7] == 9 and red[9] == 6 and red[6] == 8 and red[8] == 5
    assert perm_cycle_lengths(red) == [5, 5]
    assert perm_cycle_lengths(perms[1]) == [2, 2, 2, 2, 2]


def test_self_loop_rejected():
    with pytest.raises(GraphError):
        color_permutations(
            ColoredDigraph(2, (EdgeColor("red", True, ((0, 0), (1, 1))),))
        )


def test_unmatched_node_rejected_unless_allowed():
    g = ColoredDigraph(4, (EdgeColor("blue", False, ((0, 1),)),))
    with pytest.raises(GraphError):
        color_permutations(g)
    perm = color_permutations(g, allow_fixed_points=True)[0]
    assert perm == (1, 0, 2, 3)


def test_identity_color_rejected():
    g = ColoredDigraph(2, (EdgeColor("blue", False, ()),))
    with pytest.raises(GraphError) as err:
        color_permutations(g, allow_fixed_points=True)
    assert "identity" in str(err.value)


def test_colorless_graph_rejected():
    with pytest.raises(GraphError):
        color_permutations(ColoredDigraph(3, ()))


def test_degree_violations_reported():
    with pytest.raises(GraphError):
        color_permutations(
            ColoredDigraph(3, (EdgeColor("red", True, ((0, 1), (0, 2), (1, 0))),))
        )
    with pytest.raises(GraphError):
        ColoredDigraph(2, (EdgeColor("red", True, ((0, 1), (0, 1))),))


# --- regularity verdicts --------------------------------------------------------


def test_round_trip_is_cayley():
    for G in (families.dihedral(4), families.quaternion(8), families.abelian([4, 2])):
        g = build_cayley_graph(G)
        verdict = is_cayley(g)
        assert verdict.is_cayley
        assert verdict.perm_group_order == G.order
        assert is_isomorphic(verdict.acting_group, G) is not None


def test_petersen_is_not_cayley():
    verdict = is_cayley(fixture("petersen"))
    assert not verdict.is_cayley
    assert verdict.connected
    assert verdict.order_exceeds_nodes
    assert verdict.perm_group_order is None  # early exit
    full = is_cayley(fixture("petersen"), full_order=True)
    assert full.perm_group_order == 50


def test_disconnected_graph_not_cayley():
    red = EdgeColor("red", True, ((0, 1), (1, 0), (2, 3), (3, 2)))
    verdict = is_cayley(ColoredDigraph(4, (red,)))
    assert not verdict.connected
    assert not verdict.is_cayley


# --- presentation extraction ----------------------------------------------------


def test_extract_single_edge():
    g = ColoredDigraph(2, (EdgeColor("s", False, ((0, 1),)),))
    p = extract_presentation(g)
    assert p.generators == ("s",)
    assert p.relators == (((0, 1), (0, 1)),)


def test_extract_petersen_presents_order_two():
    p = extract_presentation(fixture("petersen"))
    assert p.generators == ("red", "blue")
    assert group_from_presentation(p).order == 2


def test_extract_ring14_presents_order_two():
    assert group_from_presentation(extract_presentation(fixture("ring14"))).order == 2


def test_extract_requires_connected():
    red = EdgeColor("red", True, ((0, 1), (1, 0), (2, 3), (3, 2)))
    with pytest.raises(GraphError):
        extract_presentation(ColoredDigraph(4, (red,)))


@pytest.mark.parametrize("name", ["petersen", "mirror16", "flower16_rev"])
def test_presented_group_base_independent(name):
    g = fixture(name)
    base_group = group_from_presentation(extract_presentation(g, 0))
    for base in range(1, g.node_count, 5):
        other = group_from_presentation(extract_presentation(g, base))
        assert is_isomorphic(base_group, other) is not None


# --- full analysis against the frozen oracle -------------------------------------


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_fixture_analysis_matches_oracle(name):
    expected = ORACLE[name]
    report = analyze(fixture(name), full_order=True)
    assert report.verdict.connected == expected["connected"]
    assert report.verdict.perm_group_order == expected["perm_group_order"]
    assert report.verdict.is_cayley == expected["is_cayley"]
    assert report.presented_order == expected["presented_order"]
    assert report.presented_name == expected["presented_name"]


@pytest.mark.parametrize("name", sorted(ORACLE))
def test_sabidussi_consistency(name):
    report = analyze(fixture(name), full_order=True)
    nodes = fixture(name).node_count
    if report.is_cayley:
        assert report.presented_order == nodes
        assert (
            is_isomorphic(report.presented_group, report.verdict.acting_group)
            is not None
        )
        assert report.verdict.transitive
    else:
        assert report.presented_order < nodes


def test_mirror_fixtures_measured_pair_orders():
    for name in ("mirror16", "mirror32"):
        g = fixture(name)
        perms = color_permutations(g)
        assert all(not c.directed for c in g.colors)
        n = g.node_count
        ident = tuple(range(n))
        for p in perms:
            assert tuple(p[p[x]] for x in range(n)) == ident  # involutions
        names = [c.name for c in g.colors]
        expected = ORACLE[name]["pair_permutation_orders"]
        for i in range(3):
            for j in range(i + 1, 3):
                prod = tuple(perms[j][perms[i][x]] for x in range(n))
                power, order = prod, 1
                while power != ident:
                    power = tuple(prod[power[x]] for x in range(n))
                    order += 1
                assert order == expected[f"{names[i]}*{names[j]}"]


# --- fixtures and serialization ---------------------------------------------------


def test_fixture_names_and_unknown():
    assert fixture_names() == [
        "flower16_fwd",
        "flower16_rev",
        "mirror16",
        "mirror32",
        "petersen",
        "ring14",
        "ring18",
        "twist32_k3",
        "twist32_k5",
    ]
    with pytest.raises(GraphError):
        fixture("moebius")


def test_twist_fixture_inner_cycle():
    g = fixture("twist32_k5")
    assert g.node_count == 32
    red = color_permutations(g)[0]
    assert red[16] == 16 + 5
    assert red[16 + 5] == 16 + 10
    assert red[16 + 10] == 16 + 15


def test_graph_json_round_trip_is_stable():
    text = dump_graph_json(fixture("petersen"))
    once = dump_graph_json(load_graph_json(text))
    twice = dump_graph_json(load_graph_json(once))
    assert once == twice


def test_graph_json_errors():
    with pytest.raises(GraphError):
        load_graph_json("{not json")
    with pytest.raises(GraphError):
        load_graph_json('{"nodes": 2}')
    with pytest.raises(GraphError):
        load_graph_json('{"nodes": 2, "colors": [{"name": "red"}]}')


def test_export_dot_counts():
    two = ColoredDigraph(2, (EdgeColor("s", False, ((0, 1),)),))
    body = export_dot(two).strip().splitlines()[1:-1]
    assert len(body) == 3

    d4 = export_dot(build_cayley_graph(families.dihedral(4)))
    lines = d4.strip().splitlines()
    node_lines = [l for l in lines if "label=" in l]
    edge_lines = [l for l in lines if "->" in l]
    assert len(node_lines) == 8
    assert len(edge_lines) == 12
    assert sum(1 for l in edge_lines if "dir=none" in l) == 4


def test_export_dot_palette_for_unknown_names():
    g = build_cayley_graph(families.dihedral(3))
    text = export_dot(g)
    assert "color=red" in text and "color=blue" in text


def mirror_variant(m, inner_step, outer_starts_blue, inner_starts_blue):
    outer_a = [(2 * k, 2 * k + 1) for k in range(m // 2)]
    outer_b = [(2 * k + 1, (2 * k + 2) % m) for k in range(m // 2)]
    inner_a, inner_b = [], []
    for k in range(m):
        edge = (m + (inner_step * k) % m, m + (inner_step * (k + 1)) % m)
        (inner_a if k % 2 == 0 else inner_b).append(edge)
    blue = (outer_a if outer_starts_blue else outer_b) + (
        inner_a if inner_starts_blue else inner_b
    )
    red = (outer_b if outer_starts_blue else outer_a) + (
        inner_b if inner_starts_blue else inner_a
    )
    green = [(k, m + k) for k in range(m)]
    return ColoredDigraph(
        2 * m,
        (
            EdgeColor("blue", False, tuple(blue)),
            EdgeColor("red", False, tuple(red)),
            EdgeColor("green", False, tuple(green)),
        ),
    )


def pairwise_product_orders(g):
    perms = color_permutations(g)
    n = g.node_count
    ident = tuple(range(n))
    orders = []
    for i in range(3):
        for j in range(i + 1, 3):
            prod = tuple(perms[j][perms[i][x]] for x in range(n))
            power, order = prod, 1
            while power != ident:
                power = tuple(prod[power[x]] for x in range(n))
                order += 1
            orders.append(order)
    return orders


def test_mirror_phase_flips_give_diquaternion_graphs():
    # the bundled mirror fixtures are one alternation phase away from true
    # Cayley graphs of the diquaternion groups
    flipped16 = mirror_variant(8, 3, outer_starts_blue=False, inner_starts_blue=True)
    report = analyze(flipped16)
    assert report.is_cayley
    assert report.presented_name == "DQ_8"
    assert is_isomorphic(report.verdict.acting_group, families.diquaternion(8)) is not None
    assert pairwise_product_orders(flipped16) == [4, 4, 4]

    flipped32 = mirror_variant(16, 9, outer_starts_blue=False, inner_starts_blue=False)
    report32 = analyze(flipped32)
    assert report32.is_cayley
    assert report32.presented_name == "DQ_16"
    assert sorted(pairwise_product_orders(flipped32)) == [4, 4, 8]


def test_perturbed_cayley_graph_loses_regularity():
    # rewiring one blue spoke pair of a true Cayley graph must not stay regular
    g = fixture("mirror16")
    blue = g.colors[0]
    edges = list(blue.edges)
    (a, b), (c, d) = edges[0], edges[1]
    edges[0], edges[1] = (a, d), (c, b)
    perturbed = ColoredDigraph(
        g.node_count, (EdgeColor("blue", False, tuple(edges)),) + g.colors[1:]
    )
    report = analyze(perturbed)
    if report.is_cayley:
        assert report.presented_order == g.node_count
    else:
        assert report.presented_order < g.node_count
