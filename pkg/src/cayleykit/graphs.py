"""Edge-colored digraphs: Cayley graph generation and recognition.

A candidate graph has one permutation per color (directed colors are node
successions, undirected colors are perfect matchings).  The graph is a Cayley
graph iff it is connected and the color permutations generate a group whose
order equals the node count (the regular-action criterion); either way the
graph's loops present a group, which is enumerated and identified.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import cosets
from .groups import Group, Identification, identify, subgroup_closure
from .words import Presentation, Word, free_reduce, inverse_word

__all__ = [
    "GraphError",
    "EdgeColor",
    "ColoredDigraph",
    "GraphVerdict",
    "GraphReport",
    "color_permutations",
    "build_cayley_graph",
    "is_cayley",
    "extract_presentation",
    "analyze",
    "fixture",
    "fixture_names",
    "load_graph_json",
    "dump_graph_json",
    "export_dot",
]

FULL_ORDER_CAP = 10**6

DOT_COLORS = {
    "red", "blue", "green", "orange", "purple", "brown",
    "cyan", "magenta", "black", "gray", "yellow",
}
DOT_PALETTE = ("red", "blue", "green", "orange", "purple", "brown", "cyan", "magenta")


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColor:
    name: str
    directed: bool
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ColoredDigraph:
    node_count: int
    colors: tuple[EdgeColor, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.node_count < 1:
            raise GraphError("graph needs at least one node")
        if self.labels is not None and len(self.labels) != self.node_count:
            raise GraphError("one label per node required")
        for color in self.colors:
            seen = set()
            for u, v in color.edges:
                if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                    raise GraphError(
                        f"color {color.name!r}: edge ({u},{v}) out of range"
                    )
                key = (u, v) if color.directed else (min(u, v), max(u, v))
                if key in seen:
                    raise GraphError(
                        f"color {color.name!r}: duplicate edge ({u},{v})"
                    )
                seen.add(key)

    def label_of(self, node: int) -> str:
        return self.labels[node] if self.labels else str(node)


def color_permutations(
    graph: ColoredDigraph, allow_fixed_points: bool = False
) -> list[tuple[int, ...]]:
    """One permutation per color; raises GraphError naming the offender."""
    if not graph.colors:
        raise GraphError("graph has no colors")
    n = graph.node_count
    perms = []
    for color in graph.colors:
        image: list[int | None] = [None] * n
        if color.directed:
            indeg = [0] * n
            for u, v in color.edges:
                if u == v:
                    raise GraphError(f"color {color.name!r}: self-loop at node {u}")
                if image[u] is not None:
                    raise GraphError(
                        f"color {color.name!r}: node {u} has two outgoing edges"
                    )
                image[u] = v
                indeg[v] += 1
            for node in range(n):
                if image[node] is None:
                    raise GraphError(
                        f"color {color.name!r}: node {node} has no outgoing edge"
                    )
                if indeg[node] != 1:
                    raise GraphError(
                        f"color {color.name!r}: node {node} has {indeg[node]} incoming edges"
                    )
        else:
            for u, v in color.edges:
                if u == v:
                    raise GraphError(f"color {color.name!r}: self-loop at node {u}")
                if image[u] is not None or image[v] is not None:
                    raise GraphError(
                        f"color {color.name!r}: node {u if image[u] is not None else v} "
                        "is matched twice"
                    )
                image[u], image[v] = v, u
            for node in range(n):
                if image[node] is None:
                    if not allow_fixed_points:
                        raise GraphError(
                            f"color {color.name!r}: node {node} is unmatched "
                            "(an order-2 generator fixes no vertex)"
                        )
                    image[node] = node
        perm = tuple(image)  # type: ignore[arg-type]
        if perm == tuple(range(n)):
            raise GraphError(f"color {color.name!r}: permutation is the identity")
        perms.append(perm)
    return perms


def _pmul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # diagrammatic order: apply p, then q
    return tuple(q[x] for x in p)


def _orbit_of_zero(perms) -> set[int]:
    seen = {0}
    queue = [0]
    while queue:
        x = queue.pop()
        for p in perms:
            y = p[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _closure(perms, limit: int):
    """BFS closure in generator order; returns (elements, exceeded_limit)."""
    n = len(perms[0])
    ident = tuple(range(n))
    elements = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elements):
        current = elements[head]
        for p in perms:
            q = _pmul(current, p)
            if q not in index:
                index[q] = len(elements)
                elements.append(q)
                if len(elements) > limit:
                    return elements, True
        head += 1
    return elements, False


@dataclass(frozen=True)
class GraphVerdict:
    connected: bool
    transitive: bool
    color_perms: tuple[tuple[int, ...], ...]
    perm_group_order: int | None  # None when only a lower bound is known
    order_exceeds_nodes: bool
    order_capped: bool
    is_cayley: bool
    acting_group: Group | None


def is_cayley(
    graph: ColoredDigraph,
    full_order: bool = False,
    order_cap: int = FULL_ORDER_CAP,
    allow_fixed_points: bool = False,
) -> GraphVerdict:
    """Regular-action test: connected and closure order equals node count."""
    perms = color_permutations(graph, allow_fixed_points)
    n = graph.node_count
    connected = len(_orbit_of_zero(perms)) == n
    limit = order_cap if full_order else n
    elements, exceeded = _closure(perms, limit)
    order = None if exceeded else len(elements)
    regular = connected and order == n
    acting = _group_from_regular_action(graph, elements, perms) if regular else None
    return GraphVerdict(
        connected=connected,
        transitive=connected,
        color_perms=tuple(perms),
        perm_group_order=order,
        order_exceeds_nodes=exceeded or (order is not None and order > n),
        order_capped=full_order and exceeded,
        is_cayley=regular,
        acting_group=acting,
    )


def _group_from_regular_action(graph: ColoredDigraph, elements, perms) -> Group:
    # regular: node j corresponds to the unique element sending node 0 to j,
    # and the color permutation for s is that element, so s sits at node 0.s
    n = graph.node_count
    by_image = {}
    for p in elements:
        by_image[p[0]] = p
    h = [by_image[j] for j in range(n)]
    table = tuple(tuple(h[j][i] for j in range(n)) for i in range(n))
    names = tuple(graph.label_of(i) for i in range(n))
    gens = []
    seen = set()
    for color, perm in zip(graph.colors, perms):
        el = perm[0]
        if el != 0 and el not in seen:
            gens.append((color.name, el))
            seen.add(el)
    return Group(table, element_names=names, generators=tuple(gens), trusted=True)


def build_cayley_graph(G: Group, gens=None) -> ColoredDigraph:
    """Edge g -> g*s per generator s; order-2 generators become matchings."""
    if gens is None:
        gens = G.generators
    gens = tuple((str(name), int(el)) for name, el in gens)
    if not gens:
        raise GraphError("no generators supplied or recorded on the group")
    for name, el in gens:
        if el == 0:
            raise GraphError(f"generator {name!r} is the identity")
    if len(subgroup_closure(G, [el for _, el in gens]).members) != G.order:
        raise GraphError("the given elements do not generate the group")
    colors = []
    for name, el in gens:
        if G.order_of(el) == 2:
            edges = tuple(
                (g, G.table[g][el]) for g in range(G.order) if g < G.table[g][el]
            )
            colors.append(EdgeColor(name, False, edges))
        else:
            colors.append(
                EdgeColor(name, True, tuple((g, G.table[g][el]) for g in range(G.order)))
            )
    labels = (
        G.element_names
        if G.element_names is not None
        else tuple(str(i) for i in range(G.order))
    )
    return ColoredDigraph(G.order, tuple(colors), labels)


def extract_presentation(graph: ColoredDigraph, base: int = 0) -> Presentation:
    """Generators are the colors; loops through a BFS spanning tree give
    the relators (one per non-tree edge, plus c^2 per undirected color)."""
    perms = color_permutations(graph)
    n = graph.node_count
    if len(_orbit_of_zero(perms)) != n:
        raise GraphError("graph is not connected")
    inv_perms = []
    for p in perms:
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        inv_perms.append(tuple(inv))

    words: list[Word | None] = [None] * n
    words[base] = ()
    tree_edges: set[tuple[int, int, int]] = set()  # (color, from, to) directed sense
    queue = [base]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for ci, color in enumerate(graph.colors):
            steps = [(perms[ci][u], 1)]
            if color.directed:
                steps.append((inv_perms[ci][u], -1))
            for v, sign in steps:
                if words[v] is None:
                    words[v] = words[u] + ((ci, sign),)
                    if color.directed:
                        tree_edges.add((ci, u, v) if sign > 0 else (ci, v, u))
                    else:
                        tree_edges.add((ci, min(u, v), max(u, v)))
                    queue.append(v)

    relators: list[Word] = []
    seen_relators: set[Word] = set()

    def add(rel: Word):
        rel = free_reduce(rel)
        if rel and rel not in seen_relators:
            seen_relators.add(rel)
            relators.append(rel)

    for ci, color in enumerate(graph.colors):
        if not color.directed:
            add(((ci, 1), (ci, 1)))
        for u in range(n):
            v = perms[ci][u]
            if color.directed:
                if (ci, u, v) in tree_edges:
                    continue
            else:
                if v < u or (ci, u, v) in tree_edges:
                    continue
            add(words[u] + ((ci, 1),) + inverse_word(words[v]))  # type: ignore[operator]

    names = tuple(color.name for color in graph.colors)
    involutions = frozenset(
        ci for ci, color in enumerate(graph.colors) if not color.directed
    )
    return Presentation(names, tuple(relators), involutions)


@dataclass(frozen=True)
class GraphReport:
    verdict: GraphVerdict
    presentation: Presentation
    presented_group: Group
    presented_identification: Identification
    acting_identification: Identification | None

    @property
    def is_cayley(self) -> bool:
        return self.verdict.is_cayley

    @property
    def presented_order(self) -> int:
        return self.presented_group.order

    @property
    def presented_name(self) -> str:
        return self.presented_identification.describe()


def analyze(
    graph: ColoredDigraph,
    base: int = 0,
    full_order: bool = False,
    max_cosets: int = cosets.DEFAULT_MAX_COSETS,
) -> GraphReport:
    """Invariants -> regularity verdict -> presentation -> enumeration -> names."""
    verdict = is_cayley(graph, full_order=full_order)
    presentation = extract_presentation(graph, base)
    presented = cosets.group_from_presentation(presentation, max_cosets)
    acting_id = identify(verdict.acting_group) if verdict.acting_group else None
    return GraphReport(
        verdict=verdict,
        presentation=presentation,
        presented_group=presented,
        presented_identification=identify(presented),
        acting_identification=acting_id,
    )


def fixture_names() -> list[str]:
    root = resources.files("cayleykit").joinpath("fixtures")
    return sorted(p.name[: -len(".json")] for p in root.iterdir() if p.name.endswith(".json"))


def fixture(name: str) -> ColoredDigraph:
    """One of the bundled puzzle graphs."""
    path = resources.files("cayleykit").joinpath("fixtures", f"{name}.json")
    try:
        text = path.read_text()
    except FileNotFoundError:
        known = ", ".join(fixture_names())
        raise GraphError(f"unknown fixture {name!r} (known: {known})") from None
    return load_graph_json(text)


def load_graph_json(text: str) -> ColoredDigraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid graph JSON: {exc}") from None
    if not isinstance(data, dict) or "nodes" not in data or "colors" not in data:
        raise GraphError('graph JSON needs "nodes" and "colors"')
    labels = data.get("labels")
    colors = []
    for entry in data["colors"]:
        try:
            colors.append(
                EdgeColor(
                    str(entry["name"]),
                    bool(entry["directed"]),
                    tuple((int(u), int(v)) for u, v in entry["edges"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed color entry: {exc}") from None
    return ColoredDigraph(
        int(data["nodes"]),
        tuple(colors),
        tuple(str(x) for x in labels) if labels is not None else None,
    )


def dump_graph_json(graph: ColoredDigraph, description: str | None = None) -> str:
    obj: dict = {"nodes": graph.node_count}
    if description is not None:
        obj["description"] = description
    if graph.labels is not None:
        obj["labels"] = list(graph.labels)
    obj["colors"] = [
        {"name": c.name, "directed": c.directed, "edges": [list(e) for e in c.edges]}
        for c in graph.colors
    ]
    return json.dumps(obj, indent=2) + "\n"


def export_dot(graph: ColoredDigraph) -> str:
    """DOT digraph with one statement per node and per edge, stable order."""
    lines = ["digraph G {"]
    for i in range(graph.node_count):
        label = graph.label_of(i).replace('"', '\\"')
        lines.append(f'  {i} [label="{label}"];')
    for ci, color in enumerate(graph.colors):
        dot_color = color.name if color.name in DOT_COLORS else DOT_PALETTE[ci % len(DOT_PALETTE)]
        for u, v in color.edges:
            if color.directed:
                lines.append(f"  {u} -> {v} [color={dot_color}];")
            else:
                lines.append(f"  {u} -> {v} [color={dot_color}, dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
