#!/usr/bin/env python3
"""Regenerate the bundled puzzle graphs in src/cayleykit/fixtures/.

Each file is an explicit edge list in the package's graph JSON format, with a
description field recording the construction.  tests/test_fixture_files.py
cross-checks the stored lists against these formulas.
"""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "cayleykit" / "fixtures"


def double_ring(m, t, desc):
    red = [[k, (k + 1) % m] for k in range(m)]
    red += [[m + k, m + (k + t) % m] for k in range(m)]
    blue = [[k, m + k] for k in range(m)]
    labels = [f"o{k}" for k in range(m)] + [f"i{k}" for k in range(m)]
    return {
        "nodes": 2 * m,
        "description": desc,
        "labels": labels,
        "colors": [
            {"name": "red", "directed": True, "edges": red},
            {"name": "blue", "directed": False, "edges": blue},
        ],
    }


def flower(m, reverse_inner, desc):
    red = [[k, (k + 1) % m] for k in range(m)]
    step = -1 if reverse_inner else 1
    red += [[m + k, m + (k + step) % m] for k in range(m)]
    blue = [[k, m + (k + 1) % m] for k in range(m)]
    blue += [[m + k, (k + 1) % m] for k in range(m)]
    labels = [f"o{k}" for k in range(m)] + [f"i{k}" for k in range(m)]
    return {
        "nodes": 2 * m,
        "description": desc,
        "labels": labels,
        "colors": [
            {"name": "red", "directed": True, "edges": red},
            {"name": "blue", "directed": True, "edges": blue},
        ],
    }


def mirror(m, inner_step, outer_starts_blue, inner_starts_blue, desc):
    outer_a = [[2 * k, 2 * k + 1] for k in range(m // 2)]
    outer_b = [[2 * k + 1, (2 * k + 2) % m] for k in range(m // 2)]
    inner_a, inner_b = [], []
    for k in range(m):
        edge = [m + (inner_step * k) % m, m + (inner_step * (k + 1)) % m]
        (inner_a if k % 2 == 0 else inner_b).append(edge)
    blue = (outer_a if outer_starts_blue else outer_b) + (
        inner_a if inner_starts_blue else inner_b
    )
    red = (outer_b if outer_starts_blue else outer_a) + (
        inner_b if inner_starts_blue else inner_a
    )
    green = [[k, m + k] for k in range(m)]
    labels = [f"o{k}" for k in range(m)] + [f"i{k}" for k in range(m)]
    return {
        "nodes": 2 * m,
        "description": desc,
        "labels": labels,
        "colors": [
            {"name": "blue", "directed": False, "edges": blue},
            {"name": "red", "directed": False, "edges": red},
            {"name": "green", "directed": False, "edges": green},
        ],
    }


FIXTURES = {
    "petersen": double_ring(
        5, 2,
        "Double ring DR(5,2): directed outer 5-cycle, directed inner 5-cycle "
        "stepping by 2, undirected spokes; the skeleton is the Petersen graph.",
    ),
    "ring14": double_ring(
        7, 2,
        "Double ring DR(7,2): directed outer 7-cycle, directed inner 7-cycle "
        "stepping by 2, undirected spokes.",
    ),
    "ring18": double_ring(
        9, 4,
        "Double ring DR(9,4): directed outer 9-cycle, directed inner 9-cycle "
        "stepping by 4, undirected spokes.",
    ),
    "mirror16": mirror(
        8, 3, True, True,
        "Three undirected colors on 16 nodes: outer octagon alternating "
        "blue/red starting blue, inner chords stepping by 3 alternating "
        "blue/red starting blue, green spokes.",
    ),
    "mirror32": mirror(
        16, 9, False, True,
        "Three undirected colors on 32 nodes: outer 16-gon alternating "
        "red/blue starting red, inner chords stepping by 9 alternating "
        "blue/red starting blue, green spokes.",
    ),
    "flower16_fwd": flower(
        8, False,
        "Two directed colors on 16 nodes: red outer and inner 8-cycles with "
        "matching orientation; blue sends outer k to inner k+1 and inner k "
        "to outer k+1.",
    ),
    "flower16_rev": flower(
        8, True,
        "Two directed colors on 16 nodes: red outer and inner 8-cycles with "
        "opposite orientations; blue sends outer k to inner k+1 and inner k "
        "to outer k+1.",
    ),
    "twist32_k3": double_ring(
        16, 3,
        "Double ring DR(16,3): directed outer 16-cycle, directed inner "
        "16-cycle stepping by 3, undirected spokes.",
    ),
    "twist32_k5": double_ring(
        16, 5,
        "Double ring DR(16,5): directed outer 16-cycle, directed inner "
        "16-cycle stepping by 5, undirected spokes.",
    ),
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, obj in sorted(FIXTURES.items()):
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(obj, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
