"""Shared fixtures: classical algebras and a deterministic corpus.

The corpus mixes the named single-vertex algebras with seeded random
quiver algebras (at most 2 vertices, component dimensions at most 3,
generator degrees at most 3, over F_2 / F_3) and is capped so that the
exhaustive degree <= 4 sweeps stay fast.
"""

from __future__ import annotations

import itertools
import random

import pytest

from pointschemes import AlgebraSpec, parse_algebra
from pointschemes.bimodule import tensor_component_basis
from pointschemes.points import _projective_count


def make_algebra(text: str, name: str = "algebra") -> AlgebraSpec:
    return parse_algebra(text, name=name)


FREE_F2 = """
field 2
vertices v
arrow x: v -> v
arrow y: v -> v
"""

COMM_TEMPLATE = """
field {p}
vertices v
arrow x: v -> v
arrow y: v -> v
rel r: x.y - y.x
"""

QUANTUM_F5 = """
field 5
vertices v
arrow x: v -> v
arrow y: v -> v
rel r: x.y - 2*y.x
"""

JORDAN_F5 = """
field 5
vertices v
arrow x: v -> v
arrow y: v -> v
rel r: x.y - y.x - y.y
"""

CUBIC_F2 = """
field 2
vertices v
arrow x: v -> v
arrow y: v -> v
rel c: x.x.x
"""

TWO_CYCLE_F2 = """
field 2
vertices u w
arrow a: u -> w
arrow b: w -> u
"""


@pytest.fixture(scope="session")
def free_f2():
    return make_algebra(FREE_F2, "free-f2")


@pytest.fixture(scope="session")
def comm_f3():
    return make_algebra(COMM_TEMPLATE.format(p=3), "comm-f3")


@pytest.fixture(scope="session")
def quantum_f5():
    return make_algebra(QUANTUM_F5, "quantum-f5")


@pytest.fixture(scope="session")
def jordan_f5():
    return make_algebra(JORDAN_F5, "jordan-f5")


def _tuple_budget(A: AlgebraSpec, n_max: int) -> int:
    """Total candidate tuples for degrees 0..n_max."""
    p = A.field.p
    total = len(A.bimodule.base)
    for n in range(1, n_max + 1):
        for path in itertools.product(A.bimodule.base.vertices, repeat=n + 1):
            count = 1
            for i in range(n):
                d = A.bimodule.dim(path[i], path[i + 1])
                if d == 0:
                    count = 0
                    break
                count *= _projective_count(p, d)
            total += count
    return total


def _random_algebra(rng: random.Random, index: int) -> AlgebraSpec | None:
    p = rng.choice([2, 3])
    nverts = rng.choice([1, 1, 2])
    vertices = ["u", "w"][:nverts]
    max_dim = 3 if p == 2 else 2
    lines = [f"field {p}", "vertices " + " ".join(vertices)]
    label = (f"e{i}" for i in itertools.count())
    edges = {}
    for x in vertices:
        for y in vertices:
            d = rng.randint(0, max_dim) if nverts > 1 else rng.randint(1, max_dim)
            arrows = [next(label) for _ in range(d)]
            edges[(x, y)] = arrows
            for a in arrows:
                lines.append(f"arrow {a}: {x} -> {y}")
    if all(not v for v in edges.values()):
        return None
    A0 = parse_algebra("\n".join(lines) + "\n", name=f"rand-{index}")

    n_rels = rng.randint(0, 2)
    rel_lines = []
    for k in range(n_rels):
        degree = rng.randint(1, 3)
        paths = [
            path
            for path in itertools.product(vertices, repeat=degree + 1)
            if tensor_component_basis(A0.bimodule, path)
        ]
        if not paths:
            continue
        path = rng.choice(paths)
        words = tensor_component_basis(A0.bimodule, path)
        terms = []
        for word in words:
            c = rng.randrange(p)
            if c:
                terms.append(f"{c}*{'.'.join(word)}" if c != 1 else ".".join(word))
        if not terms:
            continue
        rel_lines.append(f"rel r{k}: " + " + ".join(terms))
    text = "\n".join(lines + rel_lines) + "\n"
    return parse_algebra(text, name=f"rand-{index}")


def build_corpus(minimum: int = 60) -> list[AlgebraSpec]:
    algebras = [
        make_algebra(FREE_F2, "free-f2"),
        make_algebra(COMM_TEMPLATE.format(p=2), "comm-f2"),
        make_algebra(COMM_TEMPLATE.format(p=3), "comm-f3"),
        make_algebra(CUBIC_F2, "cubic-f2"),
        make_algebra(TWO_CYCLE_F2, "two-cycle-f2"),
        make_algebra(
            "field 3\nvertices v\narrow x: v -> v\narrow y: v -> v\nrel r: x.y - 2*y.x\n",
            "quantum-f3",
        ),
        make_algebra(
            "field 3\nvertices v\narrow x: v -> v\narrow y: v -> v\nrel r: x.y - y.x - y.y\n",
            "jordan-f3",
        ),
        make_algebra(
            "field 2\nvertices v\narrow x: v -> v\narrow y: v -> v\n"
            "rel r1: x.x\nrel r2: x.y + y.x\n",
            "double-rel-f2",
        ),
        make_algebra(
            "field 2\nvertices u w\narrow a: u -> w\narrow b: w -> u\narrow c: u -> u\n"
            "rel r: c.a\n",
            "quiver-rel-f2",
        ),
        make_algebra(
            "field 2\nvertices v\narrow x: v -> v\narrow y: v -> v\nrel l: x - y\n",
            "degree-one-f2",
        ),
    ]
    rng = random.Random(0x5EED)
    index = 0
    while len(algebras) < minimum:
        index += 1
        A = _random_algebra(rng, index)
        if A is None:
            continue
        if _tuple_budget(A, 4) > 1500:
            continue
        algebras.append(A)
    return algebras


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
