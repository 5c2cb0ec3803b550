"""Shared builders: the standard example quivers and seeded random data."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from dgquiver import Arrow, GradedQuiver, PathElement, Relation


def element(q, *weighted_paths):
    """Sum of (coeff, arrow-name-tuple) pairs, as a PathElement."""
    acc = PathElement.zero(q)
    for coeff, names in weighted_paths:
        acc = acc + coeff * PathElement.from_path(q, names)
    return acc


@pytest.fixture
def square():
    """Two directed paths v1 -> v4 identified by one relation."""
    q = GradedQuiver(
        ["v1", "v2", "v3", "v4"],
        [
            Arrow("alpha", "v1", "v2", 0),
            Arrow("beta", "v2", "v4", 0),
            Arrow("gamma", "v1", "v3", 0),
            Arrow("delta", "v3", "v4", 0),
        ],
    )
    rho = element(q, (1, ("alpha", "beta")), (-1, ("gamma", "delta")))
    return q, [Relation("r", "v1", "v4", rho)]


@pytest.fixture
def quaternion():
    """One vertex, two loops, the three relations of the 8-dimensional
    quaternion-type algebra."""
    q = GradedQuiver(["v"], [Arrow("a", "v", "v", 0), Arrow("b", "v", "v", 0)])
    r1 = element(q, (1, ("a", "a")), (-1, ("b", "a", "b")))
    r2 = element(q, (1, ("b", "b")), (-1, ("a", "b", "a")))
    r3 = element(q, (1, ("a", "a", "b")))
    return q, [
        Relation("r1", "v", "v", r1),
        Relation("r2", "v", "v", r2),
        Relation("r3", "v", "v", r3),
    ]


@pytest.fixture
def one_vertex():
    return GradedQuiver(["v"])


def zero_relation(q, label, source=None, target=None):
    v = source or q.vertices[0]
    w = target or v
    return Relation(label, v, w, PathElement.zero(q))


def random_acyclic_quiver(rng: random.Random, max_extra: int = 3) -> GradedQuiver:
    nv = rng.randint(2, 4)
    vertices = [f"v{i}" for i in range(1, nv + 1)]
    arrows = [Arrow(f"a{i}", vertices[i], vertices[i + 1], 0) for i in range(nv - 1)]
    for k in range(rng.randint(0, max_extra)):
        i = rng.randrange(0, nv - 1)
        j = rng.randrange(i + 1, nv)
        arrows.append(Arrow(f"b{k}", vertices[i], vertices[j], 0))
    return GradedQuiver(vertices, arrows)


def random_quiver(rng: random.Random) -> GradedQuiver:
    """Small quiver, cycles and loops allowed."""
    nv = rng.randint(1, 3)
    vertices = [f"v{i}" for i in range(1, nv + 1)]
    arrows = []
    for k in range(rng.randint(1, 4)):
        arrows.append(
            Arrow(f"a{k}", rng.choice(vertices), rng.choice(vertices), 0)
        )
    return GradedQuiver(vertices, arrows)


def random_relations(
    rng: random.Random,
    q: GradedQuiver,
    max_count: int = 4,
    min_count: int = 1,
    allow_zero: bool = True,
    max_path_len: int = 3,
):
    """Relations with bodies inside r^2 (or zero bodies), valid over q."""
    pool: dict[tuple[str, str], list] = {}
    for p in q.enumerate_paths(max_path_len):
        if len(p) >= 2:
            pool.setdefault((q.source_of(p), q.target_of(p)), []).append(p)
    rels = []
    count = rng.randint(min_count, max_count)
    for k in range(count):
        if allow_zero and rng.random() < 0.2 or not pool:
            rels.append(zero_relation(q, f"r{k}", rng.choice(q.vertices)))
            continue
        src, tgt = rng.choice(sorted(pool))
        paths = pool[(src, tgt)]
        chosen = rng.sample(paths, min(len(paths), rng.randint(1, 2)))
        body = PathElement.zero(q)
        for p in chosen:
            body = body + PathElement(q, {p: Fraction(rng.choice([1, 1, 2, -1]))})
        if body.is_zero():
            rels.append(zero_relation(q, f"r{k}", src, tgt))
        else:
            rels.append(Relation(f"r{k}", src, tgt, body))
    return rels
