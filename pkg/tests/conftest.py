"""Shared fixtures: the group catalog and explicit Cayley tables."""

from __future__ import annotations

import pytest

from spg.groups import (
    CayleyGroup,
    CyclicGroup,
    DihedralGroup,
    DirectProductGroup,
    GroupSpec,
    load_cayley_table,
)

# quaternion units as (sign, axis) with axes 1, i, j, k; index layout
# [1, -1, i, -i, j, -j, k, -k] before relabelling
_AXIS_PRODUCTS = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion_table() -> list[list[int]]:
    """The order-8 quaternion group as a multiplication table."""
    elements = [(1, 0), (-1, 0), (1, 1), (-1, 1), (1, 2), (-1, 2), (1, 3), (-1, 3)]
    index = {e: i for i, e in enumerate(elements)}
    table = []
    for sa, xa in elements:
        row = []
        for sb, xb in elements:
            sign, axis = _AXIS_PRODUCTS[(xa, xb)]
            row.append(index[(sa * sb * sign, axis)])
        table.append(row)
    return table


def s3_table() -> list[list[int]]:
    return DihedralGroup(3).cayley_table()


@pytest.fixture(scope="session")
def q8() -> CayleyGroup:
    return load_cayley_table({"order": 8, "table": quaternion_table()})


@pytest.fixture(scope="session")
def s3() -> CayleyGroup:
    return load_cayley_table({"order": 6, "table": s3_table()})


@pytest.fixture(scope="session")
def catalog60(q8, s3) -> list[tuple[str, GroupSpec]]:
    """Every group the graph-equivalence and Lagrange sweeps run over:
    cyclic n <= 60, direct products up to order 36, dihedral m <= 12, Q8, S3."""
    groups: list[tuple[str, GroupSpec]] = []
    for n in range(1, 61):
        groups.append((f"cyclic:{n}", CyclicGroup(n)))
    for a in range(2, 19):
        for b in range(a, 37):
            if a * b <= 36:
                groups.append((f"product:{a},{b}", DirectProductGroup([a, b])))
    for m in range(1, 13):
        groups.append((f"dihedral:{m}", DihedralGroup(m)))
    groups.append(("cayley:Q8", q8))
    groups.append(("cayley:S3", s3))
    return groups
