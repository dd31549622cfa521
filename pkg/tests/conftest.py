"""Shared fixtures: the quaternion group table and small instance builders."""

from __future__ import annotations

import pytest

from butson.construct import (
    construct_group_bh,
    construct_line_bh,
    construct_partition_bh,
    find_normal_cyclic_generator,
    solve_coefficient_scheme,
)
from butson.groups import make_abelian, make_semidirect
from butson.rings import chain_ring
from butson.sums import zero_sum

# Basis units 0=1, 1=i, 2=j, 3=k; (a, b) -> (sign flip, basis) of the product.
_BASIS_MUL = {
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
    (2, 0): (0, 2), (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
    (3, 0): (0, 3), (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
}


def quaternion_table() -> list[list[int]]:
    """Cayley table of the quaternion group; element index = 4*sign + basis."""
    table = []
    for a in range(8):
        s1, b1 = divmod(a, 4)
        row = []
        for b in range(8):
            s2, b2 = divmod(b, 4)
            flip, basis = _BASIS_MUL[(b1, b2)]
            row.append(4 * ((s1 + s2 + flip) % 2) + basis)
        table.append(row)
    return table


@pytest.fixture(scope="session")
def q8_table():
    return quaternion_table()


def build_instance_gallery():
    """Valid (group, D) pairs covering all three constructions."""
    gallery = []

    z4 = make_abelian([4])
    gallery.append(("circulant-z4-h2",
                    construct_group_bh(z4, find_normal_cyclic_generator(z4, 2), 2)))

    d4 = make_semidirect(4, 2, 3)
    gallery.append(("dihedral8-h4",
                    construct_group_bh(d4, find_normal_cyclic_generator(d4, 4), 4)))

    for family, p, d, n, t, h in [("galois", 2, 1, 2, 1, 2),
                                  ("truncated", 2, 1, 2, 1, 2),
                                  ("galois", 3, 1, 2, 1, 3)]:
        ring = chain_ring(family, p, d, n)
        etas = list(zero_sum(p**t, h).exps)
        D = construct_partition_bh(ring, t, etas, h)
        gallery.append((f"partition-{family}-{p}-{d}-{n}-h{h}", D))

    for family, p, d, n, h in [("galois", 2, 1, 2, 6), ("galois", 3, 1, 2, 6)]:
        ring = chain_ring(family, p, d, n)
        D = construct_line_bh(ring, solve_coefficient_scheme(ring, h))
        gallery.append((f"lines-{family}-{p}-{d}-{n}-h{h}", D))

    return gallery


@pytest.fixture(scope="session")
def instance_gallery():
    return build_instance_gallery()
