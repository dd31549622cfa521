"""The three constructions: block identities, partitions, line schemes."""

from __future__ import annotations

import itertools
import math

import pytest

from butson.construct import (
    BlockParams,
    block_count,
    build_blocks,
    construct_group_bh,
    construct_line_bh,
    construct_partition_bh,
    find_normal_cyclic_generator,
    line_family,
    min_h,
    partition_R,
    ring_square_group,
    solve_coefficient_scheme,
)
from butson.cyclotomic import CycInt, equals_integer, is_zero, norm_sq
from butson.errors import (
    BadEtaSum,
    BadH,
    BadT,
    InvalidParams,
    NoScheme,
    NotNormal,
    UnsupportedRing,
    WrongSubgroupOrder,
)
from butson.groups import (
    apply_char,
    characters,
    make_abelian,
    make_from_table,
    make_semidirect,
)
from butson.rings import chain_ring
from butson.sums import zero_sum
from butson.verify import verify_group_ring

from conftest import quaternion_table


def test_min_h_frozen_values():
    assert [min_h(n) for n in (1, 2, 3, 4, 6, 8, 9, 12, 16, 18)] == \
        [1, 4, 3, 2, 12, 4, 3, 6, 4, 12]


def test_block_case_selection():
    assert BlockParams.plan(4).case == "EvenVal"
    assert BlockParams.plan(8).case == "OddValGe3"
    assert BlockParams.plan(2).case == "Val1"
    assert BlockParams.plan(18).case == "Val1"


def test_plan_rejects_bad_multiplier():
    with pytest.raises(InvalidParams):
        BlockParams.plan(4, m=2)


def test_blocks_z4_frozen():
    blocks = build_blocks(BlockParams.plan(4))
    assert [b.monomial_exponents() for b in blocks] == [[0, 0], [0, 1]]


def char_energy_oracle(blocks, n):
    """Independent restatement of the block identity through characters:
    the squared character moduli of the blocks sum to n, for every character
    of the underlying cyclic group."""
    T = characters(blocks[0].group)
    for t in range(blocks[0].group.order):
        acc = None
        for b in blocks:
            v = norm_sq(apply_char(T, t, b))
            acc = v if acc is None else acc + v
        assert equals_integer(acc, n)


@pytest.mark.parametrize("n", [2, 4, 8, 9, 12, 16, 18, 25])
def test_blocks_character_oracle(n):
    char_energy_oracle(build_blocks(BlockParams.plan(n)), n)


def test_group_bh_on_cyclic_four():
    G = make_abelian([4])
    D = construct_group_bh(G, find_normal_cyclic_generator(G, 2), 2)
    assert D.monomial_exponents() == [0, 0, 0, 1]
    assert verify_group_ring(D)


def test_group_bh_nonminimal_h_scales_exponents():
    G = make_abelian([4])
    D = construct_group_bh(G, find_normal_cyclic_generator(G, 2), 6)
    assert D.h == 6
    assert D.monomial_exponents() == [0, 0, 0, 3]
    assert verify_group_ring(D)


def test_group_bh_rejects_incompatible_h():
    G = make_abelian([4])
    with pytest.raises(BadH):
        construct_group_bh(G, find_normal_cyclic_generator(G, 2), 3)


def test_group_bh_rejects_wrong_subgroup_order():
    S3 = make_semidirect(3, 2, 2)
    with pytest.raises(WrongSubgroupOrder):
        find_normal_cyclic_generator(S3, 6)


def test_group_bh_rejects_non_normal_subgroup():
    G = make_semidirect(8, 2, 3)  # order 16, needs a cyclic subgroup of order 4
    g = 3  # the element (1, 1): order 4, generates a non-normal subgroup
    from butson.groups import element_order

    assert element_order(G, g) == 4
    with pytest.raises(NotNormal):
        construct_group_bh(G, g, 4)


def test_group_bh_alternative_multiplier():
    D4 = make_semidirect(4, 2, 3)
    gen = find_normal_cyclic_generator(D4, 4)
    for m in (1, 3):
        assert verify_group_ring(construct_group_bh(D4, gen, 4, m=m))


def test_group_bh_quaternion(q8_table):
    G = make_from_table(q8_table)
    D = construct_group_bh(G, find_normal_cyclic_generator(G, 4), 4)
    assert verify_group_ring(D)


# --- partitions -------------------------------------------------------------


def test_partition_shape():
    R = chain_ring("galois", 3, 1, 2)
    parts = partition_R(R, 1)
    assert len(parts) == 3
    ideal = set(R.ideal_elements(R.n - 1))
    for part in parts:
        assert len(part) == R.size // 3
        for x in R.elements:
            coset = {R.add(x, j) for j in ideal}
            assert len(coset & set(part)) == 3 ** (R.d - 1)


def test_partition_rejects_bad_t():
    R = chain_ring("galois", 2, 1, 2)
    with pytest.raises(BadT):
        partition_R(R, 0)
    with pytest.raises(BadT):
        partition_R(R, R.d + 1)


def test_partition_seed_is_reproducible():
    R = chain_ring("galois", 3, 1, 2)
    assert partition_R(R, 1, seed=5) == partition_R(R, 1, seed=5)


def test_partition_bh_instances():
    for family, p, h in [("galois", 2, 2), ("truncated", 2, 2), ("galois", 3, 3)]:
        R = chain_ring(family, p, 1, 2)
        D = construct_partition_bh(R, 1, list(zero_sum(p, h).exps), h)
        assert D.group.order == R.size**2
        assert verify_group_ring(D)


def test_partition_bh_with_seed():
    R = chain_ring("galois", 2, 1, 2)
    D = construct_partition_bh(R, 1, [0, 1], 2, seed=11)
    assert verify_group_ring(D)


def test_partition_bh_rejects_bad_etas():
    R = chain_ring("galois", 2, 1, 2)
    with pytest.raises(BadEtaSum):
        construct_partition_bh(R, 1, [0, 0], 2)  # 1 + 1 != 0
    with pytest.raises(BadEtaSum):
        construct_partition_bh(R, 1, [0, 1, 0], 2)  # wrong count


# --- lines ------------------------------------------------------------------


def test_line_family_z4_facts():
    R = chain_ring("galois", 2, 1, 2)
    lines_i, lines_j = line_family(R)
    assert set(lines_i) == set(R.elements)
    assert set(lines_j) == set(R.ideal_elements(1))
    two = R.pow_pi(1)
    hits = [r for r, line in lines_i.items() if (two, two) in line]
    assert sorted(hits, key=R.index.get) == sorted(
        (r for r in R.elements if R.is_unit(r)), key=R.index.get
    )
    assert all((two, two) not in line for line in lines_j.values())


def test_line_family_covers_unit_pairs_once():
    R = chain_ring("galois", 3, 1, 2)
    lines_i, lines_j = line_family(R)
    for x in R.elements:
        for y in R.elements:
            in_i = sum((x, y) in line for line in lines_i.values())
            in_j = sum((x, y) in line for line in lines_j.values())
            if R.is_unit(x):
                assert in_i == 1
            if R.is_unit(y) and not R.is_unit(x):
                assert in_i == 0 and in_j == 1


def scheme_feasible_brute_z4(h: int) -> bool:
    """Independent brute force over all coefficient assignments for R = Z4.

    Variables: eta; eta_r for r in {0,1,2,3}; delta_u for u in {0,1};
    mu_s for s in {0,2}.  Constraints (n = 2):
      eta_0 + eta_2 = delta_0,   eta_1 + eta_3 = delta_1,
      mu_0 + mu_2 must be a single root (the top gamma), and
      delta_0 + delta_1 + mu_0 + mu_2 = eta.
    """
    pair_is = {}
    for a in range(h):
        for b in range(h):
            v = CycInt.root(h, a) + CycInt.root(h, b)
            pair_is[(a, b)] = tuple(
                e for e in range(h) if is_zero(v - CycInt.root(h, e))
            )
    for e0, e1, e2, e3 in itertools.product(range(h), repeat=4):
        d0s = pair_is[(e0, e2)]
        d1s = pair_is[(e1, e3)]
        if not d0s or not d1s:
            continue
        for m0, m2 in itertools.product(range(h), repeat=2):
            g0s = pair_is[(m0, m2)]
            if not g0s:
                continue
            for d0, d1, g0 in itertools.product(d0s, d1s, g0s):
                total = CycInt.root(h, d0) + CycInt.root(h, d1) + \
                    CycInt.root(h, m0) + CycInt.root(h, m2)
                if any(is_zero(total - CycInt.root(h, e)) for e in range(h)):
                    return True
    return False


@pytest.mark.parametrize("h,feasible", [(2, False), (3, False), (4, False), (6, True)])
def test_scheme_solver_matches_brute_force_on_z4(h, feasible):
    R = chain_ring("galois", 2, 1, 2)
    assert scheme_feasible_brute_z4(h) == feasible
    if feasible:
        s = solve_coefficient_scheme(R, h)
        assert s.h == h
    else:
        with pytest.raises(NoScheme):
            solve_coefficient_scheme(R, h)


@pytest.mark.parametrize("family,p,d,n", [
    ("galois", 2, 1, 2),
    ("galois", 3, 1, 2),
    ("galois", 2, 2, 2),
    ("truncated", 3, 1, 2),
    ("galois", 3, 1, 3),
])
def test_scheme_exists_when_six_divides_h(family, p, d, n):
    R = chain_ring(family, p, d, n)
    for h in (6, 12):
        solve_coefficient_scheme(R, h)


def test_scheme_rejects_fields():
    with pytest.raises(UnsupportedRing):
        solve_coefficient_scheme(chain_ring("galois", 2, 2, 1), 6)


def test_scheme_infeasible_for_binary_long_chains():
    # sibling refinement would need a vanishing sum of length 1
    with pytest.raises(NoScheme):
        solve_coefficient_scheme(chain_ring("galois", 2, 1, 3), 6)


def test_line_bh_instances():
    for family, p in [("galois", 2), ("galois", 3), ("truncated", 3)]:
        R = chain_ring(family, p, 1, 2)
        D = construct_line_bh(R, solve_coefficient_scheme(R, 6))
        assert D.h == 6 and D.group.order == R.size**2
        assert verify_group_ring(D)


def test_ring_square_group_indexing():
    R = chain_ring("galois", 2, 1, 2)
    G, pair_index = ring_square_group(R)
    assert G.order == R.size**2
    seen = {pair_index(x, y) for x in R.elements for y in R.elements}
    assert seen == set(range(G.order))
