"""The three constructions of group-invariant Butson Hadamard matrices.

1. Gauss-sum building blocks over a cyclic group, assembled along coset
   representatives of a normal cyclic subgroup (works for non-abelian G).
2. A partition of R x R induced by the map x = pi^k u -> pi^k u^{-1} over a
   finite local chain ring R, weighted by a vanishing sum of roots of unity.
3. A cover of R x R by the line subgroups {(x, xr)} and {(xs, x)}, weighted
   by a coefficient scheme solved over the coset chain of R.

Every constructor verifies its own output exactly before returning it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .cyclotomic import CycInt, is_zero
from .errors import (
    BadEtaSum,
    BadH,
    BadT,
    InvalidParams,
    NoDecomposition,
    NoScheme,
    NoSolution,
    NotNormal,
    SchemeViolation,
    UnsupportedRing,
    WrongSubgroupOrder,
)
from .groups import (
    FiniteGroup,
    GroupRingElt,
    cyclic_subgroup,
    coset_reps,
    element_order,
    gr_conj_inv,
    gr_mul,
    make_abelian,
    make_cyclic,
)
from .rings import ChainRing
from .sums import unit_sum, zero_sum
from .verify import verify_group_ring


def _nu2(x: int) -> int:
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


def min_h(n: int) -> int:
    """Smallest h with h^2 = 0 mod n, excluding the 2-adic pair (1,1)."""
    h = 1
    while True:
        if (h * h) % n == 0 and not (_nu2(n) == 1 and _nu2(h) == 1):
            return h
        h += 1


def block_count(n: int, h: int) -> int:
    return n // h if _nu2(n) != 1 else 2 * n // h


@dataclass(frozen=True)
class BlockParams:
    n: int
    h: int
    k: int
    case: str  # EvenVal | OddValGe3 | Val1
    l: int
    m: int

    @classmethod
    def plan(cls, n: int, m: int = 1) -> "BlockParams":
        if n < 1:
            raise InvalidParams("n must be positive")
        if math.gcd(m, n) != 1:
            raise InvalidParams(f"multiplier m={m} not coprime to n={n}")
        h = min_h(n)
        v = _nu2(n)
        k = block_count(n, h)
        if v == 1:
            case, l = "Val1", h // (4 * k)
        elif v % 2 == 0:
            case, l = "EvenVal", h // k
        else:
            case, l = "OddValGe3", h // (2 * k)
        assert l % 2 == 1
        return cls(n, h, k, case, l, m)


def build_blocks(params: BlockParams) -> list[GroupRingElt]:
    """k blocks over Z_{n/k} with pairwise-vanishing cross products."""
    n, h, k, m = params.n, params.h, params.k, params.m
    group = make_cyclic(n // k)
    blocks = []
    for i in range(k):
        if params.case == "EvenVal":
            exps = [(j * j * k + m * i * j) % h for j in range(h)]
        elif params.case == "OddValGe3":
            exps = [(j * j * k // 2 + m * i * j) % h for j in range(h)]
        else:  # Val1: group order h/2, doubled off-diagonal term
            exps = [(j * j * k + 2 * m * i * j) % h for j in range(h // 2)]
        blocks.append(GroupRingElt.from_exponents(group, h, exps))
    _check_blocks(blocks, n)
    return blocks


def _check_blocks(blocks: list[GroupRingElt], n: int) -> None:
    h = blocks[0].h
    group = blocks[0].group
    diag = GroupRingElt.zero(group, h)
    for i, di in enumerate(blocks):
        for j, dj in enumerate(blocks):
            prod = gr_mul(di, gr_conj_inv(dj))
            if i == j:
                diag = GroupRingElt(
                    group, h, tuple(a + b for a, b in zip(diag.coeffs, prod.coeffs))
                )
            elif any(not is_zero(c) for c in prod.coeffs):
                raise InvalidParams(f"cross product D_{i} D_{j}^(-1) is nonzero")
    want = [CycInt.integer(h, n)] + [CycInt.zero(h)] * (group.order - 1)
    if any(not is_zero(a - b) for a, b in zip(diag.coeffs, want)):
        raise InvalidParams("diagonal block sum does not equal n")


def construct_group_bh(
    G: FiniteGroup, subgroup_generator: int, h: int, m: int = 1
) -> GroupRingElt:
    """BH element over G from blocks along a normal cyclic subgroup."""
    n = G.order
    h0 = min_h(n)
    if h % h0 != 0:
        raise BadH(f"h={h} is not a multiple of the minimal order {h0} for n={n}")
    k = block_count(n, h0)
    sub = cyclic_subgroup(G, subgroup_generator)
    if len(sub) != n // k:
        raise WrongSubgroupOrder(
            f"need a cyclic subgroup of order {n // k}, got order {len(sub)}"
        )
    subset = set(sub)
    if any(
        G.mul(G.mul(x, s), G.inv(x)) not in subset for x in G.elements() for s in sub
    ):
        raise NotNormal("the chosen cyclic subgroup is not normal")

    params = BlockParams.plan(n, m)
    blocks = build_blocks(params)
    scale = h // h0
    reps = coset_reps(G, sub)
    assert len(reps) == k
    exps = [None] * n
    power = 0  # generator^j walked incrementally
    powers = []
    for _ in range(n // k):
        powers.append(power)
        power = G.mul(power, subgroup_generator)
    for i, rep in enumerate(reps):
        bexps = blocks[i].monomial_exponents()
        for j, x in enumerate(powers):
            g = G.mul(x, rep)
            assert exps[g] is None
            exps[g] = (bexps[j] * scale) % h
    D = GroupRingElt.from_exponents(G, h, exps)
    assert verify_group_ring(D)
    return D


def find_normal_cyclic_generator(G: FiniteGroup, order: int) -> int:
    """Generator of a normal cyclic subgroup of the given order, or raise."""
    for g in G.elements():
        if element_order(G, g) != order:
            continue
        sub = cyclic_subgroup(G, g)
        subset = set(sub)
        if all(
            G.mul(G.mul(x, s), G.inv(x)) in subset for x in G.elements() for s in sub
        ):
            return g
    raise WrongSubgroupOrder(f"no normal cyclic subgroup of order {order} in G")


# -- construction 2: partition of R x R --------------------------------------


def partition_R(R: ChainRing, t: int, seed: int | None = None) -> list[list]:
    """Partition R into p^t parts meeting every coset of I^(n-1) equally.

    Cosets are enumerated canonically and their elements dealt round-robin;
    a seed shuffles the within-coset order to explore alternative partitions.
    """
    if not 1 <= t <= R.d:
        raise BadT(f"t must be in 1..{R.d}, got {t}")
    parts: list[list] = [[] for _ in range(R.p**t)]
    ideal = R.ideal_elements(R.n - 1)
    rng = random.Random(seed) if seed is not None else None
    assigned = set()
    slot = 0
    for x in R.elements:
        if x in assigned:
            continue
        coset = sorted((R.add(x, j) for j in ideal), key=R.index.get)
        if rng is not None:
            rng.shuffle(coset)
        for y in coset:
            parts[slot % len(parts)].append(y)
            assigned.add(y)
            slot += 1
    _check_partition(R, parts, R.p ** (R.d - t))
    return parts


def _check_partition(R: ChainRing, parts, expected: int) -> None:
    ideal = set(R.ideal_elements(R.n - 1))
    reps = []
    seen = set()
    for x in R.elements:
        if x in seen:
            continue
        reps.append(x)
        seen.update(R.add(x, j) for j in ideal)
    for part in parts:
        pset = set(part)
        for a in reps:
            hit = sum(1 for j in ideal if R.add(a, j) in pset)
            if hit != expected:
                raise BadT("partition does not meet a coset of I^(n-1) evenly")


def ring_square_group(R: ChainRing):
    """Additive group of R x R with element index (x, y) -> idx(x)*|R|+idx(y)."""
    G_single, to_index, _ = R.additive_group()
    factors = G_single.abelian_factors * 2
    G = make_abelian(factors)

    def pair_index(x, y) -> int:
        return to_index[x] * R.size + to_index[y]

    return G, pair_index


def construct_partition_bh(
    R: ChainRing, t: int, etas: list[int], h: int, seed: int | None = None
) -> GroupRingElt:
    """BH element over (R x R, +) from a vanishing sum of p^t roots."""
    if len(etas) != R.p**t:
        raise BadEtaSum(f"need {R.p ** t} roots, got {len(etas)}")
    total = CycInt.zero(h)
    for e in etas:
        total = total + CycInt.root(h, e)
    if not is_zero(total):
        raise BadEtaSum("the supplied roots do not sum to zero")
    parts = partition_R(R, t, seed=seed)
    part_of = {x: i for i, part in enumerate(parts) for x in part}
    G, pair_index = ring_square_group(R)
    exps = [0] * G.order
    for x in R.elements:
        fx = R.phi(x)
        for y in R.elements:
            exps[pair_index(x, y)] = etas[part_of[R.mul(fx, y)]]
    D = GroupRingElt.from_exponents(G, h, exps)
    assert verify_group_ring(D)
    return D


# -- construction 3: line family over R x R ----------------------------------


def line_family(R: ChainRing):
    """The subgroups I_r = {(x, xr)} for r in R and J_s = {(xs, x)} for s in I."""
    lines_I = {r: frozenset((x, R.mul(x, r)) for x in R.elements) for r in R.elements}
    lines_J = {
        s: frozenset((R.mul(x, s), x) for x in R.elements)
        for s in R.ideal_elements(1)
    }
    return lines_I, lines_J


@dataclass(frozen=True)
class CoefficientScheme:
    """Root-of-unity families tied together over the coset chain of R.

    eta_r covers R, mu_s covers I, delta_u covers the transversals R_1..R_(n-1),
    and gamma_v covers pi R_0..pi R_(n-2) plus the extension gamma_v = mu_v on
    pi R_(n-1), which makes the top-level equation well defined when n = 2.
    """

    h: int
    eta: int
    eta_r: dict
    delta_u: dict
    mu_s: dict
    gamma_v: dict

    def gamma_extended(self, v) -> int:
        if v in self.gamma_v:
            return self.gamma_v[v]
        return self.mu_s[v]


def solve_coefficient_scheme(R: ChainRing, h: int) -> CoefficientScheme:
    """Top-down tree refinement of the scheme equations, verified exactly.

    The root values eta, delta_u (u in R_1) and gamma_0 come from one unit sum
    of length p^d + 1 (gamma_0 = sum of all mu_s must itself be a root of
    unity).  Refining a transversal node into the next level keeps the node's
    own value and gives its siblings a vanishing sum; the leaf levels eta_r
    and mu_s are free unit sums splitting their parent's value.
    """
    if R.n < 2:
        raise UnsupportedRing("the line-family construction needs chain length >= 2")
    n, q = R.n, R.p**R.d
    chain = R.coset_chain()
    r1 = chain[1]
    pi_chain = [
        sorted({R.mul(R.pi, x) for x in level}, key=R.index.get) for level in chain
    ]

    try:
        top = unit_sum(q + 1, h, 0)
    except NoSolution as exc:
        raise NoScheme(f"no top-level split for h={h}: {exc}") from exc
    eta = 0
    delta = {u: top.exps[i] for i, u in enumerate(r1)}
    gamma = {R.zero: top.exps[q]}

    def children(node, level):
        return [R.add(node, R.mul(R.pow_pi(level), s)) for s in r1]

    def refine_internal(values: dict, nodes, level: int, step: int) -> None:
        # siblings of the node itself must carry a vanishing sum
        try:
            sibs = zero_sum(q - 1, h) if q > 1 else None
        except NoDecomposition as exc:
            raise NoScheme(
                f"no vanishing sum of length {q - 1} for h={h}: {exc}"
            ) from exc
        for node in list(nodes):
            kids = children(node, level + step)
            assert kids[0] == node
            for idx, kid in enumerate(kids[1:]):
                values[kid] = sibs.exps[idx]

    # delta tree: levels 1..n-1 over the transversal chain
    for i in range(1, n - 1):
        refine_internal(delta, chain[i], i, 0)
    # gamma tree: levels 0..n-2 over the pi-shifted chain
    for j in range(0, n - 2):
        refine_internal(gamma, pi_chain[j], j, 1)

    # leaves: eta_r on cosets u + I^(n-1), mu_s on cosets v + I^(n-1)
    ideal_min = sorted(R.ideal_elements(n - 1), key=R.index.get)
    eta_r: dict = {}
    for u in chain[n - 1]:
        try:
            w = unit_sum(q, h, delta[u])
        except NoSolution as exc:
            raise NoScheme(f"no unit sum of length {q} for h={h}: {exc}") from exc
        for idx, j in enumerate(ideal_min):
            eta_r[R.add(u, j)] = w.exps[idx]
    mu_s: dict = {}
    for v in pi_chain[n - 2]:
        try:
            w = unit_sum(q, h, gamma[v])
        except NoSolution as exc:
            raise NoScheme(f"no unit sum of length {q} for h={h}: {exc}") from exc
        for idx, j in enumerate(ideal_min):
            mu_s[R.add(v, j)] = w.exps[idx]

    scheme = CoefficientScheme(h, eta, eta_r, delta, mu_s, gamma)
    _check_scheme(R, scheme, chain, pi_chain)
    return scheme


def _check_scheme(R: ChainRing, s: CoefficientScheme, chain, pi_chain) -> None:
    """Re-verify every instance of the three equation families by is_zero."""
    h, n = s.h, R.n

    def root(e):
        return CycInt.root(h, e)

    for i in range(1, n):
        ideal = R.ideal_elements(i)
        for u in chain[i]:
            acc = CycInt.zero(h)
            for j in ideal:
                acc = acc + root(s.eta_r[R.add(u, j)])
            if not is_zero(acc - root(s.delta_u[u])):
                raise NoScheme(f"first-family equation fails at level {i}")
    for j in range(0, n - 1):
        ideal = R.ideal_elements(j + 1)
        for v in pi_chain[j]:
            acc = CycInt.zero(h)
            for w in ideal:
                acc = acc + root(s.mu_s[R.add(v, w)])
            if not is_zero(acc - root(s.gamma_extended(v))):
                raise NoScheme(f"second-family equation fails at level {j}")
    acc = CycInt.zero(h)
    for u in chain[1]:
        acc = acc + root(s.delta_u[u])
    # for n = 2 the sum over pi R_1 reads through the extension gamma_v = mu_v
    for v in pi_chain[1]:
        acc = acc + root(s.gamma_v[v] if n > 2 else s.mu_s[v])
    if not is_zero(acc - root(s.eta)):
        raise NoScheme("top-level equation fails")


def construct_line_bh(R: ChainRing, scheme: CoefficientScheme) -> GroupRingElt:
    """BH element over (R x R, +) from the weighted line family."""
    h = scheme.h
    G, pair_index = ring_square_group(R)
    acc = [CycInt.zero(h) for _ in range(G.order)]
    for r, e in scheme.eta_r.items():
        z = CycInt.root(h, e)
        for x in R.elements:
            i = pair_index(x, R.mul(x, r))
            acc[i] = acc[i] + z
    for s, e in scheme.mu_s.items():
        z = CycInt.root(h, e)
        for x in R.elements:
            i = pair_index(R.mul(x, s), x)
            acc[i] = acc[i] + z
    exps = []
    for i, c in enumerate(acc):
        e = _collapse_to_root(c)
        if e is None:
            raise SchemeViolation(f"coefficient {i} did not collapse to a root")
        exps.append(e)
    if exps[pair_index(R.zero, R.zero)] != scheme.eta:
        raise SchemeViolation("coefficient of (0,0) does not equal eta")
    D = GroupRingElt.from_exponents(G, h, exps)
    assert verify_group_ring(D)
    return D


def _collapse_to_root(c: CycInt) -> int | None:
    for e in range(c.h):
        if is_zero(c - CycInt.root(c.h, e)):
            return e
    return None
