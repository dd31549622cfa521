"""Finite groups, their characters, and group rings over Z[zeta_h].

Groups use a dense element encoding 0..order-1 with 0 the identity; the
multiplication and inverse tables are precomputed so verification loops are
table lookups.  Abelian groups built in invariant-factor form keep their
factor list, which is what the character machinery consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cyclotomic import CycInt, is_zero
from .errors import (
    GroupMismatch,
    InvalidAction,
    NotAbelian,
    NotAGroup,
    NotASubgroup,
    OrderMismatch,
)

_VALIDATE_LIMIT = 512


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    descriptor: str
    abelian_factors: tuple[int, ...] | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    @property
    def is_abelian(self) -> bool:
        t = self.table
        return all(
            t[a][b] == t[b][a] for a in range(self.order) for b in range(a + 1, self.order)
        )

    def exponent(self) -> int:
        out = 1
        for g in self.elements():
            out = math.lcm(out, element_order(self, g))
        return out

    def same_as(self, other: "FiniteGroup") -> bool:
        return self is other or self.table == other.table


def element_order(G: FiniteGroup, g: int) -> int:
    n, x = 1, g
    while x != 0:
        x = G.mul(x, g)
        n += 1
    return n


def _check_axioms(table: np.ndarray) -> None:
    n = table.shape[0]
    if table.shape != (n, n) or table.min() < 0 or table.max() >= n:
        raise NotAGroup("table entries out of range")
    ident = np.arange(n)
    if not (np.array_equal(table[0], ident) and np.array_equal(table[:, 0], ident)):
        raise NotAGroup("element 0 is not a two-sided identity")
    for a in range(n):
        if len(set(table[a].tolist())) != n or len(set(table[:, a].tolist())) != n:
            raise NotAGroup("table rows/columns are not permutations")
    for a in range(n):
        # (a*b)*c == a*(b*c) for all b, c, vectorized per a
        if not np.array_equal(table[table[a], :], table[a][table]):
            raise NotAGroup("multiplication is not associative")
    for a in range(n):
        b = int(np.where(table[a] == 0)[0][0])
        if table[b][a] != 0:
            raise NotAGroup(f"element {a} has no two-sided inverse")


def _finish(table: list[list[int]], descriptor: str, factors=None, validate=True) -> FiniteGroup:
    n = len(table)
    arr = np.array(table, dtype=np.int64)
    if validate and n <= _VALIDATE_LIMIT:
        _check_axioms(arr)
    inv = [0] * n
    for a in range(n):
        inv[a] = int(np.where(arr[a] == 0)[0][0])
    return FiniteGroup(
        order=n,
        table=tuple(tuple(row) for row in table),
        inverse=tuple(inv),
        descriptor=descriptor,
        abelian_factors=tuple(factors) if factors is not None else None,
    )


def make_abelian(factors) -> FiniteGroup:
    """Direct product Z_n1 x ... x Z_nk, row-major element indexing."""
    factors = tuple(int(f) for f in factors)
    if not factors or any(f < 1 for f in factors):
        raise ValueError(f"bad factors {factors}")
    n = math.prod(factors)
    strides = []
    s = 1
    for f in reversed(factors):
        strides.append(s)
        s *= f
    strides.reverse()

    def coords(i: int) -> tuple[int, ...]:
        return tuple((i // st) % f for st, f in zip(strides, factors))

    def index(c) -> int:
        return sum(ci * st for ci, st in zip(c, strides))

    table = [
        [
            index(tuple((x + y) % f for x, y, f in zip(coords(a), coords(b), factors)))
            for b in range(n)
        ]
        for a in range(n)
    ]
    desc = "abelian " + ",".join(str(f) for f in factors)
    if len(factors) == 1:
        desc = f"cyclic {factors[0]}"
    return _finish(table, desc, factors=factors)


def abelian_coords(G: FiniteGroup, i: int) -> tuple[int, ...]:
    if G.abelian_factors is None:
        raise NotAbelian("group has no factor form")
    c = []
    for f in reversed(G.abelian_factors):
        c.append(i % f)
        i //= f
    return tuple(reversed(c))


def abelian_index(G: FiniteGroup, c) -> int:
    if G.abelian_factors is None:
        raise NotAbelian("group has no factor form")
    i = 0
    for ci, f in zip(c, G.abelian_factors):
        i = i * f + (ci % f)
    return i


def make_cyclic(n: int) -> FiniteGroup:
    return make_abelian((n,))


def make_semidirect(m: int, k: int, t: int) -> FiniteGroup:
    """Z_m semidirect Z_k with (i,j)(i',j') = (i + t^j i' mod m, j+j' mod k)."""
    if m < 1 or k < 1:
        raise InvalidAction("m and k must be positive")
    if math.gcd(t, m) != 1 or pow(t, k, m) != 1 % m:
        raise InvalidAction(f"action t={t} invalid: need gcd(t,m)=1 and t^k=1 mod m")
    tp = [pow(t, j, m) for j in range(k)]
    n = m * k

    def idx(i: int, j: int) -> int:
        return i * k + j

    table = [[0] * n for _ in range(n)]
    for i in range(m):
        for j in range(k):
            for i2 in range(m):
                for j2 in range(k):
                    table[idx(i, j)][idx(i2, j2)] = idx(
                        (i + tp[j] * i2) % m, (j + j2) % k
                    )
    return _finish(table, f"semidirect {m},{k},{t}")


def make_from_table(table, descriptor: str = "table -") -> FiniteGroup:
    """Validate an explicit Cayley table; rejected unless the axioms pass."""
    rows = [list(r) for r in table]
    arr = np.array(rows, dtype=np.int64)
    _check_axioms(arr)
    return _finish(rows, descriptor, validate=False)


def parse_cayley_table(text: str) -> list[list[int]]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("order"):
        raise NotAGroup("cayley table file must start with 'order n'")
    n = int(lines[0].split()[1])
    rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise NotAGroup(f"expected {n} rows of {n} entries")
    return rows


def cyclic_subgroup(G: FiniteGroup, g: int) -> tuple[int, ...]:
    out, x = [0], g
    while x != 0:
        out.append(x)
        x = G.mul(x, g)
    return tuple(sorted(out))


def normal_cyclic_subgroups(G: FiniteGroup) -> list[tuple[int, int]]:
    """All (generator, order) of normal cyclic subgroups, one per subgroup."""
    seen: dict[frozenset, tuple[int, int]] = {}
    for g in G.elements():
        sub = cyclic_subgroup(G, g)
        key = frozenset(sub)
        if key in seen:
            continue
        normal = all(
            G.mul(G.mul(x, s), G.inv(x)) in key for x in G.elements() for s in sub
        )
        if normal:
            seen[key] = (g, len(sub))
    return sorted(seen.values(), key=lambda t: (t[1], t[0]))


def coset_reps(G: FiniteGroup, subgroup) -> list[int]:
    """One representative per right coset H*x, identity first."""
    H = sorted(set(subgroup))
    hs = set(H)
    if 0 not in hs or any(G.mul(a, b) not in hs for a in H for b in H):
        raise NotASubgroup(f"{H} is not a subgroup")
    reps, covered = [], set()
    for x in G.elements():
        if x in covered:
            continue
        reps.append(x)
        covered.update(G.mul(s, x) for s in H)
    assert len(reps) == G.order // len(H)
    return reps


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    H: int  # exponent of the group; rows are exponent vectors over zeta_H
    rows: tuple[tuple[int, ...], ...]


def characters(G: FiniteGroup) -> CharacterTable:
    if G.abelian_factors is None:
        raise NotAbelian("characters need an abelian group in factor form")
    factors = G.abelian_factors
    H = math.lcm(*factors)
    rows = []
    for t in range(G.order):
        tc = abelian_coords(G, t)
        row = tuple(
            sum(tj * gj * (H // f) for tj, gj, f in zip(tc, abelian_coords(G, g), factors)) % H
            for g in G.elements()
        )
        rows.append(row)
    return CharacterTable(G, H, tuple(rows))


@dataclass(frozen=True)
class GroupRingElt:
    """Formal sum over G with CycInt coefficients sharing one root order h."""

    group: FiniteGroup
    h: int
    coeffs: tuple[CycInt, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.group.order:
            raise ValueError("coefficient count must equal the group order")
        if any(c.h != self.h for c in self.coeffs):
            raise OrderMismatch("all coefficients must share the root order h")

    @classmethod
    def from_exponents(cls, group: FiniteGroup, h: int, exps) -> "GroupRingElt":
        return cls(group, h, tuple(CycInt.root(h, e) for e in exps))

    @classmethod
    def zero(cls, group: FiniteGroup, h: int) -> "GroupRingElt":
        return cls(group, h, (CycInt.zero(h),) * group.order)

    def monomial_exponents(self) -> list[int] | None:
        out = []
        for c in self.coeffs:
            e = c.monomial_exponent()
            if e is None:
                return None
            out.append(e)
        return out


def _check_pair(x: GroupRingElt, y: GroupRingElt) -> None:
    if not x.group.same_as(y.group):
        raise GroupMismatch("operands live over different groups")
    if x.h != y.h:
        raise OrderMismatch(f"root orders differ: {x.h} vs {y.h}")


def gr_add(x: GroupRingElt, y: GroupRingElt) -> GroupRingElt:
    _check_pair(x, y)
    return GroupRingElt(x.group, x.h, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def gr_mul(x: GroupRingElt, y: GroupRingElt) -> GroupRingElt:
    _check_pair(x, y)
    G, h = x.group, x.h
    xe, ye = x.monomial_exponents(), y.monomial_exponents()
    if xe is not None and ye is not None:
        # Unimodular fast path: accumulate exponent histograms per element.
        hists = [[0] * h for _ in G.elements()]
        for a, ea in enumerate(xe):
            row = G.table[a]
            for b, eb in enumerate(ye):
                hists[row[b]][(ea + eb) % h] += 1
        return GroupRingElt(G, h, tuple(CycInt(h, tuple(hi)) for hi in hists))
    out = [CycInt.zero(h) for _ in G.elements()]
    for a, ca in enumerate(x.coeffs):
        if all(v == 0 for v in ca.coeffs):
            continue
        row = G.table[a]
        for b, cb in enumerate(y.coeffs):
            if all(v == 0 for v in cb.coeffs):
                continue
            g = row[b]
            out[g] = out[g] + ca * cb
    return GroupRingElt(G, h, tuple(out))


def gr_conj_inv(x: GroupRingElt) -> GroupRingElt:
    G = x.group
    out = [CycInt.zero(x.h)] * G.order
    for g, c in enumerate(x.coeffs):
        out[G.inv(g)] = c.conj()
    return GroupRingElt(G, x.h, tuple(out))


def gr_equal(x: GroupRingElt, y: GroupRingElt) -> bool:
    _check_pair(x, y)
    return all(is_zero(a - b) for a, b in zip(x.coeffs, y.coeffs))


def apply_char(table: CharacterTable, row_index: int, X: GroupRingElt) -> CycInt:
    """Character value as a CycInt over lcm(h, H)."""
    row = table.rows[row_index]
    L = math.lcm(X.h, table.H)
    sH = L // table.H
    exps = X.monomial_exponents()
    if exps is not None:
        hist = [0] * L
        sh = L // X.h
        for g, e in enumerate(exps):
            hist[(e * sh + row[g] * sH) % L] += 1
        return CycInt(L, tuple(hist))
    acc = CycInt.zero(L)
    for g, c in enumerate(X.coeffs):
        acc = acc + c.embed(L) * CycInt.root(L, row[g] * sH)
    return acc


def fourier_equal(D: GroupRingElt, E: GroupRingElt) -> bool:
    """Equality test via characters; oracle for coefficientwise equality."""
    _check_pair(D, E)
    table = characters(D.group)
    return all(
        is_zero(apply_char(table, t, D) - apply_char(table, t, E))
        for t in range(D.group.order)
    )
