"""Abstract finite groups via Cayley tables, plus subgroup/automorphism machinery.

Elements of a FiniteGroup are indices 0..n-1 with the identity fixed at 0;
every permutation representation built here acts on those indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EnumerationOverflow, GroupSpecError
from .perm import PermGroup, Permutation, closure

SUBGROUP_CAP = 100
AUTOMORPHISM_ORDER_CAP = 48


class FiniteGroup:
    """A finite group given by labels and a full multiplication table."""

    def __init__(self, labels: Sequence[str], table: Sequence[Sequence[int]], spec: str = ""):
        self.elements = tuple(str(s) for s in labels)
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.spec = spec
        n = len(self.elements)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise GroupSpecError("multiplication table shape does not match element count")
        if any(self.table[0][x] != x or self.table[x][0] != x for x in range(n)):
            raise GroupSpecError("element 0 is not an identity")
        self.inverse_table = self._compute_inverses()
        self._orders: tuple[int, ...] | None = None

    # -- basic structure ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    identity = 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def conj(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.table[self.table[g][x]][self.inverse_table[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse_table[a], -k
        result = 0
        while k:
            if k & 1:
                result = self.table[result][a]
            a = self.table[a][a]
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            self._orders = tuple(self.element_order(a) for a in range(self.order))
        return self._orders

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def center(self) -> frozenset[int]:
        t = self.table
        n = self.order
        return frozenset(a for a in range(n) if all(t[a][b] == t[b][a] for b in range(n)))

    def derived_subgroup(self) -> frozenset[int]:
        comms = {
            self.table[self.table[a][b]][self.table[self.inverse_table[a]][self.inverse_table[b]]]
            for a in range(self.order)
            for b in range(self.order)
        }
        return close_subset(self, comms)

    def check_associative(self) -> bool:
        """Exhaustive associativity check; meant for construction-time validation."""
        t = self.table
        n = self.order
        return all(
            t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n)
        )

    def _compute_inverses(self) -> tuple[int, ...]:
        inv = [-1] * self.order
        for a in range((self.order)):
            for b in range(self.order):
                if self.table[a][b] == 0:
                    inv[a] = b
                    break
            if inv[a] < 0 or self.table[inv[a]][a] != 0:
                raise GroupSpecError(f"element {a} has no two-sided inverse")
        return tuple(inv)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.spec or 'order ' + str(self.order)!s})"


@dataclass(frozen=True)
class SubgroupHandle:
    """A subgroup of an ambient FiniteGroup or PermGroup, as member indices."""

    ambient: object
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, idx: int) -> bool:
        return idx in self.member_set

    def element_perms(self) -> tuple[Permutation, ...]:
        """The member permutations, when the ambient is a PermGroup."""
        amb = self.ambient
        if not isinstance(amb, PermGroup):
            raise TypeError("ambient is not a PermGroup")
        return tuple(amb.elements[i] for i in self.members)

    def as_perm_group(self) -> PermGroup:
        perms = self.element_perms()
        return PermGroup(self.ambient.degree, generating_subset_of(perms), perms)


def generating_subset_of(perms: Sequence[Permutation]) -> tuple[Permutation, ...]:
    """Greedy deterministic generating subset of a closed permutation set."""
    degree = perms[0].degree
    target = {p.images for p in perms}
    chosen: list[Permutation] = []
    have = {tuple(range(degree))}
    for p in sorted(perms, key=lambda q: (-q.order(), q.images)):
        if len(have) == len(target):
            break
        if p.images in have:
            continue
        chosen.append(p)
        have = {q.images for q in closure(chosen, degree).elements}
    if not chosen:
        chosen = [Permutation.identity(degree)]
    return tuple(chosen)


# -- regular representations ----------------------------------------------


def left_regular(group: FiniteGroup) -> PermGroup:
    """lambda(G): g acts by x -> g*x on element indices."""
    perms = [Permutation(group.table[g]) for g in range(group.order)]
    gens = generating_subset_of(perms)
    return PermGroup(group.order, gens, perms)


def right_regular(group: FiniteGroup) -> PermGroup:
    """rho(G): g acts by x -> x*g^-1 on element indices."""
    perms = []
    for g in range(group.order):
        ginv = group.inverse_table[g]
        perms.append(Permutation(tuple(group.table[x][ginv] for x in range(group.order))))
    gens = generating_subset_of(perms)
    return PermGroup(group.order, gens, perms)


def lambda_of(group: FiniteGroup, g: int) -> Permutation:
    return Permutation(group.table[g])


# -- a uniform index-world view of PermGroup / FiniteGroup -----------------


class _IndexedView:
    """Multiplication on element indices for either kind of group.

    PermGroups get a materialized Cayley table up front; index order matches
    the sorted element order, so indices transfer back to the original group.
    """

    def __init__(self, group):
        if isinstance(group, FiniteGroup):
            self.order = group.order
            self.mul = group.mul
            self.inv = group.inv
            self.table = group.table
        elif isinstance(group, PermGroup):
            table_group = as_finite_group(group)
            self.order = table_group.order
            self.mul = table_group.mul
            self.inv = table_group.inv
            self.table = table_group.table
        else:
            raise TypeError(f"not a group object: {group!r}")
        self.group = group


def as_finite_group(group: PermGroup, spec: str = "") -> FiniteGroup:
    """Abstract Cayley-table copy of a PermGroup (element order = sorted perms)."""
    elems = group.elements
    index = {p.images: i for i, p in enumerate(elems)}
    table = [[index[(p * q).images] for q in elems] for p in elems]
    labels = [p.cycle_string() for p in elems]
    return FiniteGroup(labels, table, spec=spec or f"perm group of order {len(elems)}")


def close_subset(group: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    """Subgroup of a FiniteGroup generated by ``seed`` element indices."""
    members = {0} | set(seed)
    frontier = list(members)
    table = group.table
    while frontier:
        u = frontier.pop()
        for v in tuple(members):
            for w in (table[u][v], table[v][u]):
                if w not in members:
                    members.add(w)
                    frontier.append(w)
    return frozenset(members)


# -- subgroup enumeration ---------------------------------------------------


def subgroups(group, cap: int = SUBGROUP_CAP) -> list[SubgroupHandle]:
    """All subgroups: cyclic seeds, then extend each known subgroup by one element.

    Output is complete (every subgroup arises from a chain of one-element
    extensions starting at a cyclic subgroup) and sorted by (order, members).
    """
    view = _IndexedView(group)
    n = view.order
    if n > cap:
        raise EnumerationOverflow(f"subgroup enumeration cap {cap} exceeded (order {n})")
    table = view.table
    whole = frozenset(range(n))
    known: set[frozenset[int]] = {whole}
    queue: list[frozenset[int]] = []
    for a in range(n):
        cyc = {0}
        x = a
        while x not in cyc:
            cyc.add(x)
            x = table[x][a]
        fs = frozenset(cyc)
        if fs not in known:
            known.add(fs)
            queue.append(fs)
    while queue:
        sub = queue.pop()
        for x in range(1, n):
            if x in sub:
                continue
            members = set(sub)
            members.add(x)
            mlist = list(members)
            qi = 0
            full = False
            while qi < len(mlist):
                u = mlist[qi]
                qi += 1
                row_u = table[u]
                for v in mlist:
                    w = row_u[v]
                    if w not in members:
                        members.add(w)
                        mlist.append(w)
                    w = table[v][u]
                    if w not in members:
                        members.add(w)
                        mlist.append(w)
                if len(members) == n:
                    full = True
                    break
            if full:
                continue
            fs = frozenset(members)
            if fs not in known:
                known.add(fs)
                queue.append(fs)
    handles = [SubgroupHandle(group, tuple(sorted(s))) for s in known]
    handles.sort(key=lambda h: (h.order, h.members))
    return handles


def subgroups_brute_oracle(group, max_generators: int | None = None) -> list[frozenset[int]]:
    """Independent check: closures of all generator subsets up to a fixed size."""
    import itertools as it

    view = _IndexedView(group)
    n = view.order
    if max_generators is None:
        max_generators = max(1, n.bit_length() - 1)  # rank of a group of order n is <= log2(n)
    mul = view.mul
    found: set[frozenset[int]] = set()

    def close(seed):
        members = {0} | set(seed)
        frontier = list(seed)
        while frontier:
            u = frontier.pop()
            for v in tuple(members):
                for w in (mul(u, v), mul(v, u)):
                    if w not in members:
                        members.add(w)
                        frontier.append(w)
        return frozenset(members)

    for k in range(max_generators + 1):
        for combo in it.combinations(range(1, n), k):
            found.add(close(combo))
    found.add(frozenset({0}))
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def core_of(group: FiniteGroup, sub: SubgroupHandle) -> SubgroupHandle:
    """Largest normal subgroup inside ``sub``: intersection of all conjugates."""
    core = set(sub.members)
    for g in range(group.order):
        conj = {group.conj(g, x) for x in sub.members}
        core &= conj
        if len(core) == 1:
            break
    return SubgroupHandle(group, tuple(sorted(core)))


def is_normal(group: FiniteGroup, sub: SubgroupHandle) -> bool:
    members = sub.member_set
    return all(group.conj(g, x) in members for g in range(group.order) for x in sub.members)


# -- isomorphisms and automorphisms -----------------------------------------


def _generating_sequence(group: FiniteGroup) -> list[int]:
    """Greedy generating sequence, highest element order first."""
    orders = group.element_orders()
    seq: list[int] = []
    current: frozenset[int] = frozenset({0})
    while len(current) < group.order:
        candidates = [x for x in range(group.order) if x not in current]
        best = max(candidates, key=lambda x: (orders[x], -x))
        seq.append(best)
        current = close_subset(group, seq)
    return seq


def _extend_partial_map(g1: FiniteGroup, g2: FiniteGroup, fwd: dict[int, int], used: set[int],
                        new_src: int, new_dst: int):
    """Extend a partial isomorphism by new_src -> new_dst; None on conflict.

    The domain is grown to the subgroup generated by the current domain: every
    product of mapped elements must map consistently.
    """
    fwd = dict(fwd)
    used = set(used)
    if new_src in fwd:
        return (fwd, used) if fwd[new_src] == new_dst else None
    if new_dst in used:
        return None
    fwd[new_src] = new_dst
    used.add(new_dst)
    frontier = [new_src]
    while frontier:
        u = frontier.pop()
        for v in tuple(fwd):
            for (s, t) in ((g1.mul(u, v), g2.mul(fwd[u], fwd[v])),
                           (g1.mul(v, u), g2.mul(fwd[v], fwd[u]))):
                known = fwd.get(s)
                if known is None:
                    if t in used:
                        return None
                    fwd[s] = t
                    used.add(t)
                    frontier.append(s)
                elif known != t:
                    return None
    return fwd, used


ISO_ORDER_CAP = 100


def _iso_backtrack(g1: FiniteGroup, g2: FiniteGroup, find_all: bool) -> list[dict[int, int]]:
    if max(g1.order, g2.order) > ISO_ORDER_CAP:
        raise EnumerationOverflow(f"isomorphism testing capped at order {ISO_ORDER_CAP}")
    if g1.order != g2.order:
        return []
    if sorted(g1.element_orders()) != sorted(g2.element_orders()):
        return []
    seq = _generating_sequence(g1)
    orders1 = g1.element_orders()
    orders2 = g2.element_orders()
    buckets: dict[int, list[int]] = {}
    for x in range(g2.order):
        buckets.setdefault(orders2[x], []).append(x)
    results: list[dict[int, int]] = []

    def recurse(pos: int, fwd: dict[int, int], used: set[int]) -> bool:
        if pos == len(seq):
            if len(fwd) == g1.order:
                results.append(fwd)
                return not find_all
            return False  # generators exhausted but map not total: inconsistent
        src = seq[pos]
        if src in fwd:
            return recurse(pos + 1, fwd, used)
        for dst in buckets.get(orders1[src], ()):
            ext = _extend_partial_map(g1, g2, fwd, used, src, dst)
            if ext is None:
                continue
            if recurse(pos + 1, ext[0], ext[1]):
                return True
        return False

    recurse(0, {0: 0}, {0})
    return results


def is_isomorphic(g1: FiniteGroup, g2: FiniteGroup) -> bool:
    return bool(_iso_backtrack(g1, g2, find_all=False))


def all_isomorphisms(g1: FiniteGroup, g2: FiniteGroup) -> list[tuple[int, ...]]:
    """All isomorphisms g1 -> g2 as image tuples, sorted."""
    maps = _iso_backtrack(g1, g2, find_all=True)
    out = sorted(tuple(m[i] for i in range(g1.order)) for m in maps)
    return out


def automorphisms(group: FiniteGroup) -> PermGroup:
    """Aut(M) acting on element indices, as a materialized PermGroup."""
    if group.order > AUTOMORPHISM_ORDER_CAP:
        raise EnumerationOverflow(
            f"automorphism enumeration capped at order {AUTOMORPHISM_ORDER_CAP}")
    perms = [Permutation(images) for images in all_isomorphisms(group, group)]
    gens = generating_subset_of(perms)
    return PermGroup(group.order, gens, perms)


def holomorph(group: FiniteGroup) -> PermGroup:
    """Hol(M) = closure of lambda(M) and Aut(M) inside Perm(M).

    Built directly as the products lambda(m) * alpha, which is the same set;
    the order |M| * |Aut(M)| is asserted.
    """
    aut = automorphisms(group)
    lam = left_regular(group)
    elems = {(l * a).images: (l * a) for a in aut.elements for l in lam.elements}
    perms = list(elems.values())
    expected = group.order * aut.order
    if len(perms) != expected:  # pragma: no cover - construction sanity
        raise GroupSpecError("holomorph size mismatch")
    gens = tuple(dict.fromkeys(lam.generators + aut.generators))
    return PermGroup(group.order, gens, perms)
