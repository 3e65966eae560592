"""Enumeration of Hopf-Galois structures: regular lambda(G)-normalized subgroups.

The search runs inside holomorphs: for every isomorphism type M of order |G|,
each regular subgroup V <= Hol(M) isomorphic to G, together with each
isomorphism beta: G -> V, transports to one regular subgroup N <= Perm(G)
normalized by lambda(G), via conjugation by the base-point bijection
b(g) = beta(g)(0). Each distinct N arises from exactly |Aut(M)| embeddings,
which is asserted. A direct brute-force search of Perm(G) certifies the
holomorph route at small degrees.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import regsearch
from .catalog import GroupClassLabel, catalog_group, catalog_names, fingerprint, iso_class
from .errors import EnumerationOverflow, GroupSpecError, TheoremViolation
from .groups import (
    FiniteGroup,
    all_isomorphisms,
    automorphisms,
    generating_subset_of,
    left_regular,
)
from .perm import PermGroup, Permutation, normalizes

ORACLE_DEGREE_CAP = 8
ENUMERATION_ORDER_CAP = 48


@dataclass(frozen=True)
class RegularEmbedding:
    """An injective homomorphism of G into Hol(M) with regular image."""

    source: FiniteGroup
    target_model: FiniteGroup
    images: tuple[Permutation, ...]  # one permutation of M-indices per G-index

    def base_point_map(self) -> tuple[int, ...]:
        """The bijection b: G -> M, g -> beta(g)(identity of M)."""
        return tuple(p(0) for p in self.images)


@dataclass(frozen=True)
class HgsRecord:
    """One Hopf-Galois structure: a regular lambda(G)-normalized N <= Perm(G)."""

    group: FiniteGroup
    n_group: PermGroup
    n_class: GroupClassLabel
    provenance: tuple[str, int]  # (model class name, embedding id within that model)

    @property
    def key(self) -> bytes:
        return b"".join(sorted(bytes(p.images) for p in self.n_group.elements))


# -- holomorph machinery ------------------------------------------------------


class _HolData:
    """Rows of Hol(M) as bytes, its regular subgroups, and their classes."""

    def __init__(self, m_name: str, model: FiniteGroup):
        self.m_name = m_name
        self.model = model
        n = model.order
        aut = automorphisms(model)
        self.aut_order = aut.order
        mul = np.array(model.table, dtype=np.uint8)
        aut_rows = np.array([p.images for p in aut.elements], dtype=np.uint8)
        # rows[(m, a)] : x -> m * alpha(x); this product set is all of Hol(M)
        stacked = mul[:, aut_rows].reshape(n * aut.order, n)
        self.rows = [r.tobytes() for r in stacked]
        if len(set(self.rows)) != n * aut.order:  # pragma: no cover - sanity
            raise TheoremViolation("holomorph row set has duplicates")
        self.subgroups = regsearch.regular_subgroups(self.rows, n)
        self.by_class: dict[str, list[_RegularSubgroup]] = {}
        for rows in self.subgroups:
            sub = _RegularSubgroup(rows, n)
            self.by_class.setdefault(sub.class_name, []).append(sub)

    def count_isomorphic_to(self, class_name: str) -> int:
        return len(self.by_class.get(class_name, ()))


class _RegularSubgroup:
    def __init__(self, rows: frozenset[bytes], degree: int):
        self.sorted_rows = sorted(rows)
        self.degree = degree
        index = {r: i for i, r in enumerate(self.sorted_rows)}
        table = [
            [index[regsearch.compose(p, q)] for q in self.sorted_rows] for p in self.sorted_rows
        ]
        self.abstract = FiniteGroup([str(i) for i in range(degree)], table, spec="regular subgroup")
        self.class_name = iso_class(self.abstract).name


_HOL_CACHE: dict[str, _HolData] = {}


def _hol_data(m_name: str) -> _HolData:
    if m_name not in _HOL_CACHE:
        _HOL_CACHE[m_name] = _HolData(m_name, catalog_group(m_name))
    return _HOL_CACHE[m_name]


# -- public operations ---------------------------------------------------------


def regular_embeddings(group: FiniteGroup, model: FiniteGroup) -> list[RegularEmbedding]:
    """All injective homomorphisms of ``group`` into Hol(model) with regular image."""
    if group.order != model.order:
        raise GroupSpecError("regular embeddings need |G| = |M|")
    m_name = iso_class(model).name
    hol = _hol_data(m_name)
    out: list[RegularEmbedding] = []
    fp = fingerprint(group)
    for sub in itertools.chain.from_iterable(hol.by_class.values()):
        if fingerprint(sub.abstract) != fp:
            continue
        for iso in all_isomorphisms(group, sub.abstract):
            images = tuple(Permutation(sub.sorted_rows[iso[g]]) for g in range(group.order))
            out.append(RegularEmbedding(group, model, images))
    return out


def transport(embedding: RegularEmbedding) -> HgsRecord:
    """The Hopf-Galois structure record carried by a regular embedding."""
    group = embedding.source
    n = group.order
    rows = [bytes(p.images) for p in embedding.images]
    table = _transport_table(group, embedding.target_model, rows)
    m_name = iso_class(embedding.target_model).name
    return _record_from_table(group, table, m_name, 0)


def _transport_table(group: FiniteGroup, model: FiniteGroup, beta_rows: Sequence[bytes]) -> np.ndarray:
    """N's element images (one row per element of M), with contract assertions."""
    n = group.order
    b = np.array([r[0] for r in beta_rows], dtype=np.int64)
    if len(set(b.tolist())) != n:
        raise TheoremViolation("embedding image is not regular: base map not bijective")
    b_inv = np.empty(n, dtype=np.int64)
    b_inv[b] = np.arange(n)
    mul = np.array(model.table, dtype=np.int64)
    table = b_inv[mul[:, b]]
    # transported beta(G) must equal lambda(G) exactly
    lam = np.array(group.table, dtype=np.int64)
    for g in range(n):
        row = np.array(list(beta_rows[g]), dtype=np.int64)
        if not np.array_equal(b_inv[row[b]], lam[g]):
            raise TheoremViolation("transported embedding image differs from lambda(G)")
    return table


def _record_from_table(group: FiniteGroup, table: np.ndarray, m_name: str, emb_id: int) -> HgsRecord:
    perms = [Permutation(tuple(int(x) for x in row)) for row in table]
    n_group = PermGroup(group.order, generating_subset_of(perms), perms)
    if not n_group.is_regular():
        raise TheoremViolation("transported subgroup is not regular")
    if not normalizes(left_regular(group), n_group):
        raise TheoremViolation("transported subgroup is not normalized by lambda(G)")
    label = iso_class(n_group)
    if label.name != m_name:
        raise TheoremViolation(f"transported subgroup has class {label.name}, expected {m_name}")
    return HgsRecord(group, n_group, label, (m_name, emb_id))


def enumerate_hgs(group: FiniteGroup, threads: int = 1) -> list[HgsRecord]:
    """All Hopf-Galois structures on a Galois extension with group ``group``.

    Output is deterministic: records sorted by (model class, element set),
    independent of thread count.
    """
    n = group.order
    if n > ENUMERATION_ORDER_CAP:
        raise EnumerationOverflow(f"enumeration capped at order {ENUMERATION_ORDER_CAP}")
    names = catalog_names(n)
    if not names:
        raise GroupSpecError(f"catalog does not cover order {n}")

    def run_model(m_name: str) -> list[HgsRecord]:
        return _enumerate_for_model(group, m_name)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(run_model, names))
    else:
        chunks = [run_model(m_name) for m_name in names]
    records = [rec for chunk in chunks for rec in chunk]
    order_of = {name: i for i, name in enumerate(names)}
    records.sort(key=lambda r: (order_of[r.n_class.name], r.key))
    return records


def _enumerate_for_model(group: FiniteGroup, m_name: str) -> list[HgsRecord]:
    hol = _hol_data(m_name)
    model = hol.model
    seen: dict[bytes, list] = {}
    emb_id = 0
    mul = np.array(model.table, dtype=np.int64)
    for sub in hol.by_class.get(iso_class_name_cached(group), ()):
        for iso in all_isomorphisms(group, sub.abstract):
            b = np.array([sub.sorted_rows[iso[g]][0] for g in range(group.order)], dtype=np.int64)
            b_inv = np.empty(group.order, dtype=np.int64)
            b_inv[b] = np.arange(group.order)
            table = b_inv[mul[:, b]]
            key = b"".join(sorted(row.tobytes() for row in table.astype(np.uint8)))
            entry = seen.get(key)
            if entry is None:
                seen[key] = [table, emb_id, 1, [sub.sorted_rows[iso[g]] for g in range(group.order)]]
            else:
                entry[2] += 1
            emb_id += 1
    records = []
    for key in sorted(seen):
        table, first_id, multiplicity, beta_rows = seen[key]
        if multiplicity != hol.aut_order:
            raise TheoremViolation(
                f"structure arose from {multiplicity} embeddings, expected |Aut(M)| = {hol.aut_order}")
        _transport_table(group, model, beta_rows)  # re-asserts the lambda(G) contract
        records.append(_record_from_table(group, table, m_name, first_id))
    return records


def iso_class_name_cached(group: FiniteGroup) -> str:
    name = getattr(group, "_iso_class_name", None)
    if name is None:
        name = iso_class(group).name
        group._iso_class_name = name
    return name


def direct_enumerate_oracle(group: FiniteGroup) -> list[PermGroup]:
    """Brute-force ground truth inside Perm(G), for |G| <= 8.

    Searches the full symmetric group for regular subgroups, then keeps those
    normalized by lambda(G). Independent of the holomorph route.
    """
    n = group.order
    if n > ORACLE_DEGREE_CAP:
        raise EnumerationOverflow(f"direct oracle capped at degree {ORACLE_DEGREE_CAP}")
    all_rows = [bytes(p) for p in itertools.permutations(range(n))]
    candidates = regsearch.regular_subgroups(all_rows, n)
    lam_rows = [bytes(row) for row in group.table]
    out = []
    for rows in candidates:
        if regsearch.normalized_by(sorted(rows), lam_rows, n):
            perms = [Permutation(r) for r in rows]
            out.append(PermGroup(n, generating_subset_of(perms), perms))
    out.sort(key=lambda pg: tuple(p.images for p in pg.elements))
    return out


def count_formula_report(group: FiniteGroup, records: Sequence[HgsRecord] | None = None) -> list[dict]:
    """Both sides of the embedding count identity, per model class.

    (#N of class [M]) * |Aut(M)| = (#regular subgroups of Hol(M) isomorphic
    to G) * |Aut(G)|.
    """
    if records is None:
        records = enumerate_hgs(group)
    aut_g = automorphisms(group).order
    g_class = iso_class_name_cached(group)
    out = []
    for m_name in catalog_names(group.order):
        hol = _hol_data(m_name)
        n_count = sum(1 for r in records if r.n_class.name == m_name)
        v_count = hol.count_isomorphic_to(g_class)
        out.append(
            {
                "model": m_name,
                "n_count": n_count,
                "aut_m": hol.aut_order,
                "regular_in_hol": v_count,
                "aut_g": aut_g,
                "lhs": n_count * hol.aut_order,
                "rhs": v_count * aut_g,
            }
        )
    return out
