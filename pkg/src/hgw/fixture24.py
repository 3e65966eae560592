"""The bundled degree-24 fixture: G = S4 acting regularly with N = A4 x C2.

Generator files live under fixtures/paper24/ in 1-based cycle notation; the
loader shifts to 0-based points and identifies point 0 with the identity of G
(the regular action makes points and group elements interchangeable). The
fixture exercises the non-normal branch: P is normal in N and G-stable, yet
J = Psi(P) is one of three conjugate non-normal order-8 subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .catalog import iso_class
from .correspond import StableSubgroup, orbit_coset_check, psi, quotient_structure
from .enumeration import HgsRecord
from .errors import FixtureFailure
from .groups import FiniteGroup, SubgroupHandle, core_of, generating_subset_of, subgroups
from .perm import PermGroup, Permutation, closure, normalizes

DEGREE = 24

EXPECTED_P_ORBITS = (
    frozenset({1, 2, 4, 5, 7, 8, 12, 16}),
    frozenset({3, 6, 10, 11, 14, 15, 19, 22}),
    frozenset({9, 13, 17, 18, 20, 21, 23, 24}),
)
EXPECTED_J_ORBITS = (
    frozenset({1, 2, 4, 5, 7, 8, 12, 16}),
    frozenset({3, 10, 11, 13, 19, 20, 21, 24}),
    frozenset({6, 9, 14, 15, 17, 18, 22, 23}),
)


@dataclass
class FixtureReport:
    rows: list[dict]

    @property
    def passed(self) -> bool:
        return all(row["status"] == "pass" for row in self.rows)


def fixture_dir() -> Path:
    return Path(str(resources.files("hgw").joinpath("fixtures/paper24")))


def load_generators(name: str) -> list[Permutation]:
    path = fixture_dir() / f"{name}.txt"
    perms = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            perms.append(Permutation.parse_cycles(line, DEGREE, one_based=True))
    return perms


def _one_based(points) -> frozenset[int]:
    return frozenset(p + 1 for p in points)


def run_fixture() -> FixtureReport:
    """Run every fixture check; raises FixtureFailure on the first mismatch."""
    rows: list[dict] = []

    def check(name: str, ok: bool, detail: str):
        rows.append({"check": name, "status": "pass" if ok else "fail", "detail": detail})
        if not ok:
            raise FixtureFailure(f"{name}: {detail}")

    g_group = closure(load_generators("g"), DEGREE)
    n_group = closure(load_generators("n"), DEGREE)
    p_perms = load_generators("p")
    p_group = closure(p_perms, DEGREE)

    check("G order and regularity", g_group.order == 24 and g_group.is_regular(),
          f"|G|={g_group.order}, regular={g_group.is_regular()}")
    check("G class", iso_class(g_group).name == "S4", f"[G]={iso_class(g_group).name}")
    check("N order and regularity", n_group.order == 24 and n_group.is_regular(),
          f"|N|={n_group.order}, regular={n_group.is_regular()}")
    check("N class", iso_class(n_group).name == "A4 x C2", f"[N]={iso_class(n_group).name}")
    check("N normalized by G", normalizes(g_group, n_group), "conjugation check")
    check("P order and class", p_group.order == 8 and iso_class(p_group).name == "C2^3",
          f"|P|={p_group.order}, [P]={iso_class(p_group).name}")
    check("P inside N", all(q in n_group for q in p_group.elements), "membership")
    check("P normal in N", normalizes(n_group, p_group), "conjugation check")
    check("P normalized by G", normalizes(g_group, p_group), "conjugation check")
    check("P semiregular, not transitive",
          p_group.is_semiregular() and not p_group.is_transitive(),
          f"orbits={len(p_group.orbits())}")

    p_orbits = tuple(_one_based(o) for o in p_group.orbits())
    check("P orbits", set(p_orbits) == set(EXPECTED_P_ORBITS),
          f"got {sorted(sorted(o) for o in p_orbits)}")

    # identify points with elements of G: point i <-> the element sending 0 to i
    g_abs, lam = _regular_identification(g_group)
    record = HgsRecord(g_abs, n_group, iso_class(n_group), ("paper24", 0))
    n_index = {perm.images: i for i, perm in enumerate(n_group.elements)}
    p_handle = SubgroupHandle(n_group, tuple(sorted(n_index[q.images] for q in p_group.elements)))
    stable = StableSubgroup(record, p_handle, normal_in_n=True)
    result = psi(stable)

    check("Psi(P) order", result.j_handle.order == 8, f"|J|={result.j_handle.order}")
    check("Psi(P) class", result.j_class.name == "D4", f"[J]={result.j_class.name}")
    check("J not normal, core order 4",
          not result.normal_in_g and result.core_order == 4,
          f"normal={result.normal_in_g}, |I|={result.core_order}")
    order8 = [h for h in subgroups(g_abs) if h.order == 8]
    check("G has three order-8 subgroups, none normal",
          len(order8) == 3 and all(core_of(g_abs, h).order < 8 for h in order8),
          f"count={len(order8)}")

    j_perm_group = _subgroup_action(g_group, result.j_handle.members)
    j_orbits = tuple(_one_based(o) for o in j_perm_group.orbits())
    check("J orbits (right cosets)", set(j_orbits) == set(EXPECTED_J_ORBITS),
          f"got {sorted(sorted(o) for o in j_orbits)}")
    shared = set(j_orbits) & set(p_orbits)
    check("left/right coset mismatch",
          shared == {EXPECTED_P_ORBITS[0]},
          f"J and P share only the identity block; shared={sorted(sorted(o) for o in shared)}")

    check("P orbits are left cosets of J", orbit_coset_check(stable, result), "orbit=coset")
    quotient = quotient_structure(stable, result)
    check("quotient blocks", quotient.space.block_count == 3,
          f"blocks={quotient.space.block_count}")
    check("quotient N image", quotient.nbar.is_regular() and iso_class(quotient.nbar).name == "C3",
          f"[Nbar]={iso_class(quotient.nbar).name}")
    check("quotient G image transitive, not regular",
          quotient.gbar.is_transitive() and not quotient.gbar.is_regular(),
          f"|Gbar|={quotient.gbar.order}")
    return FixtureReport(rows)


def _regular_identification(g_group: PermGroup) -> tuple[FiniteGroup, PermGroup]:
    """Index G's elements by their image of point 0; then lambda(G) = G itself."""
    by_point = {}
    for perm in g_group.elements:
        by_point[perm(0)] = perm
    if len(by_point) != g_group.degree:
        raise FixtureFailure("fixture group is not regular; cannot identify points")
    table = [by_point[i].images for i in range(g_group.degree)]
    g_abs = FiniteGroup([str(i + 1) for i in range(g_group.degree)], table, spec="paper24 G")
    lam_perms = [Permutation(row) for row in table]
    lam = PermGroup(g_group.degree, generating_subset_of(lam_perms), lam_perms)
    if lam != g_group:
        raise FixtureFailure("identification did not reproduce G as lambda(G)")
    return g_abs, lam


def _subgroup_action(g_group: PermGroup, points) -> PermGroup:
    by_point = {perm(0): perm for perm in g_group.elements}
    perms = [by_point[x] for x in points]
    return PermGroup(g_group.degree, generating_subset_of(perms), perms)
