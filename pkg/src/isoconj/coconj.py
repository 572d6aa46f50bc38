"""Coconjugation sets, centralizers and the conjugacy decision procedure.

For ``h = t^l h_0`` and ``h' = t^l' h_0'`` the elements ``t^eta u`` with
``(t^eta u) h (t^eta u)^-1 = h'`` are exactly those with ``u h_0 u^-1 = h_0'``
and ``l' - U l = (Id - P') eta``.  Each admissible ``u`` contributes the coset
``eta_u + Ker(Id - P')`` of translations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .conjgeo import fix_lattice
from .group import Group, Isometry
from .linalg import AffineSublattice, IntVector, Sublattice, matvec, vec_sub


def _id_minus(M):
    return tuple(tuple(int(i == j) - x for j, x in enumerate(row)) for i, row in enumerate(M))


@dataclass(frozen=True)
class Branch:
    """The conjugators ``t^(eta + fix) u`` for one spherical part ``u``."""

    u: int
    eta: IntVector
    fix_lattice: Sublattice

    @property
    def coset(self) -> AffineSublattice:
        return AffineSublattice(self.eta, self.fix_lattice)

    def __contains__(self, k: Isometry) -> bool:
        return k.point == self.u and k.trans in self.coset

    def members_in_box(self, radius: int) -> list[Isometry]:
        return [Isometry(v, self.u) for v in self.coset.points_in_box(radius)]


@dataclass(frozen=True)
class CoconjDescription:
    source: Isometry
    target: Isometry
    branches: tuple[Branch, ...]

    @property
    def empty(self) -> bool:
        return not self.branches

    def __bool__(self):
        return bool(self.branches)

    def __contains__(self, k: Isometry) -> bool:
        return any(k in b for b in self.branches)

    def members_in_box(self, radius: int) -> set[Isometry]:
        out = set()
        for b in self.branches:
            out.update(b.members_in_box(radius))
        return out

    def some_element(self) -> Optional[Isometry]:
        return Isometry(self.branches[0].eta, self.branches[0].u) if self.branches else None


def _check_pair(G: Group, h: Isometry, h2: Isometry) -> None:
    try:
        G.check(h)
        G.check(h2)
    except ValueError as exc:
        raise ValueError(f"elements do not belong to group {G.name!r}: {exc}") from None


def spherical_coconj(G: Group, p: int, p2: int) -> list[int]:
    """All ``u`` in H_0 with ``u p u^-1 = p2``, by scanning H_0."""
    return [u for u in range(G.order) if G.point_conjugate(u, p) == p2]


def _defect(G: Group, h: Isometry, h2: Isometry, u: int) -> IntVector:
    """``l' - U l``."""
    return vec_sub(h2.trans, matvec(G.matrix(u), h.trans))


def translation_compatible_part(G: Group, h: Isometry, h2: Isometry) -> list[int]:
    """The ``u`` in ``coconj_{H_0}(h_0, h_0')`` with ``l' - U l`` in ``(Id - P') Z^n``."""
    _check_pair(G, h, h2)
    A = _id_minus(G.matrix(h2.point))
    return [u for u in spherical_coconj(G, h.point, h2.point)
            if linalg.solve_integer(A, _defect(G, h, h2, u)) is not None]


def _particular_solution(A, b) -> Optional[IntVector]:
    inv = linalg.inverse(A)
    if inv is None:
        return linalg.solve_integer(A, b)
    # Fix(h_0') = 0: the unique rational solution, integral or nothing
    x = matvec(inv, b)
    if any(v.denominator != 1 for v in x):
        return None
    return tuple(int(v) for v in x)


def coconjugation_set(G: Group, h: Isometry, h2: Isometry) -> CoconjDescription:
    """All ``k`` with ``k h k^-1 = h2`` as disjoint cosets, one per compatible ``u``.

    (a) no ``u`` conjugates the spherical parts: empty.
    (b) no such ``u`` makes ``l' - U l`` land in ``Mod(h_0')``: empty.
    Otherwise each compatible ``u`` gives ``t^(eta_u + Fix(h_0') cut Z^n) u``.
    """
    _check_pair(G, h, h2)
    candidates = spherical_coconj(G, h.point, h2.point)
    if not candidates:
        return CoconjDescription(h, h2, ())
    A = _id_minus(G.matrix(h2.point))
    fix = fix_lattice(G, h2.point)
    branches = []
    for u in candidates:
        eta = _particular_solution(A, _defect(G, h, h2, u))
        if eta is not None:
            branches.append(Branch(u, fix.reduce(eta), fix))
    return CoconjDescription(h, h2, tuple(branches))


def is_conjugate(G: Group, h: Isometry, h2: Isometry) -> bool:
    return bool(translation_compatible_part(G, h, h2))


def centralizer(G: Group, h: Isometry) -> CoconjDescription:
    return coconjugation_set(G, h, h)
