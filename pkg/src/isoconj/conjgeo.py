"""Mod-sets, move- and fix-sets, filling, conjugacy classes and their components."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import linalg
from .group import Group, Isometry
from .linalg import AffineSublattice, IntMatrix, Sublattice, matvec


def _minus_identity(M: IntMatrix) -> IntMatrix:
    """``M - Id``."""
    return tuple(tuple(x - (i == j) for j, x in enumerate(row)) for i, row in enumerate(M))


def point_mod_lattice(G: Group, p: int) -> Sublattice:
    """``(P - Id) Z^n`` for the point-group element ``p``."""
    return Sublattice.spanned_by(_minus_identity(G.matrix(p)), G.dim)


def mod_set(G: Group, h: Isometry) -> AffineSublattice:
    """``(h - Id) L = trans + (P - Id) Z^n`` as a canonical coset."""
    return AffineSublattice(h.trans, point_mod_lattice(G, h.point))


@dataclass(frozen=True)
class AffineSubspace:
    offset: tuple[Fraction, ...]
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def mov_set(G: Group, h: Isometry) -> AffineSubspace:
    """``trans + Im(P - Id)`` over Q, with a canonical (rref) basis."""
    basis = linalg.column_space(_minus_identity(G.matrix(h.point)))
    return AffineSubspace(tuple(Fraction(x) for x in h.trans), basis)


def fix_set(G: Group, p: int) -> tuple[tuple[Fraction, ...], ...]:
    """Rational basis of ``Ker(P - Id)`` for a point-group element."""
    return linalg.nullspace(_minus_identity(G.matrix(p)), G.dim)


def fix_lattice(G: Group, p: int) -> Sublattice:
    return linalg.integer_kernel(_minus_identity(G.matrix(p)), G.dim)


def mov_lattice(G: Group, p: int) -> Sublattice:
    """``Mov(P) cut with Z^n``, i.e. the saturation of the mod lattice."""
    return linalg.saturation(point_mod_lattice(G, p))


def filling_check(G: Group, h: Isometry) -> bool:
    """Whether ``h`` fills its move-set.

    Decided on the spherical part, by the Smith divisors of ``P - Id``: the
    quotient ``Z^n / (P - Id) Z^n`` is torsion-free iff every nonzero
    divisor is 1.
    """
    dec = linalg.snf(_minus_identity(G.matrix(h.point)))
    return all(d in (0, 1) for d in dec.divisors)


def filling_by_saturation(G: Group, h: Isometry) -> bool:
    """Same question as :func:`filling_check`, answered by comparing lattices."""
    mod = point_mod_lattice(G, h.point)
    return linalg.saturation(mod) == mod


@dataclass(frozen=True)
class Component:
    """The set ``t^(coset) point`` inside a conjugacy class."""

    point: int
    coset: AffineSublattice

    def sort_key(self):
        return (self.point, self.coset.offset, self.coset.lattice.columns)

    def __contains__(self, g: Isometry) -> bool:
        return g.point == self.point and g.trans in self.coset

    def members_in_box(self, radius: int) -> list[Isometry]:
        return [Isometry(v, self.point) for v in self.coset.points_in_box(radius)]


def _component(G: Group, h: Isometry, u: int) -> Component:
    """``u Base(h) u^-1 = t^(U(trans + Mod(h_0))) u h_0 u^-1``."""
    U = G.matrix(u)
    coset = AffineSublattice(h.trans, point_mod_lattice(G, h.point)).image(U)
    return Component(G.point_conjugate(u, h.point), coset)


def base_component(G: Group, h: Isometry) -> Component:
    return _component(G, h, 0)


@dataclass(frozen=True)
class ClassDescription:
    representative: Isometry
    components: tuple[Component, ...]

    def __contains__(self, g: Isometry) -> bool:
        return any(g in c for c in self.components)

    def __len__(self):
        return len(self.components)

    def members_in_box(self, radius: int) -> set[Isometry]:
        out = set()
        for c in self.components:
            out.update(c.members_in_box(radius))
        return out


def _dedup(comps) -> tuple[Component, ...]:
    return tuple(sorted(set(comps), key=Component.sort_key))


def conjugacy_class(G: Group, h: Isometry) -> ClassDescription:
    """The union over ``u`` in H_0 of ``t^(U(trans + Mod(h_0))) u h_0 u^-1``."""
    G.check(h)
    comps = _dedup(_component(G, h, u) for u in range(G.order))
    return ClassDescription(h, comps)


def components(G: Group, h: Isometry) -> tuple[Component, ...]:
    return conjugacy_class(G, h).components


def component_count(G: Group, h: Isometry) -> int:
    return len(components(G, h))


def component_stabilizer(G: Group, h: Isometry) -> list[int]:
    """Point elements ``u`` with ``u Base(h) u^-1 = Base(h)``.

    Test: ``u`` centralizes h_0 and ``(Id - U) trans`` lies in ``Mod(h_0)``.
    """
    G.check(h)
    mod = point_mod_lattice(G, h.point)
    out = []
    for u in range(G.order):
        if G.point_conjugate(u, h.point) != h.point:
            continue
        moved = matvec(G.matrix(u), h.trans)
        if tuple(a - b for a, b in zip(h.trans, moved)) in mod:
            out.append(u)
    return out


def linearized_components(G: Group, h: Isometry) -> tuple[Component, ...]:
    """Image of the components of ``[h]`` under forgetting the offset."""
    return _dedup(Component(c.point, AffineSublattice((0,) * G.dim, c.coset.lattice))
                  for c in components(G, h))


def class_members(G: Group, h: Isometry, radius: int) -> Iterator[Isometry]:
    yield from sorted(conjugacy_class(G, h).members_in_box(radius))
