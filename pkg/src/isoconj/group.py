"""Split isometry groups ``H = T_H x| H_0`` in lattice coordinates.

The translation lattice is identified with Z^n in its own basis.  The point
group is closed once, its elements indexed, and from then on an element of
H is just a translation vector plus a point-group index.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import linalg
from .linalg import IntMatrix, IntVector, matmul, matvec, transpose, vec_add

DEFAULT_MAX_CLOSURE = 20000


class GroupSpecError(ValueError):
    """The group specification is malformed or does not define a valid group."""


class ClosureError(GroupSpecError):
    """The point group did not close within the element budget."""


class ElementSyntaxError(ValueError):
    """An element string does not follow the ``t[..]*g1*s2`` grammar."""


@dataclass(frozen=True)
class GroupSpec:
    name: str
    dim: int
    gram: tuple[tuple[Fraction, ...], ...]
    generators: tuple[IntMatrix, ...]
    generator_names: tuple[str, ...] = ()
    max_closure: int = DEFAULT_MAX_CLOSURE

    @classmethod
    def make(cls, name, gram, generators, generator_names=(), max_closure=DEFAULT_MAX_CLOSURE):
        g = tuple(tuple(linalg.as_fraction(x) for x in row) for row in gram)
        gens = tuple(linalg.as_matrix(m) for m in generators)
        return cls(name, len(g), g, gens, tuple(generator_names), max_closure)

    @classmethod
    def from_json(cls, data: dict) -> "GroupSpec":
        try:
            dim = int(data["dim"])
            gram = data["gram"]
            generators = data.get("generators", [])
        except (KeyError, TypeError) as exc:
            raise GroupSpecError(f"group spec is missing a field: {exc}") from None
        for m in generators:
            for row in m:
                for x in row:
                    if not isinstance(x, int) or isinstance(x, bool):
                        raise GroupSpecError(f"generator entries must be integers, got {x!r}")
        try:
            spec = cls.make(
                str(data.get("name", "unnamed")),
                gram,
                generators,
                data.get("generator_names", ()),
                int(data.get("max_closure", DEFAULT_MAX_CLOSURE)),
            )
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise GroupSpecError(str(exc)) from None
        if spec.dim != dim:
            raise GroupSpecError(f"dim is {dim} but gram is {spec.dim}x{spec.dim}")
        return spec

    @classmethod
    def load(cls, path) -> "GroupSpec":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise GroupSpecError(f"{path}: invalid JSON: {exc}") from None
        return cls.from_json(data)

    def to_json(self) -> dict:
        def rat(x: Fraction):
            return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        out = {
            "name": self.name,
            "dim": self.dim,
            "gram": [[rat(x) for x in row] for row in self.gram],
            "generators": [[list(row) for row in m] for m in self.generators],
        }
        if self.generator_names:
            out["generator_names"] = list(self.generator_names)
        if self.max_closure != DEFAULT_MAX_CLOSURE:
            out["max_closure"] = self.max_closure
        return out


@dataclass(frozen=True)
class PointGroup:
    elements: tuple[IntMatrix, ...]
    mult_table: tuple[tuple[int, ...], ...]
    inverse_table: tuple[int, ...]

    def __len__(self):
        return len(self.elements)


def _preserves(M: IntMatrix, gram) -> bool:
    return matmul(matmul(transpose(M), gram), M) == gram


def validate_and_close(spec: GroupSpec) -> PointGroup:
    """Check the spec and close the generators to a finite point group.

    Element order: identity, then breadth-first by word length.  Layer one
    keeps the generators in the given order; later layers are sorted
    lexicographically by matrix entries.
    """
    n = spec.dim
    if len(spec.gram) != n or any(len(row) != n for row in spec.gram):
        raise GroupSpecError("gram must be a square dim x dim matrix")
    if not linalg.is_positive_definite(spec.gram):
        raise GroupSpecError("gram form is not symmetric positive definite")
    if spec.generator_names and len(spec.generator_names) != len(spec.generators):
        raise GroupSpecError("generator_names must match generators in length")
    for k, M in enumerate(spec.generators):
        if len(M) != n or any(len(row) != n for row in M):
            raise GroupSpecError(f"generator {k} is not {n}x{n}")
        if not _preserves(M, spec.gram):
            raise GroupSpecError(f"generator {k} does not preserve the gram form")
        if abs(linalg.det_int(M)) != 1:
            raise GroupSpecError(f"generator {k} is not unimodular")

    ident = linalg.identity(n)
    elements = [ident]
    index = {ident: 0}

    def add(M):
        if M not in index:
            if len(elements) >= spec.max_closure:
                raise ClosureError(
                    f"point group exceeds {spec.max_closure} elements; "
                    "point part not finite within budget"
                )
            index[M] = len(elements)
            elements.append(M)
            return True
        return False

    layer = [M for M in spec.generators if add(M)]
    while layer:
        found = set()
        for P in layer:
            for g in spec.generators:
                Q = matmul(P, g)
                if Q not in index:
                    found.add(Q)
        layer = sorted(found)
        for Q in layer:
            add(Q)

    mult = tuple(tuple(index[matmul(A, B)] for B in elements) for A in elements)
    inv = tuple(row.index(0) for row in mult)
    return PointGroup(tuple(elements), mult, inv)


@dataclass(frozen=True, order=True)
class Isometry:
    """``t^trans * h_0`` where ``point`` indexes h_0 in the closed point group."""

    trans: IntVector
    point: int

    @property
    def is_spherical(self) -> bool:
        return not any(self.trans)


_TOKEN = re.compile(r"t\[([^\]]*)\]|g(\d+)|([A-Za-z_][A-Za-z_0-9]*)")


class Group:
    """A validated split group: the spec together with its closed point group."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.points = validate_and_close(spec)
        self.dim = spec.dim
        self.order = len(self.points)
        self._names = {name: self.points.elements.index(M)
                       for name, M in zip(spec.generator_names, spec.generators)}

    @property
    def name(self) -> str:
        return self.spec.name

    def __repr__(self):
        return f"Group({self.spec.name!r}, dim={self.dim}, |H0|={self.order})"

    # -- elements -----------------------------------------------------------

    def matrix(self, p: int) -> IntMatrix:
        return self.points.elements[p]

    def element(self, trans: Sequence[int] = None, point: int = 0) -> Isometry:
        trans = tuple(trans) if trans is not None else (0,) * self.dim
        h = Isometry(tuple(int(x) for x in trans), int(point))
        self.check(h)
        return h

    def identity(self) -> Isometry:
        return Isometry((0,) * self.dim, 0)

    def translation(self, v: Sequence[int]) -> Isometry:
        return self.element(v, 0)

    def spherical(self, p: int) -> Isometry:
        return self.element(None, p)

    def check(self, h: Isometry) -> None:
        if len(h.trans) != self.dim:
            raise ValueError(f"translation {h.trans} has wrong length for dim {self.dim}")
        if not 0 <= h.point < self.order:
            raise ValueError(f"point index {h.point} outside 0..{self.order - 1}")

    def elements_in_box(self, radius: int):
        """Every element whose translation lies in ``[-radius, radius]^n``."""
        rng = range(-radius, radius + 1)
        for v in itertools.product(rng, repeat=self.dim):
            for p in range(self.order):
                yield Isometry(v, p)

    # -- arithmetic ---------------------------------------------------------

    def multiply(self, a: Isometry, b: Isometry) -> Isometry:
        P = self.points.elements[a.point]
        return Isometry(vec_add(a.trans, matvec(P, b.trans)), self.points.mult_table[a.point][b.point])

    def inverse(self, a: Isometry) -> Isometry:
        q = self.points.inverse_table[a.point]
        Q = self.points.elements[q]
        return Isometry(tuple(-x for x in matvec(Q, a.trans)), q)

    def conjugate(self, k: Isometry, h: Isometry) -> Isometry:
        """``k h k^-1``."""
        return self.multiply(self.multiply(k, h), self.inverse(k))

    def linearize(self, h: Isometry) -> Isometry:
        return Isometry((0,) * self.dim, h.point)

    def point_conjugate(self, u: int, p: int) -> int:
        """Index of ``u p u^-1`` in the point group."""
        t = self.points.mult_table
        return t[t[u][p]][self.points.inverse_table[u]]

    def point_conjugacy_class(self, p: int) -> list[int]:
        return sorted({self.point_conjugate(u, p) for u in range(self.order)})

    # -- text form ----------------------------------------------------------

    def parse(self, text: str) -> Isometry:
        """Read ``t[1,0]*g1*s2``-style products, evaluated left to right.

        ``gK`` is point-group element K (0 is the identity); named generators
        from the spec are also accepted.
        """
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ElementSyntaxError("empty element")
        result = self.identity()
        for part in s.split("*"):
            m = _TOKEN.fullmatch(part)
            if not m:
                raise ElementSyntaxError(f"cannot parse factor {part!r}")
            vec, gidx, name = m.groups()
            if vec is not None:
                try:
                    coords = tuple(int(x) for x in vec.split(",")) if vec else ()
                except ValueError:
                    raise ElementSyntaxError(f"bad translation {part!r}") from None
                if len(coords) != self.dim:
                    raise ElementSyntaxError(f"translation {part!r} needs {self.dim} coordinates")
                factor = Isometry(coords, 0)
            elif gidx is not None:
                k = int(gidx)
                if k >= self.order:
                    raise ElementSyntaxError(f"g{k} out of range: point group has {self.order} elements")
                factor = Isometry((0,) * self.dim, k)
            elif name in self._names:
                factor = Isometry((0,) * self.dim, self._names[name])
            elif name in ("e", "id", "Id"):
                factor = self.identity()
            else:
                raise ElementSyntaxError(f"unknown generator {name!r}")
            result = self.multiply(result, factor)
        return result

    def format(self, h: Isometry) -> str:
        t = "t[" + ",".join(str(x) for x in h.trans) + "]"
        return t if h.point == 0 else f"{t}*g{h.point}"

    def point_name(self, p: int) -> str:
        for name, idx in self._names.items():
            if idx == p:
                return name
        return f"g{p}"


def load_group(path) -> Group:
    return Group(GroupSpec.load(path))
