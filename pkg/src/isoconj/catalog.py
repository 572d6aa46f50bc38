"""Built-in groups: the 13 symmorphic wallpaper groups and small affine Weyl groups.

Wallpaper groups use integer Gram forms with generic side lengths where the
lattice is not rigid.  Affine Coxeter entries act on the coroot lattice, so
the finite Weyl group is integral in the simple-coroot basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .group import Group, GroupSpec


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    spec: GroupSpec
    order: int
    notes: str


OBLIQUE = [[2, 1], [1, 3]]
RECTANGULAR = [[1, 0], [0, 2]]
# centred rectangular cell with a = 2, b = 1: basis (2, 1), (2, -1)
CENTRED = [[5, 3], [3, 5]]
SQUARE = [[1, 0], [0, 1]]
# hexagonal basis a1, a2 at 120 degrees
HEXAGONAL = [[2, -1], [-1, 2]]

NEG = [[-1, 0], [0, -1]]
MIRROR_X = [[-1, 0], [0, 1]]
MIRROR_Y = [[1, 0], [0, -1]]
SWAP = [[0, 1], [1, 0]]
ANTISWAP = [[0, -1], [-1, 0]]
ROT4 = [[0, -1], [1, 0]]
ROT3 = [[0, -1], [1, -1]]
ROT6 = [[1, -1], [1, 0]]
# hexagonal mirrors: perpendicular to a1, and along a1
HEX_MIRROR_PERP = [[-1, 1], [0, 1]]
HEX_MIRROR_ALONG = [[1, -1], [0, -1]]


def _wallpaper(key, gram, gens, names, order, notes):
    return CatalogEntry(key, GroupSpec.make(key, gram, gens, names), order, notes)


def _coroot_reflections(gram):
    """Simple reflections ``x -> x - 2 (x, a_i)/(a_i, a_i) a_i`` in the coroot basis."""
    n = len(gram)
    G = [[Fraction(x) for x in row] for row in gram]
    gens = []
    for i in range(n):
        M = [[int(r == c) for c in range(n)] for r in range(n)]
        for j in range(n):
            coeff = 2 * G[i][j] / G[i][i]
            if coeff.denominator != 1:
                raise ValueError("gram form is not crystallographic in this basis")
            M[i][j] -= int(coeff)
        gens.append(M)
    return gens


def _coxeter(key, gram, order, notes):
    gens = _coroot_reflections(gram)
    names = [f"s{i + 1}" for i in range(len(gens))]
    return CatalogEntry(key, GroupSpec.make(key, gram, gens, names), order, notes)


_ENTRIES = [
    _wallpaper("p1", OBLIQUE, [], [], 1, "oblique lattice, trivial point group"),
    _wallpaper("p2", OBLIQUE, [NEG], ["r2"], 2, "oblique lattice, half turn"),
    _wallpaper("pm", RECTANGULAR, [MIRROR_X], ["s1"], 2, "rectangular lattice, one mirror"),
    _wallpaper("cm", CENTRED, [SWAP], ["s1"], 2, "centred rectangular lattice, one mirror"),
    _wallpaper("pmm", RECTANGULAR, [MIRROR_X, MIRROR_Y], ["s1", "s2"], 4,
               "rectangular lattice, two perpendicular mirrors"),
    _wallpaper("cmm", CENTRED, [SWAP, ANTISWAP], ["s1", "s2"], 4,
               "centred rectangular lattice (a=2, b=1); Klein four point group of two commuting mirrors"),
    _wallpaper("p4", SQUARE, [ROT4], ["r4"], 4, "square lattice, quarter turn"),
    _wallpaper("p4m", SQUARE, [ROT4, MIRROR_Y], ["r4", "s1"], 8, "square lattice, dihedral of order 8"),
    _wallpaper("p3", HEXAGONAL, [ROT3], ["r3"], 3, "hexagonal lattice, third turn"),
    _wallpaper("p3m1", HEXAGONAL, [ROT3, HEX_MIRROR_PERP], ["r3", "s1"], 6,
               "hexagonal lattice, mirrors perpendicular to lattice vectors"),
    _wallpaper("p31m", HEXAGONAL, [ROT3, HEX_MIRROR_ALONG], ["r3", "s1"], 6,
               "hexagonal lattice, mirrors along lattice vectors"),
    _wallpaper("p6", HEXAGONAL, [ROT6], ["r6"], 6, "hexagonal lattice, sixth turn"),
    _wallpaper("p6m", HEXAGONAL, [ROT6, HEX_MIRROR_PERP], ["r6", "s1"], 12,
               "hexagonal lattice, dihedral of order 12"),
    _coxeter("coxeter_A2", [[2, -1], [-1, 2]], 6, "W(A2) on the coroot lattice"),
    _coxeter("coxeter_C2", [[4, -2], [-2, 2]], 8, "W(C2) on the coroot lattice (coroots form B2)"),
    _coxeter("coxeter_G2", [[4, -2], [-2, "4/3"]], 12, "W(G2) on the coroot lattice"),
    _coxeter("coxeter_A3", [[2, -1, 0], [-1, 2, -1], [0, -1, 2]], 24, "W(A3) on the coroot lattice"),
]

CATALOG = {e.key: e for e in _ENTRIES}
WALLPAPER_KEYS = tuple(e.key for e in _ENTRIES if not e.key.startswith("coxeter_"))
COXETER_KEYS = tuple(e.key for e in _ENTRIES if e.key.startswith("coxeter_"))


class UnknownGroupError(KeyError):
    pass


def keys() -> list[str]:
    return list(CATALOG)


def get(key: str) -> CatalogEntry:
    try:
        return CATALOG[key]
    except KeyError:
        raise UnknownGroupError(f"unknown catalog group {key!r}; known: {', '.join(CATALOG)}") from None


@lru_cache(maxsize=None)
def group(key: str) -> Group:
    """The closed group for a catalog key (cached)."""
    return Group(get(key).spec)
