import random
from fractions import Fraction

import pytest

from isoconj import catalog, conjgeo, linalg
from isoconj.conjgeo import (component_count, component_stabilizer, components, conjugacy_class,
                             filling_by_saturation, filling_check, fix_lattice, fix_set, mod_set,
                             mov_set)
from isoconj.group import Isometry
from isoconj.linalg import AffineSublattice, Sublattice
from isoconj.oracle import Ball, brute_class, brute_coconj

ALL = catalog.keys()
ID, S1, S2, S1S2 = 0, 1, 2, 3  # cmm point indices


@pytest.fixture(scope="module")
def cmm():
    return catalog.group("cmm")


def samples(G, count=12, spread=2, seed=0):
    rng = random.Random(seed)
    return [Isometry(tuple(rng.randint(-spread, spread) for _ in range(G.dim)), rng.randrange(G.order))
            for _ in range(count)]


# --- examples ----------------------------------------------------------------


def test_mod_set_examples(cmm):
    assert mod_set(cmm, cmm.spherical(S1)) == AffineSublattice((0, 0), Sublattice(2, ((1, -1),)))
    two_l = Sublattice(2, ((2, 0), (0, 2)))
    assert mod_set(cmm, cmm.spherical(S1S2)).lattice == two_l
    assert mod_set(cmm, Isometry((3, -1), ID)) == AffineSublattice((3, -1), Sublattice.zero(2))


def test_mod_set_shift(cmm):
    m = mod_set(cmm, Isometry((3, 1), S1S2))
    assert m.offset == (1, 1)
    assert (5, -3) in m and (2, 1) not in m


def test_mov_set_examples(cmm):
    m = mov_set(cmm, cmm.spherical(S1))
    assert m.dim == 1
    assert m.basis == ((1, -1),)
    assert mov_set(cmm, cmm.spherical(S1S2)).dim == 2
    assert mov_set(cmm, Isometry((2, 5), ID)).dim == 0
    assert mov_set(cmm, Isometry((2, 5), ID)).offset == (Fraction(2), Fraction(5))


def test_fix_examples(cmm):
    assert fix_lattice(cmm, S1) == Sublattice(2, ((1, 1),))
    assert fix_lattice(cmm, S1S2).rank == 0
    assert fix_lattice(cmm, ID) == Sublattice.full(2)
    assert fix_set(cmm, S1) == ((1, 1),)
    assert fix_set(cmm, S1S2) == ()


def test_filling_examples(cmm):
    assert filling_check(cmm, cmm.spherical(S1))
    assert filling_check(cmm, cmm.spherical(S2))
    assert not filling_check(cmm, cmm.spherical(S1S2))
    assert filling_check(cmm, cmm.identity())
    # the translation part does not matter
    assert not filling_check(cmm, Isometry((1, 0), S1S2))


def test_class_of_translation(cmm):
    cls = conjugacy_class(cmm, Isometry((1, 0), ID))
    assert len(cls) == 4
    assert all(c.coset.lattice.rank == 0 and c.point == ID for c in cls.components)
    assert {c.coset.offset for c in cls.components} == {(1, 0), (0, 1), (0, -1), (-1, 0)}


def test_class_of_reflection(cmm):
    cls = conjugacy_class(cmm, cmm.spherical(S1))
    assert cls.components == (conjgeo.Component(S1, AffineSublattice((0, 0), Sublattice(2, ((1, -1),)))),)


def test_class_of_central_element(cmm):
    assert len(conjugacy_class(cmm, cmm.identity())) == 1


def test_component_counts(cmm):
    assert component_count(cmm, cmm.spherical(S1)) == 1
    assert component_count(cmm, Isometry((1, 0), S1S2)) == 2
    assert component_count(cmm, cmm.identity()) == 1
    assert component_count(cmm, Isometry((1, 0), S1)) == 2


def test_component_stabilizer_examples(cmm):
    assert component_stabilizer(cmm, cmm.spherical(S1)) == [0, 1, 2, 3]
    assert component_stabilizer(cmm, Isometry((1, 0), S1S2)) == [ID, S1S2]
    assert component_stabilizer(cmm, cmm.identity()) == [0, 1, 2, 3]


def test_cmm_minus_identity_three_classes(cmm):
    """Classes of t^l s1s2: l in 2L, l = (1,1) mod 2L (one component), l = (1,0) (two)."""
    assert component_count(cmm, cmm.spherical(S1S2)) == 1
    assert component_count(cmm, Isometry((1, 1), S1S2)) == 1
    assert component_count(cmm, Isometry((1, 0), S1S2)) == 2


# --- invariants ----------------------------------------------------------------


@pytest.mark.parametrize("key", ALL)
def test_mod_set_equivariance(key):
    G = catalog.group(key)
    for h in samples(G):
        for u in range(G.order):
            moved = mod_set(G, h).image(G.matrix(u))
            assert moved == mod_set(G, G.conjugate(G.spherical(u), h))


@pytest.mark.parametrize("key", ALL)
def test_mod_set_shift_by_translation(key):
    G = catalog.group(key)
    for h in samples(G):
        base = mod_set(G, G.linearize(h))
        assert mod_set(G, h) == base.translate(h.trans)


@pytest.mark.parametrize("key", ALL)
def test_mod_within_mov(key):
    G = catalog.group(key)
    for p in range(G.order):
        mod = conjgeo.point_mod_lattice(G, p)
        sat = linalg.saturation(mod)
        assert mod.issubset(sat)
        mov = mov_set(G, G.spherical(p))
        assert sat.rank == mov.dim
        # every saturated vector lies in the rational move-space
        span = [list(b) for b in mov.basis]
        for c in sat.columns:
            assert linalg.rank(span + [list(c)]) == mov.dim


@pytest.mark.parametrize("key", ALL)
def test_filling_routes_agree(key):
    G = catalog.group(key)
    for p in range(G.order):
        s = G.spherical(p)
        assert filling_check(G, s) == filling_by_saturation(G, s)


@pytest.mark.parametrize("key", ALL)
def test_class_against_oracle(key):
    G = catalog.group(key)
    window = Ball(3)
    conj_box = Ball(18 if G.dim == 2 else 10)
    for h in samples(G, count=6):
        cls = conjugacy_class(G, h)
        assert cls.members_in_box(3) == brute_class(G, h, conj_box, window)


@pytest.mark.parametrize("key", ALL)
def test_oracle_conjugates_lie_along_move_sets(key):
    G = catalog.group(key)
    for h in samples(G, count=6):
        for g in brute_class(G, h, Ball(2)):
            # g = t^xi u h0 u^-1 with xi - U lam in U(Mov(h0) cut L) = Mov(u h0 u^-1) cut L
            assert any(G.point_conjugate(u, h.point) == g.point and
                       linalg.vec_sub(g.trans, linalg.matvec(G.matrix(u), h.trans)) in conjgeo.mov_lattice(G, g.point)
                       for u in range(G.order))


@pytest.mark.parametrize("key", ALL)
def test_filling_iff_move_set_union(key):
    """The class equals the move-set union (within a window) exactly when h_0 fills."""
    G = catalog.group(key)
    for h in samples(G, count=6, seed=3):
        cls = conjugacy_class(G, h)
        union = set()
        for u in range(G.order):
            q = G.point_conjugate(u, h.point)
            coset = AffineSublattice(linalg.matvec(G.matrix(u), h.trans), conjgeo.mov_lattice(G, q))
            union.update(Isometry(v, q) for v in coset.points_in_box(4))
        assert cls.members_in_box(4) <= union
        assert (cls.members_in_box(4) == union) == filling_check(G, h)


@pytest.mark.parametrize("key", ALL)
def test_translations_move_within_component(key):
    G = catalog.group(key)
    rng = random.Random(5)
    box = Ball(12 if G.dim == 2 else 8)
    for h in samples(G, count=5):
        for comp in components(G, h):
            pts = comp.members_in_box(2)
            if len(pts) < 2:
                continue
            a, b = rng.sample(pts, 2)
            conjugators = brute_coconj(G, a, b, box)
            assert any(k.point == 0 for k in conjugators), (h, a, b)


@pytest.mark.parametrize("key", ALL)
def test_component_laws(key):
    G = catalog.group(key)
    for h in samples(G, count=10):
        n = component_count(G, h)
        n0 = component_count(G, G.linearize(h))
        assert n >= n0
        assert len(conjgeo.linearized_components(G, h)) == n0
        assert n0 == len(G.point_conjugacy_class(h.point))
        assert G.order == n * len(component_stabilizer(G, h))
