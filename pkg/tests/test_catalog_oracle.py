import pytest

from isoconj import catalog, conjgeo, linalg
from isoconj.catalog import UnknownGroupError
from isoconj.group import Isometry, validate_and_close
from isoconj.oracle import Ball, brute_class, brute_coconj, compare

import oracles

EXPECTED_ORDERS = {"p1": 1, "p2": 2, "pm": 2, "cm": 2, "pmm": 4, "cmm": 4, "p4": 4, "p4m": 8,
                   "p3": 3, "p3m1": 6, "p31m": 6, "p6": 6, "p6m": 12,
                   "coxeter_A2": 6, "coxeter_C2": 8, "coxeter_G2": 12, "coxeter_A3": 24}


def test_catalog_keys():
    assert set(catalog.keys()) == set(EXPECTED_ORDERS)
    assert len(catalog.WALLPAPER_KEYS) == 13


@pytest.mark.parametrize("key", sorted(EXPECTED_ORDERS))
def test_entries_close_to_known_orders(key):
    entry = catalog.get(key)
    pg = validate_and_close(entry.spec)
    assert len(pg) == entry.order == EXPECTED_ORDERS[key]
    assert len(oracles.close_matrix_group(entry.spec.generators, entry.spec.dim)) == entry.order


def test_cmm_entry():
    e = catalog.get("cmm")
    assert e.spec.gram == ((5, 3), (3, 5))
    G = catalog.group("cmm")
    assert [conjgeo.filling_check(G, G.spherical(p)) for p in (1, 2, 3)] == [True, True, False]


def test_p2_entry():
    G = catalog.group("p2")
    assert G.points.elements == (((1, 0), (0, 1)), ((-1, 0), (0, -1)))


def test_unknown_key():
    with pytest.raises(UnknownGroupError):
        catalog.get("p7")


def test_p3m1_and_p31m_differ():
    """In p31m the mirrors run along the short lattice vectors, in p3m1 across them."""
    def mirrors_along_short_vectors(key):
        G = catalog.group(key)
        short = [(1, 0), (0, 1), (1, 1)]
        return sum(1 for p in range(G.order)
                   if conjgeo.mov_set(G, G.spherical(p)).dim == 1
                   and any(linalg.matvec(G.matrix(p), v) == v for v in short))

    assert mirrors_along_short_vectors("p31m") == 3
    assert mirrors_along_short_vectors("p3m1") == 0


# --- oracle ------------------------------------------------------------------


@pytest.fixture(scope="module")
def cmm():
    return catalog.group("cmm")


def test_brute_class_translation(cmm):
    for R in (1, 2, 4):
        assert brute_class(cmm, Isometry((1, 0), 0), Ball(R)) == {
            Isometry(v, 0) for v in [(1, 0), (0, 1), (0, -1), (-1, 0)]}


def test_brute_class_radius_zero(cmm):
    h = Isometry((2, 1), 1)
    assert brute_class(cmm, h, Ball(0)) == {cmm.conjugate(cmm.spherical(u), h) for u in range(4)}


def test_brute_class_identity(cmm):
    assert brute_class(cmm, cmm.identity(), Ball(3)) == {cmm.identity()}


def test_brute_coconj_identity(cmm):
    assert len(brute_coconj(cmm, cmm.identity(), cmm.identity(), Ball(2))) == 25 * 4


@pytest.mark.parametrize("key", ["cmm", "p6m", "coxeter_G2"])
def test_oracle_monotone(key):
    G = catalog.group(key)
    h = G.parse("t[1,-1]*g1")
    prev = set()
    for R in range(4):
        cur = brute_class(G, h, Ball(R))
        assert prev <= cur
        prev = cur


@pytest.mark.parametrize("key", ["cmm", "p4m", "coxeter_A3"])
def test_oracle_spherical_constraint(key):
    G = catalog.group(key)
    h = Isometry((1,) * G.dim, 1)
    allowed = {G.point_conjugate(u, h.point) for u in range(G.order)}
    assert {g.point for g in brute_class(G, h, Ball(2))} <= allowed


def test_compare_reference_case(cmm):
    h = cmm.parse("t[1,0]*s1")
    cls = conjgeo.conjugacy_class(cmm, h)
    rep = compare(cls.members_in_box(4), brute_class(cmm, h, Ball(8), Ball(4)), Ball(4))
    assert rep.equal and rep.checked > 0


def test_compare_negative_control(cmm):
    h = cmm.parse("t[1,0]*s1")
    cls = conjgeo.conjugacy_class(cmm, h)
    corrupted = {Isometry((g.trans[0] + 1, g.trans[1]), g.point) for g in cls.members_in_box(5)}
    rep = compare(corrupted, brute_class(cmm, h, Ball(8), Ball(4)), Ball(4))
    assert not rep.equal
    assert rep.missing and rep.extra
    assert "DISCREPANCY" in rep.summary()


def test_compare_empty():
    assert compare([], [], Ball(2)).equal
