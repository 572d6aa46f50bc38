"""Brute-force ground truth over boxes of conjugators.

Nothing here uses mod-sets or Smith forms: conjugates and conjugators are
found by composing ``t^eta u``, ``h`` and ``u^-1 t^-eta`` with the
semidirect product law, for every ``eta`` in a box.  The box scan is
vectorised with numpy; values stay small, so int64 is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from .group import Group, Isometry


@dataclass(frozen=True)
class Ball:
    """Max-norm box ``[-radius, radius]^n`` in lattice coordinates."""

    radius: int

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("ball radius must be nonnegative")

    def vectors(self, n: int) -> np.ndarray:
        rng = range(-self.radius, self.radius + 1)
        return np.array(list(itertools.product(rng, repeat=n)), dtype=np.int64).reshape(-1, n)

    def contains(self, v) -> bool:
        return all(-self.radius <= x <= self.radius for x in v)

    def elements(self, G: Group):
        for v in self.vectors(G.dim):
            for u in range(G.order):
                yield Isometry(tuple(int(x) for x in v), u)


def _conjugates_by_box(G: Group, h: Isometry, ball: Ball, u: int, etas: np.ndarray):
    """Translations of ``(t^eta u) h (t^eta u)^-1`` for every row ``eta``."""
    U = np.array(G.matrix(u), dtype=np.int64)
    uinv = G.points.inverse_table[u]
    # k = t^eta u ; k^-1 = t^(-U^-1 eta) u^-1
    k_inv_trans = -(np.array(G.matrix(uinv), dtype=np.int64) @ etas.T).T
    # h k^-1 = t^(lam + H0 k_inv_trans) (h0 u^-1)
    H0 = np.array(G.matrix(h.point), dtype=np.int64)
    hk_trans = np.array(h.trans, dtype=np.int64) + (H0 @ k_inv_trans.T).T
    # k (h k^-1) = t^(eta + U hk_trans) (u h0 u^-1)
    trans = etas + (U @ hk_trans.T).T
    point = G.points.mult_table[G.points.mult_table[u][h.point]][uinv]
    return trans, point


def brute_class(G: Group, h: Isometry, ball: Ball, window: Optional[Ball] = None) -> set[Isometry]:
    """``{k h k^-1}`` over all conjugators ``k`` whose translation lies in ``ball``.

    With ``window`` only conjugates whose translation lies in it are kept.
    """
    etas = ball.vectors(G.dim)
    out = set()
    for u in range(G.order):
        trans, point = _conjugates_by_box(G, h, ball, u, etas)
        if window is not None:
            trans = trans[np.all(np.abs(trans) <= window.radius, axis=1)]
        out.update(Isometry(tuple(int(x) for x in v), point) for v in np.unique(trans, axis=0))
    return out


def brute_coconj(G: Group, h: Isometry, h2: Isometry, ball: Ball) -> set[Isometry]:
    """Every ``k`` in the ball with ``k h k^-1 = h2``."""
    etas = ball.vectors(G.dim)
    target = np.array(h2.trans, dtype=np.int64)
    out = set()
    for u in range(G.order):
        trans, point = _conjugates_by_box(G, h, ball, u, etas)
        if point != h2.point:
            continue
        hits = etas[np.all(trans == target, axis=1)]
        out.update(Isometry(tuple(int(x) for x in v), u) for v in hits)
    return out


@dataclass
class Report:
    equal: bool
    missing: list = field(default_factory=list)  # in oracle, absent from closed form
    extra: list = field(default_factory=list)  # in closed form, absent from oracle
    checked: int = 0

    def __bool__(self):
        return self.equal

    def summary(self) -> str:
        if self.equal:
            return f"equal ({self.checked} elements)"
        return (f"DISCREPANCY: {len(self.missing)} missing from closed form "
                f"{self.missing[:3]}, {len(self.extra)} extra {self.extra[:3]}")


def compare(closed_form: Iterable, oracle_output: Iterable, ball: Ball,
            key: Callable = lambda x: x.trans) -> Report:
    """Set equality after restricting both sides to elements whose ``key`` lies in the ball."""
    a = {x for x in closed_form if ball.contains(key(x))}
    b = {x for x in oracle_output if ball.contains(key(x))}
    return Report(a == b, sorted(b - a), sorted(a - b), len(a | b))
