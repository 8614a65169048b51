"""Bounded search for relative norm-one elements."""
from __future__ import annotations

import itertools

from ..errors import ExplosionGuard
from ..number_field.compositum import RelativeExtension
from ..number_field.field import NumberField

DEFAULT_BUDGET = 2_000_000


def norm_one_brute_search(base: NumberField, top, height: int, budget: int = DEFAULT_BUDGET) -> list:
    """Elements of ``top`` with coordinates bounded by ``height`` and relative norm 1, other than +-1.

    ``top`` is either an absolute NumberField (then ``base`` must be Q) or a
    RelativeExtension over ``base``; in the relative case the coordinates
    are power-basis coordinates of each relative coefficient.  Results come
    as NFElements (absolute case) or lists of base elements (relative case).
    """
    if height <= 0:
        return []
    side = 2 * height + 1
    if isinstance(top, RelativeExtension):
        if top.base != base:
            raise ValueError("relative extension is over a different base")
        k, d = top.degree, base.degree
        if side ** (k * d) > budget:
            raise ExplosionGuard(f"{side}^{k * d} candidates exceed the budget {budget}")
        one = base.one()
        out = []
        rng = range(-height, height + 1)
        for flat in itertools.product(rng, repeat=k * d):
            coords = [base.element(list(flat[j * d:(j + 1) * d])) for j in range(k)]
            if all(c.is_zero() for c in coords[1:]) and (coords[0] == one or coords[0] == -one):
                continue
            if top.relative_norm(coords) == one:
                out.append(coords)
        return out
    if base.degree != 1:
        raise ValueError("an absolute top field needs base Q; pass a RelativeExtension otherwise")
    n = top.degree
    if side**n > budget:
        raise ExplosionGuard(f"{side}^{n} candidates exceed the budget {budget}")
    out = []
    for coords in itertools.product(range(-height, height + 1), repeat=n):
        if all(c == 0 for c in coords[1:]) and abs(coords[0]) == 1:
            continue
        if all(c == 0 for c in coords):
            continue
        x = top.element(list(coords))
        if x.norm() == 1:
            out.append(x)
    return out
