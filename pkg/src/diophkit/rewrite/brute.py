"""Bounded exhaustive search, used as the verification oracle for lowered systems."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Mapping

from ..errors import ExplosionGuard, Unsupported
from .mpoly import MPoly
from .system import INTEGER_ORACLES, PolySystem

DEFAULT_BUDGET = 2_000_000
SAT = "Sat"
UNSAT_UP_TO_BOUND = "Unsat-up-to-bound"


def box_values(box: int, denominator_cap: int = 1) -> list[Fraction]:
    if box < 0:
        raise ValueError("box must be nonnegative")
    vals = {Fraction(n, d) for d in range(1, denominator_cap + 1) for n in range(-box, box + 1)}
    return sorted(vals, key=lambda v: (abs(v), v))


def _schedule(system: PolySystem, order: list[str]):
    """Equations grouped by the search depth at which all their variables are known."""
    pos = {v: i for i, v in enumerate(order)}
    at_depth: list[list[MPoly]] = [[] for _ in range(len(order) + 1)]
    for eq in system.equations:
        vs = eq.variables()
        depth = max((pos[v] + 1 for v in vs), default=0)
        at_depth[depth].append(eq)
    return at_depth


def brute_force_solutions(system: PolySystem, box: int, denominator_cap: int = 1, budget: int = DEFAULT_BUDGET,
                          oracles: Mapping | None = None, fixed: Mapping | None = None) -> list[tuple]:
    """Every assignment from the box satisfying all equations and opaque nodes.

    Assignments are tuples in declaration order of the free variables.
    ``fixed`` pins named values (e.g. generator symbols) without searching them.
    """
    oracles = INTEGER_ORACLES if oracles is None else oracles
    for node in system.opaque:
        if node.kind not in oracles:
            raise Unsupported(f"no oracle for opaque node {node.kind}")
    fixed = dict(fixed or {})
    fixed.update({s: v for s, v in system.meta.get("symbol_values", {}).items() if s not in fixed})
    order = [v for v in system.var_names if v not in fixed]
    values = box_values(box, denominator_cap)
    if len(values) ** len(order) > budget:
        raise ExplosionGuard(f"{len(values)}^{len(order)} assignments exceed the budget {budget}")
    at_depth = _schedule(system, order)
    zero = [eq for eq in at_depth[0]]
    if any(not eq.subs(fixed).is_zero() for eq in zero if eq.variables() <= set(fixed)):
        return []
    out = []
    assign = dict(fixed)

    def opaque_ok():
        for node in system.opaque:
            res = oracles[node.kind](*(a.eval(assign) for a in node.args))
            if not res:
                return False
        return True

    def rec(i):
        if i == len(order):
            if opaque_ok():
                out.append(tuple(assign[v] for v in order))
            return
        name = order[i]
        for val in values:
            assign[name] = val
            if all(_is_zero(eq.eval(assign)) for eq in at_depth[i + 1]):
                rec(i + 1)
        del assign[name]

    rec(0)
    return out


def _is_zero(v) -> bool:
    return v.is_zero() if hasattr(v, "is_zero") else v == 0


def search_status(system: PolySystem, boxes=(1, 2, 4, 8), **kw) -> dict:
    """Sat with the first witness found, or Unsat-up-to-bound at the largest box tried."""
    last = None
    for b in boxes:
        try:
            sols = brute_force_solutions(system, b, **kw)
        except ExplosionGuard:
            break
        last = b
        if sols:
            return {"status": SAT, "box": b, "witness": dict(zip(
                [v for v in system.var_names if v not in (kw.get("fixed") or {})], sols[0]))}
    return {"status": UNSAT_UP_TO_BOUND, "box": last, "witness": None}


# -- round trip between an extension equation and its lowering ----------------------


def extension_solutions(equation: MPoly, field, generator: str, ext_vars, base_vars, box: int) -> set[tuple]:
    """Solutions with every extension variable of the form sum a_j t^j, |a_j| <= box, and integral base vars.

    Returned as flat coordinate tuples: for each extension variable its k
    coordinates, then the base variables, in the given order.
    """
    k = field.degree
    rng = range(-box, box + 1)
    gen = field.gen()
    out = set()
    ext_choices = list(itertools.product(rng, repeat=k))
    for ext in itertools.product(ext_choices, repeat=len(ext_vars)):
        for base in itertools.product(rng, repeat=len(base_vars)):
            vals = {generator: gen}
            for x, coords in zip(ext_vars, ext):
                vals[x] = field.element(list(coords))
            for z, c in zip(base_vars, base):
                vals[z] = field.element([c])
            if _is_zero(equation.eval(vals)):
                out.add(tuple(c for coords in ext for c in coords) + tuple(base))
    return out


def lowered_solutions(system: PolySystem, ext_vars, base_vars, k: int, box: int, budget: int = DEFAULT_BUDGET) -> set[tuple]:
    names = [f"u_{x}_{j}" for x in ext_vars for j in range(k)] + list(base_vars)
    sols = brute_force_solutions(system, box, 1, budget)
    order = system.var_names
    idx = [order.index(n) for n in names]
    return {tuple(int(s[i]) for i in idx) for s in sols}


def random_extension_equation(rng: random.Random, generator: str, degree_bound: int = 3, coeff_box: int = 2,
                              root_box: int = 2, with_base_var: bool | None = None):
    """A random equation P(x[, z]) - P(x0[, z0]) of total degree <= degree_bound with a planted solution.

    Coefficients are elements a + b t with small integer a, b; the planted
    point has coordinates in [-root_box, root_box].
    """
    if with_base_var is None:
        with_base_var = rng.random() < 0.5
    t = MPoly.var(generator)
    x = MPoly.var("x")
    z = MPoly.var("z")
    P = MPoly()
    deg = rng.randint(1, degree_bound)
    for i in range(deg + 1):
        for j in range((deg - i + 1) if with_base_var else 1):
            if rng.random() < 0.6 or (i == deg and j == 0):
                c = rng.randint(-coeff_box, coeff_box) + rng.randint(-coeff_box, coeff_box) * t
                P = P + c * x**i * z**j
    x0 = rng.randint(-root_box, root_box) + rng.randint(-root_box, root_box) * t
    vals = {"x": x0}
    if with_base_var:
        vals["z"] = MPoly.const(rng.randint(-root_box, root_box))
    eq = P - P.subs(vals)
    system = PolySystem(meta={"symbols": [generator]})
    system.declare("x", "extension")
    if with_base_var:
        system.declare("z", "integral")
    system.add_equation(eq, "random")
    return system
