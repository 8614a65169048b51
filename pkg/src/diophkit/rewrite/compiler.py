"""Restriction of scalars: lower equations over an extension to systems over the base."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import UnsupportedBasis
from .mpoly import MPoly
from .system import BASE, BASE_NONZERO, EXTENSION, INTEGRAL, PolySystem

INTEGRAL_MODE = "integral"
FULL_MODE = "full"
EXTERNAL_GADGET = "EXTERNAL-GADGET"


@dataclass(frozen=True)
class BasisSpec:
    """Power basis 1, t, ..., t^{k-1} of an extension given by a monic minimal polynomial.

    ``min_poly`` is ascending; entries are rationals or MPolys in the base
    field's own generator symbol (for towers).  ``base_field`` is None for Q.
    """

    min_poly: tuple
    generator: str = "t"
    base_field: object = None
    base_generator: str | None = None
    base_range: str = INTEGRAL

    def __post_init__(self):
        coeffs = tuple(MPoly.coerce(c) for c in self.min_poly)
        object.__setattr__(self, "min_poly", coeffs)
        if len(coeffs) < 2:
            raise UnsupportedBasis("minimal polynomial must have degree at least 1")
        if coeffs[-1] != MPoly.const(1):
            raise UnsupportedBasis("minimal polynomial must be monic")
        if self.generator in self.coefficient_symbols():
            raise UnsupportedBasis("generator symbol also occurs in the coefficients")

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def coefficient_symbols(self) -> set[str]:
        out = set()
        for c in self.min_poly:
            out |= c.variables()
        return out

    @classmethod
    def from_poly(cls, poly, generator: str = "t", **kw) -> "BasisSpec":
        return cls(tuple(poly.coeffs), generator, **kw)

    def to_json(self) -> dict:
        return {
            "min_poly": [c.to_json() for c in self.min_poly],
            "generator": self.generator,
            "base_generator": self.base_generator,
        }


def reduce_generator(poly: MPoly, spec: BasisSpec) -> MPoly:
    """Rewrite every power t^e with e >= k through the minimal polynomial."""
    t, k = spec.generator, spec.degree
    by_power = poly.coefficient_of(t)
    top = max(by_power, default=0)
    tail = [-c for c in spec.min_poly[:-1]]
    for e in range(top, k - 1, -1):
        c = by_power.pop(e, None)
        if c is None or c.is_zero():
            continue
        for i, a in enumerate(tail):
            if a.is_zero():
                continue
            j = e - k + i
            by_power[j] = by_power.get(j, MPoly()) + c * a
    out = MPoly()
    for e, c in by_power.items():
        out = out + c * MPoly.var(t, e)
    return out


def components(poly: MPoly, spec: BasisSpec) -> list[MPoly]:
    """Coordinates of a reduced polynomial on the power basis."""
    by_power = reduce_generator(poly, spec).coefficient_of(spec.generator)
    return [by_power.get(j, MPoly()) for j in range(spec.degree)]


def clear_denominators(poly: MPoly) -> MPoly:
    den = 1
    for c in poly.terms.values():
        den = math.lcm(den, c.denominator)
    return poly * den if den != 1 else poly


def _homogenize(poly: MPoly, placeholders: dict[str, str]) -> MPoly:
    """Multiply out placeholder inverses: P_v^e becomes v^(d-e), d the top power of P_v."""
    for ph, v in placeholders.items():
        by_power = poly.coefficient_of(ph)
        d = max(by_power, default=0)
        if d == 0:
            continue
        out = MPoly()
        for e, c in by_power.items():
            out = out + c * MPoly.var(v, d - e)
        poly = out
    return poly


def _power_sums(spec: BasisSpec, count: int) -> list[MPoly]:
    """p_0..p_count of the roots of the minimal polynomial (Newton, symbolic coefficients)."""
    k = spec.degree
    a = spec.min_poly
    p = [MPoly.const(k)]
    for m in range(1, count + 1):
        acc = MPoly()
        for i in range(1, min(m, k) + 1):
            acc = acc - a[k - i] * (p[m - i] if m - i > 0 else MPoly())
        if m <= k:
            acc = acc - a[k - m] * m
        p.append(acc)
    return p


def _trace(expr: MPoly, spec: BasisSpec, psums: list[MPoly]) -> MPoly:
    comps = components(expr, spec)
    out = MPoly()
    for j, c in enumerate(comps):
        out = out + c * psums[j]
    return out


def charpoly_coefficients(coords: list[MPoly], spec: BasisSpec) -> list[MPoly]:
    """e_1..e_k of the conjugates of sum coords_j t^j; c_m = (-1)^m e_m."""
    k = spec.degree
    t = MPoly.var(spec.generator)
    elem = MPoly()
    for j, c in enumerate(coords):
        elem = elem + c * t**j
    psums = _power_sums(spec, k)
    traces = []
    cur = MPoly.const(1)
    for _ in range(k):
        cur = reduce_generator(cur * elem, spec)
        traces.append(_trace(cur, spec, psums))
    e = [MPoly.const(1)]
    for m in range(1, k + 1):
        acc = MPoly()
        for i in range(1, m + 1):
            term = e[m - i] * traces[i - 1]
            acc = acc + (term if i % 2 else -term)
        e.append(acc / m)
    return e[1:]


def _lower(system: PolySystem, spec: BasisSpec, mode: str, ext_vars, s_primes=None) -> PolySystem:
    if mode not in (INTEGRAL_MODE, FULL_MODE):
        raise ValueError(f"unknown mode {mode!r}")
    k = spec.degree
    if k < 2:
        raise ValueError("extension degree must be at least 2")
    if ext_vars is None:
        ext_vars = [d.name for d in system.variables if d.range == EXTENSION]
    ext_vars = list(ext_vars)
    t = MPoly.var(spec.generator)

    out = PolySystem(meta=dict(system.meta))
    symbols = set(system.meta.get("symbols", [])) - {spec.generator}
    symbols |= spec.coefficient_symbols()
    if spec.base_generator:
        symbols.add(spec.base_generator)
    out.meta["symbols"] = sorted(symbols)

    for d in system.variables:
        if d.name not in ext_vars:
            out.declare(d.name, d.range)

    subst, placeholders, coords_of = {}, {}, {}
    for x in ext_vars:
        expr = MPoly()
        coords = []
        for j in range(k):
            if mode == INTEGRAL_MODE:
                u = out.declare(f"u_{x}_{j}", spec.base_range)
                coords.append(u)
            else:
                u = out.declare(f"u_{x}_{j}", BASE)
                vname = f"v_{x}_{j}"
                out.declare(vname, BASE_NONZERO)
                ph = f"1/{vname}"
                placeholders[ph] = vname
                coords.append(u * MPoly.var(ph))
            expr = expr + coords[-1] * t**j
        subst[x] = expr
        coords_of[x] = coords

    n_components = 0
    for eq, tag in zip(system.equations, system.tags):
        lowered = eq.subs(subst)
        for j, comp in enumerate(components(lowered, spec)):
            comp = clear_denominators(_homogenize(comp, placeholders))
            out.add_equation(comp, f"{tag}/coord[{j}]")
            n_components += 1

    n_gadgets = 0
    for node in system.opaque:
        out.opaque.append(node.__class__(node.kind, tuple(a.subs(subst) for a in node.args), node.tag, node.params))
    if mode == FULL_MODE:
        for x in ext_vars:
            for j in range(k):
                out.add_opaque("NONZERO", [MPoly.var(f"v_{x}_{j}")], f"{x}/nonzero[v_{x}_{j}]")
            if s_primes:
                args = [MPoly.var(f"{c}_{x}_{j}") for j in range(k) for c in "uv"]
                out.add_opaque("INTEGRAL_AT", args, f"{x}/integral_at",
                               primes=",".join(str(p) for p in s_primes))
                continue
            for m, coeff in enumerate(charpoly_coefficients(coords_of[x], spec), start=1):
                w = out.declare(f"w_{x}_{m}", INTEGRAL)
                eq = clear_denominators(_homogenize(coeff - w, placeholders))
                out.add_equation(eq, f"{x}/integral[{m}]")
                n_gadgets += 1

    out.meta["lowering"] = out.meta.get("lowering", []) + [{
        "mode": mode,
        "degree": k,
        "basis": spec.to_json(),
        "component_equations": n_components,
        "gadget_equations": n_gadgets,
        "opaque_nodes": len(out.opaque),
    }]
    return out


def coordinatize(system: PolySystem, spec: BasisSpec, mode: str = INTEGRAL_MODE, ext_vars=None,
                 s_primes=None) -> PolySystem:
    """Lower a single equation over the extension to k equations over the base.

    In integral mode every extension variable x becomes sum_j u_{x,j} t^j with
    base-integral coordinates.  In full mode the coordinates are ratios
    u/v with NONZERO(v) nodes, and the characteristic polynomial coefficients
    of each x are forced into the base integers through fresh w variables
    (or an INTEGRAL_AT node when ``s_primes`` is given).
    """
    if len(system.equations) != 1:
        raise ValueError("coordinatize expects exactly one equation")
    return _lower(system, spec, mode, ext_vars, s_primes)


def coordinatize_system(system: PolySystem, spec: BasisSpec, mode: str = INTEGRAL_MODE, ext_vars=None,
                        s_primes=None) -> PolySystem:
    """Like coordinatize but for any number of equations sharing the same variables."""
    return _lower(system, spec, mode, ext_vars, s_primes)


def coordinatize_tower(system: PolySystem, specs, mode: str = INTEGRAL_MODE, ext_vars=None) -> PolySystem:
    """Lower through F_1 < F_2 < ... by chained calls, top step first.

    The coordinates produced at one step become the extension variables of
    the next, whose generator must be the base generator of the previous.
    """
    specs = list(specs)
    cur = system
    names = ext_vars
    for spec in specs:
        before = set(cur.var_names)
        cur = _lower(cur, spec, mode, names)
        names = [d.name for d in cur.variables if d.name not in before and d.name.startswith("u_")]
        if mode == FULL_MODE:
            names += [d.name for d in cur.variables if d.name not in before and d.name.startswith("v_")]
    return cur


def _operand(sys_: PolySystem, a, range_=INTEGRAL) -> MPoly:
    if isinstance(a, str):
        return sys_.declare(a, range_)
    return MPoly.coerce(a)


def emit_relprime(a, b, prefix: str = "", range_: str = INTEGRAL) -> PolySystem:
    """(a, b) = 1 as A*a + B*b - 1 = 0 with fresh A, B."""
    out = PolySystem()
    pa, pb = _operand(out, a, range_), _operand(out, b, range_)
    A = out.declare(f"{prefix}A", range_)
    B = out.declare(f"{prefix}B", range_)
    out.add_equation(A * pa + B * pb - 1, f"relprime[{prefix or 'AB'}]")
    return out


def emit_total_positivity(x, prefix: str = "") -> PolySystem:
    """x*d^2 = c1^2 + c2^2 + c3^2 + c4^2 with d nonzero; the gadget is external."""
    out = PolySystem()
    px = _operand(out, x, BASE)
    d = out.declare(f"{prefix}d", BASE_NONZERO)
    cs = [out.declare(f"{prefix}c{i}", BASE) for i in range(1, 5)]
    out.add_equation(px * d**2 - sum((c**2 for c in cs), MPoly()), f"{EXTERNAL_GADGET}:total-positivity")
    out.add_opaque("NONZERO", [d], f"{EXTERNAL_GADGET}:total-positivity/nonzero")
    return out


def four_squares(n: int) -> tuple[int, int, int, int]:
    """A representation n = a^2 + b^2 + c^2 + d^2 with a >= b >= c >= d >= 0 (greedy search)."""
    if n < 0:
        raise ValueError("negative integers are not sums of squares")

    def rec(m, parts, cap):
        if parts == 0:
            return () if m == 0 else None
        top = min(math.isqrt(m), cap)
        for a in range(top, -1, -1):
            if a * a * parts < m:
                break
            rest = rec(m - a * a, parts - 1, a)
            if rest is not None:
                return (a,) + rest
        return None

    return rec(n, 4, n)


def total_positivity_witness(x: Fraction, d: int | None = None):
    """(d, c1..c4) with x*d^2 = sum c_i^2 for a nonnegative rational x.

    The default denominator is the denominator of x, which is enough when
    x*d^2 is an integer.
    """
    x = Fraction(x)
    if x < 0:
        return None
    d = x.denominator if d is None else d
    val = x * d * d
    if val.denominator != 1:
        raise ValueError("x*d^2 must be an integer")
    return d, four_squares(val.numerator)
