"""Emission of the degree-2 and totally real definition systems as tagged PolySystems."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IncompleteParams, TooManyShifts
from .exact_arith.integers import as_rat, is_prime, padic_valuation, rat_to_str
from .exact_arith.poly import Poly
from .number_field.field import NFElement, NumberField
from .number_field.roots import max_abs_root_bound
from .number_field.splitting import split_prime, valuations_at
from .rank_bounds.certify import compare_abs
from .rank_bounds.lemmas import threshold_B
from .rank_bounds.shifts import ShiftFamily, matrix_rank, next_shift
from .rewrite.mpoly import MPoly
from .rewrite.system import INTEGER_ORACLES, EvalReport, PolySystem, evaluate

EXT2NF = "ext2nf"
INF2 = "inf2"
TOTREAL = "totreal"
SYSTEMS = (EXT2NF, INF2, TOTREAL)

DELTA = "delta"

# (label, index name or None); the index range depends on the system parameters
LABELS = {
    INF2: [
        ("eq:supplement", None), ("eqdeg2:1", None), ("eqdeg2:2", "i"), ("eqdeg2:3", "i"),
        ("eqdeg2:4", "j"), ("eqdeg2:4.2", None), ("eqdeg2:7", None), ("eqdeg2:9", None),
        ("eqdeg2:10", None),
    ],
    EXT2NF: [
        ("eq:supplement1", None), ("eqdeg2:1f", "k"), ("eqdeg2:2f", "i"), ("eqdeg2:3f", "i"),
        ("eqdeg2:4f", "j"), ("eqdeg2:4.2f", None), ("eqdeg2:9f", "j"), ("eqdeg2:10f", None),
    ],
    TOTREAL: [
        ("eq:1", None), ("eq:2", "i"), ("eq:3", "i"), ("eq:4", "i"), ("eq:5", "i"), ("eq:6", "i"),
        ("eq:7", "i"), ("eq:8", "i"), ("eq:8.1", "i"), ("eq:8.2", None), ("eq:9", "i"), ("eq:10", "i"),
    ],
}


def tag(label: str, idx: str | None = None, value: int | None = None, part: str | None = None) -> str:
    out = label if idx is None else f"{label}[{idx}={value}]"
    return out if part is None else f"{out}/{part}"


def base_tag(t: str) -> str:
    return t.split("/", 1)[0]


# -- parameters -----------------------------------------------------------------------


@dataclass
class SystemParams:
    """Fields, integers and constants shared by the three systems.

    ``fields`` maps names (K, M, G, H, E1, E2, L) to defining polynomials.
    ``P_poly`` is the monic integral minimal polynomial of mu over K and
    Q(X) = P(N_E X).  ``P`` is the rational prime of the divisibility
    condition.  Constants the construction takes as given (C, D, A, u,
    class numbers) are inputs; ``provenance`` records where each came from.
    """

    fields: dict = field(default_factory=dict)
    p2: int = 0
    n: int = 0
    l: int = 0
    m: int = 0
    P_poly: Poly | None = None
    N_E: int = 1
    P: int = 0
    class_number_inputs: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    shifts: tuple = ()

    @property
    def Q(self) -> Poly:
        if self.P_poly is None:
            raise IncompleteParams("P_poly is missing")
        return self.P_poly.scale_arg(self.N_E)

    @property
    def B(self) -> Fraction:
        if "B" in self.constants:
            return as_rat(self.constants["B"])
        return threshold_B(self.Q)

    def require(self, *names):
        missing = []
        for nm in names:
            v = getattr(self, nm, None) if hasattr(self, nm) else None
            if nm in ("p2", "n", "l", "m", "P") and not v:
                missing.append(nm)
            elif nm == "P_poly" and v is None:
                missing.append(nm)
            elif nm.startswith("const:") and nm[6:] not in self.constants:
                missing.append(nm[6:])
            elif nm.startswith("class:") and nm[6:] not in self.class_number_inputs:
                missing.append(nm[6:])
        if missing:
            raise IncompleteParams(f"missing parameters: {', '.join(missing)}")

    def check(self) -> dict:
        """Certified side conditions; raises IncompleteParams or ValueError."""
        self.require("p2", "n", "l", "P_poly")
        Q = self.Q
        if self.l <= 2 or not any(max_abs_root_bound(self.P_poly, b) < self.l for b in (64, 128, 256)):
            raise ValueError(f"l = {self.l} must exceed 2 and every |root| of P")
        out = {"l_exceeds_roots": True, "B": rat_to_str(self.B)}
        if "B" in self.constants and as_rat(self.constants["B"]) != threshold_B(Q):
            raise ValueError("B must equal A(2) + 1")
        if self.P:
            if not is_prime(self.P):
                raise ValueError(f"P = {self.P} is not prime")
            st = split_prime(NumberField(self.P_poly), self.P)
            out["P_splits_completely_in_Q(mu)"] = bool(getattr(st, "is_totally_split", lambda: False)())
        return out

    def to_dict(self) -> dict:
        return {
            "fields": {k: v.to_json_list() if isinstance(v, Poly) else v for k, v in sorted(self.fields.items())},
            "p2": self.p2,
            "n": self.n,
            "l": self.l,
            "m": self.m,
            "P_poly": self.P_poly.to_json_list() if self.P_poly is not None else None,
            "N_E": self.N_E,
            "P": self.P,
            "class_number_inputs": dict(sorted(self.class_number_inputs.items())),
            "constants": {k: rat_to_str(as_rat(v)) for k, v in sorted(self.constants.items())},
            "provenance": dict(sorted(self.provenance.items())),
            "shifts": [rat_to_str(as_rat(s)) for s in self.shifts],
        }

    @classmethod
    def from_dict(cls, d) -> "SystemParams":
        fields_ = {k: Poly.from_json(v) if isinstance(v, list) else v for k, v in d.get("fields", {}).items()}
        pp = d.get("P_poly")
        return cls(
            fields=fields_,
            p2=int(d.get("p2", 0)),
            n=int(d.get("n", 0)),
            l=int(d.get("l", 0)),
            m=int(d.get("m", 0)),
            P_poly=Poly.from_json(pp) if pp is not None else None,
            N_E=int(d.get("N_E", 1)),
            P=int(d.get("P", 0)),
            class_number_inputs={k: int(v) for k, v in d.get("class_number_inputs", {}).items()},
            constants={k: as_rat(v) for k, v in d.get("constants", {}).items()},
            provenance=dict(d.get("provenance", {})),
            shifts=tuple(as_rat(s) for s in d.get("shifts", ())),
        )


def toy_params() -> SystemParams:
    """K = M = Q, G = Q(i), H = Q(sqrt 5), E2 the cubic field of conductor 7."""
    P_poly = Poly([-1, -2, 1, 1])
    return SystemParams(
        fields={"K": Poly([0, 1]), "M": Poly([0, 1]), "G": Poly([1, 0, 1]), "H": Poly([-5, 0, 1]),
                "E2": P_poly, "E1": Poly([-2, 0, 1]), "L": Poly([1, 0, 1])},
        p2=3,
        n=1,
        l=3,
        m=4,
        P_poly=P_poly,
        N_E=7,
        P=13,
        class_number_inputs={"h_LE1": 1},
        constants={"A": Fraction(1), "C": Fraction(1), "D": Fraction(9), "u": Fraction(1)},
        provenance={
            "N_E": "7 is the only prime dividing disc(P) = 49",
            "P": "13 = -1 mod 7 splits completely in Q(mu)",
            "m": "number of roots of unity in Q(i)",
            "h_LE1": "input: class number of Q(i, sqrt 2)",
            "A": "input", "C": "input", "D": "input", "u": "input",
        },
    )


# -- shift constants ------------------------------------------------------------------


def _independent(Q: Poly, shifts) -> bool:
    if len(set(shifts)) != len(shifts):
        return False
    fam = ShiftFamily(Q, tuple(shifts))
    return matrix_rank(fam.coefficient_rows()) == len(shifts)


def shift_constants(p2: int, n: int, l: int, Q: Poly, scan_cap: int = 256) -> list[int]:
    """N_0 = 0 < N_1 < ... < N_{p2}: every choice of offsets 8l(k+1) keeps the family independent.

    N_{s+1} is the least integer above N_s that passes the exhaustive rank
    check.  If none is found below ``scan_cap`` the scan continues up to the
    next_shift certificate maximized over all previous tuples, which is
    guaranteed to work.
    """
    if Q.degree < 1:
        raise ValueError("Q must be nonconstant")
    if p2 + 1 > Q.degree + 1:
        raise TooManyShifts(f"{p2 + 1} shifted copies cannot be independent in dimension {Q.degree + 1}")
    offs = [8 * l * (k + 1) for k in range(2 * p2 * n + 1)]
    Ns = [0]

    def works(levels):
        return all(_independent(Q, [N + o for N, o in zip(levels, tup)])
                   for tup in itertools.product(offs, repeat=len(levels)))

    for _ in range(p2):
        cand = Ns[-1] + 1
        while cand < Ns[-1] + scan_cap and not works(Ns + [cand]):
            cand += 1
        if not works(Ns + [cand]):
            bound = max(math.ceil(next_shift(ShiftFamily(Q, tuple(N + o for N, o in zip(Ns, tup)))))
                        for tup in itertools.product(offs, repeat=len(Ns))) - min(offs)
            while cand <= bound and not works(Ns + [cand]):
                cand += 1
            if cand > bound:
                raise ArithmeticError("the certified bound failed the rank check")
        Ns.append(cand)
    return Ns


def totreal_shifts(Q: Poly, count: int, B) -> list[int]:
    """B < l_0 < l_1 < ... with {Q(X + l_i)} independent, greedy and minimal."""
    if count > Q.degree + 1:
        raise TooManyShifts(f"{count} shifted copies cannot be independent in dimension {Q.degree + 1}")
    out = [math.floor(as_rat(B)) + 1]
    while len(out) < count:
        cand = out[-1] + 1
        while not _independent(Q, out + [cand]):
            cand += 1
        out.append(cand)
    return out


# -- helpers --------------------------------------------------------------------------


def _poly_at(P: Poly, arg: MPoly) -> MPoly:
    acc = MPoly()
    for c in reversed(P.coeffs):
        acc = acc * arg + MPoly.const(c)
    return acc


def _v(name):
    return MPoly.var(name)


def _norm_one(out: PolySystem, var: str, ext: str, t: str):
    out.add_opaque("NORM_ONE", [_v(var)], t, extension=ext)


# -- the systems ------------------------------------------------------------------------


def assemble_inf2(params: SystemParams) -> PolySystem:
    """System for x_1 in M with denominators restricted to U (four unit variables)."""
    params.require("m", "P", "P_poly")
    Q, m, B = params.Q, params.m, params.B
    O, Omu, Omd = "O_{GM,U_GM}", "O_{GM,U_GM}[mu]", "O_{GM,U_GM}[mu,delta]"
    out = PolySystem()
    x0, x1 = out.declare("x0", O), out.declare("x1", O)
    for nm in ("a1", "a2", "b1", "b2", "c", "d", "u", "v"):
        out.declare(nm, Omu)
    for i in range(1, 5):
        out.declare(f"eps{i}", Omd)
        out.declare(f"gamma{i}", Omd)
    dl = _v(DELTA)
    out.add_opaque("INTEGRAL_AT", [x0], tag("eq:supplement"), primes="E_bar_GM")
    out.add_equation(x1 - _poly_at(Q, x0), tag("eqdeg2:1"))
    for i in range(1, 5):
        _norm_one(out, f"eps{i}", "HGME2/E2GM", tag("eqdeg2:2", "i", i, "norm1"))
        _norm_one(out, f"eps{i}", "GMHE2/HGM", tag("eqdeg2:2", "i", i, "norm2"))
    for i in range(1, 5):
        g = _v(f"gamma{i}")
        out.add_equation(g - _v(f"eps{i}") ** m, tag("eqdeg2:3", "i", i))
        out.add_opaque("NONZERO", [g - 1], tag("eqdeg2:3", "i", i, "nonzero"))
    for j in (1, 2):
        g_even, g_odd = _v(f"gamma{2 * j}"), _v(f"gamma{2 * j - 1}")
        rhs = (g_odd - 1) * (_v(f"a{j}") - dl * _v(f"b{j}"))
        out.add_equation(g_even - 1 - rhs, tag("eqdeg2:4", "j", j))
    c, d = _v("c"), _v("d")
    out.add_equation(_v("gamma3") - c - dl * d, tag("eqdeg2:4.2"))
    w = _v("a1") ** 2 - d * _v("b1") ** 2
    out.add_opaque("ABS_BOUNDS", [x1, w], tag("eqdeg2:7"), Q=Q.to_json(), B=rat_to_str(B),
                   embeddings="real embeddings of E2GM")
    out.add_equation(x1 - (_v("a2") - dl * _v("b2")) - (c - 1 + dl * d) * (_v("u") + _v("v") * dl),
                     tag("eqdeg2:9"))
    lhs = MPoly.const(params.P) * x1 * _poly_at(Q, MPoly.const(B) + w ** 2)
    out.add_opaque("DIVIDES", [lhs, c - 1 + dl * d], tag("eqdeg2:10"), ring="O_{GME2H,U_GME2H}")
    out.meta.update({"system": INF2, "symbols": [DELTA], "params": params.to_dict()})
    return out


def assemble_ext2nf(params: SystemParams) -> PolySystem:
    """System forcing some x_k into M, denominators anywhere in Z (2 p2 n + 1 blocks)."""
    params.require("p2", "n", "l", "m", "P_poly")
    Q, m, l = params.Q, params.m, params.l
    K = 2 * params.p2 * params.n
    O, Omu, Omd = "O_{GM,Z_GM}", "O_{GM,Z_GM}[mu]", "O_{GM,Z_GM}[mu,delta]"
    out = PolySystem()
    x = out.declare("x", O)
    x0 = out.declare("x0", O)
    for k in range(K + 1):
        out.declare(f"x_{k}", O)
    for k in range(K + 1):
        out.declare(f"a_{k}", Omu)
        out.declare(f"b_{k}", Omu)
    for nm in ("c", "d", "u", "v"):
        out.declare(nm, Omu)
    for i in range(K + 1):
        out.declare(f"eps_{i}", Omd)
        out.declare(f"gamma_{i}", Omd)
    # gamma_{j+1} for j = 2 p2 n is one past the indexed range
    out.declare(f"gamma_{K + 1}", Omd)
    dl = _v(DELTA)
    out.add_opaque("INTEGRAL_AT", [x0], tag("eq:supplement1"), primes="E_bar_GM")
    for k in range(K + 1):
        out.add_equation(_v(f"x_{k}") - _poly_at(Q, x + 8 * l * (k + 1)), tag("eqdeg2:1f", "k", k))
    for i in range(K + 1):
        _norm_one(out, f"eps_{i}", "HGME2/E2GM", tag("eqdeg2:2f", "i", i, "norm1"))
        _norm_one(out, f"eps_{i}", "GMHE2/HGM", tag("eqdeg2:2f", "i", i, "norm2"))
    for i in range(K + 1):
        g = _v(f"gamma_{i}")
        out.add_equation(g - _v(f"eps_{i}") ** m, tag("eqdeg2:3f", "i", i))
        out.add_opaque("NONZERO", [g - 1], tag("eqdeg2:3f", "i", i, "nonzero"))
    g0 = _v("gamma_0")
    for j in range(K + 1):
        rhs = (g0 - 1) * (_v(f"a_{j}") - dl * _v(f"b_{j}"))
        out.add_equation(_v(f"gamma_{j + 1}") - 1 - rhs, tag("eqdeg2:4f", "j", j))
    c, d = _v("c"), _v("d")
    out.add_equation(g0 - c - dl * d, tag("eqdeg2:4.2f"))
    for j in range(K + 1):
        eq = _v(f"x_{j}") - (_v(f"a_{j}") - dl * _v(f"b_{j}")) - (c + dl * d) * (_v("u") + _v("v") * dl)
        out.add_equation(eq, tag("eqdeg2:9f", "j", j))
    prod = MPoly.const(1)
    for j in range(K + 1):
        prod = prod * _v(f"x_{j}") ** 2
    out.add_opaque("DIVIDES", [prod, c - 1 + dl * d], tag("eqdeg2:10f"), ring="O_{E2GMH,Z_E2GMH}")
    out.meta.update({"system": EXT2NF, "symbols": [DELTA], "params": params.to_dict(), "blocks": K + 1})
    return out


def assemble_totreal(params: SystemParams) -> PolySystem:
    """System placing y in O_{K,W_K} inside a totally real tower, one block per shift l_i."""
    params.require("p2", "P_poly", "class:h_LE1", "const:A", "const:C", "const:D", "const:u")
    Q = params.Q
    h = params.class_number_inputs["h_LE1"]
    count = h * params.p2 + 1
    shifts = list(params.shifts) if params.shifts else totreal_shifts(Q, count, params.B)
    if len(shifts) != count:
        raise IncompleteParams(f"need {count} shifts, got {len(shifts)}")
    if not _independent(Q, shifts):
        raise ValueError("the shifted copies of Q are dependent")
    A, C, D, u = (as_rat(params.constants[k]) for k in ("A", "C", "D", "u"))
    if A.denominator != 1 or A < 1:
        raise ValueError("A must be a positive integer")
    O, Ogg = "O_{Kinf,W_Kinf}", "O_{Kinf,W_Kinf}[gamma_L,gamma_E1]"
    out = PolySystem()
    out.declare("t1", "Kinf")
    y = out.declare("y", O)
    out.declare("nu_bar", Ogg)
    nu = out.declare("nu", Ogg)
    idx = range(count)
    for i in idx:
        out.declare(f"x_{i}", O)
        out.declare(f"y_{i}", O)
        for nm in ("lambda_bar", "lambda", "eps_bar", "eps", "w", "z", "a", "Z", "W"):
            out.declare(f"{nm}_{i}", Ogg)

    def unit_block(bar: str, val: str, label: str, i, second_ext: str):
        t = (lambda part: tag(label, None if i is None else "i", i, part))
        _norm_one(out, bar, "KinfE1L/LKinf", t("norm1"))
        _norm_one(out, bar, second_ext, t("norm2"))
        out.add_opaque("NONZERO", [_v(bar) - 1], t("ne1"))
        out.add_opaque("NONZERO", [_v(bar) + 1], t("ne-1"))
        out.add_equation(_v(val) - _v(bar) ** (2 * h), t(None))

    unit_block("nu_bar", "nu", "eq:1", None, "KinfE1L/EKinf")
    for i in idx:
        unit_block(f"lambda_bar_{i}", f"lambda_{i}", "eq:2", i, "KinfE1L/EKinf")
    for i in idx:
        unit_block(f"eps_bar_{i}", f"eps_{i}", "eq:3", i, "KinfE1L/E1Kinf")
    for i in idx:
        xi, yi = _v(f"x_{i}"), _v(f"y_{i}")
        out.add_equation(_v(f"lambda_{i}") - 1 - (nu - 1) * _v(f"z_{i}"), tag("eq:4", "i", i))
        out.add_equation(_v(f"eps_{i}") - 1 - (nu - 1) * _v(f"w_{i}"), tag("eq:5", "i", i))
        out.add_equation(xi - _v(f"z_{i}") - (nu - 1) * _v(f"Z_{i}"), tag("eq:6", "i", i))
        out.add_equation(nu - 1 - xi ** 2 * _v(f"a_{i}"), tag("eq:7", "i", i))
        out.add_equation(xi - _poly_at(Q, MPoly.const(u) * y + shifts[i]), tag("eq:8", "i", i))
        out.add_equation(yi - xi ** h, tag("eq:8.1", "i", i))
        out.add_opaque("ABS_GREATER", [yi], tag("eq:9", "i", i), bound="1", embeddings="all")
        out.add_equation(yi - _v(f"w_{i}") - yi ** (2 * int(A)) * (C * D) * _v(f"W_{i}"), tag("eq:10", "i", i))
    out.add_opaque("I_FAMILY", [y, _v("t1")], tag("eq:8.2"), family="I_{S_K/Kinf}")
    out.meta.update({"system": TOTREAL, "params": params.to_dict(), "shifts": [int(s) for s in shifts],
                     "blocks": count})
    return out


ASSEMBLERS = {EXT2NF: assemble_ext2nf, INF2: assemble_inf2, TOTREAL: assemble_totreal}


def expected_labels(system: str, params: SystemParams) -> Counter:
    """The label multiset a system must carry: each label once per index value."""
    K = 2 * params.p2 * params.n
    ranges = {
        INF2: {"i": range(1, 5), "j": range(1, 3)},
        EXT2NF: {"k": range(K + 1), "i": range(K + 1), "j": range(K + 1)},
        TOTREAL: {"i": range(params.class_number_inputs.get("h_LE1", 1) * params.p2 + 1)},
    }[system]
    out = Counter()
    for label, idx in LABELS[system]:
        if idx is None:
            out[tag(label)] += 1
        else:
            for v in ranges[idx]:
                out[tag(label, idx, v)] += 1
    return out


def emitted_labels(system: PolySystem) -> Counter:
    """Distinct base tags, each counted once."""
    return Counter(set(base_tag(t) for t in system.all_tags()))


# -- oracles and round trips ---------------------------------------------------------


def _abs_bounds_oracle(x1, w, Q=None, B=None, **_):
    """1 <= |sigma(x1)| <= Q(B + sigma(w)^2) at real embeddings; exact for rational data."""
    Qp = Poly.from_json(Q)
    Bv = as_rat(B)
    vals = []
    for v in (x1, w):
        if isinstance(v, NFElement):
            if not v.is_rational():
                return None
            v = v.to_rat()
        vals.append(as_rat(v))
    a, b = vals
    upper = Qp(Bv + b * b)
    return 1 <= abs(a) <= upper


_abs_bounds_oracle.uses_params = True


def _abs_greater_oracle(y, bound="1", **_):
    c = as_rat(bound)
    if isinstance(y, NFElement):
        return all(compare_abs(y, i, c) > 0 for i in range(y.field.degree))
    return abs(as_rat(y)) > c


_abs_greater_oracle.uses_params = True


def _integral_at_oracle(x, primes="", **_):
    ps = [int(p) for p in str(primes).split(",") if p.strip().lstrip("-").isdigit()]
    if not ps:
        return None
    for p in ps:
        if isinstance(x, NFElement):
            if any(v < 0 for v in valuations_at(x, p)):
                return False
        elif as_rat(x) != 0 and padic_valuation(p, as_rat(x)) < 0:
            return False
    return True


_integral_at_oracle.uses_params = True

ASSEMBLER_ORACLES = dict(INTEGER_ORACLES, ABS_BOUNDS=_abs_bounds_oracle, ABS_GREATER=_abs_greater_oracle,
                         INTEGRAL_AT=_integral_at_oracle)


def toy_roundtrip(system: PolySystem, assignment, oracles=None) -> EvalReport:
    """Evaluate every equation whose variables are assigned; opaque nodes without an oracle are SKIPPED."""
    return evaluate(system, assignment, ASSEMBLER_ORACLES if oracles is None else oracles, skip_missing=True)


def _resolve_primes(system: PolySystem, primes: str) -> PolySystem:
    """Replace the symbolic prime set of INTEGRAL_AT nodes by explicit rational primes."""
    from .rewrite.system import OpaqueNode

    nodes = []
    for n in system.opaque:
        if n.kind == "INTEGRAL_AT":
            ps = tuple(sorted(({k: v for k, v in n.params} | {"primes": primes}).items()))
            n = OpaqueNode(n.kind, n.args, n.tag, ps)
        nodes.append(n)
    return PolySystem(list(system.variables), list(system.equations), list(system.tags), nodes, dict(system.meta))


def toy_witness(system_name: str, params: SystemParams | None = None, x0: int = 1):
    """A recorded assignment for the toy parameters, with values in Q(sqrt 5) for delta.

    inf2: every polynomial equation holds, unit conditions use powers of the
    norm-one unit 9 + 4 sqrt 5, and the bound and integrality nodes are
    checkable; NORM_ONE and DIVIDES over the big order have no oracle.
    ext2nf: x, the x_k and the unit chain are assigned.
    totreal: y, the x_i and the y_i are assigned.
    """
    params = params or toy_params()
    H = NumberField(Poly([-5, 0, 1]))
    delta = H.gen()
    eps0 = H.element([9, 4])
    Q = params.Q
    m = params.m
    if system_name == INF2:
        x1 = Q(Fraction(x0))
        eps = {1: eps0, 2: eps0**2, 3: eps0**3}
        eps[4] = eps[3] ** int(x1) if x1 > 0 else eps[3].inverse() ** int(-x1)
        gam = {i: e**m for i, e in eps.items()}
        a1b1 = (gam[2] - 1) / (gam[1] - 1)
        a2b2 = (gam[4] - 1) / (gam[3] - 1)
        c, d = gam[3].coords
        uv = (x1 - a2b2) / (gam[3] - 1)
        asg = {"x0": Fraction(x0), "x1": x1, DELTA: delta, "c": c, "d": d,
               "a1": a1b1.coords[0], "b1": -a1b1.coords[1], "a2": a2b2.coords[0], "b2": -a2b2.coords[1],
               "u": uv.coords[0], "v": uv.coords[1]}
        for i in range(1, 5):
            asg[f"eps{i}"] = eps[i]
            asg[f"gamma{i}"] = gam[i]
        return asg
    if system_name == EXT2NF:
        K = 2 * params.p2 * params.n
        x = Fraction(x0)
        asg = {"x": x, "x0": x, DELTA: delta}
        for k in range(K + 1):
            asg[f"x_{k}"] = Q(x + 8 * params.l * (k + 1))
        g0 = eps0**m
        for i in range(K + 1):
            asg[f"eps_{i}"] = eps0 ** (i + 1)
            asg[f"gamma_{i}"] = g0 ** (i + 1)
        asg[f"gamma_{K + 1}"] = g0 ** (K + 2)
        for j in range(K + 1):
            q = (asg[f"gamma_{j + 1}"] - 1) / (g0 - 1)
            asg[f"a_{j}"], asg[f"b_{j}"] = q.coords[0], -q.coords[1]
        asg["c"], asg["d"] = g0.coords
        return asg
    if system_name == TOTREAL:
        h = params.class_number_inputs["h_LE1"]
        count = h * params.p2 + 1
        shifts = list(params.shifts) or totreal_shifts(Q, count, params.B)
        u = as_rat(params.constants["u"])
        y = Fraction(x0)
        asg = {"y": y}
        for i in range(count):
            xi = Q(u * y + shifts[i])
            asg[f"x_{i}"] = xi
            asg[f"y_{i}"] = xi**h
        return asg
    raise ValueError(f"unknown system {system_name!r}")


def toy_system(system_name: str, params: SystemParams | None = None) -> PolySystem:
    """The toy system with the supplement's prime set made explicit (the primes of N_E)."""
    params = params or toy_params()
    sysm = ASSEMBLERS[system_name](params)
    from .exact_arith.integers import factorint

    primes = ",".join(str(p) for p in sorted(factorint(params.N_E)))
    return _resolve_primes(sysm, primes) if primes else sysm
