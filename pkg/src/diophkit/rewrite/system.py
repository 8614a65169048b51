"""Tagged polynomial systems with opaque predicate nodes."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .mpoly import MPoly

# range descriptors; free-form strings are allowed for ring descriptors such as "O_{GM}[mu,delta]"
BASE = "base"
BASE_NONZERO = "base-nonzero"
INTEGRAL = "integral"
EXTENSION = "extension"


@dataclass(frozen=True)
class VarDecl:
    name: str
    range: str = INTEGRAL


@dataclass(frozen=True)
class OpaqueNode:
    """A predicate kept symbolic, e.g. NONZERO(x) or DIVIDES(a, b)."""

    kind: str
    args: tuple[MPoly, ...]
    tag: str
    params: tuple[tuple[str, str], ...] = ()

    def variables(self) -> set[str]:
        out = set()
        for a in self.args:
            out |= a.variables()
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "args": [a.to_json() for a in self.args],
            "tag": self.tag,
            "params": {k: v for k, v in self.params},
        }

    @classmethod
    def from_json(cls, data) -> "OpaqueNode":
        return cls(
            data["kind"],
            tuple(MPoly.from_json(a) for a in data["args"]),
            data["tag"],
            tuple(sorted((str(k), str(v)) for k, v in data.get("params", {}).items())),
        )


@dataclass
class PolySystem:
    variables: list[VarDecl] = field(default_factory=list)
    equations: list[MPoly] = field(default_factory=list)
    tags: list[str] = field(default_factory=list)
    opaque: list[OpaqueNode] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    # -- building -----------------------------------------------------------
    def declare(self, name: str, range_: str = INTEGRAL) -> MPoly:
        for d in self.variables:
            if d.name == name:
                if d.range != range_:
                    raise ValueError(f"variable {name} redeclared with range {range_} (was {d.range})")
                return MPoly.var(name)
        self.variables.append(VarDecl(name, range_))
        return MPoly.var(name)

    def add_equation(self, poly, tag: str) -> int:
        poly = MPoly.coerce(poly)
        self.equations.append(poly)
        self.tags.append(tag)
        return len(self.equations) - 1

    def add_opaque(self, kind: str, args: Iterable, tag: str, **params) -> OpaqueNode:
        node = OpaqueNode(kind, tuple(MPoly.coerce(a) for a in args), tag,
                          tuple(sorted((k, str(v)) for k, v in params.items())))
        self.opaque.append(node)
        return node

    def extend(self, other: "PolySystem") -> "PolySystem":
        """Conjoin another system in place; shared variable names must agree on range."""
        for d in other.variables:
            self.declare(d.name, d.range)
        self.equations.extend(other.equations)
        self.tags.extend(other.tags)
        self.opaque.extend(other.opaque)
        return self

    # -- queries --------------------------------------------------------------
    @property
    def var_names(self) -> list[str]:
        return [d.name for d in self.variables]

    def range_of(self, name: str) -> str:
        for d in self.variables:
            if d.name == name:
                return d.range
        raise KeyError(name)

    def validate(self) -> None:
        declared = set(self.var_names)
        if len(declared) != len(self.variables):
            raise ValueError("duplicate variable declarations")
        # generator symbols of a field presentation are constants, not unknowns
        declared |= set(self.meta.get("symbols", []))
        if len(self.tags) != len(self.equations):
            raise ValueError("every equation needs exactly one tag")
        for i, eq in enumerate(self.equations):
            missing = eq.variables() - declared
            if missing:
                raise ValueError(f"equation {i} ({self.tags[i]}) uses undeclared {sorted(missing)}")
        for node in self.opaque:
            missing = node.variables() - declared
            if missing:
                raise ValueError(f"opaque node {node.tag} uses undeclared {sorted(missing)}")

    def all_tags(self) -> list[str]:
        return list(self.tags) + [n.tag for n in self.opaque]

    def substitute(self, values: Mapping[str, object]) -> "PolySystem":
        """Instantiate some variables by constants; their declarations are dropped."""
        out = PolySystem(
            [d for d in self.variables if d.name not in values],
            [eq.subs(values) for eq in self.equations],
            list(self.tags),
            [OpaqueNode(n.kind, tuple(a.subs(values) for a in n.args), n.tag, n.params) for n in self.opaque],
            dict(self.meta),
        )
        return out

    # -- serialization -----------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "vars": [{"name": d.name, "range": d.range} for d in self.variables],
            "eqs": [eq.to_json() for eq in self.equations],
            "tags": {str(i): t for i, t in enumerate(self.tags)},
            "opaque": [n.to_json() for n in self.opaque],
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data) -> "PolySystem":
        if isinstance(data, str):
            data = json.loads(data)
        eqs = [MPoly.from_json(e) for e in data.get("eqs", [])]
        tag_map = data.get("tags", {})
        if isinstance(tag_map, list):
            tags = list(tag_map)
        else:
            tags = [tag_map[str(i)] for i in range(len(eqs))]
        return cls(
            [VarDecl(v["name"], v.get("range", INTEGRAL)) for v in data.get("vars", [])],
            eqs,
            tags,
            [OpaqueNode.from_json(n) for n in data.get("opaque", [])],
            dict(data.get("meta", {})),
        )

    from_json = from_dict


# -- evaluation -------------------------------------------------------------------

SATISFIED = "satisfied"
VIOLATED = "violated"
SKIPPED = "SKIPPED"


def _as_int(v):
    from fractions import Fraction

    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return None


def _relprime_oracle(a, b):
    from math import gcd

    ia, ib = _as_int(a), _as_int(b)
    if ia is None or ib is None:
        return None
    return gcd(ia, ib) == 1


def _divides_oracle(a, b):
    ia, ib = _as_int(a), _as_int(b)
    if ia is None or ib is None:
        return None
    if ia == 0:
        return ib == 0
    return ib % ia == 0


def _is_zero(v) -> bool:
    if hasattr(v, "is_zero"):
        return v.is_zero()
    return v == 0


DEFAULT_ORACLES: dict[str, Callable] = {
    "NONZERO": lambda x: not _is_zero(x),
    "RELPRIME": _relprime_oracle,
}

INTEGER_ORACLES: dict[str, Callable] = dict(DEFAULT_ORACLES, DIVIDES=_divides_oracle)


@dataclass
class EvalReport:
    equations: list[tuple[str, str]]
    opaque: list[tuple[str, str, str]]

    @property
    def violated(self) -> list[str]:
        return [t for t, s in self.equations if s == VIOLATED] + [t for t, s, _ in self.opaque if s == VIOLATED]

    @property
    def skipped(self) -> list[str]:
        return [t for t, s in self.equations if s == SKIPPED] + [t for t, s, _ in self.opaque if s == SKIPPED]

    @property
    def all_green(self) -> bool:
        return not self.violated

    def to_json(self) -> dict:
        return {
            "equations": [{"tag": t, "status": s} for t, s in self.equations],
            "opaque": [{"tag": t, "status": s, "reason": r} for t, s, r in self.opaque],
            "violated": self.violated,
            "all_green": self.all_green,
        }


def evaluate(system: PolySystem, assignment: Mapping[str, object], oracles: Mapping[str, Callable] | None = None,
             skip_missing: bool = False) -> EvalReport:
    """Per-equation and per-node status under an assignment.

    Equations using unassigned variables are SKIPPED when ``skip_missing`` is
    set (otherwise a KeyError propagates).  Opaque nodes without an oracle,
    or whose oracle returns None, are SKIPPED with a reason.
    """
    oracles = DEFAULT_ORACLES if oracles is None else oracles
    eq_status = []
    for eq, tag in zip(system.equations, system.tags):
        if skip_missing and not eq.variables() <= set(assignment):
            eq_status.append((tag, SKIPPED))
            continue
        eq_status.append((tag, SATISFIED if _is_zero(eq.eval(assignment)) else VIOLATED))
    node_status = []
    for node in system.opaque:
        fn = oracles.get(node.kind)
        if fn is None:
            node_status.append((node.tag, SKIPPED, f"no oracle for {node.kind}"))
            continue
        if not node.variables() <= set(assignment):
            node_status.append((node.tag, SKIPPED, "arguments not assigned"))
            continue
        vals = [a.eval(assignment) for a in node.args]
        # oracles flagged with uses_params also receive the node's parameters
        res = fn(*vals, **dict(node.params)) if getattr(fn, "uses_params", False) else fn(*vals)
        if res is None:
            node_status.append((node.tag, SKIPPED, f"{node.kind} oracle undefined on these values"))
        else:
            node_status.append((node.tag, SATISFIED if res else VIOLATED, ""))
    return EvalReport(eq_status, node_status)
