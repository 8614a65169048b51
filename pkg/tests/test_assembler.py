import dataclasses
import os
import re
import subprocess
import sys
from collections import Counter
from fractions import Fraction

import pytest

from diophkit.assembler import (
    ASSEMBLERS,
    SYSTEMS,
    SystemParams,
    base_tag,
    emitted_labels,
    expected_labels,
    shift_constants,
    tag,
    totreal_shifts,
    toy_params,
    toy_roundtrip,
    toy_system,
    toy_witness,
)
from diophkit.errors import IncompleteParams, TooManyShifts
from diophkit.exact_arith import Poly
from diophkit.rank_bounds.shifts import ShiftFamily, shift_independence

SERIALIZE = (
    "import sys\n"
    "from diophkit.assembler import toy_system\n"
    "sys.stdout.write(toy_system(sys.argv[1]).to_json())\n"
)


def _serialize_in_subprocess(name, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    out = subprocess.run([sys.executable, "-c", SERIALIZE, name], capture_output=True, env=env, check=True)
    return out.stdout


def test_tag_helpers():
    t = tag("1f", "k", 3, "coord[0]")
    assert base_tag(t) == tag("1f", "k", 3)
    assert base_tag(tag("9")) == tag("9")


@pytest.mark.parametrize("name", SYSTEMS)
def test_emitted_tags_match_expected_multiset(name):
    sysm = toy_system(name)
    sysm.validate()
    exp = expected_labels(name, toy_params())
    got = emitted_labels(sysm)
    assert got == exp
    assert all(v == 1 for v in got.values())


def _indices(labels, key):
    return sorted(int(m.group(1)) for t in labels for m in [re.search(rf"\[{key}=(\d+)\]", t)] if m)


def test_index_ranges_follow_params():
    P = toy_params()
    K = 2 * P.p2 * P.n
    ks = _indices(expected_labels("ext2nf", P), "k")
    assert ks == list(range(K + 1))
    # the inf2 indices are fixed: i runs over 1..4 and j over 1, 2
    inf = Counter(_indices(expected_labels("inf2", P), "i"))
    assert set(inf) == set(range(1, 5))
    assert set(_indices(expected_labels("inf2", P), "j")) == {1, 2}
    # totreal indices run over 0..h * p2
    for h in (1, 2):
        Ph = dataclasses.replace(P, class_number_inputs={**P.class_number_inputs, "h_LE1": h})
        assert set(_indices(expected_labels("totreal", Ph), "i")) == set(range(h * P.p2 + 1))
    bigger = dataclasses.replace(P, n=2)
    assert _indices(expected_labels("ext2nf", bigger), "k") == list(range(2 * K + 1))


@pytest.mark.parametrize("name", SYSTEMS)
def test_serialization_is_byte_stable(name):
    a = toy_system(name).to_json()
    b = toy_system(name).to_json()
    assert a == b
    assert _serialize_in_subprocess(name, 1) == _serialize_in_subprocess(name, 2) == a.encode()


@pytest.mark.parametrize("name", SYSTEMS)
def test_toy_witness_satisfies_evaluable_equations(name):
    sysm = toy_system(name)
    rep = toy_roundtrip(sysm, toy_witness(name))
    assert rep.all_green and not rep.violated
    statuses = Counter(st for _, st in rep.equations)
    assert statuses["satisfied"] > 0


@pytest.mark.parametrize("name", SYSTEMS)
def test_corrupted_witness_names_the_broken_equation(name):
    sysm = toy_system(name)
    w = toy_witness(name)
    good = {t for t, st in toy_roundtrip(sysm, w).equations if st == "satisfied"}
    hit = 0
    for var in sorted(w):
        bad = dict(w, **{var: w[var] + 1})
        rep = toy_roundtrip(sysm, bad)
        if rep.violated:
            hit += 1
            tags = set(sysm.tags) | {n.tag for n in sysm.opaque}
            assert set(rep.violated) <= tags
            # each reported tag either was satisfied before or is an opaque check
            assert all(t in good or t in {n.tag for n in sysm.opaque} for t in rep.violated)
    assert hit > 0


def test_assemblers_require_params():
    for name, build in ASSEMBLERS.items():
        with pytest.raises(IncompleteParams):
            build(SystemParams())
    with pytest.raises(IncompleteParams):
        dataclasses.replace(toy_params(), P_poly=None).Q
    with pytest.raises(IncompleteParams):
        toy_params().require("const:missing")


def test_params_roundtrip_and_check():
    P = toy_params()
    again = SystemParams.from_dict(P.to_dict())
    assert again.to_dict() == P.to_dict()
    assert again.Q == P.Q
    rep = P.check()
    assert rep["l_exceeds_roots"]
    assert Fraction(rep["B"]) == P.B
    with pytest.raises(ValueError):
        dataclasses.replace(P, l=2).check()
    with pytest.raises(ValueError):
        dataclasses.replace(P, P=15).check()
    with pytest.raises(ValueError):
        dataclasses.replace(P, constants={**P.constants, "B": 5}).check()


def test_shift_constants_examples():
    assert shift_constants(1, 1, 3, Poly([0, 0, 1])) == [0, 1]
    with pytest.raises(TooManyShifts):
        shift_constants(2, 1, 3, Poly([1, 1]))


def test_shift_constants_cubic():
    Q = Poly([-1, -3, 0, 1])
    cs = shift_constants(3, 1, 4, Q)
    assert cs == sorted(set(cs)) and cs[0] == 0
    assert shift_independence(ShiftFamily(Q, tuple(cs)))


def test_totreal_shifts_independent_and_large():
    P = toy_params()
    cs = totreal_shifts(P.Q, 3, P.B)
    assert len(cs) == 3 and len(set(cs)) == 3 and min(cs) > P.B
    assert shift_independence(ShiftFamily(P.Q, tuple(cs)))
