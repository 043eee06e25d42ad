"""Lattice layer: submodule enumeration against a power-set brute force,
multiplicative-set enumeration, decompositions, counterexample search."""
import math

import pytest

from absorb.errors import SizeBoundError
from absorb.lattice import (
    all_ideals,
    all_multiplicative_sets,
    all_submodules,
    decomposition_check,
    search_counterexample,
)
from absorb.modules import CyclicModule, ProductModule, span
from absorb.rings import IdealizationRing, make_zmod


def _brute_force_submodules(M):
    """All subsets closed under +, -, and the action; |M| <= 16 only."""
    n = M.order
    found = set()
    for bits in range(1 << n):
        if not (bits >> M.zero) & 1:
            continue
        members = [x for x in range(n) if (bits >> x) & 1]
        ok = all(
            (bits >> M.add(x, y)) & 1 for x in members for y in members
        ) and all((bits >> M.act(r, x)) & 1 for r in range(M.ring.order) for x in members)
        if ok:
            found.add(bits)
    return found


@pytest.mark.parametrize("n", [2, 3, 4, 6, 8, 12, 16])
def test_all_submodules_matches_power_set_brute_force_zn(n):
    M = make_zmod(n).as_module
    got = {N.mask for N in all_submodules(M).members}
    assert got == _brute_force_submodules(M)


def test_all_submodules_matches_brute_force_product():
    R = make_zmod(6)
    M = ProductModule(CyclicModule(R, 2), CyclicModule(R, 3))
    assert {N.mask for N in all_submodules(M).members} == _brute_force_submodules(M)


def test_all_submodules_matches_brute_force_idealization():
    A = IdealizationRing(make_zmod(2), make_zmod(2).as_module)
    M = A.as_module
    assert {N.mask for N in all_submodules(M).members} == _brute_force_submodules(M)


def _divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


@pytest.mark.parametrize("n", [2, 7, 12, 24, 36, 60])
def test_zn_submodule_count_is_divisor_count(n):
    M = make_zmod(n).as_module
    assert len(all_submodules(M).members) == _divisor_count(n)


def test_size_bound_enforced():
    # fresh module instance so no previously cached lattice can answer
    M = CyclicModule(make_zmod(12), 12)
    with pytest.raises(SizeBoundError):
        all_submodules(M, bound=3)


def test_all_ideals_is_submodules_of_self_module():
    R = make_zmod(18)
    assert {I.mask for I in all_ideals(R).members} == {
        N.mask for N in all_submodules(R.as_module).members
    }


def test_proper_excludes_full():
    M = make_zmod(12).as_module
    lat = all_submodules(M)
    full_mask = (1 << 12) - 1
    assert all(N.mask != full_mask for N in lat.proper)
    assert len(lat.proper) == len(lat.members) - 1


def test_maximal_members():
    M = make_zmod(12).as_module
    lat = all_submodules(M)
    maximal = {N.indices for N in lat.maximal_members()}
    assert maximal == {tuple(range(0, 12, 2)), tuple(range(0, 12, 3))}


def test_all_multiplicative_sets_are_closed_and_contain_one():
    R = make_zmod(12)
    sets = all_multiplicative_sets(R)
    seen = set()
    for S in sets:
        assert 1 in S.indices
        for a in S.indices:
            for b in S.indices:
                assert R.mul(a, b) in S.indices
        assert S.indices not in seen
        seen.add(S.indices)
    # every closed subset containing 1 appears
    brute = set()
    for bits in range(1 << 12):
        if not (bits >> 1) & 1:
            continue
        members = [a for a in range(12) if (bits >> a) & 1]
        if all((bits >> R.mul(a, b)) & 1 for a in members for b in members):
            brute.add(tuple(members))
    assert seen == brute


def test_decomposition_z24():
    M = make_zmod(24).as_module
    rep = decomposition_check(span(M, [12]))
    assert rep.holds
    factor_sets = {frozenset(f.indices) for f in rep.factors}
    assert frozenset(range(0, 24, 3)) in factor_sets or frozenset(range(0, 24, 4)) in factor_sets
    inter = (1 << 24) - 1
    for f in rep.factors:
        inter &= f.mask
    assert inter == span(M, [12]).mask


def test_decomposition_every_proper_submodule_of_z30():
    M = make_zmod(30).as_module
    for N in all_submodules(M).proper:
        assert decomposition_check(N).holds


def test_search_counterexample_finds_z21():
    mods = [make_zmod(n).as_module for n in (7, 9, 21)]
    hit = search_counterexample("gsdf", mods)
    assert hit is not None
    assert hit.module.ring.order == 21
    assert not hit.report.holds
    assert hit.report.witness.as_tuple() == (5, 2, 1)
    # and nothing in the family satisfies prime = False + gsdf = True filter
    assert search_counterexample("gsdf", [make_zmod(7).as_module]) is None
