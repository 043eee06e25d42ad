"""Acceptance gate: fourteen exact, zero-tolerance criteria.

Each test prints one PASS/FAIL line.  Every criterion is checked exactly as
stated — no sampling, no tolerances."""
import time

from absorb.lattice import all_submodules
from absorb.modules import span, zero_submodule
from absorb.predicates import (
    check_property,
    is_classical_primary,
    is_gsdf_absorbing,
    is_sdf_absorbing,
    replay_witness,
)
from absorb.rings import make_zmod
from absorb.suites import classify_zn, default_family, run_suite

from conftest import naive_gsdf


def _report(num: int, desc: str, ok: bool, detail: str = ""):
    line = f"ACCEPTANCE {num:02d} [{'PASS' if ok else 'FAIL'}] {desc}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_01_zn_classification_to_300():
    t0 = time.perf_counter()
    result = classify_zn(300)
    elapsed = time.perf_counter() - t0
    ok = len(result.rows) == 299 and not result.mismatches and elapsed <= 120.0
    _report(
        1,
        "classify n<=300: 0 mismatches vs p^k / 2p^k prediction",
        ok,
        f"{len(result.mismatches)} mismatches, {elapsed:.2f}s",
    )


def test_criterion_02_six_in_z12():
    N = span(make_zmod(12).as_module, [6])
    gsdf = is_gsdf_absorbing(N)
    cp = is_classical_primary(N)
    ok = gsdf.holds and not cp.holds and cp.witness.as_tuple() == (2, 3, 1)
    _report(
        2,
        "(6) in Z_12: gsdf holds; classical-primary fails at (2,3,1)",
        ok,
        f"gsdf={gsdf.holds}, witness={cp.witness.as_tuple() if cp.witness else None}",
    )


def test_criterion_03_zero_in_z8():
    N = zero_submodule(make_zmod(8).as_module)
    gsdf = is_gsdf_absorbing(N)
    sdf = is_sdf_absorbing(N)
    ok = gsdf.holds and not sdf.holds and sdf.witness.as_tuple() == (3, 1, 1)
    _report(
        3,
        "(0) in Z_8: gsdf holds; sdf fails at (3,1,1)",
        ok,
        f"gsdf={gsdf.holds}, witness={sdf.witness.as_tuple() if sdf.witness else None}",
    )


def test_criterion_04_equivalence_suite():
    rep = run_suite("eq-equivalence")
    ok = rep.passed and rep.elapsed <= 60.0
    _report(
        4,
        "four-way equivalence: 0 violations on Z_n (n<=60) and Z_a x Z_b (a,b<=12)",
        ok,
        f"{rep.instances_checked} instances, {len(rep.violations)} violations, {rep.elapsed:.2f}s",
    )


def test_criterion_05_unit2_suite():
    rep = run_suite("unit2")
    _report(
        5,
        "odd n<=99: gsdf submodule set of Z_n equals classical-primary set",
        rep.passed,
        f"{rep.instances_checked} instances, {len(rep.violations)} violations",
    )


def test_criterion_06_maximal_prime_suite():
    rep = run_suite("maximal-prime")
    ok = rep.passed and rep.confirmations.get("z12_maximal_gsdf") == ["<2>", "<3>"]
    _report(
        6,
        "maximal gsdf submodules are prime; Z_12 maximal set is {(2),(3)}",
        ok,
        f"z12 maximal = {rep.confirmations.get('z12_maximal_gsdf')}",
    )


def test_criterion_07_decomposition_suite():
    rep = run_suite("decomposition")
    ok = rep.passed and rep.confirmations.get("z24_two_decompositions") is True
    _report(
        7,
        "decomposition holds for Z_n (n<=100); Z_24: (12)=(3)^(4)=(6)^(4), all gsdf",
        ok,
        f"{rep.instances_checked} instances",
    )


def test_criterion_08_product_suite():
    rep = run_suite("product")
    c = rep.confirmations
    ok = (
        rep.passed
        and c.get("z10xz9_not_gsdf") is True
        and c.get("z10xz9_witness_replays") is True
        and c.get("z3xz3_not_gsdf") is True
        and c.get("z3xz3_char_witness_replays") is True
    )
    _report(
        8,
        "product transport: 0 violations; Z_10 x Z_9 and Z_3 x Z_3 counterexamples replay",
        ok,
        str({k: v for k, v in c.items()}),
    )


def test_criterion_09_intersection_suite():
    rep = run_suite("intersection")
    N = zero_submodule(make_zmod(21).as_module)
    gsdf = is_gsdf_absorbing(N)
    ok = (
        rep.passed
        and not gsdf.holds
        and replay_witness("gsdf", N, 5, 2, 2)
        and rep.confirmations.get("z21_witness_5_2_2_replays") is True
    )
    _report(
        9,
        "intersection/chain-top: 0 violations; Z_21 zero fails gsdf, (5,2,2) replays",
        ok,
        f"scan witness {gsdf.witness.as_tuple() if gsdf.witness else None}, (5,2,2) replay",
    )


def test_criterion_10_idealization_suite():
    rep = run_suite("idealization")
    c = rep.confirmations
    ok = (
        rep.passed
        and c.get("z6_3x2_is_ideal") is False
        and c.get("z6_3x2_setwise_holds") is False
        and c.get("z6_3x2_witness_replays") is True
    )
    _report(
        10,
        "idealization: radical identity + transport hold; (3)|><(2) in Z_6|><Z_6 "
        "flagged non-ideal and fails set-wise at first components (2,1),(5,0)",
        ok,
        str({k: c.get(k) for k in ("z6_3x2_is_ideal", "z6_3x2_setwise_holds", "z6_3x2_witness_replays")}),
    )


def test_criterion_11_amalgamation_suite():
    rep = run_suite("amalgamation")
    _report(
        11,
        "amalgamation: N1 |><| JM2 gsdf iff N1 gsdf, all instances",
        rep.passed,
        f"{rep.instances_checked} instances, {len(rep.violations)} violations",
    )


def test_criterion_12_localization_epimorphism_quotient_suites():
    loc = run_suite("localization")
    epi = run_suite("epimorphism")
    rq = run_suite("restriction-quotient")
    conf = loc.confirmations.get("z12_s14")
    ok = (
        loc.passed
        and epi.passed
        and rq.passed
        and conf == {"idempotent": 4, "ring_order": 3}
    )
    _report(
        12,
        "localization/epimorphism/quotient transport: 0 violations; "
        "Z_12, S={1,4} gives e=4 and a 3-element ring",
        ok,
        f"z12_s14={conf}",
    )


def test_criterion_13_cross_predicate_hierarchy():
    violations = []
    checked = 0
    for M in default_family():
        for N in all_submodules(M).proper:
            checked += 1
            prime = check_property("prime", N).holds
            primary = check_property("primary", N).holds
            cprim = check_property("cprimary", N).holds
            gsdf = check_property("gsdf", N).holds
            sdf = check_property("sdf", N).holds
            if (prime and not primary) or (primary and not cprim):
                violations.append((M.name, N.indices))
            elif (cprim and not gsdf) or (sdf and not gsdf):
                violations.append((M.name, N.indices))
    _report(
        13,
        "hierarchy prime <= primary <= classical-primary <= gsdf and sdf <= gsdf",
        not violations,
        f"{checked} submodules, {len(violations)} violations",
    )


def test_criterion_14_oracle_equivalence():
    disagreements = []
    checked = 0
    seen = set()
    for M in default_family():
        if M.ring.order * M.order > 256 or M.signature in seen:
            continue
        seen.add(M.signature)
        for N in all_submodules(M).proper:
            checked += 1
            if check_property("gsdf", N).holds != naive_gsdf(N):
                disagreements.append((M.name, N.indices))
    _report(
        14,
        "optimized gsdf checker agrees with naive triple-loop oracle, |R|*|M| <= 256",
        not disagreements,
        f"{checked} submodules, {len(disagreements)} disagreements",
    )
