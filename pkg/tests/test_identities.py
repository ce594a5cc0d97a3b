import json

import pytest

from fullrank import identities as I
from fullrank.partitions import Partition, enumerate_partitions, rank


def passes(report):
    assert report.passed, (report.first_discrepancy, report.details)
    return report


# -- adjacent differences ---------------------------------------------------------


@pytest.mark.parametrize("t,r,order", [(5, 0, 120), (9, 2, 80), (7, 4, 120)])
def test_prop_3_1_examples(t, r, order):
    passes(I.verify_prop_3_1(t, r, order))


def test_prop_3_1_records_the_f3_term():
    # with 3 | t the extra term is computed, not assumed; f_3(0,1) does not vanish
    from fullrank.genfun import f_diff

    assert not f_diff(3, 0, 1, 20).is_zero()
    assert f_diff(3, 0, 1, 6).coefficients() == [0, 0, 1, -2, 1, 3, -5]
    passes(I.verify_prop_3_1(15, 1, 60))


def test_prop_3_1_rejects_even_t():
    with pytest.raises(I.PreconditionError):
        I.verify_prop_3_1(6, 1, 10)


@pytest.mark.parametrize("t,r,order", [(5, 1, 60), (7, 4, 120), (11, 13, 100)])
def test_prop_3_2_examples(t, r, order):
    passes(I.verify_prop_3_2(t, r, order))


def test_prop_3_2_preconditions():
    for t, r in [(5, 2), (5, 17), (6, 4), (5, 0)]:
        with pytest.raises(I.PreconditionError):
            I.verify_prop_3_2(t, r, 10)


def test_cor_and_lemma_examples():
    passes(I.verify_cor_3_3(9, 100))
    passes(I.verify_lemma_3_4(13, 10, 100))
    passes(I.verify_lemma_3_4(5, 4, 60))
    with pytest.raises(I.PreconditionError):
        I.verify_lemma_3_4(5, 1, 10)


def test_prop_3_1_negative_control():
    # with constant weights the right side telescopes to zero, the left side does not
    from fullrank.genfun import f_mod

    t, r, order = 7, 0, 60
    lhs = f_mod(t, r, r + 1, order) * t
    rhs = I._g_weighted(t, ((1, r - 1 - 3 * m, 4 * (r - 1 - 3 * m)) for m in range(t)), order)
    assert lhs != rhs


# -- classes 1 and 2 for even t --------------------------------------------------------


@pytest.mark.parametrize("t", [2, 4, 6, 8, 10])
def test_prop_4_1_and_equality_set(t):
    passes(I.verify_prop_4_1(t, 150))
    report = passes(I.verify_thm_1_3_2(t, 150))
    assert report.details["zeros"] == list(range(t // 2 + 1)) + [t // 2 + 2]


def test_prop_4_1_rejects_odd_t():
    with pytest.raises(I.PreconditionError):
        I.verify_prop_4_1(5, 10)


def test_rank_half_witnesses():
    assert I.rank_half_witness(4, 5) == Partition((4, 1))
    assert rank(I.rank_half_witness(4, 7)) == 2
    assert I.rank_half_witness(4, 4) is None
    assert not [p for p in enumerate_partitions(4) if abs(rank(p)) == 2]
    passes(I.verify_rank_t2_witnesses(4, 40))
    passes(I.verify_rank_t2_witnesses(6, 40))


def test_exact_full_rank_one_and_two():
    report = passes(I.verify_thm_1_3_3(40, enumeration_order=18))
    assert report.params["series_modulus"] == 83


# -- t = 5 and t = 7 ------------------------------------------------------------------------


@pytest.mark.parametrize("part", [1, 2, 3])
def test_thm_5_1(part):
    passes(I.verify_thm_5_1(part, 100))


@pytest.mark.parametrize("part", [1, 2, 3, 4])
def test_thm_5_2(part):
    passes(I.verify_thm_5_2(part, 100))


def test_products_have_constant_term_one():
    for den in ((2, 3), (3, 2)):
        assert I.progression_product(50, 5, den)[0] == 1
    for den in ((2, 5), (3, 4)):
        assert I.progression_product(50, 7, den)[0] == 1


def test_class_three_sign():
    # f_{7,3}(0,1) is the negated product; the product itself has positive constant term
    f = I._f_cls(7, 0, 1, 3, 40)
    prod = I.progression_product(40, 7, (2, 5))
    assert f == -prod
    assert f[0] == -1


def test_thm_5_parts_validated():
    with pytest.raises(I.PreconditionError):
        I.verify_thm_5_1(4, 10)
    with pytest.raises(I.PreconditionError):
        I.verify_thm_5_2(0, 10)


def test_thm_5_1_negative_control():
    # the product for class 5n+2 is not the class 5n+3 series
    assert I._f_cls(5, 0, 1, 3, 30) != I.progression_product(30, 5, (2, 3))


# -- t = 4 and the rank 2 mod 4 map ---------------------------------------------------------


def test_f4_decomposition():
    passes(I.verify_f4_decomposition(200))


def test_refined_andrews_lewis():
    report = passes(I.verify_refined_andrews_lewis(100))
    assert report.details["violations_below_5"] == [1, 2, 3, 4]
    with pytest.raises(I.PreconditionError):
        I.verify_refined_andrews_lewis(4)


def test_refined_window_at_size_nine():
    counts = {1: 0, 2: 0}
    for p in enumerate_partitions(9):
        if rank(p) % 4 in counts:
            counts[rank(p) % 4] += 1
    assert counts[1] < counts[2] < 2 * counts[1]


def test_injection_domain_errors():
    with pytest.raises(I.InjectionError):
        I.injection_map(Partition((12,)))  # even n
    with pytest.raises(I.InjectionError):
        I.injection_map(Partition((11,)))  # n < 13
    with pytest.raises(I.InjectionError):
        I.injection_map(Partition((13,)))  # rank 12 = 0 mod 4


def test_injection_rules():
    # rule (1): (15) has rank 14 = 2 mod 4 and no second part
    assert I.injection_case(Partition((15,))) == 1
    assert I.injection_map(Partition((15,))) == Partition((13, 2))
    # rule (2): (3, 1^12) has rank 3 - 13 = -10 = 2 mod 4
    p = Partition((3,) + (1,) * 12)
    assert I.injection_case(p) == 2
    assert I.injection_map(p) == Partition((4, 4) + (1,) * 7)
    # rule (3)
    p = Partition((5, 5, 3))
    assert I.injection_case(p) == 3
    assert I.injection_map(p) == Partition((5, 4, 3, 1))
    # rule (4): (2, 1^11) has rank 2 - 12 = -10
    p = Partition((2,) + (1,) * 11)
    assert I.injection_case(p) == 4
    assert I.injection_map(p) == Partition((8, 4, 1))


def test_injection_rules_needing_ones_are_always_satisfiable():
    # rules (2) and (4) need four resp. nine further parts 1; the domain always supplies them
    for n in range(13, 40, 2):
        for p in I.injection_domain(n):
            if I.injection_case(p) in (2, 4):
                I.injection_map(p)


@pytest.mark.parametrize("n", range(13, 36, 2))
def test_injection_image_properties(n):
    info = I.injection_survey(n)
    assert info["odd_rank_images"]
    assert info["cases_disjoint"]
    assert info["witness_outside_image"]
    assert info["rank_classes_by_case"][1] == [3]
    assert info["rank_classes_by_case"][3] == [1]


def test_injection_collision_example():
    # two partitions of 13 share an image under rule (3)
    a, b = Partition((5, 5, 3)), Partition((5, 4, 4))
    assert rank(a) % 4 == rank(b) % 4 == 2
    assert I.injection_map(a) == I.injection_map(b)


def test_non_image_witness():
    for n in range(13, 60, 2):
        w = I.non_image_witness(n)
        assert w.n == n and rank(w) % 2 == 1 and min(w.parts) > 2


# -- scans ------------------------------------------------------------------------------------


def test_scan_t4_even_class():
    scan = I.scan_inequality(4, 0, 2, 0, 300, by_class=False)
    assert scan.window == (0, 300)
    even = [(n, v) for n, v in scan[None].values if n % 2 == 0]
    assert all(v > 0 for n, v in even if n >= 2)


def test_scan_t7_class_zero():
    scan = I.scan_inequality(7, 0, 1, 0, 300, by_class=True)
    pattern = scan[0]
    assert pattern.pattern == I.POSITIVE
    assert pattern.n0 <= 140
    assert all(v > 0 for n, v in pattern.values if n >= 140)


def test_scan_identically_zero_for_odd_t():
    for t in (5, 7, 9):
        scan = I.scan_inequality(t, 1, 2, 0, 200)
        assert scan[None].pattern == I.ZERO


def test_scan_t4_one_two():
    scan = I.scan_inequality(4, 1, 2, 0, 200)
    assert scan[None].pattern == I.NEGATIVE
    assert scan[None].zeros == (0, 1, 2, 4)
    assert scan[None].n0 == 5


def test_scan_minimal_n0():
    scan = I.scan_inequality(11, 0, 3, 0, 300)
    pat = scan[None]
    assert pat.pattern == I.POSITIVE
    tail = [v for n, v in pat.values if n >= pat.n0]
    assert all(v > 0 for v in tail)
    before = [v for n, v in pat.values if n == pat.n0 - 1]
    assert before and before[0] <= 0


def test_scan_mixed_and_window_errors():
    pat = I._classify(None, [(0, 1), (1, -1), (2, 0)])
    assert pat.pattern == I.MIXED and pat.n0 is None
    with pytest.raises(ValueError):
        I.scan_inequality(5, 0, 1, 10, 5)


def test_scan_serialization():
    scan = I.scan_inequality(5, 0, 1, 0, 30, by_class=True)
    payload = json.loads(scan.to_json())
    assert payload["t"] == 5 and payload["window"] == [0, 30] and len(payload["classes"]) == 5
    assert {c["pattern"] for c in payload["classes"]} <= {I.POSITIVE, I.NEGATIVE, I.ZERO, I.MIXED}


# -- sign claims ---------------------------------------------------------------------------------


def test_t4_sign_claims():
    passes(I.verify_signs_t4(300))


def test_t5_t7_sign_claims_other_than_the_contradicted_one():
    bad = "NF2(0,7;7k+6) < NF2(3,7;7k+6), k>=2"
    for claim in I.SIGN_CLAIMS["signs-t5-t7"]:
        ok, n, v = I.check_sign_claim(claim, 300)
        if claim.describe() == bad:
            continue
        assert ok, (claim.describe(), n, v)


def test_claim_indices():
    claim = I.SignClaim("x", 7, 0, 1, 7, 0, ">", (20, None))
    assert claim.indices(300) == list(range(20, 43))
    claim = I.SignClaim("x", 4, 0, 1, 2, 1, "=", (0, 2))
    assert claim.indices(3) == [0]


# -- structural ----------------------------------------------------------------------------------


def test_structural_checks():
    for t in range(2, 9):
        passes(I.verify_r2_equivalence(t, 60))
    passes(I.verify_pentagonal(300))
    for t in range(2, 31):
        passes(I.verify_zetainv(t))


def test_oracles():
    passes(I.verify_nf2_oracle(4, 12))
    passes(I.verify_rank_oracle(6, 50))


# -- reports and registry ------------------------------------------------------------------------


def test_report_json_shape():
    report = I.verify_thm_1_3_1(5, 20)
    payload = json.loads(report.to_json())
    assert list(payload) == ["id", "params", "order", "status", "first_discrepancy"]
    assert payload == {"id": "thm1.3.1", "params": {"t": 5}, "order": 20, "status": "pass", "first_discrepancy": None}


def test_failing_report_needs_discrepancy():
    with pytest.raises(ValueError):
        I.VerificationReport("x", {}, 1, I.FAIL)


def test_failing_report_carries_first_discrepancy():
    report = I.verify_injection(13)
    assert report.status == I.FAIL
    assert report.first_discrepancy == {"n": 13, "lhs": "(5,5,3) -> (5,4,3,1)", "rhs": "(5,4,4) -> (5,4,3,1)"}


def test_window_status():
    report = I.verify_tail_positivity(11, 200)
    assert report.status.startswith("pass-with-window(")
    assert set(report.details["n0"]) == {f"{r},{s}" for r in range(6) for s in range(r + 1, 6)} - {"1,2"}


def test_registry_ids():
    required = {
        "prop3.1", "prop3.2", "cor3.3", "lemma3.4", "prop4.1", "thm1.3.1", "thm1.3.2", "thm1.3.3",
        "thm5.1.1", "thm5.1.2", "thm5.1.3", "thm5.2.1", "thm5.2.2", "thm5.2.3", "thm5.2.4", "f4",
        "andrews-lewis-refined", "injection", "r2-equiv", "r2-expand", "partial-fraction", "pentagonal", "zetainv",
    }
    assert required <= set(I.REGISTRY)
    with pytest.raises(KeyError):
        I.run_check("nonsense", 10)


def test_run_check_with_parameters():
    (report,) = I.run_check("prop3.1", 40, t=9, r=2)
    assert report.params == {"t": 9, "r": 2}
    with pytest.raises(I.PreconditionError):
        I.run_check("thm1.3.1", 40, t=4)


def test_run_all_is_ordered_and_idempotent():
    ids = ["zetainv", "pentagonal", "thm1.3.1", "r2-equiv"]
    a = I.reports_to_jsonl(I.run_all(30, 1, ids))
    b = I.reports_to_jsonl(I.run_all(30, 4, ids))
    assert a == b
    assert [json.loads(line)["id"] for line in a.splitlines()][0] == "zetainv"
