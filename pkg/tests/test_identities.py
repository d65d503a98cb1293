import pytest

from symop import identities as idn, operators as op, partitions as pt, symfunc as sf
from symop.reporting import Failure


def test_verify_instance_basic():
    report = idn.verify_instance(
        "thm_main_1", {"alpha": (1,), "beta": (1,), "vector_bound": 3}
    )
    assert report.passed
    assert report.instances == len(pt.partitions_upto(3))


def test_one_box_relation_recovered():
    # the (1),(1) instance of the first relation is D_1 U_1 = U_1 D_1 + 1
    lhs, skew_rhs, coef_rhs = idn.normal_order_forms(1, (1,), (1,))
    direct = op.U(sf.schur((1,))) * op.D(sf.schur((1,))) + op.identity_op()
    for gamma in pt.partitions_upto(4):
        g = sf.schur(gamma)
        assert lhs.apply(g) == skew_rhs.apply(g) == coef_rhs.apply(g)
        assert skew_rhs.apply(g) == direct.apply(g)


def test_straightcorners_instance():
    report = idn.verify_instance("straightcorners", {"alpha": (2, 1)})
    assert report.passed
    want = sf.SymFunc("s", {(3,): 1, (2, 1): 1, (1, 1, 1): 1})
    assert op.apply_KB(sf.schur((1,)), sf.schur((2, 1))) == want


def test_skew_corners_instance():
    report = idn.verify_instance("skew_corners", {"alpha": (2, 1), "theta": (1,)})
    assert report.passed
    lhs = sf.kronecker(sf.skew_schur((2, 1), (1,)), sf.schur((1, 1)))
    assert lhs == sf.SymFunc("s", {(2,): 1, (1, 1): 1})


def test_unknown_identity_rejected():
    with pytest.raises(ValueError):
        idn.verify_instance("nonsense", {})
    with pytest.raises(ValueError):
        idn.run_suite(idn.Bounds(1, 1), ids=["nonsense"])


def test_malformed_params_rejected():
    with pytest.raises(ValueError):
        idn.verify_instance("thm_main_1", {"alpha": (1,)})


def test_corrupted_entry_reports_counterexample():
    # harness self-test: an entry with a deliberately flipped sign must
    # fail and carry a concrete counterexample
    def bad_check(prm):
        a = prm["alpha"]
        lhs = op.apply_KB(sf.schur((1,)), sf.schur(a))
        rhs = sf.scale(pt.noc(a) + 1, sf.schur(a))  # wrong: should be noc - 1
        for b in pt.addremove_set(a):
            rhs = sf.add(rhs, sf.schur(b))
        if lhs != rhs:
            return 1, [Failure(prm, lhs, rhs)]
        return 1, []

    entry = idn.Entry(
        "bad_straightcorners",
        "deliberately corrupted",
        lambda bounds: [{"alpha": a} for a in pt.partitions_upto(bounds.max_g)],
        bad_check,
    )
    failures = []
    checked = 0
    for prm in entry.instances(idn.Bounds(1, 3)):
        c, fl = entry.check(prm)
        checked += c
        failures += fl
    assert checked > 0 and failures
    detail = failures[0].describe()
    assert "lhs" in detail and "rhs" in detail


def test_run_suite_small_bounds_all_pass():
    reports = idn.run_suite(idn.Bounds(max_ab=1, max_g=2))
    assert [r.identity for r in reports] == list(idn.CATALOG)
    assert all(r.passed for r in reports)


def test_run_suite_subset_and_order():
    reports = idn.run_suite(idn.Bounds(1, 2), ids=["kb1", "gessel_1"])
    assert [r.identity for r in reports] == ["kb1", "gessel_1"]
    assert all(r.passed for r in reports)


def test_run_suite_threaded_matches_sequential(monkeypatch):
    seq = idn.run_suite(idn.Bounds(1, 2), ids=["kb1", "straightcorners"])
    monkeypatch.setenv("SYMOP_THREADS", "2")
    par = idn.run_suite(idn.Bounds(1, 2), ids=["kb1", "straightcorners"])
    assert [r.identity for r in par] == [r.identity for r in seq]
    assert [r.instances for r in par] == [r.instances for r in seq]
    assert all(r.passed for r in par)


def test_main_and_coefficient_forms_agree():
    for i in range(1, 7):
        for alpha in pt.partitions_upto(2):
            for beta in pt.partitions_upto(2):
                lhs, skew_rhs, coef_rhs = idn.normal_order_forms(i, alpha, beta)
                for gamma in pt.partitions_upto(3):
                    g = sf.schur(gamma)
                    val = lhs.apply(g)
                    assert skew_rhs.apply(g) == val
                    assert coef_rhs.apply(g) == val


def test_reverse_foulkes_matches_second_relation():
    # U_a D_b applied to s_g is s_a s_{g/b}; the signed skew expansion of
    # the second relation applied to s_g is the other side
    for alpha in pt.partitions_upto(3):
        for beta in pt.partitions_upto(3):
            lhs, skew_rhs, _ = idn.normal_order_forms(2, alpha, beta)
            for gamma in pt.partitions_upto(4):
                g = sf.schur(gamma)
                assert lhs.apply(g) == sf.mul(
                    sf.schur(alpha), sf.skew_schur(gamma, beta)
                )
                rf = sf.zero()
                for lam in pt.sub_partitions(alpha):
                    lamc = pt.conjugate(lam)
                    if not pt.contains(lamc, beta):
                        continue
                    sign = -1 if sum(lam) % 2 else 1
                    inner = sf.mul(sf.skew_schur(alpha, lam), g)
                    rf = sf.add(
                        rf, sf.scale(sign, sf.skew(inner, sf.skew_schur(beta, lamc)))
                    )
                assert skew_rhs.apply(g) == rf


def test_littlewood_matches_third_relation():
    for alpha in pt.partitions_upto(3):
        sa = sf.schur(alpha)
        for beta in pt.partitions_upto(3):
            lhs, _skew_rhs, _ = idn.normal_order_forms(3, alpha, beta)
            for gamma in pt.partitions_upto(4):
                g = sf.schur(gamma)
                assert lhs.apply(g) == sf.kronecker(sf.schur(beta), sf.mul(sa, g))


def test_report_json_shape():
    report = idn.verify_instance("kb1", {"vector_bound": 2})
    blob = report.to_json()
    assert blob["identity"] == "kb1"
    assert blob["passed"] is True
    assert blob["failures"] == []
