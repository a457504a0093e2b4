import math

import pytest

import conformal_type_lab as ctl


def singletons(spg):
    ids = [line.split()[1] for line in spg.splitlines() if line.startswith("v ")]
    return "".join(f"piece {v} {v}\n" for v in ids)


def test_closed_mean_excess_is_two_over_n():
    for n in range(1, 5):
        spg = ctl.generate("closed", q=3, n=n)
        assert ctl.validate(spg)["valid"]
        rows = ctl.mean_excess(spg, "v0", 10)
        last = rows[-1]["mean"]
        assert (last["num"], last["den"]) == (2 // math.gcd(2, n), n // math.gcd(2, n))


def test_certify_t2_on_all_infinite_complex():
    spg = ctl.generate("regular", q=3, m=["inf", "inf", "inf"], radius=2)
    cert = ctl.certify_t2(spg, singletons(spg), "1", 1)
    assert cert["verdict"] == "hyperbolic"
    assert set(cert) >= {"verdict", "theorem", "eps", "M", "pieces", "witness"}
    assert ctl.certify_t2(spg, singletons(spg), "3/2", 1)["verdict"] == "conditions-violated"
    assert ctl.certify_tfinal(spg, "1", 2)["verdict"] == "hyperbolic"


def test_partition_round_trip_through_certify():
    spg = ctl.generate("closed", q=3, n=3)
    gpt = ctl.partition(spg, 2)
    assert gpt.startswith("piece")
    assert ctl.certify_t2(spg, gpt, "1/2", 36)["verdict"] == "conditions-violated"


def test_tiling_checks():
    tlg = ctl.regular_tiling(7, 2)
    assert ctl.check_tiling(tlg, 0.14, 1)["verdict"] == "hyperbolic"
    assert "R1" in ctl.check_tiling(ctl.export_tiling(0.1, 1, 1), 0.1, 1)["violations"]


def test_spherical_numbers():
    assert abs(ctl.r_q_eps(2, 0) - math.atan(2 * math.sqrt(2))) < 1e-12
    assert abs(ctl.r_q_eps(2.5, 0) - ctl.circumradius_oracle(math.pi * 2.5 / 3)) < 1e-9


def test_ledger_and_identity():
    led = ctl.constants_pi("1/6", 1, 0.0)
    c_length = next(e for e in led["entries"] if e["name"] == "C_length")
    assert c_length["exact"] == {"num": 2, "den": 1}
    h = ctl.half_sheet_identity(3, ["2", "3", "5"])
    assert h["residual"] == {"num": 0, "den": 1}


def test_record_modules():
    rec = ctl.record(0.1, 3)
    assert rec["log_areas_within_eps"]
    assert len(rec["stages"]) == 3
    for stage in rec["stages"]:
        bound = stage["module_bound"]
        assert bound["num"] >= stage["n"] * bound["den"]


def test_errors_raise():
    with pytest.raises(ctl.CtlError):
        ctl.validate("spg 1 q=3\nv a o\ne a b 1\n")
    with pytest.raises(ValueError):
        ctl.r_q_eps(3, 5)
