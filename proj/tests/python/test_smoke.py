import math

import pytest

import mcik


def test_config_validation():
    cfg = mcik.validate_config(mcik.SystemConfig(128, 4, 32, 16))
    assert mcik.bits_per_block(cfg) == (64, 128, 192)
    with pytest.raises(ValueError, match="power of two"):
        mcik.validate_config(mcik.SystemConfig(126, 3, 42, 4))


def test_closed_forms():
    rho = 10 ** 1.5
    q = 0.5 * math.erfc(math.sqrt(0.7 * rho / 2) / math.sqrt(2))
    assert mcik.pep_conditional(0.7, rho) == pytest.approx(q, rel=1e-14)
    assert mcik.me0_cluster(0.7, rho, 4) == pytest.approx(4.0 * q, rel=1e-14)
    k = mcik.qam_ber_constants(16)
    assert sum(k.weights) == pytest.approx(1.0)
    assert mcik.qam_awgn_ber(0.0, rho, 4) == pytest.approx(0.5)


def test_averaged_bound_methods_agree():
    cfg = mcik.SystemConfig()
    quad = mcik.average_ber_bound(10.0, cfg)
    mc = mcik.average_ber_bound(10.0, cfg, method="mc", samples=50000, seed=3)
    assert quad.std_error == 0.0
    assert abs(mc.value - quad.value) < 4 * mc.std_error
    with pytest.raises(ValueError):
        mcik.average_ber_bound(10.0, cfg, method="simpson")


def test_noiseless_point_has_no_errors():
    cfg = mcik.SystemConfig(snr_db=math.inf)
    stats = mcik.run_point(cfg, mcik.StoppingRule(1, 500), seed=9)
    assert stats.blocks == 500
    assert stats.index_bit_errors + stats.symbol_bit_errors == 0
    assert stats.total_bits == 500 * 192


def test_sweep_csv_roundtrip(tmp_path):
    cfg = mcik.SystemConfig(64, 2, 32, 4)
    stop = mcik.StoppingRule(100, 2000)
    points = mcik.run_sweep(cfg, [5.0, 10.0], stop, seed=4, workers=2)
    assert [p.snr_db for p in points] == [5.0, 10.0]
    assert points[0].ber_bound > points[1].ber_bound
    assert points[0].sim == mcik.run_point(mcik.SystemConfig(64, 2, 32, 4, 5.0), stop, 4)

    path = tmp_path / "curve.csv"
    mcik.write_csv(str(path), points, cfg, seed=4, stop=stop)
    manifest, back = mcik.read_csv(str(path))
    assert manifest["seed"] == "4"
    assert [p.sim.ber for p in back] == [p.sim.ber for p in points]

    path.write_text("not,a,valid,header\n")
    with pytest.raises(RuntimeError):
        mcik.read_csv(str(path))
