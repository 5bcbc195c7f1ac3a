#!/usr/bin/env python3
"""Smoke tests for the python bindings. Runs standalone or under pytest."""

import math
import os
import tempfile

import numpy as np

import olct


def grid(xmax, n):
    return (-xmax, 2.0 * xmax / n, n)


def test_params():
    p = olct.make_params(1, 1, 1, 2, 1, 0)
    assert p.main_branch()
    assert p.a == 1 and p.d == 2 and p.u0 == 1

    try:
        olct.make_params(1, 1, 1, 1)
        raise AssertionError("expected UnimodularityViolation")
    except olct.UnimodularityViolation:
        pass

    ft = olct.ft_params()
    assert (ft.a, ft.b, ft.c, ft.d) == (0.0, 1.0, -1.0, 0.0)


def test_transform_round_trip_and_parseval():
    p = olct.make_params(1, 1, 1, 2, 1, 0)
    f = olct.gen_gaussian(grid(12.0, 1024), 0.0, 1.0)
    F = olct.olct_fast(p, f)

    x = f.x
    fs = f.samples
    Fs = F.samples
    e_time = np.trapezoid(np.abs(fs) ** 2, x)
    e_spec = np.trapezoid(np.abs(Fs) ** 2, F.u)
    assert abs(e_time - e_spec) / e_time < 1e-6

    back = olct.olct_inverse(F)
    err = np.linalg.norm(back.samples - fs) / np.linalg.norm(fs)
    assert err < 1e-8

    rep = olct.verify_parseval(p, f)
    assert rep.passed


def test_convolution_theorem():
    p = olct.make_params(1, 1, 1, 2, 1, 0)
    g = grid(16.0, 512)
    f1 = olct.gen_gaussian(g, 0.3, 1.0)
    f2 = olct.gen_gaussian(g, -0.5, 0.8)

    ct = olct.convolve_time(p, f1, f2)
    cs = olct.convolve_spectral(p, f1, f2)
    err = np.linalg.norm(ct.samples - cs.samples) / np.linalg.norm(ct.samples)
    assert err < 1e-6

    rep = olct.verify_convolution_theorem(p, f1, f2)
    assert rep.passed, rep.details


def test_estimators():
    p = olct.make_params(1, 1, 1, 2, 1, 0)
    g = (-64.0, 128.0 / 4096, 4096)
    f = olct.gen_olct_bandlimited(p, g, -1.0, 1.0, 0.1)
    seq = olct.pw_bandwidth_estimate(p, f, 12)
    assert abs(seq.estimate - 1.0) < 0.05, seq.estimate


def test_filter_and_demo():
    p = olct.make_params(1, 1, 1, 2, 1, 0)
    g = grid(16.0, 1024)
    f = olct.gen_gaussian(g, 0.0, 1.0)
    ug = olct.fast_u_grid(p, 1024, g[1])
    mask = olct.design_mask(olct.FilterSpec(olct.FilterSpec.Kind.low_pass, 50.0, 0.0, 1.0), ug)
    out = olct.apply_filter(p, f, mask)
    err = np.linalg.norm(out.samples - f.samples) / np.linalg.norm(f.samples)
    assert err < 1e-6

    cfg = olct.DenoiseConfig()
    r1 = olct.demo_chirp_denoise(cfg)
    r2 = olct.demo_chirp_denoise(cfg)
    assert r1.snr.gain_db == r2.snr.gain_db
    assert r1.snr.gain_db > 10.0


def test_io_round_trip():
    f = olct.gen_noise(grid(8.0, 256), 42, 1.0)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "sig.csv")
        olct.write_signal(path, f)
        back = olct.read_signal(path)
        assert np.array_equal(back.samples, f.samples)
        assert back.dx == f.dx


def test_kernel_value():
    k = olct.kernel(olct.ft_params(), 0.0, 0.0)
    expect = (1.0 / math.sqrt(2.0 * math.pi)) * complex(
        math.cos(-math.pi / 4), math.sin(-math.pi / 4)
    )
    assert abs(k - expect) < 1e-14


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
    print("python smoke tests passed")
