import math

import pytest

import bcodec


def test_rsk_round_trip():
    word = [0.6, 0.2, 0.9, 0.4]
    p, q = bcodec.rsk(word)
    assert p == [[0.2, 0.4], [0.6, 0.9]]
    assert q == [[1, 3], [2, 4]]
    assert bcodec.inverse_rsk(p, q) == word


def test_knuth_moves():
    # bac ~ bca
    assert bcodec.knuth_equivalent([0.2, 0.1, 0.3], [0.2, 0.3, 0.1])
    assert not bcodec.knuth_equivalent([0.1, 0.2, 0.3], [0.3, 0.2, 0.1])


def test_weyl_codec():
    word = bcodec.sample_realization(3, 50)
    z = bcodec.encode_weyl(word)
    assert bcodec.shift_w(z) == bcodec.encode_weyl(word[1:])
    assert 0.0 <= bcodec.decode_first_weyl(z) < 1.0
    assert bcodec.encode_weyl([0.3, 0.7, 0.1]) == [1, 2, 1]


def test_schuetzenberger_shift():
    word = bcodec.sample_realization(4, 40)
    _, q = bcodec.rsk(word)
    assert bcodec.sch_shift(q) == bcodec.rsk(word[1:])[1]
    cells, values = bcodec.nerve([[1, 2, 5], [3, 4], [6]])
    assert cells == [(1, 1), (1, 2), (2, 2)]
    assert values == [1, 2, 4]
    assert bcodec.nerve_endpoint([[1, 3], [2]]) == (2, 1)


def test_limit_shape():
    assert bcodec.omega(0.0) == pytest.approx(2 / math.pi)
    assert bcodec.r_theta(math.pi / 4) == pytest.approx(2 * math.sqrt(2) / math.pi)
    assert bcodec.arch(bcodec.r_theta(0.6), 0.6) == pytest.approx(1.0)
    assert bcodec.profile_distance([1]) > 0.0


def test_errors_carry_codes():
    with pytest.raises(bcodec.BcodecError) as info:
        bcodec.rsk([0.5, 0.5])
    assert info.value.code == "DuplicateValue"
    with pytest.raises(ValueError):
        bcodec.omega(2.0)


def test_experiments_are_deterministic():
    a = bcodec.run_decoding_experiment(500, 4, seed=9)
    b = bcodec.run_decoding_experiment(500, 4, seed=9, threads=2)
    assert a == b
    assert len(a) == 4
    assert set(a[0]) >= {"trial", "seed", "n", "x1", "weyl_estimate", "nerve_estimate"}
    shape = bcodec.run_shape_experiment(400, 2, seed=1)
    assert all(r["profile_distance"] < 0.5 for r in shape)
    arrival = bcodec.run_arrival_experiment(500, 2, seed=1, ms=[1, 5])
    assert [r["m"] for r in arrival] == [1, 5, 1, 5]
