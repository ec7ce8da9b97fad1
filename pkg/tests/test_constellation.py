import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iac_link_abstraction.errors import (CandidateSetTooLarge, GridTooSmall,
                                         UnsupportedOrder)
from iac_link_abstraction.phy import (MibGridSpec, awgn_bit_mi,
                                      build_mib_table, load_mib_table,
                                      make_constellation, mib_inverse,
                                      mib_lookup, save_mib_table)
from iac_link_abstraction.phy.constellation import (candidate_vectors,
                                                    check_candidate_set)
from iac_link_abstraction.phy.numerics import from_db, to_db


@pytest.mark.parametrize('order', [4, 16, 64])
def test_constellation_has_unit_average_power(order):
    constellation = make_constellation(order)
    assert np.mean(np.abs(constellation.points) ** 2) == pytest.approx(1.0, abs=1e-12)
    assert constellation.bits_per_symbol == int(np.log2(order))


@pytest.mark.parametrize('order', [4, 16, 64])
def test_nearest_neighbors_differ_in_one_bit(order):
    constellation = make_constellation(order)
    points = constellation.points
    distances = np.abs(points[:, None] - points[None, :])
    np.fill_diagonal(distances, np.inf)
    nearest = distances.min()
    for i, j in zip(*np.nonzero(np.isclose(distances, nearest))):
        assert bin(i ^ j).count('1') == 1


@pytest.mark.parametrize('order', [2, 8, 32, 256])
def test_unsupported_orders_are_rejected(order):
    with pytest.raises(UnsupportedOrder):
        make_constellation(order)


def test_map_bits_inverts_labeling():
    constellation = make_constellation(16)
    assert np.array_equal(constellation.map_bits(constellation.bit_matrix), constellation.points)


def test_candidate_vectors_enumerates_all_pairs():
    labels, symbols = candidate_vectors(make_constellation(4), 2)
    assert labels.shape == (16, 2)
    assert len({tuple(row) for row in labels}) == 16
    assert symbols.shape == (16, 2)


def test_candidate_set_guard():
    qam16, qam64 = make_constellation(16), make_constellation(64)
    assert check_candidate_set(qam16, 2, qam16, 2) == 2 ** 16
    with pytest.raises(CandidateSetTooLarge):
        check_candidate_set(qam64, 2, qam64, 2)


@pytest.mark.parametrize('order', [4, 16, 64])
def test_bit_mi_vanishes_without_signal(order):
    assert awgn_bit_mi(make_constellation(order), 0.0) == pytest.approx(0.0, abs=1e-9)


def test_bit_mi_limits():
    assert awgn_bit_mi(make_constellation(4), from_db(30.0)) > 0.999
    assert awgn_bit_mi(make_constellation(64), from_db(-10.0)) <= 0.1


def test_bit_mi_quadrature_agrees_with_monte_carlo():
    qpsk = make_constellation(4)
    quadrature = awgn_bit_mi(qpsk, from_db(5.0))
    monte_carlo = awgn_bit_mi(qpsk, from_db(5.0), method='monte_carlo', n_samples=50000, seed=1)
    assert quadrature == pytest.approx(monte_carlo, abs=0.01)


def test_bit_mi_rejects_negative_snr():
    with pytest.raises(ValueError):
        awgn_bit_mi(make_constellation(4), -1.0)


def test_higher_order_needs_more_snr(qpsk_table, qam16_table):
    assert mib_inverse(qam16_table, 0.5) > mib_inverse(qpsk_table, 0.5)


def test_mib_table_spans_unit_interval(qpsk_table, qam16_table):
    for table in (qpsk_table, qam16_table):
        assert table.mib[0] <= 0.01
        assert table.mib[-1] >= 0.999
        assert np.all(np.diff(table.mib) >= 0)


def test_mib_lookup_clamps_outside_grid(qpsk_table):
    assert mib_lookup(qpsk_table, from_db(-60.0)) == qpsk_table.mib[0]
    assert mib_lookup(qpsk_table, from_db(60.0)) == qpsk_table.mib[-1]
    assert mib_lookup(qpsk_table, 0.0) == qpsk_table.mib[0]


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=-5.0, max_value=10.0))
def test_mib_roundtrip_within_a_tenth_of_a_db(qpsk_table, gamma_db):
    mib = mib_lookup(qpsk_table, from_db(gamma_db))
    assert to_db(mib_inverse(qpsk_table, mib)) == pytest.approx(gamma_db, abs=0.1)


def test_mib_inverse_clamps(qpsk_table):
    assert mib_inverse(qpsk_table, 0.0) == pytest.approx(from_db(qpsk_table.gamma_grid_db[0]))
    assert mib_inverse(qpsk_table, 1.0) == pytest.approx(from_db(qpsk_table.gamma_grid_db[-1]))


def test_grid_with_one_point_is_rejected():
    with pytest.raises(GridTooSmall):
        build_mib_table(4, MibGridSpec(min_db=0.0, max_db=0.0))


def test_mib_table_roundtrip(tmp_path, qpsk_table):
    path = tmp_path / 'mib_4.csv'
    save_mib_table(path, qpsk_table, 'sha256:abc')
    loaded = load_mib_table(path)
    assert loaded.modulation == 4
    assert np.array_equal(loaded.gamma_grid_db, qpsk_table.gamma_grid_db)
    assert np.array_equal(loaded.mib, qpsk_table.mib)
    assert loaded.settings['nodes'] == qpsk_table.settings['nodes']
