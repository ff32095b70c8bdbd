import json
import numpy as np
import pytest

from spoc.errors import ContractError
from spoc.labeling import PuLabelVector
from spoc.occupancy import OccupancyVector
from spoc.outage import find_free_blocks, su_outage_probability


@pytest.mark.parametrize('labels, out_su, blocks', [
    ([0, 0, 1, 0, 0, 0], 2, [(0, 2), (3, 3)]),
    ([1, 1, 1, 1], 1, []),
    ([0, 1, 0], 2, []),
    ([0, 1, 0], 1, [(0, 1), (2, 1)]),
    ([0, 0, 0], 3, [(0, 3)]),
])
def test_find_free_blocks(labels, out_su, blocks):
    assert find_free_blocks(PuLabelVector(labels), out_su) == blocks


def brute_force_blocks(labels, out_su):
    n = len(labels)
    blocks = []
    for start in range(n):
        for stop in range(start + 1, n + 1):
            window = labels[start:stop]
            maximal = (start == 0 or labels[start - 1] == 1) and \
                (stop == n or labels[stop] == 1)
            if not any(window) and maximal and stop - start >= out_su:
                blocks.append((start, stop - start))
    return blocks


def test_blocks_match_window_enumeration():
    rng = np.random.default_rng(0)
    for _ in range(300):
        n = int(rng.integers(1, 17))
        labels = (rng.random(n) < rng.random()).astype(np.int8).tolist()
        out_su = int(rng.integers(1, 5))
        assert find_free_blocks(labels, out_su) == \
            brute_force_blocks(labels, out_su)


def test_no_block_means_certain_outage():
    report = su_outage_probability([1, 1, 1], OccupancyVector([0.9, 0.8, 1.0]),
                                   1)
    assert report.free_blocks == []
    assert report.p_outage == 1.0
    assert report.p_transmit == 0.0


def test_literal_product_spans_out_su_plus_one():
    occ = OccupancyVector([0.4, 0.5, 0.9])
    report = su_outage_probability([0, 1, 1], occ, out_su=1)
    assert report.free_blocks == [(0, 1)]
    assert report.block_probabilities == [pytest.approx(0.4 * 0.5)]
    assert report.p_outage == pytest.approx(0.8)
    exclusive = su_outage_probability([0, 1, 1], occ, 1, inclusive=False)
    assert exclusive.p_transmit == pytest.approx(0.4)


def test_complement_mode():
    occ = OccupancyVector([0.2, 0.2, 0.2, 0.9])
    report = su_outage_probability(PuLabelVector([0, 0, 0, 1]), occ, 2,
                                   mode='complement')
    assert report.free_blocks == [(0, 3)]
    assert report.p_transmit == pytest.approx(0.512)
    assert report.p_outage == pytest.approx(0.488)
    assert report.p_outage == 1.0 - report.p_transmit
    shorter = su_outage_probability([0, 0, 0, 1], occ, 2, mode='complement',
                                    inclusive=False)
    assert shorter.p_transmit == pytest.approx(0.64)


def test_block_at_the_end_drops_missing_factors():
    report = su_outage_probability([1, 0], OccupancyVector([0.5, 0.4]), 1)
    assert report.free_blocks == [(1, 1)]
    assert report.p_transmit == pytest.approx(0.4)


def test_sum_above_one_is_clamped():
    report = su_outage_probability([0, 1, 0, 1, 0], OccupancyVector([1.0] * 5),
                                   1)
    assert len(report.free_blocks) == 3
    assert report.clamped
    assert report.p_transmit == 1.0
    assert report.p_outage == 0.0


def test_outage_grows_with_required_run():
    rng = np.random.default_rng(1)
    for _ in range(1000):
        n = int(rng.integers(1, 30))
        labels = (rng.random(n) < 0.4).astype(np.int8)
        occ = OccupancyVector(rng.random(n))
        for mode in ('as-written', 'complement'):
            outages = [su_outage_probability(labels, occ, out_su, mode).p_outage
                       for out_su in range(1, 8)]
            assert np.all(np.diff(outages) >= -1e-12)
            assert all(0.0 <= p <= 1.0 for p in outages)


def test_outage_errors_and_report():
    occ = OccupancyVector([0.1, 0.2])
    with pytest.raises(ContractError):
        su_outage_probability([0, 0, 0], occ, 1)
    with pytest.raises(ContractError):
        su_outage_probability([0, 0], occ, 1, mode='literal')
    with pytest.raises(ContractError):
        find_free_blocks([0, 0], 0)
    report = su_outage_probability([0, 0], occ, 1)
    values = json.loads(json.dumps(report.to_dict()))
    assert values['free_blocks'] == [[0, 2]]
    assert values['mode'] == 'as-written'
