import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bexsam.exceptions import DataError, ResourceLimitError
from bexsam.freqtable import (
    FrequencyTable,
    build_frequency_table,
    exact_table,
    marginalize,
    selection_stats,
)
from bexsam.generator import Dataset, sample_dataset
from conftest import random_models
from oracles import conditional


def test_counts_direct():
    ft = build_frequency_table(Dataset((0, 1), np.array([[0, 0], [0, 1], [0, 1]])))
    assert ft.counts.tolist() == [1, 2, 0, 0]
    assert ft.total == 3


def test_single_row():
    ft = build_frequency_table(Dataset((0, 1), np.array([[1, 1]])))
    assert ft.counts.tolist() == [0, 0, 0, 1]


def test_label_order_sets_bit_significance():
    ft = build_frequency_table(Dataset((5, 2), np.array([[1, 0]])))
    assert ft.labels == (5, 2) and ft.counts.tolist() == [0, 0, 1, 0]
    can = ft.canonical()
    assert can.labels == (2, 5) and can.counts.tolist() == [0, 1, 0, 0]


def test_non_binary_rejected():
    with pytest.raises(DataError, match="row 1, column 0"):
        Dataset((0, 1), np.array([[0, 1], [2, 0]]))


def test_width_cap():
    data = Dataset(tuple(range(5)), np.zeros((3, 5)))
    with pytest.raises(ResourceLimitError, match="2\\^5"):
        build_frequency_table(data, max_width=4)


def test_marginalize_pairwise_sums():
    ft = FrequencyTable((0, 1), np.array([1, 2, 3, 4]))
    out = marginalize(ft, 1)
    assert out.labels == (0,) and out.counts.tolist() == [3, 7]
    assert marginalize(ft, 0).counts.tolist() == [4, 6]


def test_marginalize_to_scalar():
    rng = np.random.default_rng(0)
    counts = rng.integers(0, 50, 16)
    ft = FrequencyTable((3, 1, 0, 2), counts)
    for lab in (1, 3, 0, 2):
        ft = marginalize(ft, lab)
        assert ft.total == counts.sum()
    assert ft.labels == () and ft.counts.tolist() == [counts.sum()]


def test_marginalize_unknown_label():
    with pytest.raises(KeyError):
        marginalize(FrequencyTable((0, 1), [1, 1, 1, 1]), 4)


def _brute_marginal(counts, labels, drop):
    m = len(labels)
    keep = [t for t in range(m) if labels[t] not in drop]
    out = {}
    for idx, c in enumerate(counts):
        bits = [(idx >> (m - 1 - t)) & 1 for t in range(m)]
        key = tuple(bits[t] for t in keep)
        out[key] = out.get(key, 0) + c
    return [out[k] for k in itertools.product((0, 1), repeat=len(keep))]


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6).flatmap(
    lambda m: st.tuples(st.just(m), st.lists(st.integers(0, 30), min_size=2 ** m, max_size=2 ** m),
                        st.permutations(range(m)))))
def test_marginalize_commutes_and_matches_brute_force(args):
    m, counts, perm = args
    labels = tuple(perm)
    ft = FrequencyTable(labels, counts)
    i, j = labels[0], labels[-1]
    a = marginalize(marginalize(ft, i), j)
    b = marginalize(marginalize(ft, j), i)
    assert a.labels == b.labels
    assert a.counts.tolist() == b.counts.tolist() == _brute_marginal(counts, labels, {i, j})
    assert a.total == ft.total


def test_selection_stats_direct():
    # layout (i, o): counts [c(0,0), c(0,1), c(1,0), c(1,1)]
    st_ = selection_stats(FrequencyTable((0, 1), [1, 3, 0, 0]), 0)
    assert st_.others == (1,)
    assert st_.conditional[0].tolist() == [1.0, 0.0]
    assert st_.conditional[1].tolist() == [1.0, 0.0]
    assert st_.count.tolist() == [1, 3]
    assert st_.n_selections == 2


def test_zero_count_selection_is_void():
    st_ = selection_stats(FrequencyTable((0, 1), [4, 0, 1, 0]), 0)
    assert st_.void.tolist() == [False, True]
    assert np.isnan(st_.conditional[1]).all()
    assert st_.n_selections == 1
    assert st_.p_selection.sum() == pytest.approx(1.0)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda m: st.tuples(st.just(m), st.lists(st.integers(0, 20), min_size=2 ** m, max_size=2 ** m))))
def test_selection_stats_invariants(args):
    m, counts = args
    if sum(counts) == 0:
        return
    ft = FrequencyTable(tuple(range(m)), counts)
    for lab in ft.labels:
        s = selection_stats(ft, lab)
        live = ~s.void
        assert np.allclose(s.conditional[live].sum(axis=1), 1.0)
        assert s.n_selections <= 2 ** (m - 1)
        assert s.p_selection[live].sum() == pytest.approx(1.0)


def test_sink_conditionals_take_two_values(ex1):
    s = selection_stats(exact_table(ex1), 3)
    p4 = ex1.noise[3]
    for row in s.conditional:
        assert min(abs(row[1] - p4), abs(row[1] - (1 - p4))) < 1e-12


@pytest.mark.parametrize("model", random_models(10, seed=21, d_range=(2, 5)))
def test_exact_mode_conditionals_match_analytic(model):
    ft = exact_table(model)
    for j in range(model.d):
        s = selection_stats(ft, j)
        others = s.others
        for sel, row in enumerate(s.conditional):
            given_bits = {lab: (sel >> (len(others) - 1 - t)) & 1 for t, lab in enumerate(others)}
            assert row[1] == pytest.approx(conditional(model, j, given_bits), abs=1e-12)


def test_exact_table_relabelled(ex1):
    ft = exact_table(ex1, labels=(2, 0, 3, 1))
    can = ft.canonical()
    assert can.labels == (0, 1, 2, 3)
    assert np.allclose(can.counts, exact_table(ex1).counts, atol=0)


def test_sampled_table_matches_oracle_chi2(ex1):
    from scipy import stats

    n = 50_000
    ft = build_frequency_table(sample_dataset(ex1, n, seed=3)).canonical()
    expected = exact_table(ex1).counts * n
    chi2 = ((ft.counts - expected) ** 2 / expected).sum()
    assert chi2 < stats.chi2.ppf(0.999, df=15)


def test_csv_dump_rows():
    rows = list(FrequencyTable((0, 1), [1, 2, 3, 4]).to_csv_rows())
    assert rows == [[0, 0, 1], [0, 1, 2], [1, 0, 3], [1, 1, 4]]
