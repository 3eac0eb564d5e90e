import numpy as np
import pytest

from bexsam.diagnostics import default_threshold, exact_marginals, skewness_report
from bexsam.exceptions import DataError
from bexsam.generator import Dataset
from conftest import random_models
from oracles import f_value, joint_table


def test_constant_column_confirmed():
    rows = np.zeros((200, 2), dtype=np.uint8)
    rows[:, 0] = 1
    rows[::2, 1] = 1
    rep = skewness_report(Dataset((0, 1), rows))
    assert rep.variables[0].confirmed and rep.variables[0].p_one == 1.0
    assert rep.variables[1].inconclusive and rep.variables[1].deviation == 0.0


def test_fair_coin_inconclusive():
    rows = np.random.default_rng(0).integers(0, 2, size=(10_000, 1), dtype=np.uint8)
    assert skewness_report(Dataset((0,), rows)).variables[0].inconclusive


def test_threshold_and_report_format():
    assert default_threshold(10_000) == pytest.approx(0.01)
    data = Dataset((5, 1), np.array([[1, 0], [1, 1], [1, 0]], dtype=np.uint8))
    rep = skewness_report(data, threshold=0.1)
    assert [v.label for v in rep.variables] == [1, 5]
    text = rep.format()
    assert "v5" in text and "skew confirmed" in text
    d = rep.to_dict()
    assert d["variables"][1]["inconclusive"] is False
    with pytest.raises(ValueError):
        skewness_report(data, threshold=-1)


def test_empty_dataset_rejected():
    with pytest.raises(DataError):
        skewness_report(Dataset((0,), np.zeros((0, 1), dtype=np.uint8)))


@pytest.mark.parametrize("model", random_models(25, seed=31, d_range=(1, 6)))
def test_marginal_identity(model):
    p_x, p_f = exact_marginals(model)
    joint = joint_table(model)
    for j in range(model.d):
        px1 = sum(p for a, p in joint.items() if a[j] == 1)
        pf1 = sum(p for a, p in joint.items() if f_value(model, j, a) == 1)
        assert p_x[j] == pytest.approx(px1, abs=1e-12)
        assert p_f[j] == pytest.approx(pf1, abs=1e-12)
        eps = 2 * model.noise[j] - 1
        xi = 2 * pf1 - 1
        assert (1 - px1) - px1 == pytest.approx(eps * xi, abs=1e-12)
