import numpy as np
import pytest
from sklearn.base import clone

from h2moduli import hyperelliptic as he
from h2moduli.estimators import BranchPointRecovery, PeriodMatrixTransformer, check_configs, check_period_matrices


def test_pipeline_roundtrip():
    corpus = he.random_corpus(6, seed=9)
    P = PeriodMatrixTransformer().fit_transform(corpus)
    assert P.shape == (6, 2, 2)
    rec = BranchPointRecovery().fit(corpus[:4])
    assert rec.characteristics_ in rec.candidates_
    assert rec.score(P, corpus) > -1e-6


def test_params_and_clone():
    est = BranchPointRecovery(tol=1e-13, calibrate=False)
    assert clone(est).get_params() == {"tol": 1e-13, "calibrate": False}


def test_unfitted_uses_stored_pair():
    cfg = he.BranchConfig.normalized([2.1, 3.4, 5.0])
    P = PeriodMatrixTransformer().fit_transform([cfg])
    got = BranchPointRecovery().predict(P)[0]
    assert np.max(np.abs(got - [2.1, 3.4, 5.0])) < 1e-6


def test_input_helpers():
    cfgs = check_configs([[2.1, 3.4, 5.0], [0, 1, 2.1, 3.4, 5.0, "inf"]])
    assert cfgs[0].lambdas == cfgs[1].lambdas
    with pytest.raises(ValueError):
        check_period_matrices(np.ones((2, 3)))
    with pytest.raises(ValueError):
        check_period_matrices([[1j, 0.5], [0.1, 1j]])


def test_transform_genus_mismatch():
    t = PeriodMatrixTransformer().fit([[2.1, 3.4, 5.0]])
    with pytest.raises(ValueError):
        t.transform([[2.0]])
