"""Estimator-style wrappers around the period map and its inverse.

Rows of ``X`` are normalized branch configurations (the interior points
lambda_3, ..., lambda_{2g+1} as complex numbers); period matrices are
arrays of shape (n, g, g).
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .hyperelliptic import (
    LAMBDA5_CHARACTERISTICS,
    BranchConfig,
    PeriodData,
    calibrate_last_branch_point,
    half_periods,
    period_matrix,
    recover_all,
    recover_branch_point,
    theta_quotient,
)
from .theta import SiegelPoint


def check_configs(X) -> list[BranchConfig]:
    """Accept an (n, 2g-1) complex array, a list of BranchConfig, or a list of full lambda lists."""
    if isinstance(X, BranchConfig):
        return [X]
    out = []
    for row in X:
        if isinstance(row, BranchConfig):
            out.append(row)
            continue
        row = list(row)
        if row and isinstance(row[-1], str) or (len(row) >= 4 and row[:2] == [0, 1]):
            out.append(BranchConfig(tuple(row)))
        else:
            out.append(BranchConfig.normalized(row))
    if not out:
        raise ValueError("no configurations given")
    return out


def check_period_matrices(P) -> np.ndarray:
    P = np.asarray(P, dtype=complex)
    if P.ndim == 2:
        P = P[None]
    if P.ndim != 3 or P.shape[1] != P.shape[2]:
        raise ValueError(f"expected (n, g, g) period matrices, got shape {P.shape}")
    for s in P:
        SiegelPoint(s)  # raises on asymmetric or non-positive input
    return P


def _period_data(pi: np.ndarray) -> PeriodData:
    g = pi.shape[0]
    eye = np.eye(g, dtype=complex)
    return PeriodData(A=eye, B=pi, Pi=SiegelPoint(pi))


class PeriodMatrixTransformer(TransformerMixin, BaseEstimator):
    """Branch configurations -> normalized period matrices."""

    def __init__(self, tol: float = 1e-13):
        self.tol = tol

    def fit(self, X, y=None):
        cfgs = check_configs(X)
        self.genus_ = cfgs[0].g
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "genus_")
        cfgs = check_configs(X)
        if any(c.g != self.genus_ for c in cfgs):
            raise ValueError("genus differs from the one seen in fit")
        return np.stack([period_matrix(c, self.tol).matrix for c in cfgs])


class BranchPointRecovery(BaseEstimator):
    """Period matrices -> interior branch points.

    ``fit`` re-runs the lambda_5 calibration on known configurations and keeps
    the first surviving characteristic pair; without fit the stored pair is used.
    """

    def __init__(self, tol: float = 1e-14, calibrate: bool = True):
        self.tol = tol
        self.calibrate = calibrate

    def fit(self, X, y=None):
        cfgs = check_configs(X)
        self.genus_ = cfgs[0].g
        if self.genus_ == 2 and self.calibrate:
            self.candidates_ = calibrate_last_branch_point(cfgs)
            self.characteristics_ = self.candidates_[0]
        else:
            self.characteristics_ = LAMBDA5_CHARACTERISTICS
        return self

    def predict(self, P) -> np.ndarray:
        P = check_period_matrices(P)
        chars = getattr(self, "characteristics_", LAMBDA5_CHARACTERISTICS)
        rows = []
        for pi in P:
            pd = _period_data(pi)
            if pd.g == 2:
                pts = half_periods(pd, reduce=False)
                l5 = theta_quotient(pd, *chars, pts[4].value, pts[1].value, self.tol)
                rows.append([recover_branch_point(pd, 3, self.tol), recover_branch_point(pd, 4, self.tol), l5])
            else:
                rows.append(list(recover_all(pd, self.tol).lambdas[2:-1]))
        return np.array(rows, dtype=complex)

    def score(self, P, X) -> float:
        """Negative worst absolute error against the true interior branch points."""
        truth = np.array([list(c.lambdas[2:-1]) for c in check_configs(X)], dtype=complex)
        return -float(np.max(np.abs(self.predict(P) - truth)))
