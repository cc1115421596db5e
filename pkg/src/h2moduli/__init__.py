"""Exact and numerical tools for the genus-two stratum H(2).

Submodules: symplectic, gamma (the index-six subgroup), theta, hyperelliptic
(period matrices and branch-point recovery), flat (three-parallelogram
surfaces and their moves), estimators, cli.
"""
from .flat import Decomposition, GaussQ, ParallelogramChain, build, exact_chain, verify_move_matrices
from .gamma import coset_of, gamma_member, membership_certificate
from .hyperelliptic import BranchConfig, half_periods, period_matrix, recover_all, recover_branch_point
from .symplectic import IntMat4, R, S, T, U
from .theta import SiegelPoint, ThetaCharacteristic

__version__ = "0.1.0"
