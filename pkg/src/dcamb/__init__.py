"""Doubled Cambrian frameworks for the oriented n-cycle, with an independent mutation oracle."""

from dcamb.affine import AffinePermutation, delta, simple_root
from dcamb.cyclic import Orientation, enumerate_omega_sortables, labels_omega, pi_down_omega
from dcamb.errors import InvariantViolation
from dcamb.eta import classify, eta, funny_roots
from dcamb.fan import check_fan, check_simplicial, dual_basis
from dcamb.framework import LabeledQuasiGraph, build, camb_graph
from dcamb.oracle import compare, exchange_graph
from dcamb.verify import AxiomReport, verify_all

__all__ = [
    "AffinePermutation",
    "AxiomReport",
    "InvariantViolation",
    "LabeledQuasiGraph",
    "Orientation",
    "build",
    "camb_graph",
    "check_fan",
    "check_simplicial",
    "classify",
    "compare",
    "delta",
    "dual_basis",
    "enumerate_omega_sortables",
    "eta",
    "exchange_graph",
    "funny_roots",
    "labels_omega",
    "pi_down_omega",
    "simple_root",
    "verify_all",
]
