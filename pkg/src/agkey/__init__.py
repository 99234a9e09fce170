"""Exact verification of the Alladi-Gordon key identity and its bijective proof.

The package splits into q-series arithmetic (:mod:`agkey.qseries`), the
partition families (:mod:`agkey.partitions`), the insertion bijection
(:mod:`agkey.bijection`), the sign-reversing involution
(:mod:`agkey.involution`), and exhaustive checks (:mod:`agkey.verifier`).
"""
from .qseries import (
    QPoly, Q, ONE, ZERO, gaussian, key_identity_lhs, lemma2_lhs_cleared,
    lemma2_rhs_cleared, pochhammer_shifted, triangle,
)
from .partitions import (
    OContext, Overpartition, Part, enumerate_A, enumerate_B, enumerate_O,
    enumerate_O_all, format_overpartition, is_member_O, parse_overpartition, stats,
)
from .bijection import js_extract, js_insert, phi_bar, phi_bar_inv
from .involution import OClass, classify, f_statistic, orbit_check, psi
from .report import VerifyReport
from .verifier import sweep

__version__ = "0.1.0"
