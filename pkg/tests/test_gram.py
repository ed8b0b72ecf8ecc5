"""Frame-side numerics: inner products, the complement kernel, invariance."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import quad

from parseval_dilate.gram import (
    complement_gram,
    gram_report,
    invariance_check,
    parseval_partial_sum,
    unit_box_coefficient,
    wavelet_inner_product,
)
from parseval_dilate.intervals import IntervalSet
from parseval_dilate.wavelets import SHANNON

I = IntervalSet.parse
EX1 = I("[-1/4,-1/8)u[1/8,1/4)")


def quad_inner_product(P, a, b):
    """Quadrature oracle for the Fourier-side inner product."""
    j1, k1 = a
    j2, k2 = b
    S = P.affine(Fraction(2) ** (-j1)).intersect(P.affine(Fraction(2) ** (-j2)))
    theta = float(k1 * Fraction(2) ** j1 - k2 * Fraction(2) ** j2)
    scale = 2.0 ** ((j1 + j2) / 2)
    re = im = 0.0
    for lo, hi in S.intervals:
        re += quad(lambda x: math.cos(2 * math.pi * theta * x), float(lo), float(hi),
                   limit=200)[0]
        im += quad(lambda x: -math.sin(2 * math.pi * theta * x), float(lo), float(hi),
                   limit=200)[0]
    return scale * complex(re, im)


def test_norm_squared_is_measure():
    for P in (SHANNON, EX1):
        val = wavelet_inner_product(P, (0, 0), (0, 0))
        assert abs(val - float(P.measure())) < 1e-12
        assert abs(val.imag) < 1e-12


def test_shannon_orthonormal_translates():
    for k in range(1, 6):
        assert abs(wavelet_inner_product(SHANNON, (0, 0), (0, k))) < 1e-12


def test_cross_scale_vanishes_exactly():
    # support disjointness short-circuit: exact zero, not merely small
    assert wavelet_inner_product(EX1, (0, 0), (1, 0)) == 0j
    assert wavelet_inner_product(EX1, (-2, 3), (1, -5)) == 0j
    assert wavelet_inner_product(SHANNON, (0, 2), (3, 1)) == 0j


def test_closed_form_matches_quadrature():
    for (a, b) in [((0, 0), (0, 1)), ((0, 2), (0, -3)), ((1, 1), (1, 2)),
                   ((-1, 0), (-1, 4))]:
        lhs = wavelet_inner_product(EX1, a, b)
        rhs = quad_inner_product(EX1, a, b)
        assert abs(lhs - rhs) < 1e-9


def test_complement_gram_shannon_vanishes():
    gram = complement_gram(SHANNON, 2, 3)
    assert gram.max_abs_entry() <= 1e-10
    assert gram.dimension == 5 * 7


def test_complement_gram_ex1_psd():
    gram = complement_gram(EX1, 2, 3)
    assert gram.hermitian_defect() <= 1e-12
    assert gram.smallest_eigenvalue() >= -1e-9


def test_complement_gram_non_parseval_documented():
    # out-of-contract input: must not crash; PSD may legitimately fail
    gram = complement_gram(I("[0,2)"), 1, 1)
    assert gram.dimension == 9


def test_invariance_relations():
    for P in (SHANNON, EX1):
        report = invariance_check(P, samples=200)
        assert report["passes"], report["violations"]


def test_invariance_trivial_joint_translation():
    # j = j' = 0 of the second relation: joint translation by one
    for k1 in range(-3, 4):
        for k2 in range(-3, 4):
            lhs = wavelet_inner_product(EX1, (0, k1), (0, k2))
            rhs = wavelet_inner_product(EX1, (0, k1 + 1), (0, k2 + 1))
            assert abs(lhs - rhs) < 1e-10


def test_parseval_partial_sums_monotone():
    previous = 0.0
    for size in ((1, 2), (2, 4), (3, 8), (4, 16)):
        total = parseval_partial_sum(EX1, *size)
        assert total >= previous - 1e-12
        assert total <= 1 + 1e-6
        previous = total
    assert previous > 0.9


def test_gram_report_shape():
    report = gram_report(EX1, 2, 3, samples=50)
    assert set(report) >= {"smallest_eigenvalue", "dimension", "violations"}
    assert report["psd_within_tolerance"]
    assert report["invariance_passes"]
