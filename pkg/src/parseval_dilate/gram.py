"""Finite-scale numerical checks of the frame-theoretic claims.

The wavelet-system inner products are computed on the Fourier side: the
supports are intersected exactly, then each interval contributes the closed
form of an oscillatory integral.  The complement kernel
K2((j,k),(j',k')) = delta - <U^j T^k psi, U^j' T^k' psi> is assembled over a
finite index window and its positive semidefiniteness is checked through a
Hermitian eigensolver.  This is the only floating-point module; tolerances are
1e-12 per term and 1e-9 (dimension-scaled) for eigenvalues.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .intervals import IntervalSet

IndexPair = Tuple[int, int]

EIG_TOL = 1e-9
INV_TOL = 1e-10


def _osc_integral(S: IntervalSet, theta: Fraction) -> complex:
    """Integral of e^{-2 pi i theta xi} over S, exact support, closed form."""
    if theta == 0:
        return complex(float(S.measure()))
    th = float(theta)
    total = 0j
    for lo, hi in S.intervals:
        ea = cmath.exp(-2j * math.pi * th * float(lo))
        eb = cmath.exp(-2j * math.pi * th * float(hi))
        total += (eb - ea) / (-2j * math.pi * th)
    return total


def wavelet_inner_product(P: IntervalSet, a: IndexPair, b: IndexPair) -> complex:
    """<U^j T^k psi, U^j' T^k' psi> for psi-hat = chi_P, on the Fourier side.

    The supports 2^-j P and 2^-j' P are intersected exactly; for j != j' on a
    multiplicative tile the intersection is empty, so semi-orthogonality is
    returned as an exact zero.
    """
    j1, k1 = a
    j2, k2 = b
    S = P.affine(Fraction(2) ** (-j1)).intersect(P.affine(Fraction(2) ** (-j2)))
    if S.is_empty:
        return 0j
    theta = k1 * Fraction(2) ** j1 - k2 * Fraction(2) ** j2
    scale = 2.0 ** ((j1 + j2) / 2)
    return scale * _osc_integral(S, theta)


def unit_box_coefficient(P: IntervalSet, index: IndexPair) -> complex:
    """<f, psi_{j,k}> for f-hat = chi_[0,1); used by the Parseval spot check."""
    j, k = index
    S = IntervalSet.interval(0, 1).intersect(P.affine(Fraction(2) ** (-j)))
    if S.is_empty:
        return 0j
    theta = k * Fraction(2) ** j
    return 2.0 ** (j / 2) * _osc_integral(S, theta).conjugate()


def parseval_partial_sum(P: IntervalSet, J: int, K: int) -> float:
    total = 0.0
    for j in range(-J, J + 1):
        for k in range(-K, K + 1):
            total += abs(unit_box_coefficient(P, (j, k))) ** 2
    return total


@dataclass
class GramMatrix:
    indices: List[IndexPair]
    entries: np.ndarray

    @property
    def dimension(self) -> int:
        return len(self.indices)

    def hermitian_defect(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def smallest_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries)[0])

    def max_abs_entry(self) -> float:
        return float(np.max(np.abs(self.entries)))

    def to_json(self) -> dict:
        return {
            "smallest_eigenvalue": self.smallest_eigenvalue(),
            "dimension": self.dimension,
            "hermitian_defect": self.hermitian_defect(),
        }


def complement_gram(P: IntervalSet, J: int, K: int) -> GramMatrix:
    """K2 = delta - Gram over the index window |j| <= J, |k| <= K."""
    indices = [(j, k) for j in range(-J, J + 1) for k in range(-K, K + 1)]
    n = len(indices)
    M = np.zeros((n, n), dtype=complex)
    for r in range(n):
        for c in range(r, n):
            ip = wavelet_inner_product(P, indices[r], indices[c])
            val = (1.0 if r == c else 0.0) - ip
            M[r, c] = val
            M[c, r] = val.conjugate()
    return GramMatrix(indices=indices, entries=M)


def invariance_check(P: IntervalSet, samples: int = 200, seed: int = 8129) -> dict:
    """Sampled verification of the kernel invariance relations.

    First relation: joint dilation shift (j,k),(j',k') -> (j+1,k),(j'+1,k').
    Second relation: (j,k),(j',k') -> (j,2^-j+k),(j',2^-j'+k') for j,j' <= 0,
    where 2^-j is then a positive integer.
    """
    rng = random.Random(seed)
    violations = []
    checked = 0
    for _ in range(samples):
        j1, j2 = rng.randint(-3, 2), rng.randint(-3, 2)
        k1, k2 = rng.randint(-8, 8), rng.randint(-8, 8)
        lhs = wavelet_inner_product(P, (j1, k1), (j2, k2))
        rhs = wavelet_inner_product(P, (j1 + 1, k1), (j2 + 1, k2))
        checked += 1
        if abs(lhs - rhs) > INV_TOL:
            violations.append(
                {"relation": "dilation-shift", "indices": [j1, k1, j2, k2],
                 "defect": abs(lhs - rhs)}
            )
        j1, j2 = rng.randint(-3, 0), rng.randint(-3, 0)
        lhs = wavelet_inner_product(P, (j1, k1), (j2, k2))
        rhs = wavelet_inner_product(
            P, (j1, k1 + 2 ** (-j1)), (j2, k2 + 2 ** (-j2))
        )
        checked += 1
        if abs(lhs - rhs) > INV_TOL:
            violations.append(
                {"relation": "translation-shift", "indices": [j1, k1, j2, k2],
                 "defect": abs(lhs - rhs)}
            )
    return {
        "checked": checked,
        "tolerance": INV_TOL,
        "violations": violations,
        "passes": not violations,
    }


def gram_report(P: IntervalSet, J: int, K: int, samples: int = 200) -> dict:
    gram = complement_gram(P, J, K)
    inv = invariance_check(P, samples=samples)
    return {
        "smallest_eigenvalue": gram.smallest_eigenvalue(),
        "dimension": gram.dimension,
        "max_abs_entry": gram.max_abs_entry(),
        "hermitian_defect": gram.hermitian_defect(),
        "psd_within_tolerance": gram.smallest_eigenvalue() >= -EIG_TOL * gram.dimension,
        "violations": inv["violations"],
        "invariance_passes": inv["passes"],
    }
