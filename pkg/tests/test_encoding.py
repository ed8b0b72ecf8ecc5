"""Integer/cycle encodings, symbolic dilation, decoding, dilation verification."""

import random
from fractions import Fraction

import pytest

from parseval_dilate.dynamics import Cycle, chosen_paths, discover_partition
from parseval_dilate.encoding import (
    ComponentFunction,
    SymbolicSet,
    UnresolvedPath,
    build_F_tilde,
    build_P_tilde,
    d_C,
    d_C_inv,
    d_C_params,
    d_Z,
    d_Z_inv,
    decode_components,
    r_tilde,
    r_tilde_inv,
    shift_identity_check,
    translation_tiling,
    verify_orthonormal_dilation,
)
from parseval_dilate.filters import ExplicitSet, build_filter
from parseval_dilate.intervals import IntervalSet
from parseval_dilate.pipeline import dilate_pipeline
from parseval_dilate.wavelets import SHANNON, scaling_set
from parseval_dilate.words import EPWord, rotations

I = IntervalSet.parse
HALF = Fraction(1, 2)
C10 = Cycle.from_word("10")
C100 = Cycle.from_word("100")


# -- integer encoding ---------------------------------------------------------


def test_d_Z_base_cases():
    assert d_Z(EPWord.zero()) == 0
    assert d_Z(EPWord.one()) == -1
    assert d_Z(EPWord("11", "0")) == 3  # 1 + 2
    assert d_Z(EPWord("0", "1")) == -2  # 0 - 2^1


def test_d_Z_rejects_cycle_tail():
    with pytest.raises(ValueError):
        d_Z(EPWord("", "10"))


def test_d_Z_roundtrip_small_exhaustive():
    for k in range(-64, 65):
        w = d_Z_inv(k)
        assert d_Z(w) == k
        assert (w.per == "0") == (k >= 0)


def test_d_Z_inv_of_d_Z_on_canonical_words():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(0, 16)
        pre = "".join(rng.choice("01") for _ in range(n))
        per = rng.choice("01")
        w = EPWord(pre, per)
        assert d_Z_inv(d_Z(w)) == w


def test_shift_identity_examples():
    assert shift_identity_check(0, EPWord.one(), 1)  # (0-1)/2 = tau_1(0) - 1
    assert shift_identity_check(Fraction(1, 3), EPWord("10", "0"), 2)


def test_shift_identity_random():
    rng = random.Random(5)
    for _ in range(300):
        x = Fraction(rng.randint(0, 1023), 1024)
        pre = "".join(rng.choice("01") for _ in range(rng.randint(0, 10)))
        w = EPWord(pre, rng.choice("01"))
        n = rng.randint(1, 12)
        assert shift_identity_check(x, w, n)


# -- cycle encoding ------------------------------------------------------------


def test_d_C_pure_cycle_words():
    # on [a, 1/2) the path (10) decodes through theta_0 = 1/3
    y, j = d_C(Fraction(1, 4), EPWord("", "10"), C10)
    assert (y, j) == (Fraction(1, 4) - Fraction(1, 3), 0)
    y, j = d_C(Fraction(3, 4), EPWord("", "01"), C10)
    assert (y, j) == (Fraction(3, 4) - Fraction(2, 3), 1)


def test_d_C_example2_piece():
    # [1/2,7/8) x {(001)} decodes to [-1/14, 17/56) x {1}
    lo, j = d_C(HALF, EPWord("", "001"), C100)
    hi, j2 = d_C(Fraction(7, 8), EPWord("", "001"), C100)
    assert j == j2 == 1
    assert lo == -Fraction(1, 14)
    assert hi == Fraction(17, 56)


def test_d_C_pure_periodic_k_is_zero():
    for word in ("10", "100", "1001100"):
        cyc = Cycle.from_word(word)
        for rot in rotations(word):
            j, k = d_C_params(EPWord("", rot), cyc)
            assert k == 0
            assert cyc.points[j] == Cycle.from_word(rot).points[0]


def test_d_C_with_preperiod():
    # w = 1(10): padding to length 2 gives j = 1, k = 1
    j, k = d_C_params(EPWord("1", "10"), C10)
    assert (j, k) == (1, 1)


def test_d_C_rejects_foreign_period():
    with pytest.raises(UnresolvedPath):
        d_C(Fraction(1, 4), EPWord("", "110"), C10)


def test_d_C_inv_base_point():
    x, w = d_C_inv(0, 0, C10)
    assert x == Fraction(1, 3)
    assert w == EPWord("", "10")


def test_d_C_roundtrip_random():
    rng = random.Random(99)
    words = ["10", "100", "0111", "1001100", "110010"]
    for _ in range(400):
        cyc = Cycle.from_word(rng.choice(words))
        j = rng.randint(0, len(cyc.word) - 1)
        y = Fraction(rng.randint(-(1 << 12), 1 << 12), 1 << rng.randint(0, 10))
        x, w = d_C_inv(y, j, cyc)
        assert 0 <= x < 1
        assert d_C(x, w, cyc) == (y, j)


def test_d_C_roundtrip_word_side():
    rng = random.Random(7)
    for _ in range(300):
        word = rng.choice(["10", "100", "1001100"])
        cyc = Cycle.from_word(word)
        pre = "".join(rng.choice("01") for _ in range(rng.randint(0, 9)))
        rot = rng.choice(rotations(word))
        w = EPWord(pre, rot)
        if w.per in ("0", "1"):
            continue
        x = Fraction(rng.randint(0, 255), 256)
        y, j = d_C(x, w, cyc)
        assert d_C_inv(y, j, cyc) == (x, w)


# -- symbolic sets -----------------------------------------------------------------


def shannon_F_tilde() -> SymbolicSet:
    return SymbolicSet.build(
        [(I("[0,1/2)"), EPWord.zero()), (I("[1/2,1)"), EPWord.one())]
    )


def test_symbolic_set_canonicalisation():
    s = SymbolicSet.build(
        [(I("[0,1/4)"), EPWord.zero()), (I("[1/4,1/2)"), EPWord("0", "0"))]
    )
    assert s.pieces == ((I("[0,1/2)"), EPWord.zero()),)


def test_r_tilde_shannon():
    Ft = shannon_F_tilde()
    rF = r_tilde(Ft)
    assert rF.pieces == (
        (I("[0,1)"), EPWord.zero()),
        (I("[0,1)"), EPWord.one()),
    )
    # P-tilde decodes to the Shannon wavelet set on the real component
    Pt = build_P_tilde(Ft)
    cf = decode_components(Pt, [])
    assert cf.real == SHANNON
    assert cf.cycles == ()


def test_r_tilde_inv_inverts_r_tilde():
    Ft = shannon_F_tilde()
    assert r_tilde_inv(r_tilde(Ft)).pieces == Ft.pieces


def test_lambda_measures():
    Ft = shannon_F_tilde()
    assert Ft.lam() == 1
    assert r_tilde(Ft).lam() == 2
    cur = Ft
    for n in range(1, 13):
        cur = r_tilde_inv(cur)
        assert cur.lam() == Fraction(1, 1 << n)


def ex1_pipeline(a=Fraction(1, 8)):
    P = IntervalSet([(-2 * a, -a), (a, 2 * a)])
    D = IntervalSet([(Fraction(1, 4), HALF - a), (HALF + a, Fraction(3, 4))])
    return dilate_pipeline(P, ExplicitSet(D))


def test_scaling_relation_r_inv_F_tilde():
    # r-tilde^{-1}(F-tilde) = (M x Omega) cap F-tilde, symbolically
    res = ex1_pipeline()
    lhs = r_tilde_inv(res.F_tilde)
    rhs = res.F_tilde.restrict_base(res.filter_set.M)
    assert lhs.pieces == rhs.pieces


def test_F_tilde_requires_partition():
    from parseval_dilate.dynamics import PiecewisePath

    with pytest.raises(ValueError):
        build_F_tilde(PiecewisePath(pieces=[(I("[0,1/2)"), EPWord.zero())]))


# -- decoding ------------------------------------------------------------------------


def test_decode_example1_phi_psi():
    a = Fraction(1, 8)
    res = ex1_pipeline(a)
    third = Fraction(1, 3)
    assert res.phi.real == IntervalSet([(-a, a)])
    assert res.phi.slot("10", 0) == IntervalSet([(a - third, Fraction(1, 6))])
    assert res.phi.slot("10", 1) == IntervalSet([(-Fraction(1, 6), third - a)])
    assert res.psi.real == IntervalSet([(-2 * a, -a), (a, 2 * a)])
    assert res.psi.slot("10", 0) == IntervalSet(
        [(-third, a - third), (Fraction(1, 6), Fraction(2, 3) - 2 * a)]
    )
    assert res.psi.slot("10", 1) == IntervalSet(
        [(2 * a - Fraction(2, 3), -Fraction(1, 6)), (third - a, third)]
    )


def test_decode_example2_psi():
    a = Fraction(1, 8)
    P = IntervalSet([(-2 * a, -a), (a, 2 * a)])
    res = dilate_pipeline(P, ExplicitSet(I("[1/8,3/8)")))
    assert res.psi.real == P
    assert res.psi.slot("100", 0) == I("[-1/7,-1/56)u[3/28,17/28)")
    assert res.psi.slot("100", 1) == I("[17/56,3/7)")
    assert res.psi.slot("100", 2).is_empty  # retained empty component


def test_decode_unresolved_path():
    s = SymbolicSet.build([(I("[0,1)"), EPWord("", "10"))])
    with pytest.raises(UnresolvedPath):
        decode_components(s, [])


# -- dilation verification --------------------------------------------------------------


def test_translation_tiling_example1():
    a = Fraction(1, 8)
    res = ex1_pipeline(a)
    # shifted supports: [1-2a,1-a)u[a,2a) | [0,a)u[1/2,1-2a) | [2a,1/2)u[1-a,1)
    parts = [
        res.psi.real.mod1(),
        res.psi.slot("10", 0).translate(Fraction(1, 3)).mod1(),
        res.psi.slot("10", 1).translate(Fraction(2, 3)).mod1(),
    ]
    assert parts[0] == IntervalSet([(1 - 2 * a, 1 - a), (a, 2 * a)])
    assert parts[1] == IntervalSet([(0, a), (HALF, 1 - 2 * a)])
    assert parts[2] == IntervalSet([(2 * a, HALF), (1 - a, 1)])
    union = parts[0].union(parts[1]).union(parts[2])
    assert union == IntervalSet.unit()
    assert sum(p.measure() for p in parts) == 1
    assert translation_tiling(res.psi)


def test_verify_orthonormal_dilation_examples():
    for res in (ex1_pipeline(), ex1_pipeline(Fraction(1, 16))):
        v = res.verification
        assert v["translation_tiling"]
        assert v["dilation_window_disjoint"]
        assert v["dilation_tiling_certified"]
        assert v["projection_consistent"]
        assert v["phi_translation_tiling"]


def test_verify_shannon_single_component():
    res = dilate_pipeline(SHANNON)
    assert res.psi.cycles == ()
    assert res.psi.real == SHANNON
    assert res.verification["passes"]


def test_dilation_tiling_rejects_overlap():
    bad = ComponentFunction(real=I("[1/2,3/2)"), cycles=())
    report = verify_orthonormal_dilation(bad)
    assert not report["dilation_window_disjoint"]
