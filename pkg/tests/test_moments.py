from fractions import Fraction

import pytest

from ksums import charsums, coset_codes as cc, field, moments
from ksums.field import binary_field

GF2 = binary_field(1)
GF4 = binary_field(2)
GF8 = binary_field(3)
GF16 = binary_field(4)

H_MAX = 10


def fam(label, n, fp):
    return cc.parse_family(label, n, fp)


def test_admissibility():
    with pytest.raises(ValueError):
        moments.mk_recursive(fam("dc2+", 2, GF4), 1)  # wrong codim
    with pytest.raises(ValueError):
        moments.mk_recursive(fam("dc1-", 1, GF4), 1)  # n=1 needs q >= 8
    with pytest.raises(ValueError):
        moments.mk2_recursive(fam("dc2+", 2, GF2), 1)  # needs q >= 4
    with pytest.raises(ValueError):
        moments.mk2_recursive(fam("dc1+", 2, GF4), 1)
    with pytest.raises(ValueError):
        moments.mk_even_recursive(fam("dc2-", 3, GF2), 1)
    with pytest.raises(ValueError):
        moments.mk_recursive(fam("dc1+", 2, GF4), -1)


def test_h0_seed():
    assert moments.mk_recursive(fam("dc1+", 2, GF4), 0) == 3
    assert moments.mk2_recursive(fam("dc2+", 2, GF4), 0) == 3
    assert moments.mk_even_recursive(fam("dc2-", 3, GF4), 0) == 3


def test_mk_matches_oracle_q2():
    f = fam("dc1+", 2, GF2)
    for h in range(H_MAX + 1):
        assert moments.mk_recursive(f, h) == charsums.moment(GF2, 1, h)


@pytest.mark.parametrize("fp", [GF4, GF8])
def test_mk_matches_oracle(fp):
    fams = [fam("dc1+", 2, fp), fam("dc1-", 3, fp)]
    if fp.q >= 8:
        fams.append(fam("dc1-", 1, fp))
    for f in fams:
        for h in range(H_MAX + 1):
            assert moments.mk_recursive(f, h) == charsums.moment(fp, 1, h), (f, h)


@pytest.mark.parametrize("fp", [GF4, GF8])
def test_mk2_and_even_match_oracle(fp):
    for label, n in [("dc2+", 2), ("dc2-", 3)]:
        f = fam(label, n, fp)
        for h in range(H_MAX + 1):
            assert moments.mk2_recursive(f, h) == charsums.moment(fp, 2, h), (f, h)
            assert moments.mk_even_recursive(f, h) == charsums.moment(fp, 1, 2 * h), (f, h)


def test_all_admissible_families_q16():
    for f in (fam("dc1+", 2, GF16), fam("dc1-", 3, GF16), fam("dc1-", 1, GF16)):
        for h in range(H_MAX + 1):
            assert moments.mk_recursive(f, h) == charsums.moment(GF16, 1, h), (f, h)
    for label, n in [("dc2+", 2), ("dc2-", 3)]:
        f = fam(label, n, GF16)
        for h in range(H_MAX + 1):
            assert moments.mk2_recursive(f, h) == charsums.moment(GF16, 2, h), (f, h)
            assert moments.mk_even_recursive(f, h) == charsums.moment(GF16, 1, 2 * h), (f, h)


def test_specialized_constants_n2_plus():
    # the (codim 1, n=2) instance prints as: lead base q^2-1, outer factor
    # q^(1-2h) (q^2-1)^(-h), and binomial columns q^3(q^2-1),
    # q^2(q-1)(q+1)^2, q^2(q+1)(q-1)^2
    for fp in (GF2, GF4, GF8):
        q = fp.q
        f = fam("dc1+", 2, fp)
        consts = cc.family_constants(f)
        assert consts.scale == q ** 2 * (q ** 2 - 1)
        assert consts.cofactor == q ** 2 - 1
        assert consts.size == q ** 2 * (q ** 2 - 1) ** 2
        for h in range(1, 6):
            assert (Fraction(q, consts.scale ** h)
                    == Fraction(q) ** (1 - 2 * h) * Fraction(q ** 2 - 1) ** -h)
        counts = cc.trace_multiplicities(f)
        for beta, cnt in counts.items():
            if beta == 0:
                assert cnt == q ** 3 * (q ** 2 - 1)
            elif field.trace(fp, field.inv(fp, beta)) == 0:
                assert cnt == q ** 2 * (q - 1) * (q + 1) ** 2
            else:
                assert cnt == q ** 2 * (q + 1) * (q - 1) ** 2


def test_specialized_constants_n1_minus():
    # the (codim 1, n=1) instance: outer factor exactly q, length q-1,
    # multiplicity columns {1, 2, 0}
    for fp in (GF8, GF16):
        f = fam("dc1-", 1, fp)
        consts = cc.family_constants(f)
        assert consts.scale == 1 and consts.size == fp.q - 1
        assert consts.cofactor == fp.q - 1
        assert set(cc.trace_multiplicities(f).values()) == {0, 1, 2}


def test_first_two_moments_closed_forms():
    for fp in (GF4, GF8, GF16):
        assert charsums.moment(fp, 1, 1) == 1
        assert charsums.moment(fp, 1, 2) == fp.q ** 2 - fp.q - 1


def test_family_independence():
    seq4 = [moments.mk_recursive(fam("dc1+", 2, GF4), h) for h in range(H_MAX + 1)]
    assert seq4 == [moments.mk_recursive(fam("dc1-", 3, GF4), h) for h in range(H_MAX + 1)]
    seq8 = [moments.mk_recursive(fam("dc1+", 2, GF8), h) for h in range(H_MAX + 1)]
    assert seq8 == [moments.mk_recursive(fam("dc1-", 3, GF8), h) for h in range(H_MAX + 1)]
    assert seq8 == [moments.mk_recursive(fam("dc1-", 1, GF8), h) for h in range(H_MAX + 1)]


def test_two_dimensional_vs_even_moments():
    # MK2^1 = MK^2 - q(q-1), summing the Carlitz identity over a
    for fp in (GF4, GF8):
        f = fam("dc2+", 2, fp)
        assert (moments.mk2_recursive(f, 1)
                == moments.mk_even_recursive(f, 1) - fp.q * (fp.q - 1))


def test_even_moments_expand_in_two_dimensional_ones():
    # K^2 = K_2 + q pointwise, so MK^(2h) = sum_l C(h,l) q^(h-l) MK2^l; this
    # ties the two recursion stacks together without touching the oracle
    from ksums.combinat import binom

    for fp in (GF4, GF8):
        for label, n in [("dc2+", 2), ("dc2-", 3)]:
            f = fam(label, n, fp)
            for h in range(H_MAX + 1):
                expansion = sum(binom(h, l) * fp.q ** (h - l) * moments.mk2_recursive(f, l)
                                for l in range(h + 1))
                assert moments.mk_even_recursive(f, h) == expansion, (label, fp.q, h)


def test_even_moments_nonnegative():
    for fp in (GF4, GF8):
        f = fam("dc2+", 2, fp)
        for h in range(H_MAX + 1):
            assert moments.mk_even_recursive(f, h) >= 0


def test_lhs_expansion():
    rep = moments.verify_lhs_expansion(fam("dc1-", 1, GF8), 3)
    assert rep["ok"]
    rep = moments.verify_lhs_expansion(fam("dc2+", 2, GF4), 2)
    assert rep["ok"] and rep["rhs_even"] == rep["rhs_two_dimensional"] == rep["lhs"]
    rep = moments.verify_lhs_expansion(fam("dc1+", 2, GF4), 0)
    assert rep["ok"] and rep["lhs"] == GF4.q - 1
    for h in range(6):
        assert moments.verify_lhs_expansion(fam("dc1-", 3, GF4), h)["ok"]
        assert moments.verify_lhs_expansion(fam("dc2-", 3, GF4), h)["ok"]
