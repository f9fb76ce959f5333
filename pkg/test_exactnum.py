"""
精确数模块测试
测试 exactnum.py 的整数平方根、二次无理数运算、精确取整和连分数
"""
import pickle
import random

import pytest

from exactnum import (
    CLOITRE_GAMMA,
    GOLDEN_GAMMA,
    HALF_SQRT2,
    PELL_LOWER_RATIO,
    PELL_UPPER_RATIO,
    PHI,
    PHI_SQUARED,
    SILVER_GAMMA,
    QuadraticSurd,
    beatty_inverse,
    canonicalize,
    complement_surd,
    convergents,
    floor_scale,
    floor_scale_oracle,
    isqrt,
    metallic_gamma,
    partial_quotients,
    slow_beatty,
)


def test_isqrt():
    assert isqrt(0) == 0
    assert isqrt(5) == 2
    assert isqrt(10 ** 36) == 10 ** 18
    n = 10 ** 40 + 12345
    r = isqrt(n)
    assert r * r <= n < (r + 1) ** 2
    with pytest.raises(ValueError):
        isqrt(-1)


def test_canonical_form():
    # (2 + 2√8)/4 = (1 + 2√2)/2
    assert canonicalize(2, 2, 4, 8) == (1, 2, 2, 2)
    # 分母为负时翻转符号
    assert canonicalize(1, 1, -2, 5) == (-1, -1, 2, 5)
    once = canonicalize(6, 4, 10, 12)
    assert canonicalize(*once) == once
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 1, 9)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 1, 1)
    with pytest.raises(ZeroDivisionError):
        QuadraticSurd(1, 1, 0, 5)


def test_equality_and_hash():
    assert QuadraticSurd(2, 2, 4, 5) == QuadraticSurd(1, 1, 2, 5)
    assert hash(QuadraticSurd(2, 2, 4, 5)) == hash(QuadraticSurd(1, 1, 2, 5))
    assert QuadraticSurd.rational(3, 1, 5) == 3
    assert QuadraticSurd.rational(1, 2, 5) == QuadraticSurd.rational(2, 4, 7)
    assert PHI != PHI_SQUARED
    assert pickle.loads(pickle.dumps(PHI)) == PHI


def test_integer_valued_surd_hashes_like_int():
    three = QuadraticSurd.rational(3, 1, 5)
    assert three == 3
    assert hash(three) == hash(3)
    assert three in {3}
    assert {three: 'x'}[3] == 'x'
    assert PHI - PHI == 0 and hash(PHI - PHI) == hash(0)
    assert QuadraticSurd.rational(6, 2, 7) in {3}
    # 非整数的有理值不与任何 int 相等
    assert QuadraticSurd.rational(1, 2, 5) not in {0, 1}


def test_arithmetic():
    assert PHI * PHI == PHI + 1
    assert PHI_SQUARED - PHI == 1
    assert GOLDEN_GAMMA.reciprocal() == PHI
    assert PHI * GOLDEN_GAMMA == 1
    assert (1 - GOLDEN_GAMMA).b < 0
    assert SILVER_GAMMA / (1 - SILVER_GAMMA) == HALF_SQRT2
    assert PHI.conjugate() * PHI == -1
    with pytest.raises(ValueError):
        PHI + SILVER_GAMMA


def test_ordering():
    assert 0 < GOLDEN_GAMMA < 1
    assert 1 < PHI < 2 < PHI_SQUARED < 3
    assert SILVER_GAMMA < GOLDEN_GAMMA
    assert (-PHI).sign() == -1
    assert (1 - GOLDEN_GAMMA).sign() == 1
    assert sorted([PHI_SQUARED, GOLDEN_GAMMA, PHI]) == [GOLDEN_GAMMA, PHI, PHI_SQUARED]


def test_floor_scale_examples():
    assert floor_scale(GOLDEN_GAMMA, 19) == 11
    assert floor_scale(PHI, 5) == 8
    assert floor_scale(PHI_SQUARED, 0) == 0
    # b < 0：10·(3-√5)/2 = 3.819...
    assert floor_scale(1 - GOLDEN_GAMMA, 10) == 3
    assert floor_scale(-PHI, 1) == -2
    with pytest.raises(ValueError):
        floor_scale(PHI, -1)


def test_floor_scale_increments():
    previous = floor_scale(PHI, 0)
    for n in range(1, 2000):
        current = floor_scale(PHI, n)
        assert current - previous in (1, 2)
        previous = current


def test_slow_beatty():
    assert slow_beatty(GOLDEN_GAMMA, 0) == 0
    assert slow_beatty(GOLDEN_GAMMA, 9) == 6
    assert slow_beatty(SILVER_GAMMA, 7) == 3
    with pytest.raises(ValueError):
        slow_beatty(PHI, 3)
    with pytest.raises(ValueError):
        slow_beatty(-GOLDEN_GAMMA, 3)


def test_metallic_gamma():
    assert metallic_gamma(1) == QuadraticSurd(-1, 1, 2, 5)
    assert metallic_gamma(2) == QuadraticSurd(-1, 1, 1, 2)
    assert metallic_gamma(3) == QuadraticSurd(-3, 1, 2, 13)
    for k in range(1, 8):
        g = metallic_gamma(k)
        assert g * g + k * g - 1 == 0
        assert 0 < g < 1
    with pytest.raises(ValueError):
        metallic_gamma(0)


def test_complement_surd():
    assert complement_surd(GOLDEN_GAMMA) == (PHI, PHI_SQUARED)
    assert complement_surd(SILVER_GAMMA) == (PELL_LOWER_RATIO, PELL_UPPER_RATIO)
    assert PELL_LOWER_RATIO == QuadraticSurd(1, 1, 1, 2)
    assert PELL_UPPER_RATIO == QuadraticSurd(2, 1, 2, 2)
    for gamma in (GOLDEN_GAMMA, SILVER_GAMMA, CLOITRE_GAMMA, metallic_gamma(3)):
        alpha, beta = complement_surd(gamma)
        assert alpha.reciprocal() + beta.reciprocal() == 1
        assert alpha > 1 and beta > 1
    with pytest.raises(ValueError):
        complement_surd(PHI)


def test_beatty_pair_is_complementary():
    lower = {floor_scale(PHI, n) for n in range(1, 200)}
    upper = {floor_scale(PHI_SQUARED, n) for n in range(1, 200)}
    assert not lower & upper
    limit = floor_scale(PHI, 199)
    assert set(range(1, limit + 1)) <= lower | upper


def test_beatty_inverse():
    assert beatty_inverse(PHI, 8) == 5
    assert beatty_inverse(PHI, 7) is None
    assert beatty_inverse(PHI_SQUARED, 7) == 3
    assert beatty_inverse(PHI, 0) is None


def test_partial_quotients():
    def head(q, count):
        terms = []
        for t in partial_quotients(q):
            terms.append(t)
            if len(terms) == count:
                return terms

    assert head(PHI, 6) == [1, 1, 1, 1, 1, 1]
    assert head(QuadraticSurd(0, 1, 1, 2), 5) == [1, 2, 2, 2, 2]
    assert head(SILVER_GAMMA, 4) == [0, 2, 2, 2]
    assert head(metallic_gamma(3), 4) == [0, 3, 3, 3]
    assert head(QuadraticSurd(0, 1, 1, 3), 5) == [1, 1, 2, 1, 2]
    assert list(partial_quotients(QuadraticSurd.rational(7, 3, 5))) == [2, 3]


def test_convergents():
    fibs = [(h, k) for (h, k), _ in zip(convergents(PHI), range(6))]
    assert fibs == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5), (13, 8)]


def test_floor_scale_matches_oracle():
    rng = random.Random(7)
    constants = [GOLDEN_GAMMA, PHI, PHI_SQUARED, SILVER_GAMMA, PELL_UPPER_RATIO, CLOITRE_GAMMA,
                 QuadraticSurd(-17, -3, 7, 11) * -1, QuadraticSurd(5, -1, 3, 7)]
    for q in constants:
        for _ in range(50):
            n = rng.randint(0, 10 ** 12)
            assert floor_scale(q, n) == floor_scale_oracle(q, n)


if __name__ == '__main__':
    import sys
    sys.exit(pytest.main([__file__, '-v']))
