import numpy as np
import pytest
from hypothesis import given, strategies as st

from golay_hd.core import (
    BitWord,
    ContractError,
    all_ones,
    distance,
    encode,
    extend_parity,
    popcount,
    weight,
)

from oracles import sphere

G23_WEIGHTS = {0: 1, 7: 253, 8: 506, 11: 1288, 12: 1288, 15: 506, 16: 253, 23: 1}
G24_WEIGHTS = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}

info_words = st.integers(0, 4095).map(lambda m: BitWord(m, 12))
words24 = st.integers(0, (1 << 24) - 1).map(lambda b: BitWord(b, 24))


def test_weight_histograms(g23, g24):
    assert g23.weight_distribution() == G23_WEIGHTS
    assert g24.weight_distribution() == G24_WEIGHTS


def test_minimum_distance_by_pairwise_scan(g23, g24):
    for cb, dmin in ((g23, 7), (g24, 8)):
        cw = cb.codewords
        d = popcount(cw[:, None] ^ cw[None, :])
        np.fill_diagonal(d, 99)
        assert d.min() == dmin


def test_closure_under_xor(g23, g24):
    for cb in (g23, g24):
        cw = np.sort(cb.codewords)
        sums = (cb.codewords[:, None] ^ cb.codewords[None, :]).ravel()
        assert np.all(cw[np.searchsorted(cw, sums)] == sums)


def test_counts_and_rates(g23, g24):
    assert len(g23) == len(g24) == 4096
    assert len(set(g23.codeword_set)) == 4096
    assert g23.rate.numerator == 12 and g23.rate.denominator == 23
    assert g24.rate == 0.5
    assert len(g23.generator_rows) == 12


def test_sphere_packing_equality():
    assert sphere(23, 3) == 2048 == 2 ** (23 - 12)


def test_g24_is_parity_extension(g23, g24):
    assert np.array_equal(g24.codewords & ((1 << 23) - 1), g23.codewords)
    assert np.all(popcount(g24.codewords) % 2 == 0)
    assert np.all(popcount(g24.codewords) % 4 == 0)
    assert all_ones(24) in g24
    assert all_ones(23) in g23


def test_extend_parity_on_light_codewords(g23):
    for c in g23:
        if weight(c) in (7, 8):
            e = extend_parity(c)
            assert weight(e) == 8
            assert e[23] == (weight(c) == 7)


def test_extend_parity_contract():
    assert extend_parity(BitWord(0, 23)) == BitWord(0, 24)
    with pytest.raises(ContractError):
        extend_parity(BitWord(0, 24))


def test_encode_zero_and_systematic(g23, g24):
    for cb in (g23, g24):
        assert encode(BitWord(0, 12), cb).bits == 0
        outs = {encode(BitWord(m, 12), cb).bits for m in range(4096)}
        assert len(outs) == 4096
    c = encode(BitWord(0xABC, 12), g24)
    assert c.bits & 0xFFF == 0xABC and c in g24


@given(info_words, info_words)
def test_encode_is_linear(a, b):
    from golay_hd.core import build_g24

    cb = build_g24()
    assert encode(a ^ b, cb) == encode(a, cb) ^ encode(b, cb)


def test_encode_contract(g23):
    with pytest.raises(ContractError):
        encode(BitWord(0, 23), g23)


def test_weight_and_distance_basics():
    x = BitWord(0b1011, 24)
    assert distance(x, x) == 0
    assert weight(all_ones(24)) == 24
    assert distance(x, BitWord(0, 24)) == 3
    with pytest.raises(ContractError):
        distance(BitWord(0, 23), BitWord(0, 24))


@given(words24, words24, words24)
def test_triangle_inequality(a, b, c):
    assert distance(a, b) <= distance(a, c) + distance(c, b)
    assert distance(a, b) == weight(a ^ b)


def test_bitword_validation():
    with pytest.raises(ContractError):
        BitWord(1 << 12, 12)
    with pytest.raises(ContractError):
        BitWord(0, 10)
    w = BitWord.from_bits([1, 0, 1] + [0] * 9)
    assert w == BitWord(5, 12)
    assert str(w).startswith("101")
    assert w.to_array().tolist()[:3] == [1, 0, 1]


def test_codebook_self_check(g23, g24):
    from golay_hd.cli import _corrupted

    g23.check()
    g24.check()
    with pytest.raises(AssertionError):
        _corrupted(g24).check()
