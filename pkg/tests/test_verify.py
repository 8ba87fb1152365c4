import json
import math
from fractions import Fraction

import numpy as np
import pytest

from golay_hd import verify
from golay_hd.cli import _corrupted


def test_lemma_five_positions(g24):
    r = verify.verify_lemma_five_positions(g24)
    assert r.passed and r.checked == math.comb(24, 5) == 42504
    assert r.details["count_histogram"] == {1: 42504}
    assert r.details["incidences"] == 759 * 56 == 42504


def test_lemma_four_positions(g24):
    r = verify.verify_lemma_four_positions(g24)
    assert r.passed and r.checked == 10626
    assert r.details["count_histogram"] == {5: 10626}
    assert 759 * 70 == 53130 == 5 * 10626


def test_theorem_cosets(g24):
    r = verify.verify_theorem_cosets(g24)
    assert r.passed and r.checked == 4096
    assert r.details["weight_evaluations"] == 2**24
    assert r.details["tie_cosets"] == 4096 - (1 + 24 + 276 + 2024) == 1771


def test_perfect_g23(g23):
    r = verify.verify_perfect_g23(g23)
    assert r.passed
    assert r.details["sphere_volume"] == 1 + 23 + 253 + 1771 == 2048
    assert r.details["leader_weight_histogram"] == {0: 1, 1: 23, 2: 253, 3: 1771}


def test_coset_profile_of_zero_coset(g24):
    min_w, mult = verify.coset_profiles(g24)
    assert (min_w[0], mult[0]) == (0, 1)


def test_cwer_identity():
    r = verify.verify_cwer_identity()
    assert r.passed
    assert r.details["five_times_c23_3"] == r.details["c23_4"] == 8855
    assert r.details["max_abs_difference_literal"] < 1e-12


def test_agreement_constants():
    c = verify.compute_agreement_constant()
    assert c.patterns == 10626
    assert c.correct_pick_prob == Fraction(1, 6)
    assert c.random_expected_sys_errors == 4
    assert c.expected_sys_errors == Fraction(5300, 1771)


def test_passthrough_constants():
    c = verify.compute_passthrough_constant()
    assert c.passthrough == 2 and c.parity_side == 2
    assert c.codeword_decoder == Fraction(5, 6) * Fraction(5300, 1771)


@pytest.mark.parametrize("exhaustive", [False, True])
def test_lemma2_counting_argument(g24, exhaustive):
    r = verify.verify_lemma2_counting_argument(g24, exhaustive=exhaustive)
    assert r.passed
    assert r.checked == (10626 if exhaustive else 500)
    assert 20 // 4 == 5


def test_corrupted_codebook_fails(g23, g24):
    bad = _corrupted(g24)
    assert not verify.verify_lemma_five_positions(bad).passed
    assert not verify.verify_theorem_cosets(bad).passed
    rep = verify.verify_lemma_four_positions(bad)
    assert not rep.passed and rep.failures and "positions" in rep.failures[0]
    assert not verify.verify_perfect_g23(_corrupted(g23)).passed
    assert not verify.verify_agreement_constant(bad).passed


def test_run_all_and_report_forms():
    reports = verify.run_all(["lemma1", "cwer_identity"])
    assert [r.name for r in reports] == ["lemma1", "cwer_identity"]
    assert all(r.passed for r in reports)
    json.dumps([r.to_dict() for r in reports])
    assert reports[0].summary().startswith("[PASS] lemma1")
    with pytest.raises(KeyError):
        verify.run_all(["lemma9"])


def test_oracle_does_not_use_decoder_tables(monkeypatch, g24):
    import golay_hd.decoder as dec

    def boom():
        raise AssertionError("verification touched the decoder tables")

    monkeypatch.setattr(dec, "coset_table_24", boom)
    monkeypatch.setattr(dec, "syndrome_table_23", boom)
    verify._agreement_constants(g24)
    assert verify.verify_theorem_cosets(g24).passed
