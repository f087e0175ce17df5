from fractions import Fraction

import pytest

from wedge import boson, fermion, verify
from wedge.boson import BosonState
from wedge.verify import SweepResult


def test_sweep_result_bookkeeping():
    res = SweepResult()
    res.record(True, "never shown")
    for n in range(8):
        res.record(False, lambda n=n: f"case {n}")
    assert (res.checked, res.failures, res.ok) == (9, 8, False)
    assert res.samples == [f"case {n}" for n in range(verify.MAX_SAMPLES)]
    assert SweepResult(3, 0).to_obj() == {"checked": 3, "failures": 0}
    merged = SweepResult(2, 0).merge(res)
    assert merged.checked == 11 and len(merged.samples) == verify.MAX_SAMPLES


def test_workers(monkeypatch):
    monkeypatch.delenv("WEDGE_THREADS", raising=False)
    assert verify.workers() == 1
    monkeypatch.setenv("WEDGE_THREADS", "3")
    assert verify.workers() == 3
    for bad in ("0", "-2", "many"):
        monkeypatch.setenv("WEDGE_THREADS", bad)
        with pytest.raises(ValueError):
            verify.workers()


def test_small_suites_pass():
    assert verify.mn_suite(4, 3).ok
    assert verify.relations_suite(1, 3, 4, 2).ok
    assert verify.cocycle_suite(2, 2, 3, 2, 2).ok
    assert verify.universal_suite(1, ("sl2",)).ok
    assert verify.oscillator_suite(1, 5, 4).ok


def test_counts_are_deterministic():
    a = verify.correspondence_suite(1, 4, 3)
    b = verify.correspondence_suite(1, 4, 3)
    assert a.to_obj() == b.to_obj() and a.ok


def test_parallel_matches_serial(monkeypatch):
    serial = verify.correspondence_suite(1, 4, 3)
    monkeypatch.setenv("WEDGE_THREADS", "2")
    assert verify.correspondence_suite(1, 4, 3).to_obj() == serial.to_obj()


def test_mn_suite_catches_a_sign_error(monkeypatch):
    real = boson.p_mul

    def flipped(k, w):
        out = real(k, w)
        return out * -1 if k == 2 else out

    monkeypatch.setattr(boson, "p_mul", flipped)
    res = verify.mn_suite(3, 2)
    assert res.failures > 0 and res.samples


def test_relations_suite_catches_a_missing_sign(monkeypatch):
    real = fermion.create_basis

    def unsigned(j, key):
        hit = real(j, key)
        return None if hit is None else (1, hit[1])

    monkeypatch.setattr(fermion, "create_basis", unsigned)
    assert verify.relations_suite(1, 3, 3, 1).failures > 0


def test_oscillator_suite_catches_a_dropped_strip(monkeypatch):
    real = verify.enumerate_strips
    monkeypatch.setattr(verify, "enumerate_strips", lambda lam, k, d: real(lam, k, d)[1:])
    assert verify.oscillator_suite(0, 4, 3).failures > 0


def test_correspondence_catches_a_broken_boson_side(monkeypatch):
    real = boson.xi_E

    def skewed(i, j, w):
        out = real(i, j, w)
        return out + BosonState.basis(0, (), Fraction(1)) if (i, j) == (1, 0) else out

    monkeypatch.setattr(boson, "xi_E", skewed)
    assert verify.correspondence_suite(0, 3, 2).failures > 0
