import pytest

from dihedralkit.closure import Budget, tensor_closure_probe, verify_closure
from dihedralkit.isodec import is_isomorphic
from dihedralkit.klein import klein_heller, klein_trivial
from dihedralkit.reps import SubgroupId, induce, string_module, trivial_module
from dihedralkit.words import Word


def test_trivial_seed_closes_immediately():
    result = tensor_closure_probe(trivial_module(2), seed=0)
    assert result.verdict == "closed"
    assert len(result.classes) == 1
    assert result.rounds_run == 1


def test_induced_trivial_closes():
    ky = induce(klein_trivial(), SubgroupId.KLEIN_Y, 2)
    result = tensor_closure_probe(ky, seed=0)
    assert result.verdict == "closed"
    # regression fixture: the closure is the single class of the seed itself
    assert len(result.classes) == 1
    assert result.classes[0].rep.dim == 2
    assert is_isomorphic(result.classes[0].rep, string_module(Word.parse("a"), 2))
    assert verify_closure(result, ky, seed=0)


def test_closed_verdict_order_independent():
    ky = induce(klein_trivial(), SubgroupId.KLEIN_Y, 2)
    r1 = tensor_closure_probe(ky, seed=0)
    r2 = tensor_closure_probe(ky, seed=12345)
    assert r1.verdict == r2.verdict == "closed"
    assert len(r1.classes) == len(r2.classes)


def test_induced_translate_exceeds_budget_with_growth():
    oky = induce(klein_heller(klein_trivial(), -1), SubgroupId.KLEIN_Y, 2)
    result = tensor_closure_probe(oky, Budget(max_dim=100, max_classes=64, max_rounds=8), seed=0)
    assert result.verdict == "budget_exceeded"
    mags = result.signature_magnitudes()
    assert len(mags) >= 3
    assert all(b > a for a, b in zip(mags, mags[1:]))


def test_budget_dimension_stop():
    oky = induce(klein_heller(klein_trivial(), -1), SubgroupId.KLEIN_Y, 2)
    result = tensor_closure_probe(oky, Budget(max_dim=30, max_classes=64, max_rounds=8), seed=0)
    assert result.verdict == "budget_exceeded"
    assert "max_dim" in (result.reason or "") or "round" in (result.reason or "")


def test_probe_json_shape():
    result = tensor_closure_probe(trivial_module(2), seed=0)
    js = result.to_json()
    assert js["verdict"] == "closed"
    assert js["budget"]["max_dim"] == 256
    assert isinstance(js["trace"], list)
    assert js["seed"] == 0
