import pytest

from affine_nichols import verify
from affine_nichols.roots import preset


@pytest.mark.parametrize("name", ["B2", "G2"])
def test_all_suites_non_simply_laced(name):
    checks = verify.run(verify.RunConfig(preset(name), trials=3, seed=1))
    bad = [c["id"] for c in checks if c["status"] == "fail"]
    assert not bad
    skipped = [c["id"] for c in checks if c["status"] == "skipped"]
    assert skipped == ["prop51"]


def test_check_entry_shape():
    entry = verify.check("x.y", "some identity", None, reason="too big")
    assert entry == {"id": "x.y", "paper_ref": "some identity", "status": "skipped",
                     "witness": None, "reason": "too big"}


def test_rank_two_identities_only_for_named_systems():
    assert verify.rank_two_identities(preset("A3")) == []
    assert len(verify.rank_two_identities(preset("A2"))) == 2


def test_example_path_checks_pass():
    checks = verify.example_path_checks(preset("A2"))
    assert len(checks) == 3 and all(c["status"] == "pass" for c in checks)
    assert verify.example_path_checks(preset("B2")) == []


def test_polynomial_properties_clean():
    assert not any(verify.polynomial_properties(preset("G2"), 10, 2).values())
