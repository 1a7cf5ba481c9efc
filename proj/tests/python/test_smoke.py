import json

import pytest

import proxring


@pytest.fixture(scope="module")
def image16():
    return proxring.load_fixture("builtin:image16")


def test_builtin_fixture_loads(image16):
    assert len(image16.labels) == 16
    assert set(image16.contexts) == {"R1", "R2"}
    assert image16.precheck("R1")["verdict"] is True


def test_upper_approximations(image16):
    assert proxring.upper_approx(image16.subset("I_prime")).labels() == ["x00", "x01"]
    assert proxring.upper_approx(image16.subset("R1")).labels() == [
        "x00", "x01", "x10", "x11",
    ]


def test_nearness(image16):
    a = image16.subset_of(["x01"])
    b = image16.subset_of(["x00"])
    c = image16.subset_of(["x10"])
    assert proxring.descriptively_near(a, b)
    assert not proxring.descriptively_near(a, c)
    assert proxring.descriptive_intersection(a, b).labels() == ["x00", "x01"]


def test_prime_ideal_checks(image16):
    r1 = image16.context("R1")
    assert r1.zero == "x00"
    assert r1.one == "x11"

    prime = proxring.check_prime_ideal(image16.subset("I_prime"), r1)
    assert prime["verdict"] is True

    r2 = image16.context("R2")
    not_prime = proxring.check_prime_ideal(image16.subset("I_notprime"), r2)
    assert not_prime["verdict"] is False
    witnesses = [w["elements"] for ax in not_prime["axioms"] for w in ax["witnesses"]]
    assert ["x00", "x11", "x00"] in witnesses


def test_quotient_and_product(image16):
    r1 = image16.context("R1")
    q = proxring.quotient(r1, image16.subset("I_prime"), rho="feature")
    assert dict(q.cosets()) == {"x01": ["x00"], "x10": ["x11"]}
    assert q.audits()["mul_within_R"] is True
    assert proxring.check_integral_domain(q.ctx)["verdict"] is True

    product = proxring.direct_product(r1, r1)
    assert product.phi_product_law is True
    assert proxring.check_ring(product.ctx)["verdict"] is True


def test_verify_and_errors(image16):
    report = proxring.verify("T1", image16, {"ring": "R1", "ideal": "I_prime"})
    assert report["classification"] == "confirmed"

    with pytest.raises(proxring.Error):
        proxring.load_fixture("builtin:nope")
    with pytest.raises(proxring.Error):
        image16.subset("nope")


def test_search_is_deterministic():
    a = proxring.search("T9", max_candidates=500)
    b = proxring.search("T9", max_candidates=500)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["theorem"] == "T9"
    for finding in a["findings"]:
        assert finding["report"]["classification"] == "counterexample"
