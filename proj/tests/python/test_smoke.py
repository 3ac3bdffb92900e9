import pytest

import ccs


def test_scheme_shape():
    x = ccs.paper_scheme(5)
    assert (x.degree, x.rank) == (100, 40)
    assert x.is_association_scheme()
    assert ccs.is_wl_stable(x)
    assert sorted(x.valency(c) for c in range(x.rank)).count(5) == 15


def test_fusion_and_meet():
    x = ccs.paper_scheme(5)
    x1, x2 = ccs.paper_scheme(5, "1"), ccs.paper_scheme(5, "2")
    assert ccs.is_fusion(x1, x)
    assert not ccs.is_fusion(x, x1)
    assert ccs.meet(x1, x2) == x


def test_tensor_and_json_round_trip():
    x = ccs.paper_scheme(5)
    t = ccs.tensor(x)
    assert t["rank"] == 40
    assert ccs.scheme_from_json(x.to_json()) == x


def test_wl_on_a_cycle():
    n = 6
    colors = [2] * (n * n)
    for i in range(n):
        colors[i * n + i] = 0
        colors[i * n + (i + 1) % n] = colors[((i + 1) % n) * n + i] = 1
    w = ccs.wl_stabilize(n, colors)
    assert w.rank == 4
    assert ccs.automorphism_group(w)["order"] == 12


def test_automorphisms_and_schurity():
    x = ccs.paper_scheme(5)
    assert ccs.automorphism_group(x)["order"] == 100
    s = ccs.schurity(x)
    assert not s["schurian"]
    assert s["witness_size"] == 500
    assert s["orbit_rank"] == 100


def test_separability_audit():
    audit = ccs.separability_audit(ccs.paper_scheme(5))
    assert audit["algebraic_automorphism_count"] == 24
    assert audit["induced_count"] == 24


def test_verify_stage():
    report = ccs.verify(5, lemma="census")
    assert report["status"] == "pass"
    assert ccs.candidate_involutions("D2pxD2p", 5) == 35


def test_errors():
    with pytest.raises(ValueError):
        ccs.paper_scheme(4)
    with pytest.raises(ValueError):
        ccs.scheme_from_json('{"degree": 2, "colors": [0]}')
    with pytest.raises(ValueError):
        ccs.wl_stabilize(3, [0, 1])
    with pytest.raises(ccs.SearchBudgetExceeded):
        ccs.automorphism_group(ccs.paper_scheme(5, "0"), budget=1)
