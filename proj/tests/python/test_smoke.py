import pytest

import coltrs


def test_prime_field_arithmetic():
    F = coltrs.Field.make(29, 1)
    assert F.q == 29
    for x in range(1, 29):
        assert F.mul(x, F.inv(x)) == 1
        assert F.add(x, F.neg(x)) == 0
    assert F.pow(2, 28) == 1
    with pytest.raises(ValueError):
        F.inv(0)


def test_extension_field_tokens():
    F = coltrs.Field.make(3, 3)
    for x in range(27):
        assert F.parse_element(F.format(x)) == x
    assert F.element_order(F.primitive) == 26
    assert coltrs.Field.parse(F.describe()) == F


def test_reference_examples_certify():
    expected = {1: (16, 7, 10, 14), 2: (15, 7, 9, 14), 3: (13, 5, 9, 10)}
    for ex_id, (n, k, d, schur) in expected.items():
        ex = coltrs.reference_example(ex_id)
        assert ex["d"] == d and ex["schur_dim"] == schur
        rep = coltrs.certify(ex["spec"], "both")
        assert rep["n"] == n and rep["k"] == k
        assert rep["is_mds"] and rep["d"] == d
        assert rep["schur_dim"] == schur
        assert rep["non_grs"] == "NOT-GRS-EQUIVALENT"
        assert rep["dual_ok"]
        assert ex["G"] == coltrs.generator(ex["spec"])
        H = coltrs.parity_closed_form(ex["spec"])
        assert ex["H"] == H


def test_pinned_search_matches_reference():
    ex = coltrs.reference_example(1)
    F = coltrs.Field.make(29, 1)
    spec = coltrs.search_spec(F, 16, 7, b=12, c=7, lambdas=[15, 21], extended=True)
    assert coltrs.generator(spec) == ex["G"]


def test_codec_round_trip():
    G = coltrs.generator(coltrs.reference_example(1)["spec"])
    msg = [3, 1, 4, 1, 5, 9, 2]
    word = coltrs.encode(G, msg)
    assert coltrs.erasure_decode(G, word) == msg
    holes = [0, 3, 4, 7, 8, 10, 12, 14, 15]
    punched = list(word)
    for p in holes:
        punched[p] = 0
    assert coltrs.erasure_decode(G, punched, holes) == msg
    with pytest.raises(RuntimeError):
        coltrs.erasure_decode(G, punched, list(range(10)))


def test_oracle_and_criterion_agree_on_negative_control():
    F = coltrs.Field.make(13, 1)
    spec = coltrs.make_spec(F, 3, 2, 1, 6, [2, 4, 6, 8, 10], [2, 12])
    ok_crit, wit_crit = coltrs.criterion_mds(spec)
    ok_orc, wit_orc = coltrs.oracle_mds(coltrs.generator(spec))
    assert not ok_crit and not ok_orc
    assert wit_crit == wit_orc == [0, 1, 6]


def test_schur_square_separates_plain_rs():
    F = coltrs.Field.make(13, 1)
    rs = coltrs.gen_rs(F, list(range(1, 11)), 4)
    _, dim = coltrs.schur_square(rs)
    assert dim == 7
    assert coltrs.non_grs_certificate(rs, 4) == "INCONCLUSIVE"
    twisted = coltrs.generator(coltrs.reference_example(1)["spec"])
    _, dim2 = coltrs.schur_square(twisted)
    assert dim2 == 14
    assert coltrs.non_grs_certificate(twisted, 7) == "NOT-GRS-EQUIVALENT"


def test_spec_and_matrix_serialization():
    spec = coltrs.reference_spec_canonical(2)
    again = coltrs.spec_from_json(coltrs.spec_to_json(spec))
    assert coltrs.generator(again) == coltrs.generator(spec)
    G = coltrs.generator(spec)
    assert coltrs.matrix_from_csv(coltrs.matrix_to_csv(G)) == G


def test_family_lengths():
    F = coltrs.Field.make(29, 1)
    spec = coltrs.family_construct(F, 7, "odd-squares")
    assert spec.n == 16
    ok, _ = coltrs.oracle_mds(coltrs.generator(spec))
    assert ok
