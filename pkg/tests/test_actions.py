import pytest
from hypothesis import given, settings, strategies as st

from genuszero import (
    GeneratingVector,
    Signature,
    build_cyclic,
    build_dihedral,
    build_generalized_quaternion,
    build_polyhedral,
    conjugation_orbit,
    count_conjugation_orbits,
    enumerate_vectors,
    exists,
    parse_signature,
    validate,
)


def test_cyclic_triangle_count():
    # Z_5 with three period-5 slots: choose nonzero a, b with a+b != 0,
    # c determined; 4*4 - 4 = 12 solutions
    G = build_cyclic(5)
    vectors = list(enumerate_vectors(G, Signature(0, (5, 5, 5))))
    assert len(vectors) == 12
    for v in vectors:
        assert sum(v.elements) % 5 == 0


def test_c6_count():
    # order-2 slot forced to 3, order-3 slots from {2,4} with sum 0 mod 6
    G = build_cyclic(6)
    vectors = list(enumerate_vectors(G, Signature(0, (2, 2, 3, 3))))
    assert sorted(v.elements for v in vectors) == [(3, 3, 2, 4), (3, 3, 4, 2)]


def test_validate_failure_reasons():
    G = build_cyclic(4)
    ok, reason = validate(GeneratingVector(G, Signature(0, (2, 4)), (1, 1)))
    assert not ok and "order condition" in reason
    ok, reason = validate(GeneratingVector(G, Signature(0, (4, 4)), (1, 1)))
    assert not ok and "product condition" in reason
    ok, reason = validate(GeneratingVector(G, Signature(0, (2, 2)), (2, 2)))
    assert not ok and "generation condition" in reason
    ok, reason = validate(GeneratingVector(G, Signature(0, (4, 4)), (1, 3)))
    assert ok and reason is None
    with pytest.raises(ValueError):
        validate(GeneratingVector(G, Signature(0, (4, 4)), (1,)))
    with pytest.raises(ValueError):
        validate(GeneratingVector(G, Signature(0, (4, 4)), (1, 9)))


def test_trivial_group_empty_vector():
    G = build_cyclic(1)
    assert [v.elements for v in enumerate_vectors(G, Signature(0, ()))] == [()]
    assert not exists(build_cyclic(2), Signature(0, ()))


def test_positive_orbit_genus_rejected():
    G = build_cyclic(2)
    with pytest.raises(ValueError):
        next(enumerate_vectors(G, Signature(1, (2, 2))))


def test_q8_triangle_vectors():
    G = build_generalized_quaternion(3)
    sig = parse_signature("(0|4,4,4)")
    vectors = list(enumerate_vectors(G, sig))
    assert len(vectors) == 24
    assert count_conjugation_orbits(vectors) == 6
    deduped = list(enumerate_vectors(G, sig, dedup=True))
    assert len(deduped) == 6


def test_dedup_trivial_on_abelian():
    G = build_cyclic(6)
    sig = Signature(0, (2, 3, 6))
    raw = list(enumerate_vectors(G, sig))
    deduped = list(enumerate_vectors(G, sig, dedup=True))
    assert len(raw) == len(deduped) == 2


def test_cap():
    G = build_polyhedral("A4")
    sig = parse_signature("(0|2,3,3)")
    capped = list(enumerate_vectors(G, sig, cap=5))
    assert len(capped) == 5
    assert exists(G, sig)


def test_conjugation_orbit_closure():
    G = build_dihedral(4)
    sig = parse_signature("(0|2,2,4)")
    v = next(enumerate_vectors(G, sig))
    orbit = conjugation_orbit(v)
    assert v.elements in orbit
    for elems in orbit:
        ok, reason = validate(GeneratingVector(G, sig, elems))
        assert ok, reason


def test_words_and_json():
    G = build_cyclic(6)
    v = next(enumerate_vectors(G, Signature(0, (6, 6))))
    d = v.to_json_dict()
    assert d["signature"] == "(0|6,6)"
    assert d["elements"] == list(v.elements)
    assert len(d["words"]) == 2


CASES = [
    (build_cyclic(8), "(0|2,8,8)"),
    (build_dihedral(5), "(0|2,2,5)"),
    (build_generalized_quaternion(3), "(0|2,4,4,4)"),
    (build_polyhedral("S4"), "(0|2,3,4)"),
    (build_polyhedral("A4"), "(0|3,3,3)"),
]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CASES))
def test_every_enumerated_vector_validates(case):
    G, text = case
    sig = parse_signature(text)
    for v in enumerate_vectors(G, sig):
        ok, reason = validate(v)
        assert ok, reason
        assert v.signature == sig


def test_enumeration_is_deterministic():
    G = build_polyhedral("A4")
    sig = parse_signature("(0|2,3,3)")
    first = [v.elements for v in enumerate_vectors(G, sig)]
    second = [v.elements for v in enumerate_vectors(G, sig)]
    assert first == second == sorted(first)
