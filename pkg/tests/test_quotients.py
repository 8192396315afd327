from fractions import Fraction

import pytest

from genuszero import (
    GeneratingVector,
    Signature,
    build_cyclic,
    build_generalized_quaternion,
    build_polyhedral,
    build_zm,
    enumerate_vectors,
    fixed_point_count,
    fixed_points_unique_subgroup,
    gamma_prime_signature,
    parse_signature,
    prime_order_subgroups_up_to_conjugacy,
    quotient_genus,
    rh_measure,
)


def test_c6_fixed_points():
    G = build_cyclic(6)
    v = next(enumerate_vectors(G, parse_signature("(0|2,3,6)")))
    # |G| * sum of 1/n_j over periods the element order divides
    assert fixed_point_count(v, 3) == 4  # order 2: 6*(1/2 + 1/6)
    assert fixed_point_count(v, 2) == 3  # order 3: 6*(1/3 + 1/6)
    assert fixed_point_count(v, 1) == 1  # order 6: 6*(1/6)
    assert fixed_points_unique_subgroup(v, 2) == 4
    assert fixed_points_unique_subgroup(v, 3) == 3
    with pytest.raises(ValueError):
        fixed_point_count(v, 0)


def test_fixed_points_unique_subgroup_guard():
    G = build_polyhedral("A4")  # three subgroups of order 2
    v = next(enumerate_vectors(G, parse_signature("(0|2,3,3)")))
    with pytest.raises(ValueError):
        fixed_points_unique_subgroup(v, 2)
    with pytest.raises(ValueError):
        fixed_points_unique_subgroup(v, 5)


def test_quotient_genus_zero_case():
    G = build_generalized_quaternion(3)
    v = next(enumerate_vectors(G, parse_signature("(0|4,4,4)")))
    (H,) = prime_order_subgroups_up_to_conjugacy(G)
    report = quotient_genus(v, H)
    assert report.prime == 2
    assert report.fixed_points == 6
    assert report.quotient_genus == 0
    assert str(report.gamma_prime_signature) == "(0|2,2,2,2,2,2)"


def test_quotient_genus_positive_case():
    # Z_4 on a genus-3 surface: the involution subgroup has quotient genus 1
    G = build_cyclic(4)
    v = GeneratingVector(G, Signature(0, (4, 4, 4, 4)), (1, 1, 1, 1))
    (H,) = prime_order_subgroups_up_to_conjugacy(G)
    report = quotient_genus(v, H)
    assert report.fixed_points == 4
    assert report.quotient_genus == 1
    assert str(report.gamma_prime_signature) == "(1|2,2,2,2)"


def test_oracle_agreement():
    cases = [
        (build_cyclic(8), "(0|2,8,8)"),
        (build_cyclic(6), "(0|2,2,3,3)"),
        (build_generalized_quaternion(4), "(0|2,4,4,8)"),
        (build_polyhedral("A4"), "(0|2,3,3)"),
        (build_zm(5, 4, -1), "(0|4,4,5)"),
    ]
    for G, text in cases:
        sig = parse_signature(text)
        for v in enumerate_vectors(G, sig):
            for H in prime_order_subgroups_up_to_conjugacy(G):
                fast = quotient_genus(v, H)
                slow = gamma_prime_signature(v, H)
                assert slow == fast.gamma_prime_signature, (G.family, text)


def test_gamma_prime_measure_scaling():
    # the intermediate signature carries index times the covering measure
    G = build_cyclic(6)
    v = next(enumerate_vectors(G, parse_signature("(0|2,3,6)")))
    for H in prime_order_subgroups_up_to_conjugacy(G):
        index = G.order // H.order
        sub = gamma_prime_signature(v, H)
        assert rh_measure(sub) == Fraction(index) * rh_measure(v.signature)


def test_ramification_identity():
    cases = [
        (build_cyclic(8), "(0|2,8,8)"),
        (build_generalized_quaternion(3), "(0|4,4,4)"),
        (build_polyhedral("S4"), "(0|2,3,4)"),
    ]
    for G, text in cases:
        sig = parse_signature(text)
        v = next(enumerate_vectors(G, sig))
        total = sum(fixed_point_count(v, s) for s in range(1, G.order))
        expected = G.order * sum(
            (1 - Fraction(1, n) for n in sig.periods), Fraction(0)
        )
        assert total == expected


def test_quotient_rejects_composite_subgroup_order():
    G = build_cyclic(8)
    v = next(enumerate_vectors(G, parse_signature("(0|8,8)")))
    from genuszero.groups import cyclic_subgroup

    with pytest.raises(ValueError):
        quotient_genus(v, cyclic_subgroup(G, 2))  # order 4 subgroup
