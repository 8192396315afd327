"""End-to-end acceptance checks, one per headline claim of the library.

Each test prints a single machine-readable pass/fail line and enforces its
wall-clock budget.  Criterion 3 intentionally covers every branch-point
count r >= 0 for the quaternion family: restricting r to odd values is
refuted by an explicit genus-2 action of Q(8) with signature (0|4,4,4),
cross-checked here by two independent quotient computations (see the
project decision log).
"""

import io
import json
import time
from fractions import Fraction

from genuszero import (
    Signature,
    build_binary_icosahedral,
    build_cyclic,
    build_dihedral,
    build_generalized_quaternion,
    build_polyhedral,
    build_type_ii,
    build_zm,
    enumerate_signatures,
    enumerate_vectors,
    fixed_point_count,
    gamma_prime_signature,
    genus_zero_signatures,
    parse_signature,
    prime_order_subgroups_up_to_conjugacy,
    quotient_genus,
    verify_icosahedral,
    verify_sphere_and_torus,
    verify_theorem_one,
    verify_zm,
)
from genuszero.cli import main


class _Budget:
    def __init__(self, criterion, seconds):
        self.criterion = criterion
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"[{status}] criterion {self.criterion} ({elapsed:.2f}s / "
              f"{self.seconds}s budget)")
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"criterion {self.criterion} exceeded its {self.seconds}s budget"
            )
        return False


def _signature_set(G, bound):
    return {
        (str(e.signature), e.genus)
        for e in genus_zero_signatures(G, bound).admissible
    }


def test_criterion_1_z6_classification():
    with _Budget(1, 1.0):
        out = io.StringIO()
        code = main(["classify", "C6", "--max-genus", "3", "--output", "json"],
                    out=out)
        assert code == 0
        payload = json.loads(out.getvalue())
        got = {(e["signature"], e["genus"]) for e in payload["admissible"]}
        assert got == {("(0|6,6)", 0), ("(0|2,3,6)", 1), ("(0|2,2,3,3)", 2)}


def test_criterion_2_cyclic_prime_powers():
    with _Budget(2, 10.0):
        z8 = _signature_set(build_cyclic(8), 10)
        expected8 = {
            (str(Signature(0, (2,) * r + (8, 8))), 2 * r) for r in range(6)
        }
        assert z8 == expected8
        z9 = _signature_set(build_cyclic(9), 12)
        expected9 = {
            (str(Signature(0, (3,) * r + (9, 9))), 3 * r) for r in range(5)
        }
        assert z9 == expected9


def test_criterion_3_quaternion_family():
    # Corrected family: every r >= 0 occurs, not only odd r.  The r = 0
    # entry for Q(8) is demonstrated below through both quotient oracles.
    with _Budget("3 (family corrected to all r >= 0)", 30.0):
        q8 = _signature_set(build_generalized_quaternion(3), 12)
        expected_q8 = {
            (str(Signature(0, (2,) * r + (4, 4, 4))), 2 * (r + 1))
            for r in range(6)
        }
        assert q8 == expected_q8
        q16 = _signature_set(build_generalized_quaternion(4), 20)
        expected_q16 = {
            (str(Signature(0, (2,) * r + (4, 4, 8))), 4 * (r + 1))
            for r in range(5)
        }
        assert q16 == expected_q16

        # even-r witness, checked against both independent quotient routes
        G = build_generalized_quaternion(3)
        v = next(enumerate_vectors(G, parse_signature("(0|4,4,4)")))
        (H,) = prime_order_subgroups_up_to_conjugacy(G)
        report = quotient_genus(v, H)
        assert report.quotient_genus == 0
        assert gamma_prime_signature(v, H) == report.gamma_prime_signature


def test_criterion_4_zm_family():
    with _Budget(4, 5.0):
        for p in (3, 5):
            check = verify_zm(p)
            assert check.passed, check.details


def test_criterion_5_nonexistence_instances():
    with _Budget(5, 30.0):
        for n in (12, 18, 20, 30, 45):
            entries = genus_zero_signatures(build_cyclic(n), 10).admissible
            positive = [e for e in entries if e.genus > 0]
            assert not positive, (n, [str(e.signature) for e in positive])


def test_criterion_6_diophantine():
    with _Budget(6, 1.0):
        check = verify_icosahedral()
        assert check.passed, check.details


def test_criterion_7_binary_icosahedral_verdict():
    with _Budget(7, 60.0):
        report = genus_zero_signatures(build_binary_icosahedral(), 2)
        assert not report.admissible
        assert report.verdict == "NoPositiveGenusAction"


def test_criterion_8_sphere_and_torus_tables():
    with _Budget(8, 1.0):
        check = verify_sphere_and_torus()
        assert check.passed, check.details


CATALOGUE = [
    (build_cyclic(6), 3),
    (build_cyclic(8), 3),
    (build_cyclic(12), 3),
    (build_dihedral(3), 3),
    (build_dihedral(5), 3),
    (build_generalized_quaternion(3), 3),
    (build_generalized_quaternion(4), 3),
    (build_polyhedral("A4"), 3),
    (build_polyhedral("S4"), 3),
    (build_zm(3, 4, -1), 3),
    (build_zm(5, 4, -1), 4),
    (build_type_ii(3, -1), 3),
]


def _catalogue_actions():
    for G, bound in CATALOGUE:
        for sig, genus in enumerate_signatures(G, bound):
            for v in enumerate_vectors(G, sig):
                yield G, v


def test_criterion_9_oracle_equivalence():
    with _Budget(9, 120.0):
        checked = 0
        for G, v in _catalogue_actions():
            for H in prime_order_subgroups_up_to_conjugacy(G):
                fast = quotient_genus(v, H)  # would raise on any tripwire
                assert gamma_prime_signature(v, H) == fast.gamma_prime_signature
                checked += 1
        assert checked > 100


def test_criterion_10_ramification_identity():
    with _Budget(10, 120.0):
        checked = 0
        for G, v in _catalogue_actions():
            total = sum(fixed_point_count(v, s) for s in range(1, G.order))
            expected = G.order * sum(
                (1 - Fraction(1, n) for n in v.signature.periods), Fraction(0)
            )
            assert total == expected, (G.family, str(v.signature))
            checked += 1
        assert checked > 50


def test_criterion_11_catalogue_sweep():
    with _Budget(11, 300.0):
        check = verify_theorem_one()
        assert check.passed, check.details
