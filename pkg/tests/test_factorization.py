"""Symbolic determinant splits, sign conventions, and kernel witnesses."""

import random
from fractions import Fraction
from pathlib import Path

import pytest

from distgeom import (
    DistanceVector,
    GenericEntryTable,
    ResourceCapError,
    annihilates,
    distances,
    factor_nbody,
    factor_w,
    heron_check,
    kernel_witness,
    nbody_sigma_value,
    sign_dictionary,
    symbolic_cm_det,
    symbolic_nbody_det,
    w_matches_minus_nbody,
)
from distgeom import sampling
from distgeom.factorization import (
    distance_table,
    mass_distance_table,
    pair_table,
    specialize_to_masses_and_distances,
    symbolic_bordered_masses_det,
)
from distgeom.polys import SparsePoly, VarTable

GOLDENS = Path(__file__).parent / "goldens" / "v1"


def _golden(name: str) -> str:
    return (GOLDENS / name).read_text().strip()


class TestVariableTables:
    def test_layouts(self):
        assert mass_distance_table(3).names == (
            "a_1", "a_2", "a_3", "r_1_2", "r_1_3", "r_2_3",
        )
        assert mass_distance_table(3, equal_masses=True).names == (
            "a", "r_1_2", "r_1_3", "r_2_3",
        )
        assert distance_table(3).names == ("r_1_2", "r_1_3", "r_2_3")
        assert pair_table(2).names == (
            "s_1_1", "s_1_2", "s_2_1", "s_2_2",
            "t_1_1", "t_1_2", "t_2_1", "t_2_2",
        )


class TestSymbolicDeterminants:
    def test_two_point_bordered(self):
        assert symbolic_cm_det(2).to_text() == "2 * r_1_2"

    def test_three_point_bordered_is_the_six_term_polynomial(self):
        delta = symbolic_cm_det(3)
        table = delta.table
        r12, r13, r23 = (SparsePoly.variable(table, v) for v in table.names)
        expected = (
            r12**2 + r13**2 + r23**2
            - 2 * r12 * r13 - 2 * r12 * r23 - 2 * r13 * r23
        )
        assert delta == expected
        assert len(delta.terms) == 6

    def test_bordered_det_evaluates_to_frozen_anchors(self):
        delta = symbolic_cm_det(3)
        assert delta.evaluate({"r_1_2": 1, "r_1_3": 1, "r_2_3": 1}) == -3
        assert delta.evaluate({"r_1_2": 9, "r_1_3": 25, "r_2_3": 16}) == -576

    def test_bordered_det_is_homogeneous(self):
        for n in (2, 3, 4):
            delta = symbolic_cm_det(n)
            assert delta.degrees_in(range(len(delta.table))) == {n - 1}

    def test_interaction_det_is_bihomogeneous(self):
        for n in (2, 3, 4):
            table = mass_distance_table(n)
            det = symbolic_nbody_det(n, table=table)
            pairs = n * (n - 1) // 2
            assert det.degrees_in(range(n)) == {pairs}
            assert det.degrees_in(range(n, len(table))) == {pairs}

    def test_bordered_mass_det_is_minus_elementary_symmetric(self):
        # Independent oracle: -e_{n-1} expanded from subsets directly.
        from itertools import combinations
        from math import prod

        for n in (2, 3, 4, 5):
            det = symbolic_bordered_masses_det(n)
            table = det.table
            alphas = [SparsePoly.variable(table, f"a_{i + 1}") for i in range(n)]
            oracle = SparsePoly.zero(table)
            for combo in combinations(alphas, n - 1):
                oracle = oracle + prod(combo)
            assert det == -oracle


class TestFactorNBody:
    def test_two_bodies(self):
        cert = factor_nbody(2)
        assert cert.verified
        assert cert.quotient == 1
        e, delta = cert.factors
        assert e.to_text() == "1 * a_1 + 1 * a_2"
        assert delta.to_text() == "2 * r_1_2"

    def test_three_bodies_quotient(self):
        cert = factor_nbody(3)
        assert cert.verified
        assert cert.quotient.to_text() == (
            "-2 * a_1 * r_2_3 + -2 * a_2 * r_1_3 + -2 * a_3 * r_1_2"
        )

    def test_product_reassembles_determinant(self):
        for n in (2, 3, 4):
            cert = factor_nbody(n)
            product = cert.quotient
            for factor in cert.factors:
                product = product * factor
            assert product == cert.lhs

    def test_quotient_uses_both_variable_classes(self):
        for n in (3, 4):
            cert = factor_nbody(n)
            used = cert.quotient.used_vars()
            assert used & set(range(n)), "no mass variable appears"
            assert used & set(range(n, len(cert.lhs.table))), "no distance variable appears"

    def test_quotient_bidegree(self):
        # deg(lhs) = (p, p) with p = C(n,2); the split removes degree
        # (n-1, 0) and (0, n-1), so the quotient has bidegree (p-n+1, p-n+1).
        for n in (3, 4):
            cert = factor_nbody(n)
            pairs = n * (n - 1) // 2
            assert cert.quotient.degrees_in(range(n)) == {pairs - n + 1}
            assert cert.quotient.degrees_in(
                range(n, len(cert.lhs.table))
            ) == {pairs - n + 1}

    def test_equal_masses(self):
        cert = factor_nbody(3, equal_masses=True)
        assert cert.verified
        e, delta = cert.factors
        assert e.to_text() == "3 * a^2"
        assert cert.quotient.evaluate({"a": 1, "r_1_2": 1, "r_1_3": 1, "r_2_3": 1}) == -6

    def test_golden_quotients(self):
        assert factor_nbody(2).quotient.to_text() == _golden("sigma_n2.txt")
        assert factor_nbody(3).quotient.to_text() == _golden("sigma_n3.txt")
        assert factor_nbody(4).quotient.to_text() == _golden("sigma_n4.txt")

    def test_certificate_json(self):
        doc = factor_nbody(2).to_json_dict()
        assert doc["family"] == "nbody" and doc["n"] == 2
        assert doc["vars"] == ["a_1", "a_2", "r_1_2"]
        assert doc["quotient"] == "1"
        assert doc["verified"] is True
        assert len(doc["factors"]) == 2


class TestFactorW:
    def test_two_points_quotient_is_one(self):
        cert = factor_w(2)
        assert cert.verified
        assert cert.quotient == 1
        assert cert.quotient.to_text() == _golden("z_n2.txt")

    def test_three_points(self):
        cert = factor_w(3)
        assert cert.verified
        assert cert.quotient.to_text() == _golden("z_n3.txt")
        product = cert.quotient
        for factor in cert.factors:
            product = product * factor
        assert product == cert.lhs

    def test_factor_content_is_one(self):
        cert = factor_w(3)
        det_cs, det_ct = cert.factors
        assert det_cs.content() == 1
        assert det_ct.content() == 1

    def test_specialized_lhs_matches_interaction_determinant(self):
        # Sending s to squared distances and t to the diagonal mass table
        # turns the generalized matrix into the entrywise negation of the
        # interaction matrix, so determinants match up to (-1)^C(n,2).
        for n in (2, 3):
            cert = factor_w(n)
            target = mass_distance_table(n)
            specialized = specialize_to_masses_and_distances(cert.lhs, n, target)
            nbody = symbolic_nbody_det(n, table=target)
            pairs = n * (n - 1) // 2
            assert specialized == (nbody if pairs % 2 == 0 else -nbody)


class TestCaps:
    def test_nbody_default_cap(self):
        with pytest.raises(ResourceCapError):
            symbolic_nbody_det(6)
        with pytest.raises(ResourceCapError):
            factor_nbody(6, long_running=True)

    def test_nbody_long_running_gate(self):
        with pytest.raises(ResourceCapError) as info:
            factor_nbody(5)
        assert "long" in str(info.value).lower() or "5" in str(info.value)

    def test_nbody_env_override(self, monkeypatch):
        monkeypatch.setenv("NBODY_MAX_SYMBOLIC_N", "3")
        with pytest.raises(ResourceCapError):
            symbolic_nbody_det(4)
        monkeypatch.setenv("NBODY_MAX_SYMBOLIC_N", "4")
        assert symbolic_nbody_det(4).degree() == 12
        monkeypatch.setenv("NBODY_MAX_SYMBOLIC_N", "not-a-number")
        with pytest.raises(ResourceCapError):
            symbolic_nbody_det(3)

    def test_w_caps(self):
        with pytest.raises(ResourceCapError) as info:
            factor_w(4)
        assert "long_running" in str(info.value)
        with pytest.raises(ResourceCapError):
            factor_w(5, long_running=True)

    def test_lower_bounds(self):
        with pytest.raises(ResourceCapError):
            factor_nbody(1)
        with pytest.raises(ResourceCapError):
            factor_w(1)


class TestSignDictionary:
    def test_symbolic_range(self):
        for n in (2, 3, 4):
            report = sign_dictionary(n)
            assert report.ok, report
            assert report.entrywise_ok and report.det_ok and report.quotient_ok

    def test_capped_above_four(self):
        with pytest.raises(ResourceCapError):
            sign_dictionary(5)

    def test_numeric_spot_check(self):
        rng = random.Random(61)
        for n in (5, 6):
            cfg = sampling.random_nonsingular_configuration(rng, n, n - 1)
            r = distances(cfg)
            alpha = sampling.random_positive_alpha(rng, n)
            assert w_matches_minus_nbody(alpha, r)


class TestSigmaValue:
    def test_unit_triangle(self):
        # det B = 54, e_2 = 3, delta = -3: quotient -6, matching the
        # three-body closed form -2(a_1 r_23 + a_2 r_13 + a_3 r_12).
        sigma = nbody_sigma_value([1, 1, 1], DistanceVector(3, [1, 1, 1]))
        assert sigma == -6

    def test_matches_three_body_closed_form(self):
        rng = random.Random(62)
        for _ in range(10):
            cfg = sampling.random_nonsingular_configuration(rng, 3, 2)
            r = distances(cfg)
            alpha = sampling.random_positive_alpha(rng, 3)
            sigma = nbody_sigma_value(alpha, r)
            closed = -2 * (
                alpha[0] * r.sq(1, 2) + alpha[1] * r.sq(0, 2) + alpha[2] * r.sq(0, 1)
            )
            assert sigma == closed

    def test_sign_alternates_with_n(self):
        rng = random.Random(63)
        for n in (3, 4, 5):
            cfg = sampling.random_nonsingular_configuration(rng, n, n - 1)
            r = distances(cfg)
            alpha = sampling.random_positive_alpha(rng, n)
            sigma = nbody_sigma_value(alpha, r)
            assert (-1) ** n * sigma > 0

    def test_rejects_float_input(self):
        with pytest.raises(ValueError):
            nbody_sigma_value([1.0, 1.0, 1.0], DistanceVector(3, [1.5, 1.5, 1.5]))


class TestHeron:
    def test_identity_holds(self):
        report = heron_check()
        assert report.ok
        assert "match" in report.detail


class TestKernelWitness:
    def test_collinear_example(self):
        # Distances 1, 2, 1 on a line: squared entries 1, 4, 1.
        s = GenericEntryTable([[0, 1, 4], [1, 0, 1], [4, 1, 0]])
        z = kernel_witness(s)
        assert z == [-2, 1, -2]

    def test_witness_annihilates_any_second_table(self):
        rng = random.Random(64)
        s = GenericEntryTable([[0, 1, 4], [1, 0, 1], [4, 1, 0]])
        z = kernel_witness(s)
        for _ in range(10):
            t = sampling.random_entry_table(rng, 3)
            assert annihilates(s, t, z)

    def test_random_singular_tables(self):
        rng = random.Random(65)
        for _ in range(10):
            s = sampling.random_singular_entry_table(rng, rng.randint(3, 5))
            z = kernel_witness(s)
            t = sampling.random_entry_table(rng, s.n)
            assert annihilates(s, t, z)

    def test_nonsingular_table_refused(self):
        # Unit triangle distances: the bordered table has determinant -3.
        s = GenericEntryTable([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        with pytest.raises(ValueError):
            kernel_witness(s)

    def test_float_entries_refused(self):
        s = GenericEntryTable([[0.0, 1.0], [1.0, 0.0]])
        with pytest.raises(ValueError):
            kernel_witness(s)
