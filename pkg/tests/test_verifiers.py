"""Checkers: positive instances, negative controls, and cross-agreements."""

import math

import numpy as np
import pytest

from majorana_braids.clifford import CliffordElement, generator
from majorana_braids.linalg import frobenius, identity, jordan_wigner, tensor
from majorana_braids.representations import (
    B_II,
    R_GATE,
    SWAP,
    UnitaryRep,
    bell_basis_string,
    ivanov,
    string_products,
    temperley_lieb,
)
from majorana_braids.verifiers import (
    check_braid_relations,
    check_conjugation_rep,
    check_entangling,
    check_extraspecial,
    check_majorana_string,
    check_parameterized_ybe,
    check_tl_relations,
    check_ybe,
    generator_order,
    solve_theta2,
)


def haar_unitary(rng, dim):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


class TestBraidRelations:
    def test_ivanov_passes(self):
        report = check_braid_relations(ivanov(6))
        assert report.passed and report.max_residual < 1e-10

    def test_perturbed_generator_fails(self):
        rng = np.random.default_rng(0)
        rep = ivanov(5)
        gens = list(rep.generators)
        gens[1] = haar_unitary(rng, rep.dim)
        broken = UnitaryRep("broken", rep.strands, rep.dim, tuple(gens))
        report = check_braid_relations(broken)
        assert not report.passed and report.max_residual > 1e-2

    def test_single_generator_vacuous_pass(self):
        rep = UnitaryRep("one", strands=2, dim=2, generators=(identity(2),))
        report = check_braid_relations(rep)
        assert report.passed and report.max_residual == 0.0 and not report.witnesses

    def test_witnesses_name_the_failing_pair(self):
        rng = np.random.default_rng(1)
        rep = ivanov(5)
        gens = list(rep.generators)
        gens[3] = haar_unitary(rng, rep.dim)
        broken = UnitaryRep("broken", rep.strands, rep.dim, tuple(gens))
        report = check_braid_relations(broken)
        failing = [w for w in report.witnesses if w.residual > report.tolerance]
        assert failing and all("g3" in w.relation for w in failing)


class TestYangBaxter:
    def test_r_gate_residual_zero(self):
        report = check_ybe(R_GATE)
        assert report.passed and report.max_residual == 0.0

    def test_bell_gate_and_swap_pass(self):
        assert check_ybe(B_II).passed
        assert check_ybe(SWAP).passed

    def test_random_unitary_fails(self):
        rng = np.random.default_rng(2)
        report = check_ybe(haar_unitary(rng, 4))
        assert not report.passed and report.max_residual > 1e-2

    def test_dimension_must_be_square(self):
        with pytest.raises(ValueError):
            check_ybe(identity(6))

    @pytest.mark.parametrize("gate", [R_GATE, B_II], ids=["r-gate", "b-ii"])
    def test_agreement_with_embedded_braid_relations(self, gate):
        # Embed the 4x4 solution at positions (1,2) and (2,3) of 3 factors:
        # the braid relation of the embeddings is exactly the YBE residual.
        g1 = tensor(gate, identity(2))
        g2 = tensor(identity(2), gate)
        braid_residual = frobenius(g1 @ g2 @ g1, g2 @ g1 @ g2)
        ybe_residual = check_ybe(gate).max_residual
        assert abs(braid_residual - ybe_residual) < 1e-12
        rep = UnitaryRep("embedded", strands=3, dim=8, generators=(g1, g2))
        assert check_braid_relations(rep).passed == check_ybe(gate).passed


class TestRapidityYangBaxter:
    def test_theta2_formula_against_clifford_expansion(self):
        # Brute-force oracle: expand (c1+s1 a)(c2+s2 b)(c3+s3 a) minus its
        # mirror in the sparse Clifford algebra and solve for the vanishing
        # coefficient condition on a grid; the formula must agree.
        n = 3
        a = generator(n, 1) * generator(n, 0)
        b = generator(n, 2) * generator(n, 1)
        one = CliffordElement.unit(n)

        def lhs_minus_rhs(t1, t2, t3):
            ra1 = math.cos(t1) * one + math.sin(t1) * a
            rb2 = math.cos(t2) * one + math.sin(t2) * b
            ra3 = math.cos(t3) * one + math.sin(t3) * a
            rb1 = math.cos(t1) * one + math.sin(t1) * b
            ra2 = math.cos(t2) * one + math.sin(t2) * a
            rb3 = math.cos(t3) * one + math.sin(t3) * b
            return (ra1 * rb2 * ra3 - rb3 * ra2 * rb1).norm()

        grid = np.linspace(-1.2, 1.2, 7)
        for t1 in grid:
            for t3 in grid:
                t2 = solve_theta2(t1, t3)
                assert lhs_minus_rhs(t1, t2, t3) < 1e-12
                # any angle off the constraint curve breaks the equation
                assert lhs_minus_rhs(t1, t2 + 0.2, t3) > 1e-3

    def test_ivanov_point(self):
        report = check_parameterized_ybe(
            math.pi / 4, math.pi / 4, math.pi / 4, n=4, k=1, tol=1e-12
        )
        assert report.passed

    def test_all_zero_angles(self):
        assert check_parameterized_ybe(0.0, 0.0, 0.0, n=4, k=2).passed

    def test_solved_angle_passes_and_perturbed_fails(self):
        t1, t3 = 0.3, 0.5
        t2 = solve_theta2(t1, t3)
        assert check_parameterized_ybe(t1, t2, t3, n=5, k=2, tol=1e-12).passed
        bad = check_parameterized_ybe(t1, t2 + 0.1, t3, n=5, k=2, tol=1e-3)
        assert not bad.passed and bad.max_residual > 1e-3

    def test_singular_case_reported(self):
        with pytest.raises(ValueError, match="singular"):
            solve_theta2(1.0, 1.0 - math.pi / 2)

    def test_site_index_validation(self):
        with pytest.raises(ValueError):
            check_parameterized_ybe(0.1, 0.1, 0.1, n=3, k=2)


class TestTemperleyLiebCheck:
    def test_passes_at_sqrt2(self):
        report = check_tl_relations(temperley_lieb(5), math.sqrt(2.0))
        assert report.passed and report.max_residual < 1e-10

    def test_wrong_loop_value_fails_on_squares(self):
        report = check_tl_relations(temperley_lieb(5), 2.0)
        assert not report.passed
        failing = [w for w in report.witnesses if w.residual > 1e-3]
        assert failing and all("^2" in w.relation for w in failing)

    def test_single_generator_checks_square_only(self):
        U = temperley_lieb(3)[:1]
        report = check_tl_relations(U, math.sqrt(2.0))
        assert report.passed and len(report.witnesses) == 1


class TestMajoranaStringCheck:
    def test_bell_string_exact(self):
        report = check_majorana_string(bell_basis_string(3))
        assert report.passed and report.max_residual == 0.0
        assert len(report.witnesses) == 8  # seven families, squares split

    def test_sign_flip_symmetry(self):
        # negating one B leaves every identity satisfied
        ms = bell_basis_string(3)
        pairs = list(ms.pairs)
        pairs[1] = (pairs[1][0], -pairs[1][1])
        report = check_majorana_string(type(ms)(pairs=tuple(pairs)))
        assert report.passed and report.max_residual == 0.0

    def test_replacing_a_with_ab_fails_squares(self):
        ms = bell_basis_string(3)
        pairs = list(ms.pairs)
        a2, b2 = pairs[1]
        pairs[1] = (a2 @ b2, b2)
        report = check_majorana_string(type(ms)(pairs=tuple(pairs)))
        assert not report.passed
        by_name = {w.relation: w.residual for w in report.witnesses}
        assert by_name["A_i^2 = 1"] > 1e-2


class TestExtraspecialCheck:
    def test_bell_products_pass(self):
        report = check_extraspecial(string_products(bell_basis_string(4)))
        assert report.passed and report.max_residual == 0.0

    def test_adjacent_majorana_blades_pass(self):
        basis = jordan_wigner(5)
        blades = [basis.matrices[i + 1] @ basis.matrices[i] for i in range(4)]
        assert check_extraspecial(blades).passed

    def test_wrong_square_fails(self):
        basis = jordan_wigner(5)
        blades = [basis.matrices[i + 1] @ basis.matrices[i] for i in range(4)]
        blades[2] = basis.matrices[0]  # squares to +I
        report = check_extraspecial(blades)
        assert not report.passed
        assert any("M2^2" in w.relation and w.residual > 1 for w in report.witnesses)


class TestEntangling:
    def test_r_gate_entangling_with_witness(self):
        report = check_entangling(R_GATE)
        assert report.passed
        detail = report.witnesses[0].detail
        assert detail["max_determinant"] > 0.4

    def test_swap_not_entangling(self):
        report = check_entangling(SWAP)
        assert not report.passed
        assert report.witnesses[0].detail["max_determinant"] < 1e-12

    def test_bell_gate_entangling(self):
        assert check_entangling(B_II).passed

    def test_rejects_non_unitary(self):
        with pytest.raises(ValueError):
            check_entangling(np.ones((4, 4)))
        with pytest.raises(ValueError):
            check_entangling(identity(2))


class TestGeneratorOrder:
    def test_identity_has_order_one(self):
        rep = UnitaryRep("id", strands=2, dim=4, generators=(identity(4),))
        assert generator_order(rep, 0) == 1

    def test_bell_gate_has_order_eight(self):
        rep = UnitaryRep("bell", strands=2, dim=4, generators=(B_II,))
        assert generator_order(rep, 0) == 8

    def test_exceeding_cap_returns_none(self):
        g = np.diag([np.exp(2j * math.pi / 37), 1.0]).astype(complex)
        rep = UnitaryRep("slow", strands=2, dim=2, generators=(g,))
        assert generator_order(rep, 0) is None


class TestConjugationAction:
    def test_exact_action_and_signed_square(self):
        report = check_conjugation_rep(5)
        assert report.passed and report.max_residual <= 1e-12
        assert report.parameters["t_squared_is_identity"] is False
        assert report.parameters["t_fourth_is_identity"] is True

    def test_braid_relations_of_induced_maps(self):
        report = check_conjugation_rep(6)
        braid_witnesses = [w for w in report.witnesses if "induced" in w.relation]
        assert braid_witnesses and all(w.residual <= 1e-12 for w in braid_witnesses)

    def test_requires_three(self):
        with pytest.raises(ValueError):
            check_conjugation_rep(2)


class TestNegativeControls:
    """Every checker must fail on a 1e-2 perturbation of a passing instance."""

    EPS = 1e-2

    def _unitary_kick(self, rng, dim):
        h = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        h = (h + h.conj().T) / 2
        h *= self.EPS / np.linalg.norm(h)
        evals, vecs = np.linalg.eigh(h)
        return vecs @ np.diag(np.exp(1j * evals)) @ vecs.conj().T

    def test_braid_relations(self):
        rng = np.random.default_rng(100)
        rep = ivanov(5)
        gens = list(rep.generators)
        gens[2] = self._unitary_kick(rng, rep.dim) @ gens[2]
        broken = UnitaryRep("kicked", rep.strands, rep.dim, tuple(gens))
        assert not check_braid_relations(broken).passed

    def test_ybe(self):
        rng = np.random.default_rng(101)
        kicked = self._unitary_kick(rng, 4) @ B_II
        assert not check_ybe(kicked).passed

    def test_parameterized_ybe(self):
        t1, t3 = 0.4, -0.2
        t2 = solve_theta2(t1, t3)
        assert not check_parameterized_ybe(t1, t2 + self.EPS, t3, n=4, k=1).passed

    def test_tl_relations(self):
        rng = np.random.default_rng(102)
        U = temperley_lieb(4)
        noise = rng.normal(size=U[0].shape) + 1j * rng.normal(size=U[0].shape)
        U[1] = U[1] + self.EPS * noise / np.linalg.norm(noise)
        assert not check_tl_relations(U, math.sqrt(2.0)).passed

    def test_majorana_string(self):
        rng = np.random.default_rng(103)
        ms = bell_basis_string(2)
        pairs = list(ms.pairs)
        noise = rng.normal(size=(ms.dim, ms.dim))
        pairs[0] = (pairs[0][0] + self.EPS * noise / np.linalg.norm(noise), pairs[0][1])
        assert not check_majorana_string(type(ms)(pairs=tuple(pairs))).passed

    def test_extraspecial(self):
        rng = np.random.default_rng(104)
        products = string_products(bell_basis_string(3))
        noise = rng.normal(size=products[0].shape)
        products[1] = products[1] + self.EPS * noise / np.linalg.norm(noise)
        assert not check_extraspecial(products).passed

    def test_conjugation_stays_exact(self):
        # the conjugation checker takes no matrix input to perturb; assert
        # its tolerance is tight enough that a 1e-2 deviation would fail
        report = check_conjugation_rep(4)
        assert report.tolerance <= 1e-12


def test_report_serialization_shape():
    report = check_ybe(R_GATE)
    data = report.to_dict()
    assert set(data) == {
        "check",
        "family",
        "params",
        "max_residual",
        "tolerance",
        "pass",
        "witnesses",
    }
    assert data["pass"] is True
    assert data["witnesses"][0]["residual"] == 0.0
