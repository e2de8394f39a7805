# coding=utf-8
"""
Unit tests of the problem registry and of the initial/boundary data lookup
"""
import unittest

import numpy as np

import pinn_bench.pinn_bench_exception as pinn_exception
from pinn_bench.model.classes.domain_box import BoundaryKind
from pinn_bench.model.classes.problem_params import ToyParams
from pinn_bench.problem_registry import (ProblemId, create_problem, derivative_key, ic_bc_values, list_problems)


class RegistryTests(unittest.TestCase):

    def test_list_problems(self) -> None:
        listed = list_problems()
        self.assertEqual(len(listed), 8)
        self.assertEqual([entry[0] for entry in listed],
                         ["toy", "burgers", "heat2d", "kdv", "fisher", "turing1-1d", "turing2-2d", "exp-ode"])
        for _, description in listed:
            self.assertTrue(description)

    def test_every_problem_builds(self) -> None:
        for problem_id, _ in list_problems():
            problem = create_problem(problem_id)
            self.assertEqual(problem.id, problem_id)
            self.assertEqual(len(problem.domain.axis_names), problem.domain.dim)

    def test_unknown_problem(self) -> None:
        with self.assertRaises(pinn_exception.ConfigurationError):
            create_problem("wave")

    def test_unknown_variant(self) -> None:
        with self.assertRaises(pinn_exception.ConfigurationError):
            create_problem("fisher", variant="table")
        with self.assertRaises(pinn_exception.ConfigurationError):
            create_problem("toy", variant="listing")

    def test_parse_accepts_member_names(self) -> None:
        self.assertEqual(ProblemId.parse("TURING1"), ProblemId.TURING1)
        self.assertEqual(ProblemId.parse("exp-ode"), ProblemId.EXP_ODE)

    def test_shapes_of_problems(self) -> None:
        kdv = create_problem("kdv")
        self.assertEqual(kdv.field_names, ["u", "v"])
        self.assertEqual(kdv.derivative_orders["x"], 3)
        heat = create_problem("heat2d")
        self.assertEqual(heat.domain.axis_names, ["x", "y", "t"])
        self.assertEqual(len(heat.faces), 4)
        ode = create_problem("exp-ode")
        self.assertEqual(ode.domain.dim, 1)
        self.assertEqual(ode.faces, [])

    def test_boundary_kinds(self) -> None:
        self.assertTrue(all(face.kind == BoundaryKind.NEUMANN for face in create_problem("turing1-1d").faces))
        self.assertTrue(all(face.kind == BoundaryKind.NEUMANN for face in create_problem("turing2-2d").faces))
        self.assertTrue(all(face.kind == BoundaryKind.DIRICHLET for face in create_problem("burgers").faces))

    def test_fisher_variants(self) -> None:
        listing = create_problem("fisher")
        stated = create_problem("fisher", variant="stated")
        self.assertEqual(listing.variant, "listing")
        self.assertEqual((listing.domain.spatial[0].lower, listing.domain.time.upper), (-10.0, 1.0))
        self.assertEqual((stated.domain.spatial[0].lower, stated.domain.time.upper), (-50.0, 10.0))

    def test_turing1_variants_carry_derived_constant(self) -> None:
        for variant in ("listing", "table"):
            problem = create_problem("turing1-1d", variant=variant)
            self.assertAlmostEqual(problem.params.f_e, 0.0856, places=4)

    def test_params_override(self) -> None:
        problem = create_problem("toy", params=ToyParams(a=0.5, b=1.5, c=2.0))
        self.assertEqual(problem.params.a, 0.5)

    def test_turing2_start_depends_on_seed(self) -> None:
        points = np.array([[0.1, -0.3, 0.0], [0.5, 0.5, 0.0]])
        first = create_problem("turing2-2d", seed=0).initial_values(points)
        again = create_problem("turing2-2d", seed=0).initial_values(points)
        other = create_problem("turing2-2d", seed=1).initial_values(points)
        np.testing.assert_array_equal(first, again)
        self.assertFalse(np.array_equal(first, other))

    def test_derivative_keys(self) -> None:
        self.assertEqual(derivative_key("u", "x", 0), "u")
        self.assertEqual(derivative_key("u", "x", 3), "u_xxx")
        keys = create_problem("burgers").derivative_keys()
        self.assertEqual(sorted(keys), ["u", "u_t", "u_x", "u_xx"])

    def test_residuals_need_every_derivative(self) -> None:
        with self.assertRaises(pinn_exception.ShapeError):
            create_problem("burgers").residuals({"u": 1.0, "u_x": 0.0})


class InitialBoundaryLookupTests(unittest.TestCase):

    def test_toy_corner_prefers_initial_slice(self) -> None:
        problem = create_problem("toy")
        np.testing.assert_allclose(ic_bc_values(problem, [0.0, 0.0]), [6.0], rtol=1e-15)

    def test_toy_upper_face(self) -> None:
        problem = create_problem("toy")
        np.testing.assert_allclose(ic_bc_values(problem, [2.0, 0.5]), [6.0 * np.exp(-7.0)], rtol=1e-12)

    def test_interior_point_is_rejected(self) -> None:
        with self.assertRaises(pinn_exception.DomainError):
            ic_bc_values(create_problem("toy"), [1.0, 0.5])

    def test_outside_point_is_rejected(self) -> None:
        with self.assertRaises(pinn_exception.DomainError):
            ic_bc_values(create_problem("toy"), [3.0, 0.0])

    def test_wrong_dimension(self) -> None:
        with self.assertRaises(pinn_exception.ShapeError):
            ic_bc_values(create_problem("toy"), [0.0, 0.0, 0.0])

    def test_fisher_faces(self) -> None:
        problem = create_problem("fisher")
        self.assertEqual(ic_bc_values(problem, [-10.0, 0.5])[0], 1.0)
        self.assertEqual(ic_bc_values(problem, [10.0, 0.5])[0], 0.0)
        self.assertEqual(ic_bc_values(problem, [-3.0, 0.0])[0], 1.0)
        self.assertEqual(ic_bc_values(problem, [3.0, 0.0])[0], 0.0)

    def test_burgers_initial_profile(self) -> None:
        problem = create_problem("burgers")
        self.assertAlmostEqual(ic_bc_values(problem, [0.5, 0.0])[0], 1.0, places=14)
        np.testing.assert_array_equal(ic_bc_values(problem, [1.0, 0.05]), [0.0])

    def test_neumann_faces_have_zero_flux_targets(self) -> None:
        problem = create_problem("turing1-1d")
        np.testing.assert_array_equal(ic_bc_values(problem, [3e-3, 100.0]), [0.0, 0.0])

    def test_turing1_pulse_peaks_in_the_middle(self) -> None:
        problem = create_problem("turing1-1d")
        centre = ic_bc_values(problem, [1.5e-3, 0.0])
        edge = ic_bc_values(problem, [0.0, 0.0])
        self.assertAlmostEqual(centre[0], 0.01 * problem.params.b_i)
        self.assertLess(edge[0], 1e-6 * centre[0])
        self.assertEqual(centre[1], 0.0)

    def test_exp_ode_only_has_an_initial_value(self) -> None:
        problem = create_problem("exp-ode")
        np.testing.assert_array_equal(ic_bc_values(problem, [0.0]), [3.0])
        with self.assertRaises(pinn_exception.DomainError):
            ic_bc_values(problem, [0.5])


if __name__ == '__main__':
    unittest.main()
