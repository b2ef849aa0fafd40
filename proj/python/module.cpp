#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schwarz/bounds.hpp"
#include "schwarz/descriptor.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/functions.hpp"
#include "schwarz/grid.hpp"
#include "schwarz/liouville.hpp"
#include "schwarz/membership.hpp"
#include "schwarz/ode_pair.hpp"
#include "schwarz/rational_bound.hpp"
#include "schwarz/schwarz_pick.hpp"
#include "schwarz/sphere.hpp"

namespace py = pybind11;
using namespace schwarz;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spherical-derivative bounds for locally univalent meromorphic functions";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    // sphere geometry
    py::class_<SpherePoint>(m, "SpherePoint")
        .def(py::init<>())
        .def(py::init<Complex>())
        .def_static("infinity", &SpherePoint::infinity)
        .def_static("from_value", &SpherePoint::from_value, py::arg("v"),
                    py::arg("threshold") = SpherePoint::kDefaultOverflowThreshold)
        .def("is_infinite", &SpherePoint::is_infinite)
        .def("value", &SpherePoint::value)
        .def("abs", &SpherePoint::abs)
        .def("density", &SpherePoint::density)
        .def("reciprocal", &SpherePoint::reciprocal)
        .def("__eq__", [](const SpherePoint& p, const SpherePoint& q) { return p == q; })
        .def("__repr__", [](const SpherePoint& p) {
            return p.is_infinite() ? std::string("SpherePoint(inf)")
                                   : "SpherePoint(" + format_complex(p.value()) + ")";
        });

    m.def("chordal_distance", &chordal_distance);
    m.def("spherical_density", &spherical_density);
    m.def("hyperbolic_density", &hyperbolic_density);

    py::class_<RigidMotion>(m, "RigidMotion")
        .def(py::init<>())
        .def(py::init<Complex, Complex>(), py::arg("a"), py::arg("b"))
        .def_property_readonly("a", &RigidMotion::a)
        .def_property_readonly("b", &RigidMotion::b)
        .def("__call__", &RigidMotion::operator())
        .def("derivative", &RigidMotion::derivative)
        .def("inverse", &RigidMotion::inverse)
        .def("__mul__",
             [](const RigidMotion& lhs, const RigidMotion& rhs) { return lhs * rhs; });

    py::class_<DiskAutomorphism>(m, "DiskAutomorphism")
        .def(py::init<>())
        .def(py::init<Complex, Complex>(), py::arg("rotation"), py::arg("center"))
        .def_property_readonly("rotation", &DiskAutomorphism::rotation)
        .def_property_readonly("center", &DiskAutomorphism::center)
        .def("__call__", &DiskAutomorphism::operator())
        .def("derivative", &DiskAutomorphism::derivative)
        .def("inverse", &DiskAutomorphism::inverse);

    // functions
    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("radial_count", &GridSpec::radial_count)
        .def_readwrite("angular_count", &GridSpec::angular_count)
        .def_readwrite("max_radius", &GridSpec::max_radius)
        .def_readwrite("refinement_radii", &GridSpec::refinement_radii)
        .def("validate", &GridSpec::validate);

    py::class_<DerivativeBundle>(m, "DerivativeBundle")
        .def_readonly("f", &DerivativeBundle::f)
        .def_readonly("fprime", &DerivativeBundle::fprime)
        .def_readonly("fsecond", &DerivativeBundle::fsecond)
        .def_readonly("at_pole", &DerivativeBundle::at_pole);

    py::class_<MeroFunction>(m, "MeroFunction")
        .def_static("rational", &MeroFunction::rational, py::arg("numerator"),
                    py::arg("denominator"))
        .def_static("rigid_scaled", &MeroFunction::rigid_scaled, py::arg("motion"),
                    py::arg("eta"))
        .def_static(
            "blaschke",
            [](const std::vector<std::pair<Complex, Complex>>& factors) {
                std::vector<BlaschkeFactor> fs;
                for (auto [p, rot] : factors) fs.push_back({p, rot});
                return MeroFunction::blaschke(fs);
            },
            py::arg("factors"), "factors: list of (center, rotation) pairs")
        .def("eval", &MeroFunction::eval)
        .def("eval_bundle", &MeroFunction::eval_bundle)
        .def("spherical_derivative", &MeroFunction::spherical_derivative)
        .def("schwarzian", &MeroFunction::schwarzian)
        .def("postcompose", &MeroFunction::postcompose)
        .def("reciprocal", &MeroFunction::reciprocal)
        .def("distance_to_nearest_pole", &MeroFunction::distance_to_nearest_pole)
        .def_property_readonly("numerator",
                               [](const MeroFunction& f) { return f.as_rational().numerator(); })
        .def_property_readonly("denominator",
                               [](const MeroFunction& f) { return f.as_rational().denominator(); })
        .def_property_readonly("poles",
                               [](const MeroFunction& f) { return f.as_rational().poles(); });

    m.def("parse_mero_function", &parse_mero_function);
    m.def("parse_complex", &parse_complex);
    m.def("format_complex", &format_complex);

    py::class_<UnivalenceReport>(m, "UnivalenceReport")
        .def_readonly("is_locally_univalent", &UnivalenceReport::is_locally_univalent)
        .def_readonly("critical_points", &UnivalenceReport::critical_points)
        .def_readonly("multiple_poles", &UnivalenceReport::multiple_poles)
        .def_readonly("grid_min_spherical", &UnivalenceReport::grid_min_spherical);

    m.def("probe_local_univalence", &probe_local_univalence, py::arg("f"),
          py::arg("grid") = GridSpec{});

    // bounds
    py::enum_<ActiveUpper>(m, "ActiveUpper")
        .value("quadratic", ActiveUpper::quadratic)
        .value("refined", ActiveUpper::refined);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("lower", &BoundReport::lower)
        .def_readonly("upper_quadratic", &BoundReport::upper_quadratic)
        .def_readonly("upper_refined", &BoundReport::upper_refined)
        .def_readonly("upper_classical", &BoundReport::upper_classical)
        .def_readonly("envelope", &BoundReport::envelope)
        .def_readonly("active_upper", &BoundReport::active_upper);

    m.def("origin_upper", &origin_upper);
    m.def("origin_lower", &origin_lower);
    m.def(
        "pointwise_bounds", [](double c, double s) { return pointwise_bounds({c, s}); },
        py::arg("c"), py::arg("s"));
    m.def("asymptotic_factor", &asymptotic_factor);

    py::class_<LengthPreservingLevel>(m, "LengthPreservingLevel")
        .def_readonly("c", &LengthPreservingLevel::c)
        .def_readonly("feasible", &LengthPreservingLevel::feasible);
    m.def("length_preserving_level", &length_preserving_level);
    m.def("feasible_radius_bound", &feasible_radius_bound);
    m.def("level_is_feasible", &level_is_feasible);

    // membership
    py::enum_<Branch>(m, "Branch").value("plus", Branch::plus).value("minus", Branch::minus);

    m.def("extremal_eta", &extremal_eta, py::arg("c"), py::arg("branch"));
    m.def(
        "make_extremal",
        [](double c, Branch branch, const RigidMotion& motion) {
            return make_extremal({c, branch, motion});
        },
        py::arg("c"), py::arg("branch") = Branch::plus, py::arg("motion") = RigidMotion{});

    py::class_<MembershipReport>(m, "MembershipReport")
        .def_readonly("c_interior_estimate", &MembershipReport::c_interior_estimate)
        .def_readonly("c_boundary_estimate", &MembershipReport::c_boundary_estimate)
        .def_readonly("boundary_minima", &MembershipReport::boundary_minima)
        .def_readonly("locally_univalent", &MembershipReport::locally_univalent)
        .def_readonly("in_Fc_at_level", &MembershipReport::in_Fc_at_level)
        .def_readonly("in_Gc_at_level", &MembershipReport::in_Gc_at_level)
        .def_readonly("univalence", &MembershipReport::univalence);

    m.def("probe_membership", &probe_membership, py::arg("f"), py::arg("grid") = GridSpec{});

    py::class_<SharpnessReport>(m, "SharpnessReport")
        .def_readonly("bound", &SharpnessReport::bound)
        .def_readonly("attained", &SharpnessReport::attained)
        .def_readonly("equality_gap", &SharpnessReport::equality_gap)
        .def_readonly("witnesses_checked", &SharpnessReport::witnesses_checked)
        .def_readonly("min_strict_margin", &SharpnessReport::min_strict_margin)
        .def_readonly("all_strict", &SharpnessReport::all_strict);

    m.def("verify_sharpness", &verify_sharpness, py::arg("c"), py::arg("branch"),
          py::arg("grid") = GridSpec{}, py::arg("seed") = 42, py::arg("witness_count") = 200);

    py::class_<AnnulusSample>(m, "AnnulusSample")
        .def_readonly("radius", &AnnulusSample::radius)
        .def_readonly("max_deviation", &AnnulusSample::max_deviation)
        .def_readonly("near_pole", &AnnulusSample::near_pole);

    py::class_<NonNormalityReport>(m, "NonNormalityReport")
        .def_readonly("n", &NonNormalityReport::n)
        .def_readonly("origin_value", &NonNormalityReport::origin_value)
        .def_readonly("origin_expected", &NonNormalityReport::origin_expected)
        .def_readonly("boundary_estimate", &NonNormalityReport::boundary_estimate)
        .def_readonly("boundary_min_sampled", &NonNormalityReport::boundary_min_sampled)
        .def_readonly("annulus", &NonNormalityReport::annulus);

    m.def("gn_counterexample", &gn_counterexample, py::arg("n"),
          py::arg("angular_samples") = 512);

    // Liouville problem
    py::class_<ClosedFormSolution>(m, "ClosedFormSolution")
        .def_readonly("eta", &ClosedFormSolution::eta)
        .def_readonly("c", &ClosedFormSolution::c)
        .def("radial", &ClosedFormSolution::radial)
        .def("at", &ClosedFormSolution::at)
        .def("pde_residual", &ClosedFormSolution::pde_residual, py::arg("z"), py::arg("h"));

    m.def("closed_form_solutions", &closed_form_solutions);

    py::enum_<SlopeBranch>(m, "SlopeBranch")
        .value("plus", SlopeBranch::plus)
        .value("minus", SlopeBranch::minus)
        .value("double_root", SlopeBranch::double_root);

    py::enum_<SolutionCount>(m, "SolutionCount")
        .value("two", SolutionCount::two)
        .value("one", SolutionCount::one)
        .value("zero", SolutionCount::zero);

    py::class_<TrajectorySample>(m, "TrajectorySample")
        .def_readonly("x", &TrajectorySample::x)
        .def_readonly("w", &TrajectorySample::w)
        .def_readonly("wprime", &TrajectorySample::wprime)
        .def_readonly("residual", &TrajectorySample::residual);

    py::class_<ShootOptions>(m, "ShootOptions")
        .def(py::init<>())
        .def_readwrite("x_min", &ShootOptions::x_min)
        .def_readwrite("step", &ShootOptions::step)
        .def_readwrite("sample_stride", &ShootOptions::sample_stride)
        .def_readwrite("residual_tol", &ShootOptions::residual_tol);

    py::class_<BvpTrajectory>(m, "BvpTrajectory")
        .def_readonly("branch", &BvpTrajectory::branch)
        .def_readonly("c", &BvpTrajectory::c)
        .def_readonly("initial_slope", &BvpTrajectory::initial_slope)
        .def_readonly("samples", &BvpTrajectory::samples)
        .def_readonly("max_first_integral_residual", &BvpTrajectory::max_first_integral_residual)
        .def_readonly("eta_fit", &BvpTrajectory::eta_fit)
        .def_readonly("interior_zero", &BvpTrajectory::interior_zero);

    m.def(
        "shoot",
        [](double c, SlopeBranch branch, const ShootOptions& opts) {
            return shoot({c}, branch, opts);
        },
        py::arg("c"), py::arg("branch"), py::arg("options") = ShootOptions{});

    m.def("count_solutions", &count_solutions);
    m.def("count_solutions_validated", &count_solutions_validated);

    py::class_<RigidityReport>(m, "RigidityReport")
        .def_readonly("boundary_oscillation", &RigidityReport::boundary_oscillation)
        .def_readonly("oscillation_below_tol", &RigidityReport::oscillation_below_tol)
        .def_readonly("fitted_motion", &RigidityReport::fitted_motion)
        .def_readonly("fitted_eta", &RigidityReport::fitted_eta)
        .def_readonly("fit_residual", &RigidityReport::fit_residual)
        .def_readonly("rigid", &RigidityReport::rigid)
        .def_readonly("contradiction", &RigidityReport::contradiction);

    m.def("verify_rigidity", &verify_rigidity, py::arg("f"), py::arg("tol") = 1e-6);

    // constrained Schwarz-Pick
    m.def("sp_bound", &sp_bound);

    py::class_<SpBoundValue>(m, "SpBoundValue")
        .def_readonly("value", &SpBoundValue::value)
        .def_readonly("classical", &SpBoundValue::classical);
    m.def("sp_bound_or_classical", &sp_bound_or_classical);

    py::class_<ConstrainedSelfMap>(m, "ConstrainedSelfMap")
        .def_readonly("z0", &ConstrainedSelfMap::z0)
        .def_readonly("inner", &ConstrainedSelfMap::inner)
        .def_readonly("scale", &ConstrainedSelfMap::scale)
        .def("w", &ConstrainedSelfMap::w)
        .def("wprime_at_z0", &ConstrainedSelfMap::wprime_at_z0)
        .def("wsecond_at_z0", &ConstrainedSelfMap::wsecond_at_z0);

    py::class_<ExtremalInnerFactor>(m, "ExtremalInnerFactor")
        .def_readonly("p", &ExtremalInnerFactor::p)
        .def_readonly("inside_roots", &ExtremalInnerFactor::inside_roots)
        .def_readonly("g", &ExtremalInnerFactor::g)
        .def_readonly("g_abs_at_z0", &ExtremalInnerFactor::g_abs_at_z0)
        .def_readonly("attained", &ExtremalInnerFactor::attained);

    m.def("construct_extremal_automorphism", &construct_extremal_automorphism);

    py::class_<SampledMap>(m, "SampledMap")
        .def_readonly("map", &SampledMap::map)
        .def_readonly("wprime_abs", &SampledMap::wprime_abs)
        .def_readonly("wsecond_abs", &SampledMap::wsecond_abs)
        .def_readonly("inner_degree", &SampledMap::inner_degree);

    m.def("sample_constrained_maps", &sample_constrained_maps, py::arg("z0"), py::arg("count"),
          py::arg("seed") = 42);
    m.def("extremal_boundary_defect", &extremal_boundary_defect, py::arg("z0"),
          py::arg("boundary_samples") = 512);

    // ODE solution pairs
    py::class_<PairSample>(m, "PairSample")
        .def_readonly("z", &PairSample::z)
        .def_readonly("w1", &PairSample::w1)
        .def_readonly("w1p", &PairSample::w1p)
        .def_readonly("w2", &PairSample::w2)
        .def_readonly("w2p", &PairSample::w2p)
        .def_readonly("wronskian_residual", &PairSample::wronskian_residual);

    py::class_<OdeSolutionPair>(m, "OdeSolutionPair")
        .def_readonly("schwarzian_profile", &OdeSolutionPair::schwarzian_profile)
        .def_readonly("base_point", &OdeSolutionPair::base_point)
        .def_readonly("samples", &OdeSolutionPair::samples)
        .def_readonly("max_wronskian_residual", &OdeSolutionPair::max_wronskian_residual);

    py::class_<IntegrateOptions>(m, "IntegrateOptions")
        .def(py::init<>())
        .def_readwrite("step", &IntegrateOptions::step)
        .def_readwrite("residual_tol", &IntegrateOptions::residual_tol);

    m.def("integrate_pair", &integrate_pair, py::arg("schwarzian"), py::arg("targets"),
          py::arg("options") = IntegrateOptions{});
    m.def("spherical_via_pair", &spherical_via_pair);
    m.def("spherical_direct_fd", &spherical_direct_fd, py::arg("schwarzian"), py::arg("z"),
          py::arg("h") = 1e-5, py::arg("options") = IntegrateOptions{});

    py::class_<SelfmapBoundReport>(m, "SelfmapBoundReport")
        .def_readonly("z0", &SelfmapBoundReport::z0)
        .def_readonly("c", &SelfmapBoundReport::c)
        .def_readonly("fsharp_at_z0", &SelfmapBoundReport::fsharp_at_z0)
        .def_readonly("fsharp_direct", &SelfmapBoundReport::fsharp_direct)
        .def_readonly("bound", &SelfmapBoundReport::bound)
        .def_readonly("max_selfmap_modulus", &SelfmapBoundReport::max_selfmap_modulus)
        .def_readonly("wsecond_at_z0", &SelfmapBoundReport::wsecond_at_z0)
        .def_readonly("max_wronskian_residual", &SelfmapBoundReport::max_wronskian_residual)
        .def_readonly("selfmap_ok", &SelfmapBoundReport::selfmap_ok)
        .def_readonly("bound_holds", &SelfmapBoundReport::bound_holds);

    m.def("verify_selfmap_bound", &verify_selfmap_bound, py::arg("f"), py::arg("z0"),
          py::arg("c"), py::arg("options") = IntegrateOptions{});

    // rational norm bound
    py::class_<PolePrescription>(m, "PolePrescription")
        .def(py::init<std::vector<Complex>>())
        .def_property_readonly("poles", &PolePrescription::poles);

    m.def("bernstein_factor", &bernstein_factor);
    m.def("kn", &kn);
    m.def("norm_bound", &norm_bound, py::arg("poles"), py::arg("c"));
    m.def("prescribed_rational", &prescribed_rational, py::arg("poles"), py::arg("numerator"));

    py::class_<SupNormEstimate>(m, "SupNormEstimate")
        .def_readonly("value", &SupNormEstimate::value)
        .def_readonly("theta", &SupNormEstimate::theta);
    m.def("boundary_sup_norm", &boundary_sup_norm, py::arg("f"), py::arg("samples") = 4096);

    py::class_<RationalBoundReport>(m, "RationalBoundReport")
        .def_readonly("poles", &RationalBoundReport::poles)
        .def_readonly("k_n", &RationalBoundReport::k_n)
        .def_readonly("c_f", &RationalBoundReport::c_f)
        .def_readonly("sup_norm", &RationalBoundReport::sup_norm)
        .def_readonly("bound", &RationalBoundReport::bound)
        .def_readonly("margin", &RationalBoundReport::margin)
        .def_readonly("applicable", &RationalBoundReport::applicable);

    m.def("check_rational_bound", &check_rational_bound, py::arg("f"), py::arg("poles"),
          py::arg("grid") = GridSpec{});
}
