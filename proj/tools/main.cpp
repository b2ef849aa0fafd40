#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/grid.hpp"

namespace {

void apply_grid_text(const std::string& text, schwarz::GridSpec& grid) {
    if (text.empty()) return;
    int radial = 0, angular = 0;
    if (std::sscanf(text.c_str(), "%dx%d", &radial, &angular) != 2) {
        throw schwarz::DomainError("--grid expects RADIALxANGULAR, e.g. 200x512");
    }
    grid.radial_count = radial;
    grid.angular_count = angular;
}

} // namespace

int main(int argc, char** argv) {
    using namespace schwarz;
    using namespace schwarz::cli;

    CLI::App app{"Spherical-derivative bounds for locally univalent meromorphic functions: "
                 "pointwise estimates, class membership probes, the radial Liouville "
                 "boundary problem, a constrained Schwarz-Pick bound, linear-ODE "
                 "decompositions and rational sup-norm bounds."};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--out", g.out, "write the report to this file instead of stdout");
    app.add_option("--format", g.format, "report format (json or csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "seed for randomized sampling");

    int rc = kOk;

    BoundsArgs bounds;
    CLI::App* cmd_bounds =
        app.add_subcommand("bounds", "lower/upper bounds on the spherical derivative at "
                                     "level c and base-point modulus s");
    cmd_bounds->add_option("--c", bounds.c, "derivative level, 0 < c <= 1/2")->required();
    cmd_bounds->add_option("--s", bounds.s, "base-point modulus |z0| in [0, 1)");
    cmd_bounds->add_option("--sweep", bounds.sweep, "sweep s over s0:s1:steps");
    cmd_bounds->callback([&] { rc = run_bounds(bounds, g); });

    VerifyArgs verify;
    std::string verify_grid_text;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "probe local univalence and class membership of a "
                                     "function descriptor");
    cmd_verify
        ->add_option("--function", verify.function,
                     "descriptor: \"rational: [p0,..]/[q0,..]\", "
                     "\"rigid_scaled: a=.., b=.., eta=..\" or "
                     "\"blaschke: [(p,theta),..]\"")
        ->required();
    cmd_verify->add_option("--level", verify.level, "level c to test membership against");
    cmd_verify->add_option("--grid", verify_grid_text, "interior grid RADIALxANGULAR");
    cmd_verify->add_option("--max-radius", verify.grid.max_radius, "outermost interior radius");
    cmd_verify->add_option("--refine", verify.grid.refinement_radii, "boundary refinement radii")
        ->delimiter(',');
    cmd_verify->add_flag("--rigidity", verify.rigidity,
                         "also test the boundary-flatness rigidity fit");
    cmd_verify->callback([&] {
        apply_grid_text(verify_grid_text, verify.grid);
        verify.grid.validate();
        rc = run_verify(verify, g);
    });

    BvpArgs bvp;
    CLI::App* cmd_bvp = app.add_subcommand(
        "bvp", "radial Liouville boundary problem: shooting vs closed forms");
    cmd_bvp->add_option("--c", bvp.c, "level c in the source term")->required();
    cmd_bvp->add_option("--branch", bvp.branch, "initial-slope branch")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    cmd_bvp->add_option("--x-min", bvp.options.x_min, "left end of the integration range");
    cmd_bvp->add_option("--step", bvp.options.step, "integration step");
    cmd_bvp->add_option("--stride", bvp.options.sample_stride, "keep every stride-th sample");
    cmd_bvp->callback([&] { rc = run_bvp(bvp, g); });

    SplemmaArgs splemma;
    CLI::App* cmd_splemma = app.add_subcommand(
        "splemma", "constrained Schwarz-Pick bound at z0: extremal construction and "
                   "randomized attack");
    cmd_splemma->add_option("--z0", splemma.z0, "base point, complex literal");
    cmd_splemma->add_option("--samples", splemma.samples, "number of sampled self-maps");
    cmd_splemma->callback([&] { rc = run_splemma(splemma, g); });

    OdecheckArgs odecheck;
    CLI::App* cmd_odecheck = app.add_subcommand(
        "odecheck", "solution pair of w'' + (S/2) w = 0 and the spherical-derivative "
                    "identity");
    cmd_odecheck->add_option("--schwarzian-coeffs", odecheck.schwarzian_coeffs,
                             "polynomial S as a complex coefficient list, ascending");
    cmd_odecheck->add_option("--targets", odecheck.targets, "number of target points");
    cmd_odecheck->add_option("--step", odecheck.step, "integration step");
    cmd_odecheck->callback([&] { rc = run_odecheck(odecheck, g); });

    RationalArgs rational;
    std::string rational_grid_text;
    CLI::App* cmd_rational = app.add_subcommand(
        "rational", "sup-norm bound for rationals with prescribed poles outside the disk");
    cmd_rational->add_option("--poles", rational.poles, "pole list, each |z_j| > 1")->required();
    cmd_rational->add_option("--numerator", rational.numerator,
                             "numerator coefficients, ascending");
    cmd_rational->add_option("--count", rational.count,
                             "random-numerator campaign of this size");
    cmd_rational->add_option("--grid", rational_grid_text, "interior grid RADIALxANGULAR");
    cmd_rational->callback([&] {
        apply_grid_text(rational_grid_text, rational.grid);
        rational.grid.validate();
        rc = run_rational(rational, g);
    });

    CounterexampleArgs cex;
    CLI::App* cmd_cex = app.add_subcommand(
        "counterexample", "the family z/(1/n^2 + z^2): unbounded spherical derivative at 0 "
                          "with a uniform boundary floor");
    cmd_cex->add_option("--n", cex.n, "family index, n >= 2");
    cmd_cex->callback([&] { rc = run_counterexample(cex, g); });

    // let --out/--format/--seed appear after the subcommand name as well
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadConfig;
    } catch (const DomainError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kBadConfig;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible configuration: " << e.what() << "\n";
        return kBadConfig;
    } catch (const ConvergenceError& e) {
        std::cerr << "no convergence: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadConfig;
    }
    return rc;
}
