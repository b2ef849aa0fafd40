#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "schwarz/functions.hpp"
#include "schwarz/grid.hpp"

namespace schwarz {

enum class Branch { plus, minus };

// Parameters of an extremal T(eta z): level c fixes |eta| through the branch,
// the rigid motion is free.
struct ExtremalSpec {
    double c = 0.5;
    Branch branch = Branch::plus;
    RigidMotion motion;
};

// |eta| for the branch: (1 + sqrt(1-4c^2))/(2c) for plus, the reciprocal
// root for minus.
double extremal_eta(double c, Branch branch);

MeroFunction make_extremal(const ExtremalSpec& spec);

struct MembershipReport {
    double c_interior_estimate = 0.0;    // min f# over the interior grid
    double c_boundary_estimate = 0.0;    // min f# on the outermost refinement circle
    // (radius, min f# on that circle) for each refinement radius.
    std::vector<std::pair<double, double>> boundary_minima;
    bool locally_univalent = false;
    std::optional<double> in_Fc_at_level;  // largest level supported by interior data
    std::optional<double> in_Gc_at_level;  // largest level supported by boundary data
    UnivalenceReport univalence;
};

MembershipReport probe_membership(const MeroFunction& f, const GridSpec& grid);

// Equality of the extremal at the origin bound, plus strictness on scaled
// non-extremal members (extremals of levels c' > c, which lie in the class
// at level c with a strict origin inequality).
struct SharpnessReport {
    double bound = 0.0;
    double attained = 0.0;
    double equality_gap = 0.0;           // |attained - bound|
    int witnesses_checked = 0;
    double min_strict_margin = 0.0;      // min over witnesses of the strict gap
    bool all_strict = true;
};

SharpnessReport verify_sharpness(double c, Branch branch, const GridSpec& grid,
                                 std::uint64_t seed = 42, int witness_count = 200);

// The non-normality witness family g_n(z) = z / (1/n^2 + z^2).
struct AnnulusSample {
    double radius = 0.0;
    double max_deviation = 0.0;   // max over angles of |z g_n(z) - 1|
    bool near_pole = false;       // a sample point came within 1e-3 of a pole
};

struct NonNormalityReport {
    int n = 0;
    double origin_value = 0.0;          // g_n#(0)
    double origin_expected = 0.0;       // n^2
    double boundary_estimate = 0.0;     // (1-1/n^2)/(2+2/n^2+1/n^4)
    double boundary_min_sampled = 0.0;  // min g_n# on |z| = 1 - 1e-6
    std::vector<AnnulusSample> annulus; // radii in [0.5, 0.9]
};

std::pair<MeroFunction, NonNormalityReport> gn_counterexample(int n, int angular_samples = 512);

} // namespace schwarz
