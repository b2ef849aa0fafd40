#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "schwarz/grid.hpp"
#include "schwarz/liouville.hpp"

namespace schwarz::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;   // a claimed inequality failed to hold
inline constexpr int kBadConfig = 2;             // invalid or infeasible configuration
inline constexpr int kNoConvergence = 3;         // an iterative scheme gave up

struct GlobalOpts {
    std::optional<std::string> out;
    std::string format = "json";   // "json" or "csv"
    std::uint64_t seed = 42;
};

struct BoundsArgs {
    double c = 0.0;
    double s = 0.0;
    std::optional<std::string> sweep;   // "s0:s1:steps"
};

struct VerifyArgs {
    std::string function;
    std::optional<double> level;
    GridSpec grid;
    bool rigidity = false;
};

struct BvpArgs {
    double c = 0.0;
    std::string branch = "both";   // plus | minus | both
    ShootOptions options;
};

struct SplemmaArgs {
    std::string z0 = "0.5";
    int samples = 1000;
};

struct OdecheckArgs {
    std::string schwarzian_coeffs = "[2]";
    int targets = 200;
    double step = 1e-4;
};

struct RationalArgs {
    std::string poles;
    std::string numerator = "[1]";
    std::optional<int> count;   // random-numerator campaign when present
    GridSpec grid;
};

struct CounterexampleArgs {
    int n = 2;
};

int run_bounds(const BoundsArgs& args, const GlobalOpts& g);
int run_verify(const VerifyArgs& args, const GlobalOpts& g);
int run_bvp(const BvpArgs& args, const GlobalOpts& g);
int run_splemma(const SplemmaArgs& args, const GlobalOpts& g);
int run_odecheck(const OdecheckArgs& args, const GlobalOpts& g);
int run_rational(const RationalArgs& args, const GlobalOpts& g);
int run_counterexample(const CounterexampleArgs& args, const GlobalOpts& g);

} // namespace schwarz::cli
