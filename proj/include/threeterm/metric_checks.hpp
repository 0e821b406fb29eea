#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "threeterm/harmonic_numerics.hpp"

namespace threeterm {

struct MetricCheckOptions {
    int grid_size = 20;
    std::uint64_t seed = 0;
    std::optional<UpperHalfPoint> single_point;  // replaces the grid when set
    std::optional<double> step;                   // overrides every finite-difference step
    std::optional<double> tolerance;              // overrides every tolerance
};

struct MetricCheck {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<std::string> warnings;
};

/// Quasi-random points in x in [-1, 1], y in [0.5, 3]: a Halton (2, 3) sequence
/// under a Cranley-Patterson shift drawn from the seed.
std::vector<UpperHalfPoint> sample_grid(int count, std::uint64_t seed);

/// Runs every check of the inclusion-representation harmonic bundle over the grid.
std::vector<MetricCheck> run_metric_checks(const MetricCheckOptions& options);

}  // namespace threeterm
