#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "cir/model.hpp"
#include "cir/simulate.hpp"

namespace cir {

// Neumaier's compensated summation. The checkpoint statistics accumulate
// up to 2e5 terms per integral; the residual-identity tests need the sums
// good to ~1e-12 relative, which plain summation does not guarantee.
class CompensatedSum {
  public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline constexpr double kDefaultInvFloor = 1e-8;

// Pathwise functionals feeding the estimators and the ergodic diagnostics.
// All Lebesgue integrals are left-endpoint Riemann sums; the dr/r integral
// is the non-anticipating sum of (r_{i+1} - r_i)/r_i. Using left sums
// uniformly makes the likelihood-estimator residual identity exact at the
// discrete level rather than O(dt).
//
// The inverse statistics are only meaningful while the path stays clear of
// zero; when the grid minimum is at or below `inv_floor` they are absent
// and `inv_reliable` is false.
struct PathStatistics {
    double horizon = 0.0;  // T
    double int_r = 0.0;    // int_0^T r dt
    double int_r2 = 0.0;   // int_0^T r^2 dt
    std::optional<double> int_inv_r;       // int_0^T dt/r
    std::optional<double> int_dr_over_r;   // int_0^T dr/r
    double r_start = 0.0;
    double r_end = 0.0;
    double min_value = 0.0;  // min over the grid, endpoints included
    bool inv_reliable = false;
};

PathStatistics path_statistics(const Path& path,
                               double inv_floor = kDefaultInvFloor);

// Statistics of the path restricted to [0, checkpoint_k] for each entry,
// computed in one pass over the grid via running prefix sums. The element
// for a checkpoint is bitwise identical to path_statistics of the path
// truncated there. Checkpoints must be ascending and lie on the grid
// (within 1e-9).
std::vector<PathStatistics> checkpoint_statistics(
    const Path& path, std::span<const double> checkpoints,
    double inv_floor = kDefaultInvFloor);

// Distances of the normalized time averages from their almost-sure limits.
// The inverse gap requires reliable inverse statistics and the Feller
// condition; the first two are defined for every positive parameter set.
struct ErgodicGaps {
    double mean_gap;
    double second_moment_gap;
    std::optional<double> inverse_mean_gap;
};

ErgodicGaps ergodic_gaps(const PathStatistics& stats, const ModelParams& params);

}  // namespace cir
