#include "cir/statistics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace cir {

namespace {

constexpr double kGridTolerance = 1e-9;

// Maps each checkpoint to its grid index, enforcing the on-grid precondition.
std::vector<std::size_t> checkpoint_indices(const std::vector<double>& times,
                                            std::span<const double> checkpoints) {
    std::vector<std::size_t> indices;
    indices.reserve(checkpoints.size());
    double previous = -1.0;
    for (const double ck : checkpoints) {
        if (ck <= previous) {
            throw CirError(ErrorKind::off_grid_checkpoint,
                           "checkpoints must be strictly ascending");
        }
        previous = ck;
        const auto it = std::lower_bound(times.begin(), times.end(),
                                         ck - kGridTolerance);
        if (it == times.end() || std::abs(*it - ck) > kGridTolerance) {
            throw CirError(ErrorKind::off_grid_checkpoint,
                           "checkpoint " + std::to_string(ck) +
                               " does not lie on the time grid");
        }
        const auto index = static_cast<std::size_t>(it - times.begin());
        if (index == 0) {
            throw CirError(ErrorKind::off_grid_checkpoint,
                           "checkpoint must cover at least one step");
        }
        indices.push_back(index);
    }
    return indices;
}

// Single forward pass; emits the prefix statistics at each requested grid
// index. Because the emitted state is exactly the accumulator state, the
// result at an index is bitwise identical to a fresh computation on the
// truncated path.
std::vector<PathStatistics> accumulate(const Path& path,
                                       const std::vector<std::size_t>& indices,
                                       double inv_floor) {
    const auto& times = path.times;
    const auto& values = path.values;
    assert(times.size() == values.size());

    std::vector<PathStatistics> out;
    out.reserve(indices.size());

    CompensatedSum int_r, int_r2, int_inv_r, int_dr_over_r;
    double min_value = values[0];
    std::size_t next = 0;

    for (std::size_t i = 0; next < indices.size(); ++i) {
        const double dt_i = times[i + 1] - times[i];
        const double r_i = values[i];
        int_r.add(r_i * dt_i);
        int_r2.add(r_i * r_i * dt_i);
        if (r_i > 0.0) {
            int_inv_r.add(dt_i / r_i);
            int_dr_over_r.add((values[i + 1] - r_i) / r_i);
        }
        min_value = std::min(min_value, values[i + 1]);

        if (i + 1 == indices[next]) {
            PathStatistics stats;
            stats.horizon = times[i + 1] - times[0];
            stats.int_r = int_r.value();
            stats.int_r2 = int_r2.value();
            stats.r_start = values[0];
            stats.r_end = values[i + 1];
            stats.min_value = min_value;
            stats.inv_reliable = min_value > inv_floor;
            if (stats.inv_reliable) {
                stats.int_inv_r = int_inv_r.value();
                stats.int_dr_over_r = int_dr_over_r.value();
            }
            out.push_back(stats);
            ++next;
        }
    }
    return out;
}

void check_path(const Path& path, double inv_floor) {
    if (path.times.size() < 2 || path.values.size() < 2) {
        throw CirError(ErrorKind::empty_path, "path has no steps");
    }
    assert(path.times.size() == path.values.size());
    if (inv_floor < 0.0 || std::isnan(inv_floor)) {
        throw CirError(ErrorKind::invalid_config, "inv_floor must be >= 0");
    }
}

}  // namespace

PathStatistics path_statistics(const Path& path, double inv_floor) {
    check_path(path, inv_floor);
    const std::vector<std::size_t> last{path.times.size() - 1};
    return accumulate(path, last, inv_floor).front();
}

std::vector<PathStatistics> checkpoint_statistics(const Path& path,
                                                  std::span<const double> checkpoints,
                                                  double inv_floor) {
    check_path(path, inv_floor);
    if (checkpoints.empty()) {
        return {};
    }
    return accumulate(path, checkpoint_indices(path.times, checkpoints), inv_floor);
}

ErgodicGaps ergodic_gaps(const PathStatistics& stats, const ModelParams& params) {
    const double t = stats.horizon;
    ErgodicGaps gaps{
        std::abs(stats.int_r / t - stationary_moment(MomentKind::mean, params)),
        std::abs(stats.int_r2 / t - stationary_moment(MomentKind::second, params)),
        std::nullopt,
    };
    if (stats.inv_reliable && params.feller() && stats.int_inv_r) {
        gaps.inverse_mean_gap = std::abs(
            *stats.int_inv_r / t - stationary_moment(MomentKind::inverse_mean, params));
    }
    return gaps;
}

}  // namespace cir
