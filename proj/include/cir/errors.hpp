#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cir {

// Every domain failure the library can signal. Monte Carlo failure
// accounting and the CLI warning column key off these.
enum class ErrorKind {
    non_positive_parameter,
    feller_violation,
    negative_time,
    scheme_inadmissible,
    empty_path,
    off_grid_checkpoint,
    degenerate_denominator,
    unreliable_inverse,
    missing_noise,
    zero_mean_reversion,
    empty_input,
    all_replications_failed,
    invalid_config,
    io_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

class CirError : public std::runtime_error {
  public:
    CirError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace cir
