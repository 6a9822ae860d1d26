#include "cir/errors.hpp"

namespace cir {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::non_positive_parameter:
            return "non_positive_parameter";
        case ErrorKind::feller_violation:
            return "feller_violation";
        case ErrorKind::negative_time:
            return "negative_time";
        case ErrorKind::scheme_inadmissible:
            return "scheme_inadmissible";
        case ErrorKind::empty_path:
            return "empty_path";
        case ErrorKind::off_grid_checkpoint:
            return "off_grid_checkpoint";
        case ErrorKind::degenerate_denominator:
            return "degenerate_denominator";
        case ErrorKind::unreliable_inverse:
            return "unreliable_inverse";
        case ErrorKind::missing_noise:
            return "missing_noise";
        case ErrorKind::zero_mean_reversion:
            return "zero_mean_reversion";
        case ErrorKind::empty_input:
            return "empty_input";
        case ErrorKind::all_replications_failed:
            return "all_replications_failed";
        case ErrorKind::invalid_config:
            return "invalid_config";
        case ErrorKind::io_error:
            return "io_error";
    }
    return "unknown";
}

}  // namespace cir
