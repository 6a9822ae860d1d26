#include "cir/config.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

#include "cir/csv.hpp"

namespace cir {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
    throw CirError(ErrorKind::invalid_config, "config key '" + key + "': " + why);
}

double parse_number(const std::string& key, std::string_view value) {
    double parsed = 0.0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_key(key, "expected a number, got '" + std::string(value) + "'");
    }
    return parsed;
}

std::uint64_t parse_seed(const std::string& key, std::string_view value) {
    std::uint64_t parsed = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        bad_key(key, "expected an unsigned 64-bit integer");
    }
    return parsed;
}

std::vector<std::string_view> split_list(std::string_view value) {
    std::vector<std::string_view> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        const std::size_t pos = value.find(',', start);
        const std::string_view item =
            trim(value.substr(start, pos == std::string_view::npos
                                         ? std::string_view::npos
                                         : pos - start));
        if (!item.empty()) {
            items.push_back(item);
        }
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return items;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
    RunConfig run;
    ExperimentConfig& cfg = run.experiment;
    cfg.run_mle = true;
    cfg.run_alt = true;
    cfg.checkpoints.clear();

    bool have_a = false, have_b = false, have_sigma = false, have_r0 = false;
    bool have_horizon = false, have_reps = false, have_seed = false;
    double a = 0, b = 0, sigma = 0, r0 = 0;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw CirError(ErrorKind::invalid_config,
                           "config line " + std::to_string(line_no) +
                               ": expected 'key = value'");
        }
        const std::string key{trim(stripped.substr(0, eq))};
        const std::string_view value = trim(stripped.substr(eq + 1));
        if (value.empty()) {
            bad_key(key, "empty value");
        }

        if (key == "a") {
            a = parse_number(key, value);
            have_a = true;
        } else if (key == "b") {
            b = parse_number(key, value);
            have_b = true;
        } else if (key == "sigma") {
            sigma = parse_number(key, value);
            have_sigma = true;
        } else if (key == "r0") {
            r0 = parse_number(key, value);
            have_r0 = true;
        } else if (key == "horizon") {
            cfg.sim.horizon = parse_number(key, value);
            have_horizon = true;
        } else if (key == "dt") {
            cfg.sim.dt = parse_number(key, value);
        } else if (key == "scheme") {
            if (value == "euler" || value == "euler_full_truncation") {
                cfg.sim.scheme = Scheme::euler_full_truncation;
            } else if (value == "implicit" || value == "drift_implicit_sqrt") {
                cfg.sim.scheme = Scheme::drift_implicit_sqrt;
            } else {
                bad_key(key, "expected 'euler' or 'implicit'");
            }
        } else if (key == "replications") {
            const double reps = parse_number(key, value);
            if (reps < 1 || reps != static_cast<int>(reps)) {
                bad_key(key, "expected a positive integer");
            }
            cfg.replications = static_cast<int>(reps);
            have_reps = true;
        } else if (key == "checkpoints") {
            for (const auto item : split_list(value)) {
                cfg.checkpoints.push_back(parse_number(key, item));
            }
            if (cfg.checkpoints.empty()) {
                bad_key(key, "expected a comma-separated list of times");
            }
        } else if (key == "base_seed") {
            cfg.base_seed = parse_seed(key, value);
            have_seed = true;
        } else if (key == "estimators") {
            cfg.run_mle = false;
            cfg.run_alt = false;
            for (const auto item : split_list(value)) {
                if (item == "mle") {
                    cfg.run_mle = true;
                } else if (item == "alt" || item == "alternative") {
                    cfg.run_alt = true;
                } else if (item == "both") {
                    cfg.run_mle = true;
                    cfg.run_alt = true;
                } else {
                    bad_key(key, "expected 'mle', 'alt' or 'both'");
                }
            }
        } else if (key == "inv_floor") {
            cfg.inv_floor = parse_number(key, value);
        } else if (key == "out") {
            run.out = std::string(value);
        } else {
            throw CirError(ErrorKind::invalid_config,
                           "unknown config key '" + key + "'");
        }
    }

    for (const auto& [have, name] :
         {std::pair{have_a, "a"}, {have_b, "b"}, {have_sigma, "sigma"},
          {have_r0, "r0"}, {have_horizon, "horizon"},
          {have_reps, "replications"}, {have_seed, "base_seed"}}) {
        if (!have) {
            throw CirError(ErrorKind::invalid_config,
                           std::string("missing required config key '") + name + "'");
        }
    }
    if (run.out.empty()) {
        throw CirError(ErrorKind::invalid_config, "missing required config key 'out'");
    }

    cfg.params = validate_params(a, b, sigma, r0);
    if (cfg.checkpoints.empty()) {
        cfg.checkpoints.push_back(cfg.sim.horizon);
    }
    validate_experiment(cfg);
    return run;
}

RunConfig load_run_config(const std::filesystem::path& file) {
    return parse_run_config(read_file(file));
}

}  // namespace cir
