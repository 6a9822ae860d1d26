#include "cir/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace cir {

namespace {

double parse_double(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const auto* begin = field.data();
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw CirError(ErrorKind::io_error,
                       "line " + std::to_string(line_no) + ": cannot parse number '" +
                           std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

std::string format_or_empty(double v) {
    return std::isnan(v) ? std::string{} : format_double(v);
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string path_to_csv(const Path& path) {
    std::string out;
    out.reserve(path.times.size() * 48);
    const bool with_noise = path.has_noise();
    out += with_noise ? "t,r,dW\n" : "t,r\n";
    for (std::size_t i = 0; i < path.times.size(); ++i) {
        out += format_double(path.times[i]);
        out += ',';
        out += format_double(path.values[i]);
        if (with_noise) {
            out += ',';
            if (i < path.noise.size()) {
                out += format_double(path.noise[i]);
            }
        }
        out += '\n';
    }
    return out;
}

Path path_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw CirError(ErrorKind::io_error, "empty path CSV");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    bool with_noise = false;
    if (line == "t,r,dW") {
        with_noise = true;
    } else if (line != "t,r") {
        throw CirError(ErrorKind::io_error,
                       "path CSV must start with header 't,r' or 't,r,dW'");
    }

    Path path;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        const std::size_t expected = with_noise ? 3 : 2;
        if (fields.size() != expected) {
            throw CirError(ErrorKind::io_error,
                           "line " + std::to_string(line_no) + ": expected " +
                               std::to_string(expected) + " fields");
        }
        path.times.push_back(parse_double(fields[0], line_no));
        path.values.push_back(parse_double(fields[1], line_no));
        if (with_noise && !fields[2].empty()) {
            path.noise.push_back(parse_double(fields[2], line_no));
        }
    }
    if (path.times.size() < 2) {
        throw CirError(ErrorKind::io_error, "path CSV has fewer than two rows");
    }
    for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
        if (!(path.times[i + 1] > path.times[i])) {
            throw CirError(ErrorKind::io_error, "path times must be ascending");
        }
    }
    if (with_noise && path.noise.size() != path.times.size() - 1) {
        throw CirError(ErrorKind::io_error,
                       "dW column must hold one increment per step");
    }
    return path;
}

Path read_path_csv(const std::filesystem::path& file) {
    return path_from_csv(read_file(file));
}

std::string statistics_to_csv(std::span<const PathStatistics> stats) {
    std::string out =
        "T,int_r,int_r2,int_inv_r,int_dr_over_r,r_start,r_end,min_value,inv_reliable\n";
    for (const auto& s : stats) {
        out += format_double(s.horizon);
        out += ',';
        out += format_double(s.int_r);
        out += ',';
        out += format_double(s.int_r2);
        out += ',';
        out += s.int_inv_r ? format_double(*s.int_inv_r) : std::string{};
        out += ',';
        out += s.int_dr_over_r ? format_double(*s.int_dr_over_r) : std::string{};
        out += ',';
        out += format_double(s.r_start);
        out += ',';
        out += format_double(s.r_end);
        out += ',';
        out += format_double(s.min_value);
        out += ',';
        out += s.inv_reliable ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string report_to_csv(const MonteCarloReport& report) {
    const auto& cfg = report.config;
    const std::string prefix = format_double(cfg.params.a) + ',' +
                               format_double(cfg.params.b) + ',' +
                               format_double(cfg.params.sigma) + ',' +
                               format_double(cfg.params.r0) + ',' +
                               format_double(cfg.sim.dt) + ',';
    std::string out = "a,b,sigma,r0,dt,T,estimator,param,mean,std,n_ok,n_fail\n";
    for (const auto& cell : report.cells) {
        out += prefix;
        out += format_double(cell.horizon);
        out += ',';
        out += to_string(cell.estimator);
        out += ',';
        out += cell.param;
        out += ',';
        out += format_or_empty(cell.mean);
        out += ',';
        out += format_or_empty(cell.stddev);
        out += ',';
        out += std::to_string(cell.n_ok);
        out += ',';
        out += std::to_string(cell.n_fail);
        out += '\n';
    }
    return out;
}

std::string report_to_table(const MonteCarloReport& report) {
    const auto& cfg = report.config;
    std::ostringstream out;
    char buf[64];

    out << "parameters: a=" << format_double(cfg.params.a)
        << " b=" << format_double(cfg.params.b)
        << " sigma=" << format_double(cfg.params.sigma)
        << " r0=" << format_double(cfg.params.r0) << "\n"
        << "run: scheme=" << to_string(cfg.sim.scheme)
        << " dt=" << format_double(cfg.sim.dt) << " replications=" << cfg.replications
        << " base_seed=" << cfg.base_seed << "\n";
    if (cfg.run_mle && !cfg.params.feller()) {
        out << "warning: 2a <= sigma^2, the likelihood estimator is not "
               "well-defined in this regime\n";
    }

    auto cells_for = [&](EstimatorKind kind, char param) {
        std::vector<const ReportCell*> row;
        for (const auto& cell : report.cells) {
            if (cell.estimator == kind && cell.param == param) {
                row.push_back(&cell);
            }
        }
        return row;
    };

    for (const char param : {'a', 'b'}) {
        out << "\nestimates of " << param << ":\n  " << std::string(10, ' ');
        for (const double t : cfg.checkpoints) {
            std::snprintf(buf, sizeof buf, "%12s", ("T=" + format_double(t)).c_str());
            out << buf;
        }
        out << "\n";
        for (const EstimatorKind kind :
             {EstimatorKind::mle, EstimatorKind::alternative}) {
            const auto row = cells_for(kind, param);
            if (row.empty()) {
                continue;
            }
            const char* tag = kind == EstimatorKind::mle ? "_mle]" : "_alt]";
            std::string mean_row, std_row, count_row;
            bool warn = false;
            int fails = 0;
            for (const ReportCell* cell : row) {
                warn = warn || cell->feller_warning;
                fails += cell->n_fail;
                if (cell->n_ok > 0) {
                    std::snprintf(buf, sizeof buf, "%12.4f", cell->mean);
                    mean_row += buf;
                    std::snprintf(buf, sizeof buf, "%12.4f", cell->stddev);
                    std_row += buf;
                } else {
                    std::snprintf(buf, sizeof buf, "%12s", "n/a");
                    mean_row += buf;
                    std_row += buf;
                }
                std::snprintf(buf, sizeof buf, "%12s",
                              (std::to_string(cell->n_ok) + "/" +
                               std::to_string(cell->n_ok + cell->n_fail))
                                  .c_str());
                count_row += buf;
            }
            std::snprintf(buf, sizeof buf, "  %-10s", ("E[" + std::string(1, param) + tag).c_str());
            out << buf << mean_row;
            if (warn) {
                out << "   [flagged: 2a <= sigma^2]";
            }
            out << "\n";
            std::snprintf(buf, sizeof buf, "  %-10s", ("sd[" + std::string(1, param) + tag).c_str());
            out << buf << std_row << "\n";
            if (fails > 0) {
                std::snprintf(buf, sizeof buf, "  %-10s", "ok/total");
                out << buf << count_row << "\n";
            }
        }
    }
    return out.str();
}

void write_file(const std::filesystem::path& file, const std::string& content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) {
        throw CirError(ErrorKind::io_error, "cannot open for writing: " + file.string());
    }
    out << content;
    if (!out) {
        throw CirError(ErrorKind::io_error, "write failed: " + file.string());
    }
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw CirError(ErrorKind::io_error, "cannot open for reading: " + file.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace cir
