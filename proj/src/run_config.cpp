#include "pubcomm/run_config.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pubcomm {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw std::invalid_argument("config: " + where + ": " + what);
}

double parse_double(const std::string& where, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || value.empty() || errno == ERANGE) {
        bad(where, "expected a number, got '" + value + "'");
    }
    return v;
}

long long parse_int(const std::string& where, const std::string& value) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(value.c_str(), &end, 10);
    if (end != value.c_str() + value.size() || value.empty() || errno == ERANGE) {
        bad(where, "expected an integer, got '" + value + "'");
    }
    return v;
}

bool parse_bool(const std::string& where, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    bad(where, "expected true/false, got '" + value + "'");
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");

    RunConfig cfg;
    bool saw_params = false;
    std::string section;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string text = trim(line);
        const auto comment = text.find_first_of("#;");
        if (comment != std::string::npos) text = trim(text.substr(0, comment));
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') bad("line " + std::to_string(line_no), "unterminated section");
            section = trim(text.substr(1, text.size() - 2));
            if (section != "params" && section != "solver" && section != "figure" &&
                section != "sweep" && section != "simulate" && section != "output") {
                bad("line " + std::to_string(line_no), "unknown section [" + section + "]");
            }
            if (section == "params") saw_params = true;
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) bad("line " + std::to_string(line_no), "expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        const std::string where = section + "." + key;

        if (section == "params") {
            if (key == "alpha") cfg.params.alpha = parse_double(where, value);
            else if (key == "beta") cfg.params.beta = parse_double(where, value);
            else if (key == "gamma") cfg.params.gamma = parse_double(where, value);
            else if (key == "mu") cfg.params.mu = parse_double(where, value);
            else if (key == "r") cfg.params.r = parse_double(where, value);
            else if (key == "b") cfg.params.b = parse_double(where, value);
            else if (key == "p") cfg.params.p = parse_double(where, value);
            else bad(where, "unknown key");
        } else if (section == "solver") {
            if (key == "x_tol") cfg.solver.x_tol = parse_double(where, value);
            else if (key == "y_tol") cfg.solver.y_tol = parse_double(where, value);
            else if (key == "residual_tol") cfg.solver.residual_tol = parse_double(where, value);
            else if (key == "max_iterations") cfg.solver.max_iterations = static_cast<int>(parse_int(where, value));
            else if (key == "scan_points") cfg.solver.scan_points = static_cast<int>(parse_int(where, value));
            else if (key == "bayes_form") {
                if (value == "standard") cfg.solver.bayes_form = BayesForm::standard;
                else if (value == "paper_literal") cfg.solver.bayes_form = BayesForm::paper_literal;
                else bad(where, "expected standard or paper_literal, got '" + value + "'");
            } else bad(where, "unknown key");
        } else if (section == "figure") {
            if (key == "y_min") cfg.figure.y_min = parse_double(where, value);
            else if (key == "y_max") cfg.figure.y_max = parse_double(where, value);
            else if (key == "y_points") cfg.figure.y_points = static_cast<int>(parse_int(where, value));
            else if (key == "include_bounds") cfg.figure.include_bounds = parse_bool(where, value);
            else bad(where, "unknown key");
        } else if (section == "sweep") {
            if (key == "b_min") cfg.sweep.b_min = parse_double(where, value);
            else if (key == "b_max") cfg.sweep.b_max = parse_double(where, value);
            else if (key == "b_points") cfg.sweep.b_points = static_cast<int>(parse_int(where, value));
            else bad(where, "unknown key");
        } else if (section == "simulate") {
            if (key == "draws") cfg.simulate.draws = static_cast<std::uint64_t>(parse_int(where, value));
            else if (key == "receivers") cfg.simulate.receivers = static_cast<std::uint32_t>(parse_int(where, value));
            else if (key == "seed") cfg.simulate.seed = static_cast<std::uint64_t>(parse_int(where, value));
            else bad(where, "unknown key");
        } else if (section == "output") {
            if (key == "path") cfg.output_path = value;
            else bad(where, "unknown key");
        } else {
            bad("line " + std::to_string(line_no), "key outside any section");
        }
    }

    if (!saw_params) throw std::invalid_argument("config: missing [params] section");
    cfg.params.validate();

    if (cfg.figure.y_min && cfg.figure.y_max && !(*cfg.figure.y_min < *cfg.figure.y_max)) {
        bad("figure.y_min", "must be below figure.y_max");
    }
    if (cfg.figure.y_min.has_value() != cfg.figure.y_max.has_value()) {
        bad("figure.y_min", "y_min and y_max must be given together");
    }
    if (cfg.figure.y_points < 2) bad("figure.y_points", "must be >= 2");
    if (cfg.sweep.b_min.has_value() != cfg.sweep.b_max.has_value()) {
        bad("sweep.b_min", "b_min and b_max must be given together");
    }
    if (cfg.sweep.explicit_grid() && !(*cfg.sweep.b_min < *cfg.sweep.b_max)) {
        bad("sweep.b_min", "must be below sweep.b_max");
    }
    if (cfg.sweep.b_points < 2) bad("sweep.b_points", "must be >= 2");
    if (cfg.simulate.draws < 1) bad("simulate.draws", "must be >= 1");
    if (cfg.simulate.receivers < 1) bad("simulate.receivers", "must be >= 1");
    return cfg;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace pubcomm
