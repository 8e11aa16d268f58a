#include "zopf/config.hpp"

#include "zopf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace zopf {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return s.substr(a, b - a);
}

long long parse_ll(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long out = std::stoll(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer for '" + key + "': " + v);
    }
}

double parse_d(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double out = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("config: bad number for '" + key + "': " + v);
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "problem")
        cfg.problem = value;
    else if (key == "dim")
        cfg.dim = static_cast<int>(parse_ll(key, value));
    else if (key == "seed")
        cfg.seed = static_cast<std::uint64_t>(parse_ll(key, value));
    else if (key == "lambda_min")
        cfg.lambda_min = parse_d(key, value);
    else if (key == "lambda_max")
        cfg.lambda_max = parse_d(key, value);
    else if (key == "max_affine_pieces")
        cfg.max_affine_pieces = static_cast<int>(parse_ll(key, value));
    else if (key == "stochastic_half_width")
        cfg.stochastic_half_width = parse_d(key, value);
    else if (key == "methods")
        cfg.methods = split_list(value);
    else if (key == "regime")
        cfg.regime = value;
    else if (key == "epsilon")
        cfg.epsilon = parse_d(key, value);
    else if (key == "budget")
        cfg.budget = parse_ll(key, value);
    else if (key == "batch") {
        if (value == "theory")
            cfg.fixed_batch = 0;
        else
            cfg.fixed_batch = parse_ll(key, value);
    } else if (key == "p")
        cfg.p = static_cast<int>(parse_ll(key, value));
    else if (key == "start")
        cfg.start = value;
    else if (key == "max_inner")
        cfg.max_inner = parse_ll(key, value);
    else if (key == "gamma")
        cfg.gamma_override = parse_d(key, value);
    else if (key == "noise")
        cfg.noise = value;
    else if (key == "noise_delta")
        cfg.noise_delta = parse_d(key, value);
    else if (key == "noise_scale")
        cfg.noise_scale = parse_d(key, value);
    else if (key == "f_star")
        cfg.f_star_mode = value;
    else if (key == "out")
        cfg.out_dir = value;
    else if (key == "svg")
        cfg.emit_svg = (value == "1" || value == "true" || value == "yes");
    else
        throw ConfigError("config: unknown key '" + key + "'");
}

void ExperimentConfig::validate() const {
    if (problem != "quadratic_simplex" && problem != "l1_distance" && problem != "max_affine")
        throw ConfigError("config: unknown problem '" + problem + "'");
    if (dim < 2)
        throw ConfigError("config: dim must be >= 2");
    if (!(lambda_min > 0.0) || !(lambda_min <= lambda_max))
        throw ConfigError("config: need 0 < lambda_min <= lambda_max");
    if (methods.empty())
        throw ConfigError("config: methods list is empty");
    for (const std::string& m : methods)
        if (m != "zo-scgs" && m != "zscg")
            throw ConfigError("config: unknown method '" + m + "'");
    if (regime != "smooth" && regime != "nonsmooth")
        throw ConfigError("config: regime must be smooth or nonsmooth");
    if (regime == "smooth" && problem != "quadratic_simplex")
        throw ConfigError("config: smooth regime requires the quadratic problem");
    if (!(epsilon > 0.0))
        throw ConfigError("config: epsilon must be > 0");
    if (budget < 1)
        throw ConfigError("config: budget must be >= 1");
    if (fixed_batch < 0)
        throw ConfigError("config: batch must be 'theory' or a positive integer");
    if (p != 1 && p != 2)
        throw ConfigError("config: p must be 1 or 2");
    if (start != "vertex" && start != "center")
        throw ConfigError("config: start must be vertex or center");
    if (noise != "none" && noise != "constant" && noise != "sign_first" &&
        noise != "bounded_sine")
        throw ConfigError("config: unknown noise kind '" + noise + "'");
    if (noise_delta < 0.0)
        throw ConfigError("config: noise_delta must be >= 0");
    if (f_star_mode != "analytic" && f_star_mode != "reference")
        throw ConfigError("config: f_star must be analytic or reference");
}

void ExperimentConfig::serialize(std::ostream& out) const {
    out << "problem = " << problem << "\n";
    out << "dim = " << dim << "\n";
    out << "seed = " << seed << "\n";
    out << "lambda_min = " << fmt(lambda_min) << "\n";
    out << "lambda_max = " << fmt(lambda_max) << "\n";
    out << "max_affine_pieces = " << max_affine_pieces << "\n";
    out << "stochastic_half_width = " << fmt(stochastic_half_width) << "\n";
    out << "methods = ";
    for (std::size_t i = 0; i < methods.size(); ++i)
        out << (i ? "," : "") << methods[i];
    out << "\n";
    out << "regime = " << regime << "\n";
    out << "epsilon = " << fmt(epsilon) << "\n";
    out << "budget = " << budget << "\n";
    out << "batch = " << (fixed_batch > 0 ? std::to_string(fixed_batch) : "theory") << "\n";
    out << "p = " << p << "\n";
    out << "start = " << start << "\n";
    out << "max_inner = " << max_inner << "\n";
    out << "gamma = " << fmt(gamma_override) << "\n";
    out << "noise = " << noise << "\n";
    out << "noise_delta = " << fmt(noise_delta) << "\n";
    out << "noise_scale = " << fmt(noise_scale) << "\n";
    out << "f_star = " << f_star_mode << "\n";
    out << "out = " << out_dir.string() << "\n";
    out << "svg = " << (emit_svg ? "true" : "false") << "\n";
}

ExperimentConfig parse_config(std::istream& in, ExperimentConfig base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        apply_config_entry(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return base;
}

ExperimentConfig parse_config_file(const std::filesystem::path& file, ExperimentConfig base) {
    std::ifstream in(file);
    if (!in)
        throw ConfigError("cannot open config file: " + file.string());
    return parse_config(in, base);
}

} // namespace zopf
