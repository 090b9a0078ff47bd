#include "fdeblur/cli_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fdeblur/errors.hpp"

namespace fdeblur::cli {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value '" + value + "' for key '" + key + "'");
    }
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        size_t pos;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value '" + value + "' for key '" + key + "'");
    }
}

}  // namespace

const std::vector<std::string>& valid_config_keys() {
    static const std::vector<std::string> keys = {
        "kernel_size", "lambda",       "alpha",          "gamma1",
        "gamma2",      "sigma",        "scale",          "noise",
        "seed",        "boundary",     "taps",           "trunc_factor",
        "finisher_gamma1_scale"};
    return keys;
}

std::vector<std::pair<std::string, std::string>> load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);

    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              " is not 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        const auto& keys = valid_config_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            std::ostringstream msg;
            msg << "unknown config key '" << key << "'; valid keys:";
            for (const auto& k : keys) msg << " " << k;
            throw ConfigError(msg.str());
        }
        entries.emplace_back(std::move(key), std::move(value));
    }
    return entries;
}

BoundaryMode parse_boundary(const std::string& name) {
    if (name == "zero") return BoundaryMode::Zero;
    if (name == "periodic") return BoundaryMode::Periodic;
    if (name == "reflexive") return BoundaryMode::Reflexive;
    throw ConfigError("unknown boundary mode '" + name +
                      "' (expected zero, periodic or reflexive)");
}

void apply_option(ToolOptions& opts, const std::string& key, const std::string& value) {
    if (key == "kernel_size")
        opts.kernel_size = static_cast<int>(parse_long(key, value));
    else if (key == "lambda")
        opts.lambda = parse_double(key, value);
    else if (key == "alpha")
        opts.alpha = parse_double(key, value);
    else if (key == "gamma1")
        opts.gamma1 = parse_double(key, value);
    else if (key == "gamma2")
        opts.gamma2 = parse_double(key, value);
    else if (key == "sigma")
        opts.sigma = parse_double(key, value);
    else if (key == "scale")
        opts.scale = parse_double(key, value);
    else if (key == "noise")
        opts.noise_std = parse_double(key, value);
    else if (key == "seed")
        opts.seed = static_cast<std::uint64_t>(parse_long(key, value));
    else if (key == "boundary")
        opts.boundary = parse_boundary(value);
    else if (key == "taps")
        opts.gl_taps = static_cast<int>(parse_long(key, value));
    else if (key == "trunc_factor")
        opts.trunc_factor = parse_double(key, value);
    else if (key == "finisher_gamma1_scale")
        opts.finisher_gamma1_scale = parse_double(key, value);
    else
        throw ConfigError("unknown config key '" + key + "'");
}

synth::KernelSpec parse_kernel_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.empty()) throw ConfigError("empty kernel spec");

    auto num = [&](size_t i, double fallback) {
        return parts.size() > i ? parse_double("kernel spec", parts[i]) : fallback;
    };

    synth::KernelSpec spec;
    const std::string& kind = parts[0];
    if (kind == "delta") {
        spec.kind = synth::KernelKind::Delta;
        spec.size = static_cast<int>(num(1, 3));
    } else if (kind == "box") {
        spec.kind = synth::KernelKind::Box;
        spec.size = static_cast<int>(num(1, 3));
    } else if (kind == "gauss") {
        spec.kind = synth::KernelKind::Gaussian;
        spec.size = static_cast<int>(num(1, 9));
        spec.sigma = num(2, 1.5);
    } else if (kind == "motion") {
        spec.kind = synth::KernelKind::LinearMotion;
        spec.length = static_cast<int>(num(1, 9));
        spec.angle_deg = num(2, 0.0);
        double theta = spec.angle_deg * M_PI / 180.0;
        double half = (spec.length - 1) / 2.0 *
                      std::max(std::abs(std::cos(theta)), std::abs(std::sin(theta)));
        spec.size = 2 * static_cast<int>(std::ceil(half)) + 1;
    } else {
        throw ConfigError("unknown kernel kind '" + kind +
                          "' (expected delta, box, gauss or motion)");
    }
    if (spec.size < 1 || spec.size % 2 == 0)
        throw ConfigError("kernel spec yields an invalid size");
    return spec;
}

}  // namespace fdeblur::cli
