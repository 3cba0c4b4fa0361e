#include "grtoda/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grtoda {

void RunConfig::validate(bool numeric) const {
    if (!(1 <= m && m < n && n <= 8))
        throw std::invalid_argument("config: need 1 <= m < n <= 8");
    if (numeric && m * (n - m) > 4)
        throw std::invalid_argument("config: numeric evaluation needs m(n-m) <= 4");
    if (!lambda.empty() && lambda.size() != static_cast<size_t>(n))
        throw std::invalid_argument("config: lambda must have length n");
    if (!(hbar > 0)) throw std::invalid_argument("config: hbar must be positive");
    if (numeric && !(tol >= 1e-12)) throw std::invalid_argument("config: tol must be >= 1e-12");
    if (emit != "text" && emit != "json") throw std::invalid_argument("config: emit must be text or json");
}

std::vector<double> parse_csv_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("config: malformed number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

void apply_config_line(RunConfig& cfg, const std::string& line) {
    std::string t = line;
    if (auto h = t.find('#'); h != std::string::npos) t = t.substr(0, h);
    size_t b = t.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return;
    size_t e = t.find_last_not_of(" \t\r\n");
    t = t.substr(b, e - b + 1);
    size_t eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config: expected key=value, got '" + t + "'");
    std::string key = t.substr(0, eq);
    std::string val = t.substr(eq + 1);
    auto as_int = [&](const std::string& v) {
        size_t pos = 0;
        int r = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("config: malformed integer for " + key);
        return r;
    };
    auto as_double = [&](const std::string& v) {
        size_t pos = 0;
        double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("config: malformed number for " + key);
        return r;
    };
    if (key == "m") cfg.m = as_int(val);
    else if (key == "n") cfg.n = as_int(val);
    else if (key == "lambda") cfg.lambda = parse_csv_doubles(val);
    else if (key == "hbar") cfg.hbar = as_double(val);
    else if (key == "epsilon") cfg.epsilon = as_int(val);
    else if (key == "tol") cfg.tol = as_double(val);
    else if (key == "emit") cfg.emit = val;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) apply_config_line(cfg, line);
    cfg.validate();
    return cfg;
}

} // namespace grtoda
