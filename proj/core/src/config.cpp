#include "symsq/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symsq {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Config Config::load(const std::string& path) {
    Config cfg;
    std::ifstream in(path);
    if (in) {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = strip(line);
            if (t.empty() || t[0] == '#') continue;
            std::size_t eq = t.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": expected key=value");
            std::string key = strip(t.substr(0, eq));
            std::string value = strip(t.substr(eq + 1));
            try {
                if (key == "cache_dir") cfg.cache_dir = value;
                else if (key == "precision_bits") cfg.precision_bits = std::stoul(value);
                else if (key == "mollifier.M") cfg.mollifier_M = std::stoi(value);
                else if (key == "mollifier.A") cfg.mollifier_A = std::stod(value);
                else if (key == "mollifier.support_cap") cfg.support_cap = std::stoull(value);
                else if (key == "thread_count") cfg.thread_count = (value == "auto") ? 0 : std::stoi(value);
                else if (key == "output_format") cfg.output_format = value;
                else if (key == "classify.m_divisor_primary") cfg.classify_m_divisor_primary = std::stod(value);
                else if (key == "classify.m_divisor_loud") cfg.classify_m_divisor_loud = std::stod(value);
                else if (key == "classify.p_decay_base") cfg.classify_p_decay_base = std::stod(value);
                else throw std::runtime_error("unknown key '" + key + "'");
            } catch (const std::invalid_argument&) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": bad value for " + key);
            }
        }
    }
    if (const char* env = std::getenv("CACHE_DIR")) cfg.cache_dir = env;
    cfg.validate();
    return cfg;
}

void Config::validate() const {
    if (precision_bits < 64)
        throw std::runtime_error("config: precision_bits >= 64 required");
    if (support_cap == 0)
        throw std::runtime_error("config: support_cap must be positive");
    if (output_format != "csv" && output_format != "json")
        throw std::runtime_error("config: output_format must be csv or json");
    if (thread_count < 0)
        throw std::runtime_error("config: thread_count must be >= 0");
}

} // namespace symsq
