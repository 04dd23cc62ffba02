#include "rggcouple/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>

#include "rggcouple/errors.hpp"

namespace rgg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

Config Config::parse(std::istream& in) {
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw FormatError("config: line " + std::to_string(lineno) +
                              " has no '=': '" + t + "'");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw FormatError("config: empty key at line " + std::to_string(lineno));
        if (!cfg.kv_.emplace(key, val).second)
            throw FormatError("config: duplicate key '" + key + "' at line " +
                              std::to_string(lineno));
    }
    return cfg;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("config: cannot open '" + path + "'");
    return parse(in);
}

bool Config::has(const std::string& key) const { return kv_.count(key) != 0; }

std::string Config::get_string(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw FormatError("config: missing key '" + key + "'");
    return it->second;
}

long long Config::get_int(const std::string& key) const {
    std::string v = get_string(key);
    errno = 0;
    char* end = nullptr;
    long long out = std::strtoll(v.c_str(), &end, 10);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        throw FormatError("config: key '" + key + "' is not an integer: '" + v + "'");
    return out;
}

double Config::get_real(const std::string& key) const {
    std::string v = get_string(key);
    errno = 0;
    char* end = nullptr;
    double out = std::strtod(v.c_str(), &end);
    if (errno != 0 || end == v.c_str() || *end != '\0')
        throw FormatError("config: key '" + key + "' is not a real: '" + v + "'");
    return out;
}

bool Config::get_flag(const std::string& key) const {
    std::string v = get_string(key);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw FormatError("config: key '" + key + "' is not a flag: '" + v + "'");
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    return has(key) ? get_string(key) : fallback;
}
long long Config::get_int(const std::string& key, long long fallback) const {
    return has(key) ? get_int(key) : fallback;
}
double Config::get_real(const std::string& key, double fallback) const {
    return has(key) ? get_real(key) : fallback;
}
bool Config::get_flag(const std::string& key, bool fallback) const {
    return has(key) ? get_flag(key) : fallback;
}

void Config::require_known(const std::vector<std::string>& allowed) const {
    for (const auto& [key, val] : kv_) {
        (void)val;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw FormatError("config: unknown key '" + key + "'");
    }
}

std::vector<std::string> Config::keys() const {
    std::vector<std::string> out;
    out.reserve(kv_.size());
    for (const auto& [key, val] : kv_) {
        (void)val;
        out.push_back(key);
    }
    return out;
}

}  // namespace rgg
