#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rgg {

// Flat key=value text config. Lines are trimmed; blank lines and lines
// starting with '#' are skipped; the first '=' splits key from value;
// duplicate keys are rejected. Getters parse strictly and throw FormatError
// on a missing key or a malformed value, so a bad config dies with exit
// code 2 at the CLI boundary.
class Config {
public:
    Config() = default;

    static Config parse(std::istream& in);
    static Config load(const std::string& path);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    long long get_int(const std::string& key) const;
    double get_real(const std::string& key) const;
    bool get_flag(const std::string& key) const;  // true/false/1/0

    std::string get_string(const std::string& key, const std::string& fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
    double get_real(const std::string& key, double fallback) const;
    bool get_flag(const std::string& key, bool fallback) const;

    // Throws FormatError when the file holds a key outside `allowed`; a typo
    // in a config should fail loudly, not silently fall back to a default.
    void require_known(const std::vector<std::string>& allowed) const;

    std::vector<std::string> keys() const;

private:
    std::map<std::string, std::string> kv_;
};

}  // namespace rgg
