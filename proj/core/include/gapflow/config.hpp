// Flat INI-style key-value configuration with sections, plus the typed
// run configuration shared by the CLI commands.
#ifndef GAPFLOW_CONFIG_HPP
#define GAPFLOW_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapflow {

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(const std::string& msg, int ln)
        : std::runtime_error(msg + " (line " + std::to_string(ln) + ")"), line(ln) {}
};

class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback) const;
    std::string require(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    long get_long(const std::string& section, const std::string& key, long fallback) const;
    std::vector<double> get_list(const std::string& section, const std::string& key) const;

    std::string canonical() const;  // sorted text form used for hashing
    std::uint64_t hash() const;     // FNV-1a of the canonical form

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
    std::map<std::string, int> lines_; // "section.key" -> source line
};

std::uint64_t fnv1a(const std::string& text);

} // namespace gapflow

#endif
