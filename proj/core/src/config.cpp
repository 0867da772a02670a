#include "gapflow/config.hpp"

#include <fstream>
#include <sstream>

namespace gapflow {

namespace {
std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}
} // namespace

Config Config::parse_string(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line, section;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("unterminated section header", ln);
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) throw ConfigError("empty section name", ln);
            c.sections_[section];
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value", ln);
        const std::string key = trim(t.substr(0, eq));
        const std::string val = trim(t.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", ln);
        if (section.empty()) throw ConfigError("key outside any [section]", ln);
        c.sections_[section][key] = val;
        c.lines_[section + "." + key] = ln;
    }
    return c;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

bool Config::has(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
}

std::string Config::get(const std::string& section, const std::string& key,
                        const std::string& fallback) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) return fallback;
    const auto k = s->second.find(key);
    return k == s->second.end() ? fallback : k->second;
}

std::string Config::require(const std::string& section, const std::string& key) const {
    if (!has(section, key))
        throw ConfigError("missing required key [" + section + "] " + key, 0);
    return sections_.at(section).at(key);
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = sections_.at(section).at(key);
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for [" + section + "] " + key + ": " + v,
                          lines_.count(section + "." + key)
                              ? lines_.at(section + "." + key)
                              : 0);
    }
}

long Config::get_long(const std::string& section, const std::string& key,
                      long fallback) const {
    if (!has(section, key)) return fallback;
    const double d = get_double(section, key, 0.0);
    const long l = static_cast<long>(d);
    if (static_cast<double>(l) != d)
        throw ConfigError("expected integer for [" + section + "] " + key,
                          lines_.count(section + "." + key)
                              ? lines_.at(section + "." + key)
                              : 0);
    return l;
}

std::vector<double> Config::get_list(const std::string& section,
                                     const std::string& key) const {
    std::vector<double> out;
    if (!has(section, key)) return out;
    const std::string v = sections_.at(section).at(key);
    std::istringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const std::string t = tok;
        try {
            out.push_back(std::stod(t));
        } catch (const std::exception&) {
            throw ConfigError("invalid list entry for [" + section + "] " + key + ": " + t,
                              lines_.count(section + "." + key)
                                  ? lines_.at(section + "." + key)
                                  : 0);
        }
    }
    return out;
}

std::string Config::canonical() const {
    std::ostringstream out;
    for (const auto& [sec, kv] : sections_) {
        out << '[' << sec << "]\n";
        for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
    }
    return out.str();
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t Config::hash() const { return fnv1a(canonical()); }

} // namespace gapflow
