#include "giantwg/cli/toml_lite.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "giantwg/error.hpp"

namespace giantwg::cli {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    std::ostringstream os;
    os << "config line " << line << ": " << what;
    throw Error(ErrorKind::InvalidArgument, os.str());
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Drops a trailing comment that is not inside a string.
std::string strip_comment(const std::string& s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (s[i] == '#' && !quoted) return s.substr(0, i);
    }
    return s;
}

TomlValue::Scalar parse_scalar(const std::string& raw, int line) {
    const std::string v = trim(raw);
    if (v.empty()) fail(line, "missing value");
    if (v.front() == '"') {
        if (v.size() < 2 || v.back() != '"') fail(line, "unterminated string");
        return v.substr(1, v.size() - 2);
    }
    if (v == "true") return true;
    if (v == "false") return false;
    std::string digits;
    for (char c : v) {
        if (c != '_') digits.push_back(c);
    }
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    double out = 0.0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) fail(line, "cannot parse value '" + v + "'");
    return out;
}

std::vector<std::string> split_array(const std::string& body) {
    std::vector<std::string> parts;
    std::string cur;
    bool quoted = false;
    for (char c : body) {
        if (c == '"') quoted = !quoted;
        if (c == ',' && !quoted) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!trim(cur).empty()) parts.push_back(cur);
    return parts;
}

} // namespace

TomlTable parse_toml(const std::string& text) {
    TomlTable table;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) fail(line_no, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            table[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");
        auto& slot = table[section];
        if (slot.count(key)) fail(line_no, "duplicate key '" + key + "'");

        TomlValue tv;
        if (!value.empty() && value.front() == '[') {
            if (value.back() != ']') fail(line_no, "arrays must close on the same line");
            tv.is_array = true;
            for (const auto& part : split_array(value.substr(1, value.size() - 2))) {
                tv.items.push_back(parse_scalar(part, line_no));
            }
        } else {
            tv.items.push_back(parse_scalar(value, line_no));
        }
        slot.emplace(key, std::move(tv));
    }
    return table;
}

TomlTable load_toml(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open config file " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse_toml(os.str());
}

} // namespace giantwg::cli
