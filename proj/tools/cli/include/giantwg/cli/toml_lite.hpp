// toml_lite.hpp — Reader for the flat TOML subset used by experiment files
//
// Supported: [section] headers, key = value lines, # comments, values that are
// strings ("..."), numbers, booleans, or one-line arrays of those.

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace giantwg::cli {

struct TomlValue {
    using Scalar = std::variant<bool, double, std::string>;
    std::vector<Scalar> items; // scalars hold exactly one item
    bool is_array = false;
};

using TomlTable = std::map<std::string, std::map<std::string, TomlValue>>;

// Throws giantwg::Error(InvalidArgument) with the offending line number.
TomlTable parse_toml(const std::string& text);
TomlTable load_toml(const std::string& path);

} // namespace giantwg::cli
