// csv.hpp — Deterministic CSV tables (12 significant digits, LF line endings)

#pragma once

#include <string>
#include <vector>

namespace giantwg::cli {

std::string format_real(double x);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
    std::string to_csv() const;
};

// Writes text to path, creating parent directories.
void write_text(const std::string& path, const std::string& text);

} // namespace giantwg::cli
