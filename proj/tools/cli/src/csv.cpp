#include "giantwg/cli/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "giantwg/error.hpp"

namespace giantwg::cli {

std::string format_real(double x) {
    if (x == 0.0) x = 0.0; // fold -0 into 0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) throw Error(ErrorKind::InvalidArgument, "CSV row width mismatch");
    rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out.push_back(',');
            out += cells[i];
        }
        out.push_back('\n');
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    f << text;
    if (!f) throw Error(ErrorKind::InvalidArgument, "write failed for " + path);
}

} // namespace giantwg::cli
