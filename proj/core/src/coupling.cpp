#include "giantwg/coupling.hpp"

#include <cmath>

#include "giantwg/error.hpp"

namespace giantwg {

namespace {

char letter_char(Sublattice s) { return s == Sublattice::A ? 'A' : 'B'; }

Sublattice complement(Sublattice s) { return s == Sublattice::A ? Sublattice::B : Sublattice::A; }

std::array<Sublattice, 4> parse_letters(std::string_view label) {
    if (label.size() != 4) {
        throw Error(ErrorKind::MalformedLabel,
                    "coupling label must have exactly four characters, got '" + std::string(label) + "'");
    }
    std::array<Sublattice, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (label[i] == 'A') {
            out[i] = Sublattice::A;
        } else if (label[i] == 'B') {
            out[i] = Sublattice::B;
        } else {
            throw Error(ErrorKind::MalformedLabel,
                        "coupling label must match [AB]{4}, got '" + std::string(label) + "'");
        }
    }
    return out;
}

// AA and BB pairs give identical single-atom self-energies.
int pair_class(char first, char second) {
    if (first == second) return 0;
    return first == 'A' ? 1 : 2;
}

} // namespace

std::array<int, 4> Geometry::positions() const {
    if (d < 1) {
        throw Error(ErrorKind::InvalidArgument, "coupling-point spacing d must be >= 1");
    }
    return {n1, n1 + d, n1 + 2 * d, n1 + 3 * d};
}

CouplingConfig::CouplingConfig(std::array<Sublattice, 4> letters, std::array<int, 4> positions, double g)
    : letters_(letters), positions_(positions), g_(g) {
    for (std::size_t i = 1; i < 4; ++i) {
        if (positions_[i] <= positions_[i - 1]) {
            throw Error(ErrorKind::InvalidArgument,
                        "coupling positions must be strictly increasing (separate coupling)");
        }
    }
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw Error(ErrorKind::InvalidArgument, "coupling strength g must be positive");
    }
}

std::string CouplingConfig::label() const {
    std::string s(4, ' ');
    for (std::size_t i = 0; i < 4; ++i) s[i] = letter_char(letters_[i]);
    return s;
}

CouplingConfig CouplingConfig::translated(int shift) const {
    auto pos = positions_;
    for (auto& n : pos) n += shift;
    return {letters_, pos, g_};
}

CouplingConfig CouplingConfig::with_g(double g) const { return {letters_, positions_, g}; }

CouplingConfig parse_config(std::string_view label, const Geometry& geometry, double g) {
    return {parse_letters(label), geometry.positions(), g};
}

CouplingConfig mirror(const CouplingConfig& config) {
    const auto& in = config.letters();
    std::array<Sublattice, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = complement(in[3 - i]);
    return {out, config.positions(), config.g()};
}

std::string mirror_label(std::string_view label) {
    const auto letters = parse_letters(label);
    std::string s(4, ' ');
    for (std::size_t i = 0; i < 4; ++i) s[i] = letter_char(complement(letters[3 - i]));
    return s;
}

std::vector<std::string> enumerate_all() {
    std::vector<std::string> labels;
    labels.reserve(16);
    for (int code = 0; code < 16; ++code) {
        std::string s(4, 'A');
        for (int i = 0; i < 4; ++i) {
            if (code & (1 << (3 - i))) s[static_cast<std::size_t>(i)] = 'B';
        }
        labels.push_back(std::move(s));
    }
    return labels;
}

bool is_self_mirror(std::string_view label) { return mirror_label(label) == label; }

bool is_symmetric(std::string_view label) {
    parse_letters(label);
    return pair_class(label[0], label[1]) == pair_class(label[2], label[3]);
}

} // namespace giantwg
