// coupling.hpp — Sublattice coupling configurations of two separate giant atoms

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace giantwg {

enum class Sublattice : std::uint8_t { A, B };

// Equidistant coupling points n1, n1+d, n1+2d, n1+3d (unit-cell indices).
struct Geometry {
    int d = 1;
    int n1 = 0;

    std::array<int, 4> positions() const;
};

// Coupling points 1,2 belong to atom 1 and points 3,4 to atom 2. Positions are
// strictly increasing (separate coupling); each point couples with strength g
// to the A or B cavity of its unit cell.
class CouplingConfig {
public:
    CouplingConfig(std::array<Sublattice, 4> letters, std::array<int, 4> positions, double g);

    const std::array<Sublattice, 4>& letters() const noexcept { return letters_; }
    const std::array<int, 4>& positions() const noexcept { return positions_; }
    double g() const noexcept { return g_; }

    // alpha_i = 1 iff point i couples to sublattice A; beta_i = 1 - alpha_i.
    int alpha(int i) const { return letters_.at(static_cast<std::size_t>(i)) == Sublattice::A ? 1 : 0; }
    int beta(int i) const { return 1 - alpha(i); }
    int position(int i) const { return positions_.at(static_cast<std::size_t>(i)); }

    // n_ij = n_j - n_i (0-based point indices)
    int distance(int i, int j) const { return position(j) - position(i); }

    std::string label() const;

    CouplingConfig translated(int shift) const;
    CouplingConfig with_g(double g) const;

    friend bool operator==(const CouplingConfig&, const CouplingConfig&) = default;

private:
    std::array<Sublattice, 4> letters_;
    std::array<int, 4> positions_;
    double g_;
};

// "ABBA" etc. Throws MalformedLabel unless the label matches [AB]{4}.
CouplingConfig parse_config(std::string_view label, const Geometry& geometry, double g);

// O1O2O3O4 -> complement(O4 O3 O2 O1); positions and g unchanged.
CouplingConfig mirror(const CouplingConfig& config);
std::string mirror_label(std::string_view label);

// The sixteen labels AAAA..BBBB in lexicographic order.
std::vector<std::string> enumerate_all();

bool is_self_mirror(std::string_view label);

// Both atoms see identical single-atom environments (AA and BB pairs are
// equivalent), hence Sigma_11 = Sigma_22. Six labels: AAAA, AABB, ABAB,
// BABA, BBAA, BBBB.
bool is_symmetric(std::string_view label);

} // namespace giantwg
