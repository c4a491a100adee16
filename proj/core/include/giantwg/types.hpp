// types.hpp — Two-atom state conventions

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace giantwg {

using cplx = std::complex<double>;

// Two-atom density matrix in the bare basis (|ee>, |eg>, |ge>, |gg>).
// Atom 1 is the left label character in |eg>.
using DensityMatrix = Eigen::Matrix4cd;

enum BareIndex : int { kEE = 0, kEG = 1, kGE = 2, kGG = 3 };

enum class InitialState { EE, EG, GE, GG };

inline DensityMatrix basis_projector(InitialState s) {
    DensityMatrix rho = DensityMatrix::Zero();
    switch (s) {
    case InitialState::EE: rho(kEE, kEE) = 1.0; break;
    case InitialState::EG: rho(kEG, kEG) = 1.0; break;
    case InitialState::GE: rho(kGE, kGE) = 1.0; break;
    case InitialState::GG: rho(kGG, kGG) = 1.0; break;
    }
    return rho;
}

} // namespace giantwg
