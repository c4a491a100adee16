#include "giantwg/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "giantwg/error.hpp"

namespace giantwg {

namespace {

Eigen::Matrix4cd sigma_yy() {
    // sy x sy in the (e, g) ordering: antidiagonal with signs (-1, 1, 1, -1)
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
}

} // namespace

double concurrence(const DensityMatrix& rho) {
    const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
    if (es.eigenvalues().minCoeff() < -1e-8) {
        std::ostringstream os;
        os << "density matrix has eigenvalue " << es.eigenvalues().minCoeff();
        throw Error(ErrorKind::NonPhysicalInput, os.str());
    }
    const Eigen::Vector4d w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4cd sqrt_rho = es.eigenvectors() * w.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();

    // sqrt(rho) rho~ sqrt(rho) = M M^dagger, so its eigenvalues are the squared singular values of M.
    // Taking singular values directly avoids the sqrt(eps) loss on near-zero eigenvalues.
    const Eigen::Matrix4cd yy = sigma_yy();
    const Eigen::Matrix4cd m = sqrt_rho * yy * sqrt_rho.conjugate() * yy;
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(m);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) lam[static_cast<std::size_t>(i)] = svd.singularValues()(i);
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence_xstate(const DensityMatrix& rho) {
    const double tol = 1e-10;
    const bool x_shape = std::abs(rho(kEE, kGG)) < tol && std::abs(rho(kEE, kEG)) < tol &&
                         std::abs(rho(kEE, kGE)) < tol && std::abs(rho(kEG, kGG)) < tol &&
                         std::abs(rho(kGE, kGG)) < tol;
    if (!x_shape) throw Error(ErrorKind::StructureViolation, "density matrix is not X-shaped");
    const double pee = std::max(rho(kEE, kEE).real(), 0.0);
    const double pgg = std::max(rho(kGG, kGG).real(), 0.0);
    return 2.0 * std::max(0.0, std::abs(rho(kEG, kGE)) - std::sqrt(pee * pgg));
}

ConcurrenceTrace concurrence_trace(const DensityTrajectory& trajectory) {
    ConcurrenceTrace out;
    out.times = trajectory.times;
    out.values.reserve(trajectory.states.size());
    for (const auto& rho : trajectory.states) out.values.push_back(concurrence(rho));
    return out;
}

std::optional<double> onset_time(const ConcurrenceTrace& trace, double threshold) {
    for (std::size_t i = 0; i < trace.values.size(); ++i) {
        if (trace.values[i] > threshold) return trace.times[i];
    }
    return std::nullopt;
}

EntanglementFeatures features(const ConcurrenceTrace& trace, double threshold) {
    EntanglementFeatures f;
    if (trace.values.empty()) return f;
    const auto it = std::max_element(trace.values.begin(), trace.values.end());
    f.max_value = *it;
    f.time_of_max = trace.times[static_cast<std::size_t>(it - trace.values.begin())];
    f.onset = onset_time(trace, threshold);
    f.final_value = trace.values.back();
    return f;
}

} // namespace giantwg
