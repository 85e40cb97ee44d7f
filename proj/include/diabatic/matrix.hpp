#pragma once

#include <Eigen/Dense>
#include <complex>

namespace diabatic {

using cxd = std::complex<double>;
using Vec2c = Eigen::Vector2cd;
using Mat2c = Eigen::Matrix2cd;
using MatXc = Eigen::MatrixXcd;

// Entrywise max-abs norm.
inline double max_abs_norm(const MatXc& m) { return m.cwiseAbs().maxCoeff(); }

inline double unitarity_defect(const MatXc& u) {
  return max_abs_norm(u.adjoint() * u - MatXc::Identity(u.rows(), u.cols()));
}

// 1 - |tr(Ua^dag Ut)| / dim, insensitive to a global phase on either factor.
inline double phase_invariant_infidelity(const MatXc& ua, const MatXc& ut) {
  return 1.0 - std::abs((ua.adjoint() * ut).trace()) / static_cast<double>(ua.rows());
}

}  // namespace diabatic
