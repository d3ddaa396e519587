#include "s6/sampling.hpp"

#include <stdexcept>

namespace s6 {

Octonion Sampler::octonion() {
  Octonion o;
  for (int i = 0; i < 8; ++i) o[i] = normal();
  return o;
}

ImOctonion Sampler::gaussian7() {
  ImOctonion v;
  for (int i = 0; i < 7; ++i) v[i] = normal();
  return v;
}

ImOctonion Sampler::unit7() {
  for (;;) {
    const ImOctonion v = gaussian7();
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

ImOctonion Sampler::unit_orthogonal_to(const Eigen::Matrix<double, 7, Eigen::Dynamic>& basis) {
  for (;;) {
    ImOctonion v = gaussian7();
    // Two passes of modified Gram-Schmidt.
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index k = 0; k < basis.cols(); ++k) v -= basis.col(k).dot(v) * basis.col(k);
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

std::array<ImOctonion, 3> Sampler::orthonormal_triple() {
  Eigen::Matrix<double, 7, Eigen::Dynamic> basis(7, 0);
  std::array<ImOctonion, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out[k] = unit_orthogonal_to(basis);
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = out[k];
  }
  return out;
}

Plane3 Sampler::plane() {
  for (;;) {
    try {
      return plane_from_spanning(gaussian7(), gaussian7(), gaussian7());
    } catch (const RankDeficientError&) {
      // resample
    }
  }
}

Plane3 Sampler::reframe(const Plane3& p) {
  // Random orthogonal 3x3 from the QR factorisation of a Gaussian matrix.
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = normal();
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  Eigen::Matrix3d q = qr.householderQ();
  const Eigen::Matrix<double, 7, 3> f = p.matrix() * q;
  return plane_from_spanning(f.col(0), f.col(1), f.col(2));
}

std::array<ImOctonion, 3> Sampler::basic_triple() {
  const ImOctonion h1 = unit7();
  Eigen::Matrix<double, 7, Eigen::Dynamic> basis(7, 1);
  basis.col(0) = h1;
  const ImOctonion h2 = unit_orthogonal_to(basis);
  basis.conservativeResize(Eigen::NoChange, 3);
  basis.col(1) = h2;
  basis.col(2) = cross(h1, h2);
  const ImOctonion h3 = unit_orthogonal_to(basis);
  return {h1, h2, h3};
}

G2Automorphism Sampler::automorphism(int factors) {
  G2Automorphism g;
  for (int i = 0; i < factors; ++i) {
    const auto [h1, h2, h3] = basic_triple();
    g = automorphism_from_basic_triple(h1, h2, h3) * g;
  }
  return g;
}

}  // namespace s6
