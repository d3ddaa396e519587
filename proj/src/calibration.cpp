#include "s6/calibration.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace s6 {
namespace {

constexpr double kRankTol = 1e-8;
constexpr double kAssociativeTol = 1e-8;

ImOctonion orthogonalise(ImOctonion v, const ImOctonion* basis, int n) {
  for (int pass = 0; pass < 2; ++pass)
    for (int k = 0; k < n; ++k) v -= basis[k].dot(v) * basis[k];
  return v;
}

}  // namespace

Plane3 Plane3::from_orthonormal(const ImOctonion& f1, const ImOctonion& f2, const ImOctonion& f3,
                                double tol) {
  Eigen::Matrix<double, 7, 3> m;
  m << f1, f2, f3;
  const double err = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  if (err > tol) {
    throw std::invalid_argument(fmt::format("Plane3: frame is not orthonormal (error {:.3e})", err));
  }
  return Plane3({f1, f2, f3});
}

Eigen::Matrix<double, 7, 3> Plane3::matrix() const {
  Eigen::Matrix<double, 7, 3> m;
  m << frame_[0], frame_[1], frame_[2];
  return m;
}

Mat7 Plane3::projector() const {
  const auto m = matrix();
  return m * m.transpose();
}

Plane3 plane_from_spanning(const ImOctonion& v1, const ImOctonion& v2, const ImOctonion& v3) {
  Eigen::Matrix<double, 7, 3> m;
  m << v1, v2, v3;
  const double smin = Eigen::JacobiSVD<Eigen::Matrix<double, 7, 3>>(m).singularValues()(2);
  if (!(smin > kRankTol)) {
    throw RankDeficientError(
        fmt::format("vectors do not span a 3-plane (smallest singular value {:.3e})", smin), smin);
  }
  std::array<ImOctonion, 3> f{v1, v2, v3};
  for (int k = 0; k < 3; ++k) {
    f[static_cast<std::size_t>(k)] = orthogonalise(f[static_cast<std::size_t>(k)], f.data(), k);
    f[static_cast<std::size_t>(k)].normalize();
  }
  return Plane3::from_orthonormal(f[0], f[1], f[2], 1e-10);
}

Plane3 map_plane(const Mat7& m, const Plane3& p) {
  return plane_from_spanning(m * p[0], m * p[1], m * p[2]);
}

double signed_phi(const Plane3& p) { return assoc_form(p[0], p[1], p[2]); }

double phi_of_plane(const Plane3& p) { return std::min(1.0, std::abs(signed_phi(p))); }

ImOctonion associator_of_plane(const Plane3& p) { return associator(p[0], p[1], p[2]); }

Mat7 gram_frame(const Plane3& p) {
  Mat7 v;
  v.col(0) = p[0];
  v.col(1) = p[1];
  v.col(2) = p[2];
  v.col(3) = cross(p[1], p[2]);
  v.col(4) = cross(p[2], p[0]);
  v.col(5) = cross(p[0], p[1]);
  v.col(6) = associator_of_plane(p);
  return v.transpose() * v;
}

Mat7 gram_pattern(double phi) {
  Mat7 g = Mat7::Identity();
  for (int k = 0; k < 3; ++k) {
    g(k, k + 3) = phi;
    g(k + 3, k) = phi;
  }
  g(6, 6) = 4.0 * (1.0 - phi * phi);
  return g;
}

std::array<ImOctonion, 7> cayley_dickson_frame(const Plane3& p) {
  const double phi = phi_of_plane(p);
  if (phi > 1.0 - kAssociativeTol) {
    throw AssociativePlaneError(
        fmt::format("cayley_dickson_frame: plane is associative (phi = {:.17g})", phi));
  }
  std::array<ImOctonion, 7> F;
  F[0] = p[0];
  F[1] = p[1];
  F[2] = cross(p[0], p[1]);
  F[3] = associator_of_plane(p).normalized();
  F[4] = cross(F[0], F[3]);
  F[5] = cross(F[1], F[3]);
  F[6] = cross(F[2], F[3]);
  return F;
}

Plane3 canonical_plane(double phi) {
  if (phi < 0.0 || phi > 1.0) {
    throw std::invalid_argument(fmt::format("canonical_plane: phi = {} outside [0, 1]", phi));
  }
  const ImOctonion third = phi * basis7(3) - std::sqrt(1.0 - phi * phi) * basis7(7);
  return Plane3::from_orthonormal(basis7(1), basis7(2), third);
}

double subspace_distance(const Plane3& a, const Plane3& b) {
  const auto qa = a.matrix();
  const auto qb = b.matrix();
  const Eigen::Matrix<double, 7, 3> residual = qa - qb * (qb.transpose() * qa);
  const double sin_max = Eigen::JacobiSVD<Eigen::Matrix<double, 7, 3>>(residual).singularValues()(0);
  const double cos_min =
      Eigen::JacobiSVD<Eigen::Matrix3d>(Eigen::Matrix3d(qb.transpose() * qa)).singularValues()(2);
  return std::atan2(sin_max, cos_min);
}

CanonicalReduction reduce_to_canonical(const Plane3& p) {
  const double phi = phi_of_plane(p);
  if (phi > 1.0 - kAssociativeTol) {
    // Complete (f1, f2) by the coordinate axis farthest from span(f1, f2, f1 f2).
    const ImOctonion basis[3] = {p[0], p[1], cross(p[0], p[1]).normalized()};
    ImOctonion best = ImOctonion::Zero();
    for (int k = 1; k <= 7; ++k) {
      const ImOctonion v = orthogonalise(basis7(k), basis, 3);
      if (v.norm() > best.norm()) best = v;
    }
    const G2Automorphism from = automorphism_from_basic_triple(p[0], p[1], best.normalized());
    const G2Automorphism g = from.inverse();
    return {1.0,  g, Plane3::from_orthonormal(basis7(1), basis7(2), basis7(3)),
            true, false, g(p[2])};
  }
  const bool flip = signed_phi(p) < 0.0;
  const Plane3 oriented = flip ? Plane3::from_orthonormal(p[0], p[1], -p[2], 1e-10) : p;
  const auto F = cayley_dickson_frame(oriented);
  const G2Automorphism g = automorphism_from_basic_triple(F[0], F[1], F[3]).inverse();
  return {phi, g, canonical_plane(phi), false, flip, g(oriented[2])};
}

Equivalence g2_equivalent(const Plane3& a, const Plane3& b) {
  const double gap = std::abs(phi_of_plane(a) - phi_of_plane(b));
  if (!(gap < 1e-9)) return {false, gap, std::nullopt, std::nan("")};
  const CanonicalReduction ra = reduce_to_canonical(a);
  const CanonicalReduction rb = reduce_to_canonical(b);
  const G2Automorphism w = rb.automorphism.inverse() * ra.automorphism;
  return {true, gap, w, subspace_distance(map_plane(w.matrix(), a), b)};
}

}  // namespace s6
