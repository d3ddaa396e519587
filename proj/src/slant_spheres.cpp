#include "s6/slant_spheres.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

namespace s6 {

TangentFrame TangentFrame::checked(const ImOctonion& p, const ImOctonion& X, const ImOctonion& Y,
                                   double tol) {
  const double errs[] = {p.squaredNorm() - 1.0, X.squaredNorm() - 1.0, Y.squaredNorm() - 1.0,
                         p.dot(X), p.dot(Y), X.dot(Y)};
  for (double e : errs) {
    if (std::abs(e) > tol) {
      throw std::invalid_argument(
          fmt::format("TangentFrame: (p, X, Y) not orthonormal (error {:.3e})", e));
    }
  }
  return {p, X, Y};
}

double wirtinger_cos(const TangentFrame& f) { return std::abs(f.X.dot(cross(f.p, f.Y))); }

double wirtinger_angle(const TangentFrame& f) {
  const ImOctonion JX = cross(f.p, f.X);
  const double tangential = JX.dot(f.Y);
  // J_p X is already orthogonal to p and X.
  const double normal = (JX - tangential * f.Y).norm();
  return std::atan2(normal, std::abs(tangential));
}

std::string_view to_string(SlantClass c) {
  switch (c) {
    case SlantClass::almost_complex: return "almost_complex";
    case SlantClass::proper_slant: return "proper_slant";
    case SlantClass::totally_real: return "totally_real";
    case SlantClass::not_slant: return "not_slant";
  }
  return "unknown";
}

InconclusiveSlantError::InconclusiveSlantError(double spread)
    : std::runtime_error(fmt::format(
          "slant test inconclusive: Wirtinger spread {:.3e} lies between the thresholds", spread)),
      spread_(spread) {}

SlantReport classify_samples(const double* cosines, const double* angles, int n,
                             const SlantThresholds& th) {
  SlantReport r;
  r.n_samples = n;
  const auto [lo, hi] = std::minmax_element(cosines, cosines + n);
  r.spread = *hi - *lo;
  if (r.spread < th.slant) {
    r.is_slant = true;
    double c = 0.0, a = 0.0;
    for (int i = 0; i < n; ++i) {
      c += cosines[i];
      a += angles[i];
    }
    r.cos_angle = c / n;
    r.angle = a / n;
    if (r.angle < th.boundary_angle) {
      r.classification = SlantClass::almost_complex;
    } else if (std::abs(r.angle - std::numbers::pi / 2) < th.boundary_angle) {
      r.classification = SlantClass::totally_real;
    } else {
      r.classification = SlantClass::proper_slant;
    }
    return r;
  }
  if (r.spread > th.not_slant) {
    r.classification = SlantClass::not_slant;
    return r;
  }
  throw InconclusiveSlantError(r.spread);
}

SphereSection::SphereSection(const Plane3& plane, double radius, const ImOctonion& center,
                             double tol)
    : plane_(plane), radius_(radius), center_(center) {
  if (!(radius > 0.0 && radius <= 1.0)) {
    throw std::invalid_argument(fmt::format("SphereSection: radius {} outside (0, 1]", radius));
  }
  const double off = (plane.matrix().transpose() * center).cwiseAbs().maxCoeff();
  if (off > tol) {
    throw std::invalid_argument(
        fmt::format("SphereSection: center is not orthogonal to the plane ({:.3e})", off));
  }
  const double err = center.squaredNorm() + radius * radius - 1.0;
  if (std::abs(err) > tol) {
    throw std::invalid_argument(
        fmt::format("SphereSection: |c|^2 + r^2 - 1 = {:.3e}, section is not on S^6", err));
  }
}

SpherePoint fibonacci_point(int k, int n) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * k + 1.0) / n;
  const double polar = std::acos(z);
  const double azimuth = golden * k;
  const double sp = std::sin(polar), cp = std::cos(polar);
  const double sa = std::sin(azimuth), ca = std::cos(azimuth);
  return {{sp * ca, sp * sa, cp}, {cp * ca, cp * sa, -sp}, {-sa, ca, 0.0}};
}

namespace {

SlantReport analyze_section(const Plane3& plane, double r, const ImOctonion& center, int n,
                            const SlantThresholds& th) {
  if (n < 8) throw std::invalid_argument("sphere analysis needs at least 8 samples");
  const Eigen::Matrix<double, 7, 3> f = plane.matrix();
  std::vector<double> cosines(static_cast<std::size_t>(n)), angles(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const SpherePoint sp = fibonacci_point(k, n);
    const ImOctonion p = center + r * (f * sp.u);
    const TangentFrame frame{p, f * sp.du1, f * sp.du2};
    cosines[static_cast<std::size_t>(k)] = wirtinger_cos(frame);
    angles[static_cast<std::size_t>(k)] = wirtinger_angle(frame);
  }
  return classify_samples(cosines.data(), angles.data(), n, th);
}

}  // namespace

SlantReport analyze_great_sphere(const Plane3& plane, int n_samples, const SlantThresholds& th) {
  return analyze_section(plane, 1.0, ImOctonion::Zero(), n_samples, th);
}

std::array<ImOctonion, 2> slant_center(const Plane3& plane, double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument(fmt::format("slant_center: radius {} outside (0, 1)", r));
  }
  const double phi = phi_of_plane(plane);
  if (phi > 1.0 - 1e-8) {
    throw AssociativePlaneError(
        "slant_center: associative direction plane, every center gives a slant sphere");
  }
  const ImOctonion c = std::sqrt(1.0 - r * r) * associator_of_plane(plane).normalized();
  return {c, -c};
}

SlantReport analyze_small_sphere(const SphereSection& s, int n_samples, const SlantThresholds& th) {
  if (s.radius() == 1.0) return analyze_great_sphere(s.plane(), n_samples, th);
  return analyze_section(s.plane(), s.radius(), s.center(), n_samples, th);
}

}  // namespace s6
