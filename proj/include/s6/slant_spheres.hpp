#ifndef S6_SLANT_SPHERES_HPP
#define S6_SLANT_SPHERES_HPP

#include <array>
#include <stdexcept>
#include <string_view>

#include "s6/calibration.hpp"
#include "s6/octonion.hpp"

namespace s6 {

/// A point p of S^6 with an orthonormal frame (X, Y) of a tangent 2-plane.
struct TangentFrame {
  ImOctonion p;
  ImOctonion X;
  ImOctonion Y;

  /// Throws std::invalid_argument unless p, X, Y are orthonormal within `tol`.
  static TangentFrame checked(const ImOctonion& p, const ImOctonion& X, const ImOctonion& Y,
                              double tol = 1e-10);
};

/// |<X, J_p Y>|, the cosine of the Wirtinger angle of span(X, Y).
double wirtinger_cos(const TangentFrame& f);

/// Wirtinger angle from the tangential and normal parts of J_p X, which keeps
/// full relative accuracy near 0 and pi/2.
double wirtinger_angle(const TangentFrame& f);

enum class SlantClass { almost_complex, proper_slant, totally_real, not_slant };
std::string_view to_string(SlantClass c);

/// Spread thresholds for the slant decision. Spreads in between raise
/// InconclusiveSlantError.
struct SlantThresholds {
  double slant = 1e-9;
  double not_slant = 1e-4;
  double boundary_angle = 1e-8;
};

class InconclusiveSlantError : public std::runtime_error {
 public:
  explicit InconclusiveSlantError(double spread);
  double spread() const { return spread_; }

 private:
  double spread_;
};

struct SlantReport {
  bool is_slant = false;
  SlantClass classification = SlantClass::not_slant;
  double angle = 0.0;      ///< meaningful only when is_slant
  double cos_angle = 0.0;  ///< meaningful only when is_slant
  double spread = 0.0;     ///< max - min of the sampled cosines
  int n_samples = 0;
};

/// Builds a report from per-sample Wirtinger cosines and angles.
SlantReport classify_samples(const double* cosines, const double* angles, int n,
                             const SlantThresholds& th);

/// Sphere of radius r in the affine plane center + plane, lying on S^6.
class SphereSection {
 public:
  /// Requires r in (0, 1], center ⊥ plane, |center|^2 + r^2 = 1 (within `tol`).
  SphereSection(const Plane3& plane, double radius, const ImOctonion& center, double tol = 1e-12);

  const Plane3& plane() const { return plane_; }
  double radius() const { return radius_; }
  const ImOctonion& center() const { return center_; }

 private:
  Plane3 plane_;
  double radius_;
  ImOctonion center_;
};

/// Fibonacci lattice point k of n on the unit sphere of R^3, with an
/// orthonormal tangent frame from the spherical-coordinate derivatives.
struct SpherePoint {
  Eigen::Vector3d u;
  Eigen::Vector3d du1;
  Eigen::Vector3d du2;
};
SpherePoint fibonacci_point(int k, int n);

SlantReport analyze_great_sphere(const Plane3& plane, int n_samples,
                                 const SlantThresholds& th = {});

/// The two centers +-sqrt(1 - r^2) [pi]/|[pi]| at which a small sphere in a
/// non-associative direction plane is slant. Throws AssociativePlaneError
/// when phi(pi) > 1 - 1e-8; std::invalid_argument unless 0 < r < 1.
std::array<ImOctonion, 2> slant_center(const Plane3& plane, double r);

/// r = 1 routes to analyze_great_sphere.
SlantReport analyze_small_sphere(const SphereSection& section, int n_samples,
                                 const SlantThresholds& th = {});

}  // namespace s6

#endif  // S6_SLANT_SPHERES_HPP
