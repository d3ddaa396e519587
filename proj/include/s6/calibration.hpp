#ifndef S6_CALIBRATION_HPP
#define S6_CALIBRATION_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "s6/g2.hpp"
#include "s6/octonion.hpp"

namespace s6 {

/// Thrown when three vectors do not span a 3-dimensional subspace.
class RankDeficientError : public std::invalid_argument {
 public:
  RankDeficientError(const std::string& what, double singular_value)
      : std::invalid_argument(what), singular_value_(singular_value) {}
  double singular_value() const { return singular_value_; }

 private:
  double singular_value_;
};

/// Thrown by constructions that divide by sqrt(1 - phi^2).
class AssociativePlaneError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 3-dimensional subspace of Im O carried by an ordered orthonormal frame.
class Plane3 {
 public:
  /// Validates orthonormality within `tol`.
  static Plane3 from_orthonormal(const ImOctonion& f1, const ImOctonion& f2, const ImOctonion& f3,
                                 double tol = 1e-12);

  const ImOctonion& operator[](std::size_t i) const { return frame_[i]; }
  const std::array<ImOctonion, 3>& frame() const { return frame_; }
  Eigen::Matrix<double, 7, 3> matrix() const;
  /// Orthogonal projector onto the subspace.
  Mat7 projector() const;

 private:
  explicit Plane3(const std::array<ImOctonion, 3>& f) : frame_(f) {}
  std::array<ImOctonion, 3> frame_;
};

/// Gram-Schmidt of (v1, v2, v3), keeping the input order. Throws
/// RankDeficientError when the smallest singular value is <= 1e-8.
Plane3 plane_from_spanning(const ImOctonion& v1, const ImOctonion& v2, const ImOctonion& v3);

/// Image of a plane under a linear map of Im O.
Plane3 map_plane(const Mat7& m, const Plane3& p);

/// phi(f1, f2, f3) for the stored frame; its sign follows the frame orientation.
double signed_phi(const Plane3& p);
/// |phi(f1, f2, f3)|, in [0, 1]; 1 exactly on associative planes.
double phi_of_plane(const Plane3& p);
/// [f1, f2, f3] for the stored frame; frame independent up to sign.
ImOctonion associator_of_plane(const Plane3& p);

/// Gram matrix of (f1, f2, f3, f2f3, f3f1, f1f2, [f1,f2,f3]).
Mat7 gram_frame(const Plane3& p);
/// The closed-form Gram pattern with couplings `phi` and (7,7) entry 4(1 - phi^2).
Mat7 gram_pattern(double phi);

/// F1..F7 with F1 = f1, F2 = f2, F3 = f1 f2, F4 = [pi] / |[pi]|, F5 = F1 F4,
/// F6 = F2 F4, F7 = F3 F4. Throws AssociativePlaneError if phi > 1 - 1e-8.
std::array<ImOctonion, 7> cayley_dickson_frame(const Plane3& p);

/// span(e1, e2, phi e3 - sqrt(1 - phi^2) e7)
Plane3 canonical_plane(double phi);

/// Largest principal angle between two 3-dimensional subspaces.
double subspace_distance(const Plane3& a, const Plane3& b);

struct CanonicalReduction {
  double phi;
  G2Automorphism automorphism;  ///< carries the source plane onto `target`
  Plane3 target;
  bool associative;       ///< true when the phi = 1 branch was taken
  bool frame_reoriented;  ///< f3 was negated so that phi(f1, f2, f3) >= 0
  ImOctonion f3_image;    ///< automorphism applied to the (oriented) f3
};

/// Constructive G2 reduction to the canonical plane of the same phi. Always
/// uses F4 = +[pi]/|[pi]| on the positively oriented frame; the image of f3
/// is then phi e3 - sqrt(1 - phi^2) e7.
CanonicalReduction reduce_to_canonical(const Plane3& p);

struct Equivalence {
  bool equivalent;
  double phi_gap;
  std::optional<G2Automorphism> witness;  ///< carries the first plane onto the second
  double image_distance;                  ///< subspace distance of witness(first) to second
};

/// Planes are G2-equivalent iff |phi1 - phi2| < 1e-9.
Equivalence g2_equivalent(const Plane3& a, const Plane3& b);

}  // namespace s6

#endif  // S6_CALIBRATION_HPP
