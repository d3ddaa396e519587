#ifndef S6_TORUS_ORBITS_HPP
#define S6_TORUS_ORBITS_HPP

#include <array>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "s6/g2.hpp"
#include "s6/octonion.hpp"

namespace s6 {

inline constexpr double kRegularityTol = 1e-10;

struct Regularity {
  double alpha;  ///< x2^2 + x3^2 + y0^2 + y1^2
  double beta;   ///< x2^2 + x3^2 + y2^2 + y3^2
  double gamma;  ///< y0^2 + y1^2 + y2^2 + y3^2
  bool regular;  ///< min(alpha, beta, gamma) > 1e-10, i.e. the orbit is a torus
};

/// Coordinates (x1, x2, x3, y0, y1, y2, y3) ↔ e1..e7.
Regularity regularity(const ImOctonion& p);

/// A unit vector of Im O with its regularity data.
class OrbitPoint {
 public:
  /// Throws std::invalid_argument unless |p|^2 = 1 within 1e-12.
  explicit OrbitPoint(const ImOctonion& p);
  static OrbitPoint normalized(const ImOctonion& p);

  const ImOctonion& coords() const { return p_; }
  const Regularity& regularity() const { return reg_; }
  bool regular() const { return reg_.regular; }
  double x1() const { return p_[0]; }

 private:
  ImOctonion p_;
  Regularity reg_;
};

/// Throws std::invalid_argument listing (alpha, beta, gamma) for a point whose orbit is not 2-dimensional.
void require_regular(const OrbitPoint& p);

/// The printed tangent vectors d/dt and d/ds of the printed action at (0, 0).
ImOctonion printed_x_bar(const ImOctonion& p);
ImOctonion printed_y_bar(const ImOctonion& p);

struct OrbitTangent {
  ImOctonion x_bar;  ///< d/dt of the flow at (0, 0)
  ImOctonion y_bar;  ///< d/ds of the flow at (0, 0)
  ImOctonion X;      ///< Gram-Schmidt orthonormalisation of (x_bar, y_bar)
  ImOctonion Y;
};

OrbitTangent tangent_frame(const OrbitPoint& p, FlowConvention c = FlowConvention::exponential);

/// |<X, p Y>| at p from the orthonormalised flow tangents.
double orbit_slant_cos(const OrbitPoint& p, FlowConvention c = FlowConvention::exponential);
double orbit_slant_angle(const OrbitPoint& p, FlowConvention c = FlowConvention::exponential);

/// |x3y1y2 - x2y0y2 - x2y1y3 - x3y0y3| / sqrt(alpha beta - (x2^2 + x3^2)^2)
double printed_slant_cos(const OrbitPoint& p);

/// (x1, a, b, c) with x3 = R sin a cos b, y1 = R sin b, y2 = R cos a sin c cos b,
/// y3 = R cos a cos c cos b, R = sqrt(1 - x1^2), x2 = y0 = 0.
struct OrbitParam {
  double x1;
  double a;
  double b;
  double c;
};

OrbitPoint param_to_point(const OrbitParam& q);

/// sin 2b sin 2a / (2 sqrt(4 sin^2 b + cos^2 b sin^2 2a)) * sqrt(1 - x1^2) * sin c.
/// Signed. Throws std::domain_error where the denominator vanishes.
double slant_cos_param(const OrbitParam& q);

/// (1/sqrt 3)(0, 0, 1, 0, 1, cos c, sin c)
OrbitPoint minimal_family_point(double c);

/// The printed mean curvature formula for a slice point (x2 = y0 = 0).
/// Throws std::invalid_argument off the slice or when D <= 1e-12.
ImOctonion printed_mean_curvature(const OrbitPoint& p);

/// A flow element moving p to the slice x2 = y0 = 0 with x3, y1 >= 0.
struct SliceMove {
  double t;
  double s;
  OrbitPoint image;
};
SliceMove to_slice(const OrbitPoint& p, FlowConvention c = FlowConvention::exponential);

struct OrbitGeometry {
  Eigen::Matrix2d metric;
  ImOctonion h11;
  ImOctonion h12;
  ImOctonion h22;
  double gauss_K;
  ImOctonion mean_H;  ///< g^{ij} h_ij, second fundamental form in S^6
  double slant_cos;
  FlowConvention convention;
};

/// Second fundamental form from the flow derivatives A^2 p, ABp, B^2 p projected
/// onto the normal space of the orbit in S^6; K from the Gauss equation.
OrbitGeometry orbit_geometry(const OrbitPoint& p, FlowConvention c = FlowConvention::exponential);

/// Largest deviation of the metric coefficients over an n x n grid of
/// (t, s) in [0, 2pi)^2 from their value at p.
double metric_spread(const OrbitPoint& p, int n = 16,
                     FlowConvention c = FlowConvention::exponential);

struct Fullness {
  int ambient_dim;         ///< affine dimension of the sampled orbit
  double hyperplane_offset;  ///< the common x1 value
  double offset_deviation;   ///< max |x1(sample) - x1(p)|
};

/// Samples ceil(sqrt(n))^2 points g_{t,s} p and reads off the affine rank of
/// the cloud (RMS singular values above 1e-8).
Fullness linear_fullness(const OrbitPoint& p, int n_samples,
                         FlowConvention c = FlowConvention::exponential);

// ---------------------------------------------------------------------------
// Parameter scans

/// Closed-open uniform lattice lo + k (hi - lo) / n, k = 0..n-1. A single
/// fixed value is written lo = hi, n = 1.
struct ScanAxis {
  double lo;
  double hi;
  int n;
  double node(int k) const { return lo + k * (hi - lo) / n; }
};

struct ScanGrid {
  ScanAxis x1;
  ScanAxis a;
  ScanAxis b;
  ScanAxis c;
  std::size_t size() const;
};

/// x1 ∈ [-1, 1), a, b ∈ [-pi/2, pi/2), c ∈ [0, 2pi), n nodes each.
ScanGrid default_grid(int n = 32);

struct ScanRow {
  OrbitParam q;
  bool regular;
  double slant_cos;   ///< first principles when regular, closed form otherwise
  double slant_angle;
  double mean_H_norm;  ///< nan when not regular
  double gauss_K;      ///< nan when not regular
};

ScanRow scan_node(const OrbitParam& q, FlowConvention c = FlowConvention::exponential);

/// Row-major (x1 outermost, c innermost) scan; `sink` sees rows in order.
void slant_scan(const ScanGrid& grid, const std::function<void(const ScanRow&)>& sink,
                FlowConvention c = FlowConvention::exponential);
std::vector<ScanRow> slant_scan(const ScanGrid& grid,
                                FlowConvention c = FlowConvention::exponential);

/// Width-0.01 bins covering [0, 1/3].
inline constexpr int kSlantBins = 34;

struct ScanSummary {
  std::size_t rows = 0;
  std::size_t regular_rows = 0;
  double grid_max = 0.0;
  OrbitParam grid_argmax{};
  double refined_max = 0.0;
  OrbitParam refined_argmax{};
  std::array<std::size_t, kSlantBins> bins{};
  int bins_populated = 0;
  double min_H_norm = 0.0;
  double max_abs_K = 0.0;
};

/// Accumulates scan rows; `finish` runs a deterministic pattern search from
/// the best grid node to polish the maximum.
class ScanAccumulator {
 public:
  void add(const ScanRow& row);
  void add_value(double slant_cos);
  ScanSummary finish(FlowConvention c = FlowConvention::exponential) const;

 private:
  ScanSummary s_{};
  bool have_max_ = false;
  double min_H_ = std::numeric_limits<double>::infinity();
};

ScanSummary summarize(const ScanGrid& grid, FlowConvention c = FlowConvention::exponential);

/// Local maximisation of the first-principles slant cosine over parameters.
std::pair<OrbitParam, double> refine_max(const OrbitParam& start, const OrbitParam& step,
                                         FlowConvention c = FlowConvention::exponential);

}  // namespace s6

#endif  // S6_TORUS_ORBITS_HPP
