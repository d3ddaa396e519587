#include "s6/torus_orbits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace s6 {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Generators {
  Mat7 A;
  Mat7 B;
};

const Generators& generators(FlowConvention c) {
  static const Generators exp{torus_generator_t(FlowConvention::exponential),
                              torus_generator_s(FlowConvention::exponential)};
  static const Generators printed{torus_generator_t(FlowConvention::printed_action),
                                  torus_generator_s(FlowConvention::printed_action)};
  return c == FlowConvention::exponential ? exp : printed;
}

// Orthonormal (X, Y) from the flow tangents.
std::pair<ImOctonion, ImOctonion> orthonormalise(const ImOctonion& u, const ImOctonion& v) {
  const ImOctonion X = u.normalized();
  ImOctonion Y = v - X.dot(v) * X;
  Y -= X.dot(Y) * X;
  return {X, Y.normalized()};
}

double slant_value_unchecked(const ImOctonion& p, const Generators& g) {
  const auto [X, Y] = orthonormalise(g.A * p, g.B * p);
  return std::abs(X.dot(cross(p, Y)));
}

double slant_angle_unchecked(const ImOctonion& p, const Generators& g) {
  const auto [X, Y] = orthonormalise(g.A * p, g.B * p);
  const ImOctonion JX = cross(p, X);
  const double tangential = JX.dot(Y);
  return std::atan2((JX - tangential * Y).norm(), std::abs(tangential));
}

OrbitGeometry geometry_unchecked(const ImOctonion& p, FlowConvention c) {
  const Generators& g = generators(c);
  const ImOctonion Ap = g.A * p, Bp = g.B * p;
  const auto [X, Y] = orthonormalise(Ap, Bp);
  auto normal_part = [&](ImOctonion v) {
    v -= p.dot(v) * p;
    v -= X.dot(v) * X;
    v -= Y.dot(v) * Y;
    return v;
  };
  OrbitGeometry out;
  out.metric << Ap.dot(Ap), Ap.dot(Bp), Bp.dot(Ap), Bp.dot(Bp);
  out.h11 = normal_part(g.A * Ap);
  out.h12 = normal_part(g.A * Bp);
  out.h22 = normal_part(g.B * Bp);
  const double det = out.metric.determinant();
  out.gauss_K = 1.0 + (out.h11.dot(out.h22) - out.h12.squaredNorm()) / det;
  const Eigen::Matrix2d inv = out.metric.inverse();
  out.mean_H = inv(0, 0) * out.h11 + 2.0 * inv(0, 1) * out.h12 + inv(1, 1) * out.h22;
  const double tangential = X.dot(cross(p, Y));
  out.slant_cos = std::abs(tangential);
  out.convention = c;
  return out;
}

}  // namespace

Regularity regularity(const ImOctonion& p) {
  const double x2 = p[1], x3 = p[2], y0 = p[3], y1 = p[4], y2 = p[5], y3 = p[6];
  const double a = x2 * x2 + x3 * x3 + y0 * y0 + y1 * y1;
  const double b = x2 * x2 + x3 * x3 + y2 * y2 + y3 * y3;
  const double g = y0 * y0 + y1 * y1 + y2 * y2 + y3 * y3;
  return {a, b, g, std::min({a, b, g}) > kRegularityTol};
}

OrbitPoint::OrbitPoint(const ImOctonion& p) : p_(p), reg_(s6::regularity(p)) {
  const double err = p.squaredNorm() - 1.0;
  if (std::abs(err) > 1e-12) {
    throw std::invalid_argument(fmt::format("OrbitPoint: |p|^2 - 1 = {:.3e}", err));
  }
}

OrbitPoint OrbitPoint::normalized(const ImOctonion& p) {
  const double n = p.norm();
  if (!(n > 0.0)) throw std::invalid_argument("OrbitPoint: zero vector");
  return OrbitPoint(p / n);
}

void require_regular(const OrbitPoint& p) {
  const Regularity& r = p.regularity();
  if (!r.regular) {
    throw std::invalid_argument(fmt::format(
        "orbit is not 2-dimensional: alpha = {:.6g}, beta = {:.6g}, gamma = {:.6g}", r.alpha,
        r.beta, r.gamma));
  }
}

ImOctonion printed_x_bar(const ImOctonion& p) {
  ImOctonion v;
  v << 0.0, -p[2], p[1], 0.0, 0.0, p[6], -p[5];
  return v;
}

ImOctonion printed_y_bar(const ImOctonion& p) {
  ImOctonion v;
  v << 0.0, 0.0, 0.0, -p[4], p[3], -p[6], p[5];
  return v;
}

OrbitTangent tangent_frame(const OrbitPoint& p, FlowConvention c) {
  require_regular(p);
  const Generators& g = generators(c);
  OrbitTangent t;
  t.x_bar = g.A * p.coords();
  t.y_bar = g.B * p.coords();
  std::tie(t.X, t.Y) = orthonormalise(t.x_bar, t.y_bar);
  return t;
}

double orbit_slant_cos(const OrbitPoint& p, FlowConvention c) {
  require_regular(p);
  return slant_value_unchecked(p.coords(), generators(c));
}

double orbit_slant_angle(const OrbitPoint& p, FlowConvention c) {
  require_regular(p);
  return slant_angle_unchecked(p.coords(), generators(c));
}

double printed_slant_cos(const OrbitPoint& p) {
  require_regular(p);
  const ImOctonion& v = p.coords();
  const double x2 = v[1], x3 = v[2], y0 = v[3], y1 = v[4], y2 = v[5], y3 = v[6];
  const Regularity& r = p.regularity();
  const double q = x2 * x2 + x3 * x3;
  const double num = x3 * y1 * y2 - x2 * y0 * y2 - x2 * y1 * y3 - x3 * y0 * y3;
  return std::abs(num) / std::sqrt(r.alpha * r.beta - q * q);
}

OrbitPoint param_to_point(const OrbitParam& q) {
  const double R = std::sqrt(std::max(0.0, 1.0 - q.x1 * q.x1));
  ImOctonion v;
  v << q.x1, 0.0, R * std::sin(q.a) * std::cos(q.b), 0.0, R * std::sin(q.b),
      R * std::cos(q.a) * std::sin(q.c) * std::cos(q.b),
      R * std::cos(q.a) * std::cos(q.c) * std::cos(q.b);
  return OrbitPoint(v);
}

double slant_cos_param(const OrbitParam& q) {
  const double sb = std::sin(q.b), cb = std::cos(q.b), s2a = std::sin(2.0 * q.a);
  const double den = 2.0 * std::sqrt(4.0 * sb * sb + cb * cb * s2a * s2a);
  if (!(den > 0.0)) {
    throw std::domain_error("slant_cos_param: closed form undefined (sin b = sin 2a = 0)");
  }
  const double R = std::sqrt(std::max(0.0, 1.0 - q.x1 * q.x1));
  return std::sin(2.0 * q.b) * s2a / den * R * std::sin(q.c);
}

OrbitPoint minimal_family_point(double c) {
  ImOctonion v;
  v << 0.0, 0.0, 1.0, 0.0, 1.0, std::cos(c), std::sin(c);
  return OrbitPoint(v / std::sqrt(3.0));
}

ImOctonion printed_mean_curvature(const OrbitPoint& p) {
  const ImOctonion& v = p.coords();
  if (std::abs(v[1]) > 1e-12 || std::abs(v[3]) > 1e-12) {
    throw std::invalid_argument("printed_mean_curvature: point is off the slice x2 = y0 = 0");
  }
  const double x1 = v[0], x3 = v[2], y1 = v[4], y2 = v[5], y3 = v[6];
  const double w = y2 * y2 + y3 * y3;
  const double D = (y1 * y1 + w) * x3 * x3 + y1 * y1 * w;
  if (!(D > 1e-12)) {
    throw std::invalid_argument(fmt::format("printed_mean_curvature: D = {:.3e} vanishes", D));
  }
  auto N = [w](double u, double t) {
    return u * ((2.0 * u * u + 2.0 * w - 1.0) * t * t + (2.0 * u * u - 1.0) * w);
  };
  const double q = (x3 * x3 + y1 * y1) / D;
  ImOctonion H;
  H << 2.0 * x1, 0.0, N(x3, y1) / D, 0.0, N(y1, x3) / D, y2 * (2.0 - q), y3 * (2.0 - q);
  return H;
}

SliceMove to_slice(const OrbitPoint& p, FlowConvention c) {
  // Both conventions turn (e2, e3) by +t and (e4, e5) by -s.
  const ImOctonion& v = p.coords();
  const double t = std::atan2(v[1], v[2]);
  const double s = -std::atan2(v[3], v[4]);
  ImOctonion img = torus_flow(t, s, c)(v);
  img[1] = 0.0;
  img[3] = 0.0;
  return {t, s, OrbitPoint::normalized(img)};
}

OrbitGeometry orbit_geometry(const OrbitPoint& p, FlowConvention c) {
  require_regular(p);
  return geometry_unchecked(p.coords(), c);
}

double metric_spread(const OrbitPoint& p, int n, FlowConvention c) {
  require_regular(p);
  const Generators& g = generators(c);
  auto metric = [&](const ImOctonion& x) {
    const ImOctonion a = g.A * x, b = g.B * x;
    return Eigen::Vector3d(a.dot(a), a.dot(b), b.dot(b));
  };
  const Eigen::Vector3d ref = metric(p.coords());
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const TorusFlow f(kTwoPi * i / n, kTwoPi * j / n, c);
      worst = std::max(worst, (metric(f(p.coords())) - ref).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

Fullness linear_fullness(const OrbitPoint& p, int n_samples, FlowConvention c) {
  if (n_samples < 50) throw std::invalid_argument("linear_fullness: need at least 50 samples");
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_samples))));
  const int total = side * side;
  Eigen::Matrix<double, Eigen::Dynamic, 7> cloud(total, 7);
  double deviation = 0.0;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const TorusFlow f(kTwoPi * i / side, kTwoPi * j / side, c);
      const ImOctonion x = f(p.coords());
      cloud.row(i * side + j) = x.transpose();
      deviation = std::max(deviation, std::abs(x[0] - p.x1()));
    }
  }
  const Eigen::Matrix<double, 1, 7> mean = cloud.colwise().mean();
  cloud.rowwise() -= mean;
  cloud /= std::sqrt(static_cast<double>(total));
  const auto sv = Eigen::JacobiSVD<Eigen::MatrixXd>(cloud).singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv[k] > 1e-8 ? 1 : 0;
  return {rank, p.x1(), deviation};
}

// ---------------------------------------------------------------------------

std::size_t ScanGrid::size() const {
  return static_cast<std::size_t>(x1.n) * static_cast<std::size_t>(a.n) *
         static_cast<std::size_t>(b.n) * static_cast<std::size_t>(c.n);
}

ScanGrid default_grid(int n) {
  const double h = std::numbers::pi / 2;
  return {{-1.0, 1.0, n}, {-h, h, n}, {-h, h, n}, {0.0, kTwoPi, n}};
}

ScanRow scan_node(const OrbitParam& q, FlowConvention c) {
  const OrbitPoint p = param_to_point(q);
  ScanRow row{q, p.regular(), 0.0, std::numbers::pi / 2, kNaN, kNaN};
  if (p.regular()) {
    const OrbitGeometry g = geometry_unchecked(p.coords(), c);
    row.slant_cos = g.slant_cos;
    row.slant_angle = slant_angle_unchecked(p.coords(), generators(c));
    row.mean_H_norm = g.mean_H.norm();
    row.gauss_K = g.gauss_K;
  } else {
    // Degenerate orbits: the closed form where defined; 0/0 is read as 0.
    try {
      row.slant_cos = std::abs(slant_cos_param(q));
    } catch (const std::domain_error&) {
      row.slant_cos = 0.0;
    }
    row.slant_angle = std::acos(std::min(1.0, row.slant_cos));
  }
  return row;
}

void slant_scan(const ScanGrid& grid, const std::function<void(const ScanRow&)>& sink,
                FlowConvention c) {
  for (const ScanAxis* ax : {&grid.x1, &grid.a, &grid.b, &grid.c}) {
    const bool single = ax->n == 1 && ax->hi == ax->lo;
    if (ax->n < 1 || !(ax->hi > ax->lo || single)) {
      throw std::invalid_argument("slant_scan: malformed axis");
    }
  }
  for (int i = 0; i < grid.x1.n; ++i)
    for (int j = 0; j < grid.a.n; ++j)
      for (int k = 0; k < grid.b.n; ++k)
        for (int l = 0; l < grid.c.n; ++l)
          sink(scan_node({grid.x1.node(i), grid.a.node(j), grid.b.node(k), grid.c.node(l)}, c));
}

std::vector<ScanRow> slant_scan(const ScanGrid& grid, FlowConvention c) {
  std::vector<ScanRow> rows;
  rows.reserve(grid.size());
  slant_scan(grid, [&rows](const ScanRow& r) { rows.push_back(r); }, c);
  return rows;
}

void ScanAccumulator::add_value(double v) {
  const int bin = std::clamp(static_cast<int>(std::floor(v / 0.01)), 0, kSlantBins - 1);
  if (s_.bins[static_cast<std::size_t>(bin)]++ == 0) ++s_.bins_populated;
}

void ScanAccumulator::add(const ScanRow& row) {
  ++s_.rows;
  add_value(row.slant_cos);
  if (!have_max_ || row.slant_cos > s_.grid_max) {
    s_.grid_max = row.slant_cos;
    s_.grid_argmax = row.q;
    have_max_ = true;
  }
  if (row.regular) {
    ++s_.regular_rows;
    min_H_ = std::min(min_H_, row.mean_H_norm);
    s_.max_abs_K = std::max(s_.max_abs_K, std::abs(row.gauss_K));
  }
}

ScanSummary ScanAccumulator::finish(FlowConvention c) const {
  ScanSummary out = s_;
  out.min_H_norm = s_.regular_rows > 0 ? min_H_ : kNaN;
  out.refined_max = out.grid_max;
  out.refined_argmax = out.grid_argmax;
  if (have_max_ && out.grid_max > 0.0) {
    const auto [q, v] = refine_max(out.grid_argmax, {0.05, 0.05, 0.05, 0.05}, c);
    if (v > out.refined_max) {
      out.refined_max = v;
      out.refined_argmax = q;
    }
  }
  return out;
}

ScanSummary summarize(const ScanGrid& grid, FlowConvention c) {
  ScanAccumulator acc;
  slant_scan(grid, [&acc](const ScanRow& r) { acc.add(r); }, c);
  return acc.finish(c);
}

std::pair<OrbitParam, double> refine_max(const OrbitParam& start, const OrbitParam& step,
                                         FlowConvention c) {
  const Generators& g = generators(c);
  auto value = [&g](const OrbitParam& q) {
    if (std::abs(q.x1) > 1.0) return -1.0;
    const OrbitPoint p = param_to_point(q);
    return p.regular() ? slant_value_unchecked(p.coords(), g) : -1.0;
  };
  std::array<double, 4> x{start.x1, start.a, start.b, start.c};
  std::array<double, 4> h{step.x1, step.a, step.b, step.c};
  auto as_param = [](const std::array<double, 4>& v) { return OrbitParam{v[0], v[1], v[2], v[3]}; };
  double best = value(as_param(x));
  while (*std::max_element(h.begin(), h.end()) > 1e-11) {
    bool moved = false;
    for (std::size_t k = 0; k < 4; ++k) {
      for (double dir : {1.0, -1.0}) {
        auto y = x;
        y[k] += dir * h[k];
        const double v = value(as_param(y));
        if (v > best) {
          best = v;
          x = y;
          moved = true;
        }
      }
    }
    if (!moved)
      for (double& hk : h) hk *= 0.5;
  }
  return {as_param(x), best};
}

}  // namespace s6
