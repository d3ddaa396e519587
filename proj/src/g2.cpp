#include "s6/g2.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>
#include <unsupported/Eigen/MatrixFunctions>

namespace s6 {
namespace {

// Octonion with D(e0) = 0 applied to an integer-coefficient vector.
IntOctonion apply_exact(const Eigen::Matrix<std::int64_t, 7, 7>& D, const IntOctonion& x) {
  IntOctonion r{};
  for (int i = 0; i < 7; ++i) {
    std::int64_t v = 0;
    for (int j = 0; j < 7; ++j) v += D(i, j) * x[static_cast<std::size_t>(j + 1)];
    r[static_cast<std::size_t>(i + 1)] = v;
  }
  return r;
}

Octonion apply(const Mat7& D, const Octonion& x) {
  Octonion r = Octonion::imaginary(D * x.im());
  r[0] = 0.0;
  return r;
}

Check derivation_exact(const Eigen::Matrix<std::int64_t, 7, 7>& twice) {
  std::int64_t worst = 0;
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      const IntOctonion ei = basis_exact(i), ej = basis_exact(j);
      const IntOctonion lhs = apply_exact(twice, multiply_exact(ei, ej));
      const IntOctonion a = multiply_exact(apply_exact(twice, ei), ej);
      const IntOctonion b = multiply_exact(ei, apply_exact(twice, ej));
      std::int64_t sq = 0;
      for (std::size_t k = 0; k < 8; ++k) {
        const std::int64_t d = lhs[k] - a[k] - b[k];
        sq += d * d;
      }
      worst = std::max(worst, sq);
    }
  }
  // Residuals were computed for 2D; report them for D.
  return {worst == 0, 0.5 * std::sqrt(static_cast<double>(worst))};
}

void set_rotation(Mat7& m, int i, int j, double angle) {
  // Counter-clockwise in the (e_i, e_j) plane: e_i -> cos e_i + sin e_j.
  const double c = std::cos(angle), s = std::sin(angle);
  m(i - 1, i - 1) = c;
  m(j - 1, j - 1) = c;
  m(j - 1, i - 1) = s;
  m(i - 1, j - 1) = -s;
}

Mat7 plane_generator(const std::array<int, 3>& w) {
  Mat7 m = Mat7::Zero();
  constexpr int planes[3][2] = {{2, 3}, {4, 5}, {6, 7}};
  for (int k = 0; k < 3; ++k) {
    const auto [i, j] = planes[k];
    m(j - 1, i - 1) = w[static_cast<std::size_t>(k)];
    m(i - 1, j - 1) = -w[static_cast<std::size_t>(k)];
  }
  return m;
}

}  // namespace

Mat7 so7_generator(int i, int j) {
  if (i < 1 || i > 7 || j < 1 || j > 7 || i == j) {
    throw std::invalid_argument(fmt::format("so7_generator: bad index pair ({}, {})", i, j));
  }
  Mat7 m = Mat7::Zero();
  m(i - 1, j - 1) += 0.5;
  m(j - 1, i - 1) -= 0.5;
  return m;
}

Check is_derivation(const Mat7& D) {
  const Mat7 twice = 2.0 * D;
  if ((twice.array() == twice.array().round()).all() && twice.cwiseAbs().maxCoeff() < 1e9) {
    return derivation_exact(twice.array().round().cast<std::int64_t>().matrix());
  }
  double worst = 0.0;
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      const Octonion ei = Octonion::basis(i), ej = Octonion::basis(j);
      const Octonion r = apply(D, ei * ej) - apply(D, ei) * ej - ei * apply(D, ej);
      worst = std::max(worst, norm(r));
    }
  }
  return {worst < 1e-12, worst};
}

Check is_automorphism(const Mat7& M, double tol) {
  double worst = (M.transpose() * M - Mat7::Identity()).cwiseAbs().maxCoeff();
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      const Octonion prod = Octonion::basis(i) * Octonion::basis(j);
      Octonion image = Octonion::imaginary(M * prod.im());
      image[0] = prod.re();
      const Octonion lhs = multiply(ImOctonion(M.col(i - 1)), ImOctonion(M.col(j - 1)));
      worst = std::max(worst, (lhs - image).max_abs());
    }
  }
  return {worst < tol, worst};
}

G2Automorphism G2Automorphism::checked(const Mat7& m, double tol) {
  const Check c = is_automorphism(m, tol);
  if (!c.passes) {
    throw std::invalid_argument(
        fmt::format("matrix is not an octonion automorphism (residual {:.3e})", c.residual));
  }
  return G2Automorphism(m);
}

G2Automorphism automorphism_from_basic_triple(const ImOctonion& h1, const ImOctonion& h2,
                                              const ImOctonion& h3, double tol) {
  const std::pair<const char*, double> conditions[] = {
      {"<h1,h1> - 1", h1.squaredNorm() - 1.0}, {"<h2,h2> - 1", h2.squaredNorm() - 1.0},
      {"<h3,h3> - 1", h3.squaredNorm() - 1.0}, {"<h1,h2>", h1.dot(h2)},
      {"<h1,h3>", h1.dot(h3)},                 {"<h2,h3>", h2.dot(h3)},
  };
  for (const auto& [what, value] : conditions) {
    if (std::abs(value) > tol) {
      throw std::invalid_argument(
          fmt::format("not a basic triple: {} = {:.6g}", what, value));
    }
  }
  const ImOctonion h12 = cross(h1, h2);
  const double d = h3.dot(h12);
  if (std::abs(d) > tol) {
    throw std::invalid_argument(fmt::format("not a basic triple: <h3, h1 h2> = {:.6g}", d));
  }
  Mat7 m;
  m.col(0) = h1;
  m.col(1) = h2;
  m.col(2) = h12;
  m.col(3) = h3;
  m.col(4) = cross(h1, h3);
  m.col(5) = cross(h2, h3);
  m.col(6) = cross(h12, h3);
  return G2Automorphism(m);
}

std::vector<NamedGenerator> g2_standard_basis() {
  struct Spec {
    const char* name;
    int a[2];
    int b[2];
  };
  static constexpr Spec printed[] = {
      {"P0", {3, 2}, {6, 7}}, {"Q0", {4, 5}, {6, 7}}, {"P1", {1, 3}, {5, 7}},
      {"Q1", {6, 4}, {5, 7}}, {"P2", {2, 1}, {7, 4}}, {"Q2", {6, 5}, {7, 4}},
      {"P3", {1, 4}, {7, 2}}, {"Q3", {3, 6}, {7, 2}}, {"P4", {5, 1}, {3, 7}},
      {"Q4", {2, 6}, {3, 7}}, {"P5", {1, 7}, {3, 5}}, {"Q5", {4, 2}, {3, 5}},
      {"P6", {6, 1}, {1, 3}}, {"Q6", {5, 2}, {1, 3}},
  };
  std::vector<NamedGenerator> out;
  out.reserve(14);
  for (const auto& g : printed) {
    const Mat7 m = so7_generator(g.a[0], g.a[1]) + so7_generator(g.b[0], g.b[1]);
    out.push_back({g.name, m, is_derivation(m)});
  }
  return out;
}

Mat7 cartan_p0() { return so7_generator(3, 2) + so7_generator(6, 7); }
Mat7 cartan_q0() { return so7_generator(4, 5) + so7_generator(6, 7); }

std::string_view to_string(AngleConvention c) {
  return c == AngleConvention::half ? "half" : "full";
}

std::string_view to_string(FlowConvention c) {
  return c == FlowConvention::exponential ? "exponential" : "printed_action";
}

TorusWeights torus_weights(FlowConvention c) {
  // exponential: 2P0 turns (e2,e3) by +1 and (e6,e7) by -1; 2Q0 turns
  // (e4,e5) and (e6,e7) by -1 each.
  if (c == FlowConvention::exponential) return {{1, 0, -1}, {0, -1, -1}};
  return {{1, 0, -1}, {0, -1, 1}};
}

Mat7 torus_generator_t(FlowConvention c) { return plane_generator(torus_weights(c).t); }
Mat7 torus_generator_s(FlowConvention c) { return plane_generator(torus_weights(c).s); }

std::array<int, 3> multiplicative_orientation() {
  std::vector<std::array<int, 3>> weights;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c)
        if (is_derivation(plane_generator({a, b, c})).passes) weights.push_back({a, b, c});
  for (int x : {1, -1})
    for (int y : {1, -1})
      for (int z : {1, -1}) {
        bool all = !weights.empty();
        for (const auto& w : weights) all = all && (x * w[0] + y * w[1] + z * w[2] == 0);
        if (all && x == 1) return {x, y, z};
      }
  throw std::logic_error("multiplicative_orientation: no linear relation among torus weights");
}

TorusFlow::TorusFlow(double t, double s, FlowConvention c)
    : t_(t), s_(s), conv_(c), m_(Mat7::Identity()) {
  const TorusWeights w = torus_weights(c);
  const double scale = kParameterConvention == AngleConvention::full ? 1.0 : 0.5;
  constexpr int planes[3][2] = {{2, 3}, {4, 5}, {6, 7}};
  for (std::size_t k = 0; k < 3; ++k) {
    const double angle = scale * (w.t[k] * t + w.s[k] * s);
    set_rotation(m_, planes[k][0], planes[k][1], angle);
  }
}

Mat7 matrix_exponential(const Mat7& A) { return A.exp(); }

}  // namespace s6
