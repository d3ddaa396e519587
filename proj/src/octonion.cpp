#include "s6/octonion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace s6 {
namespace {

using IntQuat = std::array<std::int64_t, 4>;

constexpr IntQuat qmul(const IntQuat& a, const IntQuat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

constexpr IntQuat qconj(const IntQuat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

constexpr IntOctonion cayley_dickson(const IntOctonion& x, const IntOctonion& y) {
  const IntQuat q{x[0], x[1], x[2], x[3]}, r{x[4], x[5], x[6], x[7]};
  const IntQuat s{y[0], y[1], y[2], y[3]}, t{y[4], y[5], y[6], y[7]};
  const IntQuat a = qmul(q, s), b = qmul(qconj(t), r);
  const IntQuat c = qmul(t, q), d = qmul(r, qconj(s));
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3],
          c[0] + d[0], c[1] + d[1], c[2] + d[2], c[3] + d[3]};
}

constexpr IntOctonion unit(int i) {
  IntOctonion e{};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

constexpr StructureTable generate_table() {
  StructureTable t{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const IntOctonion p = cayley_dickson(unit(i), unit(j));
      for (int k = 0; k < 8; ++k) {
        if (p[static_cast<std::size_t>(k)] != 0) {
          t[i][j] = {k, static_cast<int>(p[static_cast<std::size_t>(k)])};
        }
      }
    }
  }
  return t;
}

constexpr StructureTable kGenerated = generate_table();

// Row e_i, column e_j: signed index of the product. Diagonal entries (-e0)
// are stored as 0.
constexpr int kPrinted[7][7] = {
    {0, 3, -2, 5, -4, -7, 6},
    {-3, 0, 1, 6, 7, -4, -5},
    {2, -1, 0, 7, -6, 5, -4},
    {-5, -6, -7, 0, 1, 2, 3},
    {4, -7, 6, -1, 0, -3, 2},
    {7, 4, -5, -2, 3, 0, -1},
    {-6, 5, 4, -3, -2, 1, 0},
};

StructureTable build_printed() {
  StructureTable t{};
  for (int i = 0; i < 8; ++i) {
    t[0][i] = {i, 1};
    t[i][0] = {i, 1};
  }
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      const int v = kPrinted[i - 1][j - 1];
      t[i][j] = (i == j) ? SignedUnit{0, -1} : SignedUnit{v < 0 ? -v : v, v < 0 ? -1 : 1};
    }
  }
  return t;
}

}  // namespace

const StructureTable& structure_table() { return kGenerated; }

const StructureTable& printed_table() {
  static const StructureTable t = build_printed();
  return t;
}

Octonion Octonion::basis(int i) {
  Octonion o;
  o[i] = 1.0;
  return o;
}

Octonion Octonion::real(double a) {
  Octonion o;
  o[0] = a;
  return o;
}

Octonion Octonion::imaginary(const ImOctonion& x) {
  Octonion o;
  for (int i = 0; i < 7; ++i) o[i + 1] = x[i];
  return o;
}

ImOctonion Octonion::im() const {
  ImOctonion v;
  for (int i = 0; i < 7; ++i) v[i] = c_[static_cast<std::size_t>(i + 1)];
  return v;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

Octonion& Octonion::operator*=(double a) {
  for (auto& v : c_) v *= a;
  return *this;
}

double Octonion::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Octonion operator*(const Octonion& x, const Octonion& y) {
  const auto& t = kGenerated;
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      const SignedUnit u = t[i][j];
      r[u.index] += u.sign * x[i] * y[j];
    }
  }
  return r;
}

Octonion multiply(const Octonion& x, const Octonion& y) { return x * y; }

Octonion conjugate(const Octonion& x) {
  Octonion r = -x;
  r[0] = x[0];
  return r;
}

double inner(const Octonion& x, const Octonion& y) {
  return 0.5 * (x * conjugate(y) + y * conjugate(x)).re();
}

double norm(const Octonion& x) { return std::sqrt(inner(x, x)); }

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return (x * y) * z - x * (y * z);
}

Octonion multiply(const ImOctonion& x, const ImOctonion& y) {
  return Octonion::imaginary(x) * Octonion::imaginary(y);
}

ImOctonion cross(const ImOctonion& x, const ImOctonion& y) {
  return 0.5 * (multiply(x, y) - multiply(y, x)).im();
}

ImOctonion associator(const ImOctonion& x, const ImOctonion& y, const ImOctonion& z) {
  const Octonion X = Octonion::imaginary(x), Y = Octonion::imaginary(y), Z = Octonion::imaginary(z);
  return associator(X, Y, Z).im();
}

double assoc_form(const ImOctonion& x, const ImOctonion& y, const ImOctonion& z) {
  return x.dot(cross(y, z));
}

ImOctonion j_structure(const ImOctonion& p, const ImOctonion& X, double tol) {
  const double np = p.norm();
  if (std::abs(np - 1.0) > tol) {
    throw std::invalid_argument("j_structure: base point is not on S^6 (|p| = " +
                                std::to_string(np) + ")");
  }
  const double d = p.dot(X);
  if (std::abs(d) > tol * std::max(1.0, X.norm())) {
    throw std::invalid_argument("j_structure: vector is not tangent at p (<p,X> = " +
                                std::to_string(d) + ")");
  }
  return cross(p, X);
}

Mat7 left_cross_matrix(const ImOctonion& x) {
  Mat7 m;
  for (int j = 0; j < 7; ++j) m.col(j) = cross(x, basis7(j + 1));
  return m;
}

ImOctonion basis7(int i) {
  if (i < 1 || i > 7) throw std::out_of_range("basis7: index must be in 1..7");
  return ImOctonion::Unit(i - 1);
}

IntOctonion multiply_exact(const IntOctonion& x, const IntOctonion& y) {
  return cayley_dickson(x, y);
}

IntOctonion basis_exact(int i) { return unit(i); }

}  // namespace s6
