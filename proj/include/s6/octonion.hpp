#ifndef S6_OCTONION_HPP
#define S6_OCTONION_HPP

#include <array>
#include <cstdint>

#include <Eigen/Dense>

namespace s6 {

/// Imaginary octonions Im O = R^7 in the basis e1..e7 (index 0 holds e1).
using ImOctonion = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

/// Basis product e_i e_j = sign * e_index, i, j, index in 0..7.
struct SignedUnit {
  int index;
  int sign;
  friend constexpr bool operator==(SignedUnit, SignedUnit) = default;
};

using StructureTable = std::array<std::array<SignedUnit, 8>, 8>;

/// Table generated from (q,r)(s,t) = (qs - conj(t) r, t q + r conj(s)) over
/// integer quaternions, with e0..e7 = (1,0),(i,0),(j,0),(k,0),(0,1),(0,i),(0,j),(0,k).
const StructureTable& structure_table();

/// The 7x7 imaginary block of the multiplication table as printed in the
/// source literature, row e_i times column e_j. Kept separately from the
/// generated table so that the two can be compared.
const StructureTable& printed_table();

/// Element of the Cayley algebra, coordinates in e0..e7.
class Octonion {
 public:
  constexpr Octonion() = default;
  constexpr explicit Octonion(const std::array<double, 8>& c) : c_(c) {}
  static Octonion basis(int i);
  static Octonion real(double a);
  /// Embeds x as 0*e0 + x.
  static Octonion imaginary(const ImOctonion& x);

  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::array<double, 8>& coords() const { return c_; }

  double re() const { return c_[0]; }
  ImOctonion im() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(double a);

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(Octonion a, double k) { return a *= k; }
  friend Octonion operator*(double k, Octonion a) { return a *= k; }
  friend Octonion operator-(Octonion a) { return a *= -1.0; }
  friend Octonion operator*(const Octonion& x, const Octonion& y);

  double max_abs() const;

 private:
  std::array<double, 8> c_{};
};

Octonion multiply(const Octonion& x, const Octonion& y);
Octonion conjugate(const Octonion& x);
/// e0-component of (x conj(y) + y conj(x)) / 2.
double inner(const Octonion& x, const Octonion& y);
double norm(const Octonion& x);
/// (xy)z - x(yz)
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);

/// Product of two imaginary octonions, returned in full (its real part is -<x,y>).
Octonion multiply(const ImOctonion& x, const ImOctonion& y);
/// Imaginary part of xy, which equals (xy - yx)/2 for imaginary x, y.
ImOctonion cross(const ImOctonion& x, const ImOctonion& y);
ImOctonion associator(const ImOctonion& x, const ImOctonion& y, const ImOctonion& z);
/// phi(x, y, z) = <x, yz>
double assoc_form(const ImOctonion& x, const ImOctonion& y, const ImOctonion& z);

/// J_p(X) = p X = p x X on T_p S^6. Throws std::invalid_argument unless
/// |p| = 1 and <p, X> = 0 within `tol`.
ImOctonion j_structure(const ImOctonion& p, const ImOctonion& X, double tol = 1e-10);

/// Matrix of y -> x y restricted to Im O (valid when x is imaginary and y ⊥ x).
Mat7 left_cross_matrix(const ImOctonion& x);

ImOctonion basis7(int i);  // e_i, i in 1..7

// Exact arithmetic over integer coordinates.
using IntOctonion = std::array<std::int64_t, 8>;
IntOctonion multiply_exact(const IntOctonion& x, const IntOctonion& y);
IntOctonion basis_exact(int i);

}  // namespace s6

#endif  // S6_OCTONION_HPP
