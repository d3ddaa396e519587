#ifndef S6_G2_HPP
#define S6_G2_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "s6/octonion.hpp"

namespace s6 {

/// Verdict of a structural test together with the largest residual seen.
struct Check {
  bool passes;
  double residual;
};

/// E_[i,j] = (E_ij - E_ji) / 2 for 1-based i, j.
Mat7 so7_generator(int i, int j);

/// Leibniz rule D(xy) = D(x)y + xD(y) on every ordered pair of imaginary basis
/// elements. Matrices whose entries are all half-integers are checked in exact
/// integer arithmetic; anything else falls back to binary64 with tolerance 1e-12.
Check is_derivation(const Mat7& D);

/// Orthogonality and M(e_i)M(e_j) = M(e_i e_j) on all 49 pairs.
Check is_automorphism(const Mat7& M, double tol = 1e-10);

/// An orthogonal map of Im O preserving octonion multiplication.
class G2Automorphism {
 public:
  G2Automorphism() : m_(Mat7::Identity()) {}
  /// Wraps `m` after running is_automorphism; throws std::invalid_argument on failure.
  static G2Automorphism checked(const Mat7& m, double tol = 1e-10);

  const Mat7& matrix() const { return m_; }
  ImOctonion operator()(const ImOctonion& x) const { return m_ * x; }
  G2Automorphism inverse() const { return G2Automorphism(m_.transpose()); }
  friend G2Automorphism operator*(const G2Automorphism& a, const G2Automorphism& b) {
    return G2Automorphism(a.m_ * b.m_);
  }

 private:
  explicit G2Automorphism(const Mat7& m) : m_(m) {}
  friend G2Automorphism automorphism_from_basic_triple(const ImOctonion&, const ImOctonion&,
                                                       const ImOctonion&, double);
  Mat7 m_;
};

/// The unique g with g(e1) = h1, g(e2) = h2, g(e4) = h3. Requires (h1, h2, h3)
/// orthonormal with h3 ⊥ h1 h2; violations throw std::invalid_argument naming
/// the offending inner product.
G2Automorphism automorphism_from_basic_triple(const ImOctonion& h1, const ImOctonion& h2,
                                              const ImOctonion& h3, double tol = 1e-8);

struct NamedGenerator {
  std::string name;
  Mat7 matrix;
  Check derivation;
};

/// The fourteen printed combinations P0..P6, Q0..Q6 of E_[i,j], each audited
/// with is_derivation. Generators that fail are reported, not corrected.
std::vector<NamedGenerator> g2_standard_basis();

Mat7 cartan_p0();
Mat7 cartan_q0();

/// exp(tP0) turns its planes by t/2 under the printed normalisation; FULL
/// rescales so that torus_flow(t, s) turns the (e2, e3) plane by exactly t.
enum class AngleConvention { half, full };
inline constexpr AngleConvention kParameterConvention = AngleConvention::full;
std::string_view to_string(AngleConvention c);

/// exponential: exp(2tP0 + 2sQ0).
/// printed_action: the printed closed-form action with its (y0, y1) block read
/// as y0 cos s + y1 sin s, y1 cos s - y0 sin s.
enum class FlowConvention { exponential, printed_action };
std::string_view to_string(FlowConvention c);

/// Counter-clockwise rotation angles of the (e2,e3), (e4,e5), (e6,e7) planes
/// per unit t and per unit s.
struct TorusWeights {
  std::array<int, 3> t;
  std::array<int, 3> s;
};
TorusWeights torus_weights(FlowConvention c);

/// Generator of the t- or s-direction of the flow (integer skew matrix).
Mat7 torus_generator_t(FlowConvention c = FlowConvention::exponential);
Mat7 torus_generator_s(FlowConvention c = FlowConvention::exponential);

/// Orientation signs n with n . w = 0 for the weights w of every torus
/// derivation preserving the three coordinate planes; read off the table.
std::array<int, 3> multiplicative_orientation();

/// The element g_{t,s}, built in closed form as three plane rotations fixing e1.
class TorusFlow {
 public:
  TorusFlow(double t, double s, FlowConvention c = FlowConvention::exponential);

  double t() const { return t_; }
  double s() const { return s_; }
  FlowConvention convention() const { return conv_; }
  const Mat7& matrix() const { return m_; }
  ImOctonion operator()(const ImOctonion& x) const { return m_ * x; }

 private:
  double t_;
  double s_;
  FlowConvention conv_;
  Mat7 m_;
};

inline TorusFlow torus_flow(double t, double s, FlowConvention c = FlowConvention::exponential) {
  return TorusFlow(t, s, c);
}

/// Numerical matrix exponential (Pade scaling-and-squaring).
Mat7 matrix_exponential(const Mat7& A);

}  // namespace s6

#endif  // S6_G2_HPP
