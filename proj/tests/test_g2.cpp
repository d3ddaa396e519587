#include <doctest.h>

#include <cmath>
#include <numbers>

#include "s6/g2.hpp"
#include "s6/sampling.hpp"

using namespace s6;

namespace {

ImOctonion e(int i) { return basis7(i); }

double dist(const ImOctonion& a, const ImOctonion& b) { return (a - b).cwiseAbs().maxCoeff(); }
double dist(const Mat7& a, const Mat7& b) { return (a - b).cwiseAbs().maxCoeff(); }

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("so(7) generators") {
  const Mat7 E = so7_generator(1, 2);
  CHECK(E(0, 1) == 0.5);
  CHECK(E(1, 0) == -0.5);
  CHECK(dist(E, Mat7(-E.transpose())) == 0.0);
}

TEST_CASE("derivation test") {
  const Check zero = is_derivation(Mat7::Zero());
  CHECK(zero.passes);
  CHECK(zero.residual == 0.0);
  CHECK_FALSE(is_derivation(so7_generator(1, 2)).passes);
  CHECK(is_derivation(cartan_q0()).passes);
  CHECK(is_derivation(cartan_q0()).residual == 0.0);
  // The printed P0 fails Leibniz against the printed table.
  const Check p0 = is_derivation(cartan_p0());
  CHECK_FALSE(p0.passes);
  CHECK(p0.residual == 1.0);

  Sampler rng(21);
  Mat7 R;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) R(i, j) = rng.normal();
  const Check generic = is_derivation(R - R.transpose());
  CHECK_FALSE(generic.passes);
  CHECK(generic.residual > 1e-3);
}

TEST_CASE("derivations preserving the coordinate planes") {
  // D = a E(23) + b E(45) + c E(67) with ccw orientation is a derivation iff
  // n . (a, b, c) = 0 for the orientation n read off the table.
  const std::array<int, 3> n = multiplicative_orientation();
  auto D = [](int a, int b, int c) {
    Mat7 m = Mat7::Zero();
    m(2, 1) = a, m(1, 2) = -a;
    m(4, 3) = b, m(3, 4) = -b;
    m(6, 5) = c, m(5, 6) = -c;
    return m;
  };
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        CHECK(is_derivation(D(a, b, c)).passes == (n[0] * a + n[1] * b + n[2] * c == 0));
}

TEST_CASE("printed g2 basis audit") {
  const auto basis = g2_standard_basis();
  REQUIRE(basis.size() == 14);
  CHECK(basis[0].name == "P0");
  CHECK(basis[1].name == "Q0");
  for (const auto& g : basis) CHECK(dist(g.matrix, Mat7(-g.matrix.transpose())) == 0.0);
}

TEST_CASE("automorphism test") {
  CHECK(is_automorphism(Mat7::Identity()).passes);
  CHECK_FALSE(is_automorphism(-Mat7::Identity()).passes);
  Sampler rng(22);
  for (int k = 0; k < 20; ++k) {
    const double tau = rng.uniform(-10, 10);
    CHECK(is_automorphism(matrix_exponential(tau * cartan_q0())).passes);
  }
  CHECK_THROWS_AS(G2Automorphism::checked(-Mat7::Identity()), std::invalid_argument);
}

TEST_CASE("basic triples") {
  const G2Automorphism id = automorphism_from_basic_triple(e(1), e(2), e(4));
  CHECK(dist(id.matrix(), Mat7::Identity()) == 0.0);

  const G2Automorphism g = automorphism_from_basic_triple(e(2), e(3), e(5));
  const ImOctonion images[7] = {e(2), e(3), e(1), e(5), e(7), -e(6), -e(4)};
  for (int i = 0; i < 7; ++i) CHECK(dist(g(e(i + 1)), images[i]) == 0.0);

  CHECK_THROWS_AS(automorphism_from_basic_triple(e(1), e(2), e(3)), std::invalid_argument);
  CHECK_THROWS_AS(automorphism_from_basic_triple(e(1), 2.0 * e(2), e(4)), std::invalid_argument);

  Sampler rng(23);
  for (int k = 0; k < 100; ++k) {
    const auto t = rng.basic_triple();
    const G2Automorphism h = automorphism_from_basic_triple(t[0], t[1], t[2]);
    const Check c = is_automorphism(h.matrix());
    CHECK(c.residual < 1e-10);
    CHECK(h.matrix().determinant() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(dist((h * h.inverse()).matrix(), Mat7::Identity()) < 1e-12);
    const ImOctonion x = rng.gaussian7(), y = rng.gaussian7();
    CHECK(dist(h(cross(x, y)), cross(h(x), h(y))) < 1e-10);
  }
}

TEST_CASE("torus flow") {
  CHECK(dist(torus_flow(0, 0).matrix(), Mat7::Identity()) == 0.0);
  CHECK(dist(torus_flow(2 * kPi, 2 * kPi).matrix(), Mat7::Identity()) < 1e-12);
  CHECK(dist(torus_flow(kPi / 2, 0)(e(2)), e(3)) < 1e-15);

  Sampler rng(24);
  const Mat7 A = torus_generator_t(), B = torus_generator_s();
  CHECK(dist(A, 2.0 * cartan_p0()) == 0.0);
  CHECK(dist(B, 2.0 * cartan_q0()) == 0.0);
  for (FlowConvention c : {FlowConvention::exponential, FlowConvention::printed_action}) {
    for (int k = 0; k < 50; ++k) {
      const double t1 = rng.uniform(-7, 7), s1 = rng.uniform(-7, 7);
      const double t2 = rng.uniform(-7, 7), s2 = rng.uniform(-7, 7);
      const TorusFlow f(t1, s1, c), g(t2, s2, c);
      CHECK(dist(Mat7(f.matrix() * g.matrix()), TorusFlow(t1 + t2, s1 + s2, c).matrix()) < 1e-12);
      CHECK(dist(f(e(1)), e(1)) == 0.0);
      CHECK(dist(Mat7(f.matrix().transpose() * f.matrix()), Mat7::Identity()) < 1e-12);
      const Mat7 gen = t1 * torus_generator_t(c) + s1 * torus_generator_s(c);
      CHECK(dist(matrix_exponential(gen), f.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("torus weights") {
  const TorusWeights w = torus_weights(FlowConvention::exponential);
  CHECK(w.t == std::array<int, 3>{1, 0, -1});
  CHECK(w.s == std::array<int, 3>{0, -1, -1});
  const TorusWeights p = torus_weights(FlowConvention::printed_action);
  CHECK(p.t == std::array<int, 3>{1, 0, -1});
  CHECK(p.s == std::array<int, 3>{0, -1, 1});
  CHECK(multiplicative_orientation() == std::array<int, 3>{1, 1, -1});
  CHECK(to_string(FlowConvention::exponential) == "exponential");
  CHECK(to_string(AngleConvention::full) == "full");
}
