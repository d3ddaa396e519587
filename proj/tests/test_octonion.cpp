#include <doctest.h>

#include <cmath>

#include "s6/octonion.hpp"
#include "s6/sampling.hpp"

using namespace s6;

namespace {

ImOctonion e(int i) { return basis7(i); }

double dist(const ImOctonion& a, const ImOctonion& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("generated table equals the printed one") {
  const StructureTable& g = structure_table();
  const StructureTable& p = printed_table();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(g[i][j] == p[i][j]);
}

TEST_CASE("basis products, exact") {
  // Rows of the table transcribed independently of the source file.
  auto prod = [](int i, int j) { return multiply_exact(basis_exact(i), basis_exact(j)); };
  auto unit = [](int k, int s) {
    IntOctonion v{};
    v[static_cast<std::size_t>(k)] = s;
    return v;
  };
  CHECK(prod(1, 2) == unit(3, 1));
  CHECK(prod(4, 7) == unit(3, 1));
  CHECK(prod(4, 5) == unit(1, 1));
  CHECK(prod(2, 3) == unit(1, 1));
  CHECK(prod(2, 4) == unit(6, 1));
  CHECK(prod(2, 7) == unit(5, -1));
  CHECK(prod(1, 5) == unit(4, -1));
  CHECK(prod(4, 6) == unit(2, 1));
  CHECK(prod(3, 3) == unit(0, -1));
  for (int i = 0; i < 8; ++i) {
    CHECK(prod(0, i) == unit(i, 1));
    CHECK(prod(i, 0) == unit(i, 1));
  }
}

TEST_CASE("multiply and conjugate") {
  Sampler rng(1);
  const Octonion x = rng.octonion();
  CHECK((Octonion::basis(0) * x - x).max_abs() == 0.0);
  CHECK((conjugate(conjugate(x)) - x).max_abs() == 0.0);
  CHECK((conjugate(Octonion::basis(0)) - Octonion::basis(0)).max_abs() == 0.0);
  CHECK((conjugate(Octonion::basis(3)) + Octonion::basis(3)).max_abs() == 0.0);
  const Octonion xx = x * conjugate(x);
  CHECK(xx.re() == doctest::Approx(norm(x) * norm(x)).epsilon(1e-14));
  CHECK(xx.im().cwiseAbs().maxCoeff() < 1e-14);
  const Octonion e4e7 = Octonion::basis(4) * Octonion::basis(7);
  CHECK((e4e7 - Octonion::basis(3)).max_abs() == 0.0);
}

TEST_CASE("inner products") {
  CHECK(inner(Octonion::basis(2), Octonion::basis(2)) == 1.0);
  CHECK(inner(Octonion::basis(1), Octonion::basis(5)) == 0.0);
  Sampler rng(2);
  for (int k = 0; k < 100; ++k) {
    const Octonion x = rng.octonion(), y = rng.octonion(), z = rng.octonion();
    CHECK(inner(x * y, x * z) == doctest::Approx(inner(x, x) * inner(y, z)).epsilon(1e-12));
  }
  CHECK(norm(Octonion()) == 0.0);
}

TEST_CASE("cross product") {
  CHECK(dist(cross(e(1), e(2)), e(3)) == 0.0);
  CHECK(dist(cross(e(4), e(5)), e(1)) == 0.0);
  Sampler rng(3);
  const ImOctonion x = rng.gaussian7();
  CHECK(cross(x, x).norm() == 0.0);
  const ImOctonion y = rng.gaussian7();
  CHECK(dist(cross(x, y), -cross(y, x)) < 1e-15);
  // (xy - yx)/2 computed the long way.
  const Octonion xy = multiply(x, y), yx = multiply(y, x);
  CHECK(dist(cross(x, y), ((xy - yx) * 0.5).im()) < 1e-14);
}

TEST_CASE("associator") {
  const ImOctonion zero = ImOctonion::Zero();
  CHECK(dist(associator(e(1), e(2), e(3)), zero) == 0.0);
  CHECK(dist(associator(e(1), e(2), e(4)), 2.0 * e(7)) == 0.0);
  Sampler rng(4);
  const Octonion x = rng.octonion(), y = rng.octonion();
  CHECK(associator(x, x, y).max_abs() < 1e-13);
  // Totally antisymmetric on Im O.
  const ImOctonion a = rng.gaussian7(), b = rng.gaussian7(), c = rng.gaussian7();
  CHECK(dist(associator(a, b, c), -associator(b, a, c)) < 1e-13);
  CHECK(dist(associator(a, b, c), associator(b, c, a)) < 1e-13);
}

TEST_CASE("associative 3-form") {
  CHECK(assoc_form(e(1), e(2), e(3)) == 1.0);
  CHECK(assoc_form(e(1), e(2), e(4)) == 0.0);
  Sampler rng(5);
  const ImOctonion x = rng.gaussian7(), y = rng.gaussian7();
  CHECK(std::abs(assoc_form(x, x, y)) < 1e-13);
  for (int k = 0; k < 1000; ++k) {
    const auto t = rng.orthonormal_triple();
    CHECK(std::abs(assoc_form(t[0], t[1], t[2])) <= 1.0 + 1e-12);
  }
}

TEST_CASE("almost complex structure") {
  CHECK(dist(j_structure(e(1), e(2)), e(3)) == 0.0);
  CHECK(dist(j_structure(e(1), j_structure(e(1), e(2))), -e(2)) == 0.0);
  CHECK(dist(j_structure(e(1), e(5)), -e(4)) == 0.0);
  CHECK_THROWS_AS(j_structure(2.0 * e(1), e(2)), std::invalid_argument);
  CHECK_THROWS_AS(j_structure(e(1), e(1) + e(2)), std::invalid_argument);

  Sampler rng(6);
  for (int k = 0; k < 100; ++k) {
    const ImOctonion p = rng.unit7();
    Eigen::Matrix<double, 7, Eigen::Dynamic> b(7, 1);
    b.col(0) = p;
    const ImOctonion X = rng.unit_orthogonal_to(b);
    const ImOctonion JX = j_structure(p, X);
    CHECK(std::abs(JX.dot(p)) < 1e-14);
    CHECK(JX.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dist(left_cross_matrix(p) * X, JX) < 1e-14);
  }
}

TEST_CASE("embedding of imaginary octonions") {
  Sampler rng(7);
  const ImOctonion x = rng.gaussian7();
  const Octonion o = Octonion::imaginary(x);
  CHECK(o.re() == 0.0);
  CHECK((o + conjugate(o)).max_abs() == 0.0);
  CHECK(dist(o.im(), x) == 0.0);
}
