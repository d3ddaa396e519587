#include <doctest.h>

#include <cmath>
#include <numbers>

#include "s6/sampling.hpp"
#include "s6/slant_spheres.hpp"

using namespace s6;

namespace {

ImOctonion e(int i) { return basis7(i); }
double dist(const ImOctonion& a, const ImOctonion& b) { return (a - b).cwiseAbs().maxCoeff(); }
Plane3 span(const ImOctonion& a, const ImOctonion& b, const ImOctonion& c) {
  return plane_from_spanning(a, b, c);
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("Wirtinger cosine") {
  CHECK(wirtinger_cos({e(1), e(2), e(3)}) == 1.0);
  CHECK(wirtinger_cos({e(1), e(2), e(5)}) == 0.0);
  CHECK(wirtinger_angle({e(1), e(2), e(3)}) == 0.0);
  CHECK(wirtinger_angle({e(1), e(2), e(5)}) == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(TangentFrame::checked(e(1), e(1), e(3)), std::invalid_argument);

  Sampler rng(31);
  for (int k = 0; k < 100; ++k) {
    const auto t = rng.orthonormal_triple();
    const double c = wirtinger_cos({t[0], t[1], t[2]});
    const double a = rng.uniform(0, 2 * kPi);
    const ImOctonion X = std::cos(a) * t[1] + std::sin(a) * t[2];
    const ImOctonion Y = -std::sin(a) * t[1] + std::cos(a) * t[2];
    CHECK(std::abs(wirtinger_cos({t[0], X, Y}) - c) < 1e-12);
    CHECK(std::cos(wirtinger_angle({t[0], t[1], t[2]})) == doctest::Approx(c).epsilon(1e-12));
  }
}

TEST_CASE("classification of samples") {
  const double cos1[] = {0.5, 0.5, 0.5};
  const double ang1[] = {1.0, 1.0, 1.0};
  const SlantReport r = classify_samples(cos1, ang1, 3, {});
  CHECK(r.is_slant);
  CHECK(r.classification == SlantClass::proper_slant);
  const double cos2[] = {0.5, 0.6};
  CHECK(classify_samples(cos2, ang1, 2, {}).classification == SlantClass::not_slant);
  const double cos3[] = {0.5, 0.5 + 1e-6};
  CHECK_THROWS_AS(classify_samples(cos3, ang1, 2, {}), InconclusiveSlantError);
  CHECK(to_string(SlantClass::totally_real) == "totally_real");
}

TEST_CASE("great spheres") {
  const SlantReport ac = analyze_great_sphere(span(e(1), e(2), e(3)), 64);
  CHECK(ac.classification == SlantClass::almost_complex);
  CHECK(ac.angle < 1e-8);
  const SlantReport tr = analyze_great_sphere(span(e(1), e(2), e(7)), 64);
  CHECK(tr.classification == SlantClass::totally_real);
  CHECK(tr.angle == doctest::Approx(kPi / 2).epsilon(1e-12));
  const SlantReport ps = analyze_great_sphere(span(e(1), e(2), (e(3) - e(7)) / std::sqrt(2.0)), 64);
  CHECK(ps.classification == SlantClass::proper_slant);
  CHECK(std::abs(ps.angle - kPi / 4) < 1e-12);
  CHECK_THROWS_AS(analyze_great_sphere(span(e(1), e(2), e(3)), 4), std::invalid_argument);

  Sampler rng(32);
  for (int k = 0; k < 50; ++k) {
    const Plane3 p = rng.plane();
    const SlantReport rep = analyze_great_sphere(p, 32);
    CHECK(rep.is_slant);
    CHECK(std::abs(rep.angle - std::acos(phi_of_plane(p))) < 1e-9);
  }
}

TEST_CASE("slant centers") {
  const auto c = slant_center(span(e(1), e(2), e(7)), 0.5);
  CHECK(dist(c[0], -std::sqrt(0.75) * e(4)) < 1e-15);
  CHECK(dist(c[1], std::sqrt(0.75) * e(4)) < 1e-15);
  const auto d = slant_center(span(e(1), e(2), e(4)), 0.5);
  CHECK(dist(d[0], std::sqrt(0.75) * e(7)) < 1e-15);
  CHECK_THROWS_AS(slant_center(span(e(1), e(2), e(3)), 0.5), AssociativePlaneError);
  CHECK_THROWS_AS(slant_center(span(e(1), e(2), e(7)), 1.0), std::invalid_argument);
}

TEST_CASE("small spheres") {
  const double h = std::sqrt(0.75);
  const SlantReport b = analyze_small_sphere(SphereSection(span(e(1), e(2), e(3)), 0.5, h * e(7)), 64);
  CHECK(b.is_slant);
  CHECK(std::abs(b.angle - kPi / 3) < 1e-12);

  const SlantReport c = analyze_small_sphere(SphereSection(span(e(1), e(2), e(7)), 0.5, -h * e(4)), 64);
  CHECK(c.classification == SlantClass::totally_real);

  const SlantReport n = analyze_small_sphere(SphereSection(span(e(1), e(2), e(7)), 0.5, h * e(5)), 64);
  CHECK(n.classification == SlantClass::not_slant);
  CHECK(n.spread > 0.01);

  CHECK_THROWS_AS(SphereSection(span(e(1), e(2), e(7)), 0.5, e(5)), std::invalid_argument);
  CHECK_THROWS_AS(SphereSection(span(e(1), e(2), e(7)), 0.5, h * e(1)), std::invalid_argument);
  CHECK_THROWS_AS(SphereSection(span(e(1), e(2), e(7)), 0.0, e(5)), std::invalid_argument);

  // r = 1 routes to the great sphere analysis.
  const SphereSection g(span(e(1), e(2), e(7)), 1.0, ImOctonion::Zero());
  CHECK(analyze_small_sphere(g, 32).angle == analyze_great_sphere(g.plane(), 32).angle);

  Sampler rng(33);
  for (int k = 0; k < 50; ++k) {
    const Plane3 p = rng.plane();
    const double r = rng.uniform(0.1, 0.9);
    for (const ImOctonion& ctr : slant_center(p, r)) {
      const SlantReport rep = analyze_small_sphere(SphereSection(p, r, ctr, 1e-10), 32);
      CHECK(rep.is_slant);
      CHECK(std::abs(rep.angle - std::acos(r * phi_of_plane(p))) < 1e-9);
    }
  }
}

TEST_CASE("Fibonacci lattice frames") {
  for (int k = 0; k < 20; ++k) {
    const SpherePoint s = fibonacci_point(k, 20);
    CHECK(s.u.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(s.u.dot(s.du1)) < 1e-15);
    CHECK(std::abs(s.u.dot(s.du2)) < 1e-15);
    CHECK(std::abs(s.du1.dot(s.du2)) < 1e-15);
    CHECK(s.du2.norm() == doctest::Approx(1.0).epsilon(1e-15));
  }
}
