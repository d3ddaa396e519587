#include <doctest.h>

#include <cmath>
#include <numbers>

#include "s6/sampling.hpp"
#include "s6/torus_orbits.hpp"

using namespace s6;

namespace {

ImOctonion e(int i) { return basis7(i); }
double dist(const ImOctonion& a, const ImOctonion& b) { return (a - b).cwiseAbs().maxCoeff(); }
ImOctonion vec(double a, double b, double c, double d, double f, double g, double h) {
  ImOctonion v;
  v << a, b, c, d, f, g, h;
  return v;
}

constexpr double kPi = std::numbers::pi;
const double kInv3 = 1.0 / std::sqrt(3.0);

OrbitPoint landmark(double sign = 1.0) { return OrbitPoint::normalized(sign * vec(0, 0, 1, 0, 1, 1, 0)); }

OrbitPoint random_regular(Sampler& rng) {
  for (;;) {
    const OrbitPoint p = OrbitPoint::normalized(rng.unit7());
    if (p.regular()) return p;
  }
}

}  // namespace

TEST_CASE("regularity") {
  const Regularity a = OrbitPoint(e(1)).regularity();
  CHECK(a.alpha == 0.0);
  CHECK(a.beta == 0.0);
  CHECK(a.gamma == 0.0);
  CHECK_FALSE(a.regular);
  const Regularity b = OrbitPoint(e(2)).regularity();
  CHECK(b.alpha == 1.0);
  CHECK(b.beta == 1.0);
  CHECK(b.gamma == 0.0);
  CHECK_FALSE(b.regular);
  const Regularity c = landmark().regularity();
  CHECK(c.alpha == doctest::Approx(2.0 / 3));
  CHECK(c.beta == doctest::Approx(2.0 / 3));
  CHECK(c.gamma == doctest::Approx(2.0 / 3));
  CHECK(c.regular);
  CHECK_THROWS_AS(OrbitPoint(2.0 * e(1)), std::invalid_argument);
  CHECK_THROWS_AS(require_regular(OrbitPoint(e(2))), std::invalid_argument);
}

TEST_CASE("tangent vectors") {
  const OrbitTangent t = tangent_frame(landmark());
  CHECK(dist(t.x_bar, kInv3 * vec(0, -1, 0, 0, 0, 0, -1)) < 1e-15);
  CHECK(dist(t.x_bar, printed_x_bar(landmark().coords())) == 0.0);
  CHECK(dist(t.y_bar, -printed_y_bar(landmark().coords())) == 0.0);

  Sampler rng(41);
  for (int k = 0; k < 100; ++k) {
    const OrbitPoint p = random_regular(rng);
    const OrbitTangent f = tangent_frame(p);
    CHECK(f.x_bar.squaredNorm() == doctest::Approx(p.regularity().beta).epsilon(1e-13));
    CHECK(f.y_bar.squaredNorm() == doctest::Approx(p.regularity().gamma).epsilon(1e-13));
    CHECK(std::abs(f.X.dot(f.Y)) < 1e-14);
    CHECK(std::abs(f.X.dot(p.coords())) < 1e-14);
  }
}

TEST_CASE("slant cosine of orbits") {
  for (double s : {1.0, -1.0}) {
    CHECK(std::abs(orbit_slant_cos(landmark(s)) - 1.0 / 3) < 1e-15);
    CHECK(std::abs(printed_slant_cos(landmark(s)) - 1.0 / 3) < 1e-15);
  }
  const OrbitPoint tr = OrbitPoint::normalized(vec(0, 0, 1, 0, 1, 0, 0));
  CHECK(orbit_slant_cos(tr) < 1e-15);
  CHECK(std::abs(orbit_slant_cos(minimal_family_point(kPi / 3)) - 1.0 / 6) < 1e-15);
  CHECK(orbit_slant_angle(landmark()) == doctest::Approx(std::acos(1.0 / 3)).epsilon(1e-14));

  Sampler rng(42);
  for (int k = 0; k < 500; ++k) {
    const OrbitPoint p = random_regular(rng);
    const double c = orbit_slant_cos(p);
    CHECK(std::abs(c - printed_slant_cos(p)) < 1e-10);
    CHECK(std::abs(c - orbit_slant_cos(p, FlowConvention::printed_action)) < 1e-10);
    CHECK(c <= 1.0 / 3 + 1e-9);
  }
}

TEST_CASE("parameterization") {
  const OrbitParam lm{0.0, kPi / 4, std::asin(kInv3), kPi / 2};
  CHECK(dist(param_to_point(lm).coords(), kInv3 * vec(0, 0, 1, 0, 1, 1, 0)) < 1e-15);
  CHECK(dist(param_to_point({1.0, 0.3, 0.2, 0.1}).coords(), e(1)) == 0.0);
  CHECK(dist(param_to_point({-1.0, 0.3, 0.2, 0.1}).coords(), -e(1)) == 0.0);
  CHECK(dist(param_to_point({0, 0, 0, 0}).coords(), e(7)) == 0.0);

  CHECK(slant_cos_param(lm) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(slant_cos_param({0, kPi / 4, kPi / 4, kPi / 2}) == doctest::Approx(1 / std::sqrt(10.0)).epsilon(1e-14));
  CHECK(slant_cos_param({1.0, 0.3, 0.2, 0.1}) == 0.0);
  CHECK_THROWS_AS(slant_cos_param({0.0, 0.0, 0.0, 0.3}), std::domain_error);

  Sampler rng(43);
  for (int k = 0; k < 200; ++k) {
    const OrbitParam q{rng.uniform(-0.9, 0.9), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                       rng.uniform(0, 2 * kPi)};
    const OrbitPoint p = param_to_point(q);
    CHECK(p.coords()[1] == 0.0);
    CHECK(p.coords()[3] == 0.0);
    if (p.regular()) CHECK(std::abs(std::abs(slant_cos_param(q)) - orbit_slant_cos(p)) < 1e-10);
  }
}

TEST_CASE("minimal family") {
  CHECK(dist(minimal_family_point(0).coords(), kInv3 * vec(0, 0, 1, 0, 1, 1, 0)) < 1e-15);
  CHECK(dist(minimal_family_point(kPi / 2).coords(), kInv3 * vec(0, 0, 1, 0, 1, 0, 1)) < 1e-15);
  CHECK(orbit_slant_cos(minimal_family_point(kPi / 2)) < 1e-15);
  for (int k = 0; k < 12; ++k) {
    const double c = 2 * kPi * k / 12;
    const OrbitGeometry g = orbit_geometry(minimal_family_point(c));
    CHECK(g.mean_H.norm() < 1e-10);
    CHECK(std::abs(g.gauss_K) < 1e-8);
    CHECK(std::abs(g.slant_cos - std::abs(std::cos(c)) / 3) < 1e-10);
  }
}

TEST_CASE("printed mean curvature") {
  CHECK(printed_mean_curvature(landmark()).norm() < 1e-15);
  CHECK(printed_mean_curvature(OrbitPoint::normalized(vec(0, 0, 1, 0, 1, 0, 0))).norm() < 1e-15);
  const OrbitPoint p(vec(0, 0, std::sqrt(0.6), 0, 0, std::sqrt(0.2), std::sqrt(0.2)));
  const ImOctonion H = printed_mean_curvature(p);
  CHECK(H[2] == doctest::Approx(std::sqrt(0.6) * 0.08 / 0.24).epsilon(1e-12));
  CHECK(H[5] == doctest::Approx(-0.5 * std::sqrt(0.2)).epsilon(1e-12));
  CHECK(H[6] == doctest::Approx(-0.5 * std::sqrt(0.2)).epsilon(1e-12));
  CHECK_THROWS_AS(printed_mean_curvature(OrbitPoint::normalized(vec(0, 1, 1, 0, 1, 1, 0))),
                  std::invalid_argument);
  CHECK_THROWS_AS(printed_mean_curvature(OrbitPoint(e(7))), std::invalid_argument);
}

TEST_CASE("orbit geometry") {
  const OrbitPoint p(vec(0, 0, std::sqrt(0.6), 0, 0, std::sqrt(0.2), std::sqrt(0.2)));
  const OrbitGeometry g = orbit_geometry(p);
  CHECK(std::abs(g.gauss_K) < 1e-8);
  CHECK(g.mean_H.norm() > 1e-3);
  CHECK(printed_mean_curvature(p).norm() > 1e-3);
  CHECK_THROWS_AS(orbit_geometry(OrbitPoint(e(2))), std::invalid_argument);

  Sampler rng(44);
  for (int k = 0; k < 100; ++k) {
    const OrbitPoint r = random_regular(rng);
    const OrbitGeometry h = orbit_geometry(r);
    const OrbitTangent t = tangent_frame(r);
    for (const ImOctonion* v : {&h.h11, &h.h12, &h.h22}) {
      CHECK(std::abs(v->dot(r.coords())) < 1e-10);
      CHECK(std::abs(v->dot(t.x_bar)) < 1e-10);
      CHECK(std::abs(v->dot(t.y_bar)) < 1e-10);
    }
    CHECK(std::abs(h.gauss_K) < 1e-8);
    CHECK(metric_spread(r, 16) < 1e-12);
    CHECK(std::abs(orbit_geometry(r, FlowConvention::printed_action).gauss_K) < 1e-8);
  }
}

TEST_CASE("slice moves") {
  Sampler rng(45);
  for (int k = 0; k < 50; ++k) {
    const OrbitPoint p = random_regular(rng);
    const SliceMove m = to_slice(p);
    CHECK(m.image.coords()[1] == 0.0);
    CHECK(m.image.coords()[3] == 0.0);
    CHECK(m.image.coords()[2] >= 0.0);
    CHECK(m.image.coords()[4] >= 0.0);
    CHECK(dist(torus_flow(m.t, m.s)(p.coords()), m.image.coords()) < 1e-14);
  }
}

TEST_CASE("linear fullness") {
  const Fullness f = linear_fullness(minimal_family_point(0), 400);
  CHECK(f.ambient_dim == 6);
  CHECK(f.hyperplane_offset == 0.0);
  CHECK(f.offset_deviation == 0.0);
  const OrbitPoint q = OrbitPoint::normalized(vec(0.5, 0, 0.5, 0, 0.5, 0.5, 0));
  const Fullness g = linear_fullness(q, 400);
  CHECK(g.ambient_dim == 6);
  CHECK(g.hyperplane_offset == q.x1());
  // A circle spans an affine plane.
  CHECK(linear_fullness(OrbitPoint(e(2)), 400).ambient_dim == 2);
  CHECK_THROWS_AS(linear_fullness(q, 10), std::invalid_argument);
}

TEST_CASE("scans") {
  ScanGrid g = default_grid(2);
  CHECK(g.size() == 16);
  CHECK(slant_scan(g).size() == 16);
  CHECK(g.c.node(1) == doctest::Approx(kPi));

  ScanGrid a0 = default_grid(4);
  a0.a = {0.0, 0.0, 1};
  for (const ScanRow& r : slant_scan(a0)) CHECK(r.slant_cos < 1e-15);

  ScanGrid poles = default_grid(3);
  poles.x1 = {1.0, 1.0, 1};
  for (const ScanRow& r : slant_scan(poles)) {
    CHECK_FALSE(r.regular);
    CHECK(r.slant_cos == 0.0);
    CHECK(std::isnan(r.mean_H_norm));
  }

  ScanGrid bad = default_grid(2);
  bad.b = {1.0, 0.0, 3};
  CHECK_THROWS_AS(slant_scan(bad), std::invalid_argument);

  const ScanSummary s = summarize(default_grid(8));
  CHECK(s.rows == 4096);
  CHECK(s.refined_max <= 1.0 / 3 + 1e-9);
  CHECK(s.refined_max >= 1.0 / 3 - 1e-6);
  CHECK(s.refined_max >= s.grid_max);
  CHECK(s.max_abs_K < 1e-8);
}

TEST_CASE("refine_max climbs to the landmark value") {
  const auto [q, v] = refine_max({0.1, 0.7, 0.5, 1.4}, {0.05, 0.05, 0.05, 0.05});
  CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-9));
  CHECK(std::abs(q.x1) < 1e-4);
}
