#include "s6/serialization.hpp"

#include <cmath>

#include <fmt/format.h>

namespace s6 {

Json to_json(const ImOctonion& v) {
  Json a = Json::array();
  for (int i = 0; i < 7; ++i) a.push_back(v[i]);
  return a;
}

Json to_json(const Mat7& m) {
  Json rows = Json::array();
  for (int i = 0; i < 7; ++i) {
    Json r = Json::array();
    for (int j = 0; j < 7; ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const Plane3& p) {
  return Json{{"frame", Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])})}};
}

Json to_json(const CanonicalReduction& r) {
  Json j = to_json(r.target);
  j["phi"] = r.phi;
  j["matrix"] = to_json(r.automorphism.matrix());
  j["associative_branch"] = r.associative;
  j["frame_reoriented"] = r.frame_reoriented;
  j["f3_image"] = to_json(r.f3_image);
  return j;
}

Json to_json(const G2Automorphism& g) { return to_json(g.matrix()); }

Json to_json(const SlantReport& r) {
  Json j;
  j["is_slant"] = r.is_slant;
  j["classification"] = std::string(to_string(r.classification));
  j["angle_rad"] = r.is_slant ? Json(r.angle) : Json(nullptr);
  j["cos_angle"] = r.is_slant ? Json(r.cos_angle) : Json(nullptr);
  j["spread"] = r.spread;
  j["n_samples"] = r.n_samples;
  return j;
}

Json to_json(const OrbitGeometry& g) {
  Json j;
  j["metric"] = Json::array({Json::array({g.metric(0, 0), g.metric(0, 1)}),
                             Json::array({g.metric(1, 0), g.metric(1, 1)})});
  j["K"] = g.gauss_K;
  j["H"] = to_json(g.mean_H);
  j["H_norm"] = g.mean_H.norm();
  j["slant_cos"] = g.slant_cos;
  j["convention"] = fmt::format("{}/{}", to_string(g.convention), to_string(kParameterConvention));
  return j;
}

Json to_json(const OrbitParam& q) {
  return Json{{"x1", q.x1}, {"a", q.a}, {"b", q.b}, {"c", q.c}};
}

Json structure_constants_json() {
  Json out = Json::array();
  const StructureTable& t = structure_table();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out.push_back(Json::array({i, j, t[i][j].index, t[i][j].sign}));
  return out;
}

Json derivation_audit_json() {
  Json out = Json::array();
  for (const NamedGenerator& g : g2_standard_basis()) {
    out.push_back(Json{{"name", g.name}, {"passes", g.derivation.passes},
                       {"residual", g.derivation.residual}});
  }
  return out;
}

ImOctonion vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 7) {
    throw std::invalid_argument("expected an array of 7 reals");
  }
  ImOctonion v;
  for (int i = 0; i < 7; ++i) v[i] = j.at(static_cast<std::size_t>(i)).get<double>();
  return v;
}

Plane3 plane_from_json(const Json& j) {
  const Json& f = j.at("frame");
  if (!f.is_array() || f.size() != 3) throw std::invalid_argument("frame must hold 3 vectors");
  return Plane3::from_orthonormal(vector_from_json(f[0]), vector_from_json(f[1]),
                                  vector_from_json(f[2]), 1e-10);
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.17g}", v);
}

std::string csv_header() { return "x1,a,b,c,slant_cos,slant_angle_rad,mean_H_norm,gauss_K,regular\n"; }

std::string csv_row(const ScanRow& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{}\n", format_real(r.q.x1), format_real(r.q.a),
                     format_real(r.q.b), format_real(r.q.c), format_real(r.slant_cos),
                     format_real(r.slant_angle), format_real(r.mean_H_norm),
                     format_real(r.gauss_K), r.regular ? 1 : 0);
}

}  // namespace s6
