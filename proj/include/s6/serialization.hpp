#ifndef S6_SERIALIZATION_HPP
#define S6_SERIALIZATION_HPP

#include <string>

#include <json.hpp>

#include "s6/calibration.hpp"
#include "s6/g2.hpp"
#include "s6/slant_spheres.hpp"
#include "s6/torus_orbits.hpp"

namespace s6 {

using Json = nlohmann::ordered_json;

Json to_json(const ImOctonion& v);
Json to_json(const Mat7& m);  // 7x7 row-major
Json to_json(const Plane3& p);
Json to_json(const CanonicalReduction& r);
Json to_json(const G2Automorphism& g);
Json to_json(const SlantReport& r);
Json to_json(const OrbitGeometry& g);
Json to_json(const OrbitParam& q);

/// [[i, j, k, sign], ...] over all 64 ordered pairs of e0..e7.
Json structure_constants_json();
/// [{name, passes, residual}, ...] for the printed g2 generators.
Json derivation_audit_json();

Plane3 plane_from_json(const Json& j);
ImOctonion vector_from_json(const Json& j);

/// Locale-independent %.17g formatting; "nan" for NaN.
std::string format_real(double v);
std::string csv_header();
std::string csv_row(const ScanRow& r);

}  // namespace s6

#endif  // S6_SERIALIZATION_HPP
