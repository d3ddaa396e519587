// Command-line front end: verification suites, single-object reports, scans.
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "s6/calibration.hpp"
#include "s6/g2.hpp"
#include "s6/octonion.hpp"
#include "s6/serialization.hpp"
#include "s6/slant_spheres.hpp"
#include "s6/torus_orbits.hpp"
#include "s6/verify.hpp"

namespace {

using namespace s6;

// Bad input from the command line; exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  int samples = 0;
  int mesh = 0;
  std::string only;
  std::vector<std::string> tolerances;
};

double parse_real(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError("cannot parse real number '" + s + "'");
  }
  return v;
}

// "e3", "-e4", or seven comma-separated reals.
ImOctonion parse_vector(const std::string& s) {
  std::string t = s;
  double sign = 1.0;
  if (!t.empty() && (t[0] == '-' || t[0] == '+') && t.size() == 3 && t[1] == 'e') {
    sign = t[0] == '-' ? -1.0 : 1.0;
    t = t.substr(1);
  }
  if (t.size() == 2 && t[0] == 'e' && t[1] >= '1' && t[1] <= '7') return sign * basis7(t[1] - '0');
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 7) {
    throw UsageError("expected e1..e7 or 7 comma-separated reals, got '" + s + "'");
  }
  ImOctonion v;
  for (int i = 0; i < 7; ++i) v[i] = parse_real(parts[static_cast<std::size_t>(i)]);
  return v;
}

Plane3 parse_plane(const std::vector<std::string>& args) {
  if (args.size() != 3) throw UsageError("a plane needs exactly three vectors");
  try {
    return plane_from_spanning(parse_vector(args[0]), parse_vector(args[1]), parse_vector(args[2]));
  } catch (const RankDeficientError& e) {
    throw UsageError(e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + o.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Tolerances tolerances(const Options& o) {
  Tolerances t;
  try {
    for (const std::string& a : o.tolerances) t.set_from_string(a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return t;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, const char* cmd) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw UsageError(fmt::format("format '{}' is not available for '{}'", o.format, cmd));
}

std::string vec_text(const ImOctonion& v) {
  std::string s = "(";
  // + 0.0 folds -0 into 0 for display; CSV and JSON keep the sign bit.
  for (int i = 0; i < 7; ++i) s += (i ? ", " : "") + format_real(v[i] + 0.0);
  return s + ")";
}

// ---------------------------------------------------------------------------

int cmd_verify(const Options& o) {
  require_format(o, {"json", "csv", "text"}, "verify");
  VerifyConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.tol = tolerances(o);
  if (!o.only.empty()) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.only) == names.end()) {
      throw UsageError("unknown suite '" + o.only + "'");
    }
    cfg.only = o.only;
  }
  const VerifyReport r = run_verify(cfg);
  if (o.format == "json") emit(o, dump(report_json(r)));
  else if (o.format == "csv") emit(o, report_csv(r));
  else emit(o, report_text(r));
  if (!r.passed()) {
    for (const SuiteResult& s : r.suites)
      for (const CheckResult& c : s.checks)
        if (!c.passed) std::cerr << "failed: " << s.name << "/" << c.name << "\n";
  }
  return r.passed() ? 0 : 1;
}

std::string plane_class(double phi) {
  if (phi > 1.0 - 1e-8) return "associative";
  if (phi < 1e-8) return "totally_real";
  return "proper";
}

int cmd_plane(const Options& o, const std::vector<std::string>& args) {
  require_format(o, {"json", "text"}, "plane");
  const Plane3 p = parse_plane(args);
  const double phi = phi_of_plane(p);
  const ImOctonion a = associator_of_plane(p);
  const CanonicalReduction red = reduce_to_canonical(p);
  if (o.format == "text") {
    std::string t;
    t += fmt::format("phi            {}\n", format_real(phi));
    t += fmt::format("signed phi     {}\n", format_real(signed_phi(p)));
    t += fmt::format("associator     {}\n", vec_text(a));
    t += fmt::format("class          {}\n", plane_class(phi));
    t += fmt::format("canonical phi  {}\n", format_real(red.phi));
    emit(o, t);
    return 0;
  }
  Json j;
  j["frame"] = to_json(p)["frame"];
  j["phi"] = phi;
  j["signed_phi"] = signed_phi(p);
  j["associator"] = to_json(a);
  j["associator_norm"] = a.norm();
  j["classification"] = plane_class(phi);
  j["gram_frame"] = to_json(gram_frame(p));
  j["canonical_reduction"] = to_json(red);
  emit(o, dump(j));
  return 0;
}

int cmd_sphere(const Options& o, const std::vector<std::string>& args, double r,
               const std::string& center_arg) {
  require_format(o, {"json", "text"}, "sphere");
  const Plane3 p = parse_plane(args);
  if (!(r > 0.0 && r <= 1.0)) throw UsageError(fmt::format("radius {} outside (0, 1]", r));
  const Tolerances tol = tolerances(o);
  SlantThresholds th;
  th.slant = tol["slant_spread"];
  th.not_slant = tol["not_slant_spread"];
  const int n = o.samples > 0 ? o.samples : 64;
  const double phi = phi_of_plane(p);

  Json j;
  j["frame"] = to_json(p)["frame"];
  j["phi"] = phi;
  j["radius"] = r;

  std::optional<ImOctonion> center;
  if (!center_arg.empty()) {
    const ImOctonion c = parse_vector(center_arg);
    if (c.norm() == 0.0) throw UsageError("center direction must be nonzero");
    if (r == 1.0) throw UsageError("a great sphere (r = 1) has center 0");
    center = std::sqrt(1.0 - r * r) * c.normalized();
  } else if (r == 1.0) {
    center = ImOctonion::Zero();
  } else if (phi <= 1.0 - 1e-8) {
    const auto cs = slant_center(p, r);
    j["admissible_centers"] = Json::array({to_json(cs[0]), to_json(cs[1])});
    if (o.format == "text") {
      emit(o, fmt::format("slant centers  {}\n               {}\n", vec_text(cs[0]), vec_text(cs[1])));
    } else {
      emit(o, dump(j));
    }
    return 0;
  } else {
    // Associative plane: every admissible center works; take the normal
    // direction closest to a coordinate axis.
    const Mat7 q = Mat7::Identity() - p.projector();
    Eigen::Index k = 0;
    q.diagonal().maxCoeff(&k);
    center = std::sqrt(1.0 - r * r) * q.col(k).normalized();
  }

  SlantReport rep;
  try {
    rep = analyze_small_sphere(SphereSection(p, r, *center, 1e-10), n, th);
  } catch (const InconclusiveSlantError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  j["center"] = to_json(*center);
  j["report"] = to_json(rep);
  if (o.format == "text") {
    std::string t = fmt::format("center         {}\nclass          {}\nspread         {}\n",
                                vec_text(*center), to_string(rep.classification), format_real(rep.spread));
    if (rep.is_slant) t += fmt::format("angle          {}\n", format_real(rep.angle));
    emit(o, t);
  } else {
    emit(o, dump(j));
  }
  return 0;
}

int cmd_orbit(const Options& o, const std::vector<std::string>& args,
              const std::optional<double>& family) {
  require_format(o, {"json", "csv", "text"}, "orbit");
  ImOctonion raw;
  if (family) {
    if (!args.empty()) throw UsageError("give either a point or --family, not both");
    raw << 0.0, 0.0, 1.0, 0.0, 1.0, std::cos(*family), std::sin(*family);
  } else {
    if (args.size() != 1) throw UsageError("orbit needs one point or --family ANGLE");
    raw = parse_vector(args[0]);
  }
  if (raw.norm() == 0.0) throw UsageError("point must be nonzero");
  const OrbitPoint p = OrbitPoint::normalized(raw);
  OrbitGeometry g;
  try {
    g = orbit_geometry(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.format == "csv" && o.mesh <= 0) throw UsageError("csv output for orbit needs --mesh N");

  const double two_pi = 2.0 * std::numbers::pi;
  if (o.format == "csv") {
    std::string t = "t,s,e1,e2,e3,e4,e5,e6,e7\n";
    for (int i = 0; i < o.mesh; ++i) {
      for (int k = 0; k < o.mesh; ++k) {
        const double tt = two_pi * i / o.mesh, ss = two_pi * k / o.mesh;
        const ImOctonion x = torus_flow(tt, ss)(p.coords());
        t += format_real(tt) + "," + format_real(ss);
        for (int c = 0; c < 7; ++c) t += "," + format_real(x[c]);
        t += "\n";
      }
    }
    emit(o, t);
    return 0;
  }

  const Regularity& reg = p.regularity();
  if (o.format == "text") {
    emit(o, fmt::format("point          {}\nslant_cos      {}\nslant_angle    {}\n|H|            {}\nK              {}\n",
                        vec_text(p.coords()), format_real(g.slant_cos),
                        format_real(orbit_slant_angle(p)), format_real(g.mean_H.norm()),
                        format_real(g.gauss_K)));
    return 0;
  }
  Json j;
  j["point"] = to_json(p.coords());
  j["regularity"] = Json{{"alpha", reg.alpha}, {"beta", reg.beta}, {"gamma", reg.gamma}};
  j["geometry"] = to_json(g);
  j["slant_angle_rad"] = orbit_slant_angle(p);
  j["printed_slant_cos"] = printed_slant_cos(p);
  if (o.mesh > 0) {
    Json mesh = Json::array();
    for (int i = 0; i < o.mesh; ++i) {
      for (int k = 0; k < o.mesh; ++k) {
        const double tt = two_pi * i / o.mesh, ss = two_pi * k / o.mesh;
        mesh.push_back(Json{{"t", tt}, {"s", ss}, {"point", to_json(torus_flow(tt, ss)(p.coords()))}});
      }
    }
    j["mesh"] = std::move(mesh);
  }
  emit(o, dump(j));
  return 0;
}

// "lo:hi:n" or a single value.
ScanAxis parse_axis(const std::string& spec, const char* name) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() == 1) {
    const double v = parse_real(parts[0]);
    return {v, v, 1};
  }
  if (parts.size() != 3) throw UsageError(fmt::format("axis {}: expected lo:hi:n or a value", name));
  const double lo = parse_real(parts[0]), hi = parse_real(parts[1]);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || n < 2) {
    throw UsageError(fmt::format("axis {}: resolution must be an integer >= 2", name));
  }
  if (!(hi > lo)) throw UsageError(fmt::format("axis {}: need lo < hi", name));
  return {lo, hi, n};
}

Json axis_json(const ScanAxis& a) { return Json{{"lo", a.lo}, {"hi", a.hi}, {"n", a.n}}; }

Json summary_json(const ScanGrid& grid, const ScanSummary& s) {
  Json j;
  j["grid"] = Json{{"x1", axis_json(grid.x1)}, {"a", axis_json(grid.a)}, {"b", axis_json(grid.b)},
                   {"c", axis_json(grid.c)}};
  j["convention"] = std::string(to_string(FlowConvention::exponential));
  j["rows"] = s.rows;
  j["regular_rows"] = s.regular_rows;
  j["max_slant_cos"] = s.refined_max;
  j["argmax"] = to_json(s.refined_argmax);
  j["grid_max_slant_cos"] = s.grid_max;
  j["grid_argmax"] = to_json(s.grid_argmax);
  j["bins"] = s.bins;
  j["bins_populated"] = s.bins_populated;
  j["bin_coverage"] = static_cast<double>(s.bins_populated) / kSlantBins;
  j["min_H_norm"] = s.min_H_norm;
  j["max_abs_K"] = s.max_abs_K;
  return j;
}

int cmd_scan(const Options& o, int n, const std::string& x1, const std::string& a,
             const std::string& b, const std::string& c, const std::string& summary_path) {
  require_format(o, {"json", "csv", "text"}, "scan");
  if (n < 2) throw UsageError("--grid must be >= 2");
  ScanGrid grid = default_grid(n);
  if (!x1.empty()) grid.x1 = parse_axis(x1, "x1");
  if (!a.empty()) grid.a = parse_axis(a, "a");
  if (!b.empty()) grid.b = parse_axis(b, "b");
  if (!c.empty()) grid.c = parse_axis(c, "c");

  ScanAccumulator acc;
  std::ofstream file;
  std::ostream* rows = nullptr;
  if (o.format == "csv") {
    if (o.out.empty()) {
      rows = &std::cout;
    } else {
      file.open(o.out, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + o.out + "'");
      rows = &file;
    }
    *rows << csv_header();
  }
  slant_scan(grid, [&](const ScanRow& r) {
    acc.add(r);
    if (rows) *rows << csv_row(r);
  });
  if (rows) rows->flush();
  const ScanSummary s = acc.finish();
  const Json sj = summary_json(grid, s);
  if (!summary_path.empty()) {
    std::ofstream f(summary_path, std::ios::binary);
    if (!f) throw UsageError("cannot open summary file '" + summary_path + "'");
    f << dump(sj);
  }
  if (o.format == "json") emit(o, dump(sj));
  if (o.format == "text") {
    emit(o, fmt::format("rows {} (regular {})\nmax slant_cos {} at x1={} a={} b={} c={}\nbins populated {}/{}\n",
                        s.rows, s.regular_rows, format_real(s.refined_max),
                        format_real(s.refined_argmax.x1), format_real(s.refined_argmax.a),
                        format_real(s.refined_argmax.b), format_real(s.refined_argmax.c),
                        s.bins_populated, kSlantBins));
  }
  return 0;
}

int cmd_table(const Options& o) {
  require_format(o, {"json", "csv", "text"}, "table");
  const StructureTable& t = structure_table();
  if (o.format == "csv") {
    std::string s = "i,j,k,sign\n";
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        s += fmt::format("{},{},{},{}\n", i, j, t[i][j].index, t[i][j].sign);
    emit(o, s);
  } else if (o.format == "text") {
    std::string s = "      ";
    for (int j = 0; j < 8; ++j) s += fmt::format("{:>5}", fmt::format("e{}", j));
    s += "\n";
    for (int i = 0; i < 8; ++i) {
      s += fmt::format("{:>5} ", fmt::format("e{}", i));
      for (int j = 0; j < 8; ++j)
        s += fmt::format("{:>5}", fmt::format("{}e{}", t[i][j].sign < 0 ? "-" : "", t[i][j].index));
      s += "\n";
    }
    for (const auto& g : g2_standard_basis()) {
      s += fmt::format("{:<4} {} residual {}\n", g.name, g.derivation.passes ? "derivation" : "FAILS Leibniz",
                       format_real(g.derivation.residual));
    }
    emit(o, s);
  } else {
    Json j;
    j["structure_constants"] = structure_constants_json();
    j["derivation_audit"] = derivation_audit_json();
    emit(o, dump(j));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonion calibrations, slant spheres and torus orbits in S^6"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", o.out, "output file (default: standard output)");
  app.add_option("--seed", o.seed, "seed of the randomized suites");
  app.add_option("--samples", o.samples, "sample count override")->check(CLI::NonNegativeNumber);
  app.add_option("--mesh", o.mesh, "orbit mesh resolution")->check(CLI::NonNegativeNumber);
  app.add_option("--only", o.only, "run a single verification suite");
  app.add_option("--tolerance", o.tolerances, "NAME=VALUE tolerance override")->take_all();

  auto* verify = app.add_subcommand("verify", "run the property suites");

  std::vector<std::string> vectors;
  auto* plane = app.add_subcommand("plane", "analyze span(v1, v2, v3)");
  plane->add_option("vectors", vectors, "three vectors: e1..e7, -e4 or 7 comma-separated reals; put -- before the vectors if one starts with -");

  double radius = 1.0;
  std::string center;
  auto* sphere = app.add_subcommand("sphere", "slant test of a sphere in an affine 3-plane");
  sphere->add_option("vectors", vectors, "three vectors spanning the direction plane");
  sphere->add_option("--radius,-r", radius, "radius in (0, 1]");
  sphere->add_option("--center", center, "center direction, rescaled to length sqrt(1 - r^2)");

  std::optional<double> family;
  auto* orbit = app.add_subcommand("orbit", "geometry of a torus orbit");
  orbit->add_option("point", vectors, "point of S^6 (normalized)");
  orbit->add_option("--family", family, "minimal family point (0,0,1,0,1,cos c,sin c)/sqrt 3");

  int grid = 32;
  std::string ax1, aa, ab, ac, summary;
  auto* scan = app.add_subcommand("scan", "slant cosine over a parameter grid");
  scan->add_option("--grid", grid, "nodes per axis for the default ranges");
  scan->add_option("--x1", ax1, "lo:hi:n or a single value");
  scan->add_option("--a", aa, "lo:hi:n or a single value");
  scan->add_option("--b", ab, "lo:hi:n or a single value");
  scan->add_option("--c", ac, "lo:hi:n or a single value");
  scan->add_option("--summary", summary, "write the summary JSON here");

  auto* table = app.add_subcommand("table", "structure constants and derivation audit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (o.format.empty()) o.format = scan->parsed() ? "csv" : "json";
    if (verify->parsed()) return cmd_verify(o);
    if (plane->parsed()) return cmd_plane(o, vectors);
    if (sphere->parsed()) return cmd_sphere(o, vectors, radius, center);
    if (orbit->parsed()) return cmd_orbit(o, vectors, family);
    if (scan->parsed()) return cmd_scan(o, grid, ax1, aa, ab, ac, summary);
    if (table->parsed()) return cmd_table(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
