#include "delpezzo/json_io.hpp"

#include <fstream>
#include <sstream>

#include "delpezzo/errors.hpp"

namespace delpezzo::io {

namespace {

const char* status_name(SmoothnessVerdict::Status s) {
  switch (s) {
    case SmoothnessVerdict::Status::smooth:
      return "smooth";
    case SmoothnessVerdict::Status::singular:
      return "singular";
    case SmoothnessVerdict::Status::degenerate:
      return "degenerate";
  }
  return "?";
}

const char* status_name(ModpVerdict::Status s) {
  switch (s) {
    case ModpVerdict::Status::smooth:
      return "smooth";
    case ModpVerdict::Status::singular:
      return "singular";
    case ModpVerdict::Status::bad_prime:
      return "bad_prime";
  }
  return "?";
}

json poly_json(const UniPoly& f, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(to_json(c));
  return {{"poly", f.to_string(var)}, {"coefficients", coeffs}};
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "seed") return {Provenance::Kind::seed, 0};
  if (s == "tangent") return {Provenance::Kind::tangent, 0};
  if (s == "sweep") return {Provenance::Kind::sweep, 0};
  if (s == "hop") return {Provenance::Kind::hop, 0};
  if (s.starts_with("multiple(") && s.ends_with(")")) {
    return {Provenance::Kind::multiple, std::stol(s.substr(9, s.size() - 10))};
  }
  throw InputError("unknown provenance '" + s + "'");
}

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InputError("expected a rational as a string or integer, got " + j.dump());
}

json to_json(const SurfaceParams& s) {
  return {{"a", to_json(s.a)},
          {"b", to_json(s.b)},
          {"c", to_json(s.c)},
          {"d", to_json(s.d)},
          {"e", to_json(s.e)},
          {"f", json::array({to_json(s.f[0]), to_json(s.f[1]), to_json(s.f[2]), to_json(s.f[3])})}};
}

SurfaceParams surface_from_json(const json& j) {
  if (!j.is_object()) throw InputError("surface: expected a JSON object");
  auto field = [&](const char* key) {
    if (!j.contains(key)) throw InputError(std::string("surface: missing field '") + key + "'");
    return rational_from_json(j.at(key));
  };
  SurfaceParams s{field("a"), field("b"), field("c"), field("d"), field("e"), {}};
  if (!j.contains("f") || !j.at("f").is_array() || j.at("f").size() != 4) {
    throw InputError("surface: 'f' must list [f0, f1, f2, f3]");
  }
  for (std::size_t i = 0; i < 4; ++i) s.f[i] = rational_from_json(j.at("f")[i]);
  return s;
}

SurfaceParams load_surface(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open surface file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("surface file " + path.string() + ": " + e.what());
  }
  return surface_from_json(j);
}

json to_json(const FiberPoint& p) { return {{"t", to_json(p.t)}, {"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

FiberPoint fiber_point_from_json(const json& j) {
  return {rational_from_json(j.at("t")), rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

json to_json(const HypothesisReport& r) {
  json j = {{"smooth", r.smooth},
            {"w0_nonzero", r.w0_nonzero},
            {"slope_condition", r.slope_condition},
            {"separable", r.separable},
            {"non_torsion", r.non_torsion},
            {"overall", r.overall}};
  if (r.torsion_order) j["torsion_order"] = *r.torsion_order;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const SmoothnessVerdict& v) {
  json witnesses = json::array();
  for (const auto& w : v.witnesses) {
    const std::string var = to_string(w.chart);
    json roots = json::array();
    for (const auto& r : w.rational_roots) roots.push_back(to_json(r));
    witnesses.push_back({{"chart", var},
                         {"kind", w.kind == SmoothnessWitness::Kind::a4_nonzero ? "a4_nonzero" : "a4_zero"},
                         {"factor", w.factor.to_string(var)},
                         {"rational_roots", roots}});
  }
  return {{"status", status_name(v.status)}, {"witnesses", witnesses}};
}

json to_json(const SmoothnessCrossCheck& c) {
  json j = to_json(c.symbolic);
  json primes = json::array();
  for (const auto& p : c.primes) {
    json e = {{"p", p.p}, {"good", p.good}, {"agrees", p.agrees}, {"note", p.note}};
    if (p.scan) {
      e["scan"] = status_name(p.scan->status);
      e["points_scanned"] = p.scan->points_scanned;
      if (p.scan->singular_point) e["singular_point"] = *p.scan->singular_point;
    }
    primes.push_back(std::move(e));
  }
  j["modp"] = primes;
  j["has_good_prime"] = c.has_good_prime();
  return j;
}

json to_json(const SingularityReport& r, const NormalFormCheck& check) {
  json branches = json::array();
  for (const auto& b : check.branches) {
    branches.push_back({{"case", b.substitution},
                        {"sign", b.sign},
                        {"shape_ok", b.shape_ok},
                        {"condition_ok", b.condition_ok},
                        {"G", b.G}});
  }
  return {{"locus", r.locus},
          {"points", r.points},
          {"sqrt_c", r.sqrt_c_rational ? "rational" : "irrational"},
          {"type", to_string(r.type)},
          {"identity_verified", r.identity_verified},
          {"normal_form", branches}};
}

json to_json(const SingularFiberReport& r) {
  json factors = json::array();
  for (const auto& f : r.factors) {
    factors.push_back({{"factor", f.factor.to_string()},
                       {"degree", f.degree},
                       {"multiplicity", f.multiplicity},
                       {"additive_degree", f.additive_degree}});
  }
  return {{"discriminant", poly_json(r.discriminant.affine, "t")},
          {"z12_coefficient", to_json(r.discriminant.z12_coefficient())},
          {"factors", factors},
          {"multiplicity_at_infinity", r.multiplicity_at_infinity},
          {"infinity_additive", r.infinity_additive},
          {"total_multiplicity", r.total_multiplicity}};
}

json to_json(const GenerationReport& r) {
  json points = json::array();
  for (const auto& gp : r.points) {
    json p = to_json(gp.affine);
    p["point"] = gp.point.to_string();
    p["provenance"] = gp.provenance.to_string();
    p["level"] = gp.level;
    if (gp.parent) p["parent"] = *gp.parent;
    points.push_back(std::move(p));
  }
  json fibers = json::object();
  for (const auto& [t, n] : r.fibers) fibers[t.to_string()] = n;
  return {{"points", points},
          {"fibers", fibers},
          {"all_verified", r.all_verified},
          {"bit_cap_exceeded", r.bit_cap_exceeded},
          {"max_points_reached", r.max_points_reached},
          {"log", r.log}};
}

GenerationReport generation_from_json(const json& j) {
  GenerationReport r;
  for (const auto& p : j.at("points")) {
    GeneratedPoint gp{WPoint::parse(p.at("point").get<std::string>()), fiber_point_from_json(p),
                      provenance_from_string(p.at("provenance").get<std::string>()),
                      p.at("level").get<unsigned>(), std::nullopt};
    if (p.contains("parent")) gp.parent = p.at("parent").get<std::size_t>();
    r.points.push_back(std::move(gp));
  }
  for (const auto& [t, n] : j.at("fibers").items()) r.fibers[Rational::parse(t)] = n.get<std::size_t>();
  r.all_verified = j.at("all_verified").get<bool>();
  r.bit_cap_exceeded = j.at("bit_cap_exceeded").get<bool>();
  r.max_points_reached = j.at("max_points_reached").get<bool>();
  r.log = j.at("log").get<std::vector<std::string>>();
  return r;
}

std::string points_csv(const std::vector<FiberPoint>& points, const std::string& provenance) {
  std::ostringstream os;
  os << "t,x,y,provenance\n";
  for (const auto& p : points) os << p.t << ',' << p.x << ',' << p.y << ',' << provenance << '\n';
  return os.str();
}

std::string points_csv(const GenerationReport& r) {
  std::ostringstream os;
  os << "t,x,y,provenance\n";
  for (const auto& gp : r.points) {
    os << gp.affine.t << ',' << gp.affine.x << ',' << gp.affine.y << ',' << gp.provenance.to_string() << '\n';
  }
  return os.str();
}

}  // namespace delpezzo::io
