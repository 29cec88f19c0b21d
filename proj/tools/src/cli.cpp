#include "delpezzo/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "delpezzo/census.hpp"
#include "delpezzo/cubic_model.hpp"
#include "delpezzo/errors.hpp"
#include "delpezzo/json_io.hpp"
#include "delpezzo/point_engine.hpp"

namespace delpezzo::cli {

namespace {

using io::json;

struct Options {
  std::string surface_path;
  std::string seed;
  std::string out_path;
  std::string format = "json";
  std::vector<std::uint64_t> primes{7, 11, 13, 17, 19};
  GenerationConfig gen;
  OracleBox box;
  std::size_t samples = 20;
  unsigned height = 5;
  std::uint64_t rng_seed = 1;
  std::string family = "general";
  std::vector<std::string> include;
  unsigned seed_t_height = 2;
  long seed_x_bound = 5;
};

class Output {
 public:
  Output(std::ostream& out, const std::string& path) : out_(out), path_(path) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(path_);
    if (!file) throw InputError("cannot write " + path_);
    file << text;
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }

 private:
  std::ostream& out_;
  std::string path_;
};

WPoint parse_seed(const Options& o) {
  if (o.seed.empty()) throw InputError("--seed is required");
  return WPoint::parse(o.seed);
}

json seed_json(const WPoint& p) {
  json j = {{"point", p.to_string()}};
  if (const auto aff = p.affine()) j.update(io::to_json(FiberPoint{aff->t, aff->x, aff->y}));
  return j;
}

int cmd_check(const Surface& s, const Options& o, const Output& out) {
  const WPoint seed = parse_seed(o);
  const HypothesisReport r = check_hypotheses(s, seed);
  out.write(json{{"surface", io::to_json(s.params())}, {"seed", seed_json(seed)}, {"hypotheses", io::to_json(r)}});
  return r.overall ? kSuccess : kNegative;
}

int cmd_classify(const Surface& s, const Output& out) {
  const SingularityReport r = classify_singularities(s);
  json j = io::to_json(r, verify_normal_form(s));
  j["surface"] = io::to_json(s.params());
  out.write(j);
  return r.identity_verified ? kSuccess : kNegative;
}

int cmd_smooth(const Surface& s, const Options& o, const Output& out) {
  const SmoothnessCrossCheck check = cross_validate_smoothness(s, o.primes);
  json j = io::to_json(check);
  j["surface"] = io::to_json(s.params());
  j["discriminant_z12_coefficient"] = io::to_json(s.discriminant_form().z12_coefficient());
  if (check.symbolic.is_smooth()) j["singular_fibers"] = io::to_json(singular_fiber_report(s));
  out.write(j);
  return check.symbolic.is_smooth() ? kSuccess : kNegative;
}

int cmd_generate(const Surface& s, const Options& o, const Output& out) {
  const WPoint seed = parse_seed(o);
  o.gen.validate();
  const HypothesisReport hyp = check_hypotheses(s, seed);
  json j = {{"surface", io::to_json(s.params())}, {"seed", seed_json(seed)}};
  if (!hyp.overall) {
    j["hypotheses"] = io::to_json(hyp);
    j["error"] = "seed fails the hypotheses";
    out.write(j);
    return kNegative;
  }
  const GenerationReport r = generate(s, seed, o.gen);
  if (o.format == "csv") {
    out.write(io::points_csv(r));
  } else {
    j.update(io::to_json(r));
    j["config"] = {{"n", o.gen.multiple_bound},
                   {"t_height", o.gen.t_height_bound},
                   {"depth", o.gen.depth},
                   {"max_points", o.gen.max_points},
                   {"bit_cap", o.gen.bit_cap}};
    out.write(j);
  }
  return r.bit_cap_exceeded ? kInputError : kSuccess;
}

int cmd_sweep(const Surface& s, const Options& o, const Output& out) {
  const WPoint seed = parse_seed(o);
  o.gen.validate();
  const auto points = cp_sweep(s, seed, o.gen);
  if (o.format == "csv") {
    out.write(io::points_csv(points, "sweep"));
    return kSuccess;
  }
  json list = json::array();
  for (const auto& p : points) list.push_back(io::to_json(p));
  out.write(json{{"surface", io::to_json(s.params())},
                 {"seed", seed_json(seed)},
                 {"section", pullback_plane(s, tangent_plane(s, seed)).to_string()},
                 {"t_height", o.gen.t_height_bound},
                 {"points", list}});
  return kSuccess;
}

int cmd_identities(const Surface& s, const Options& o, const Output& out) {
  json results = json::array();
  bool all = true;
  auto record = [&](const std::string& name, const std::function<std::string()>& body) {
    json e = {{"name", name}};
    try {
      const std::string detail = body();
      e["passed"] = true;
      e["detail"] = detail;
    } catch (const DegenerateError& ex) {
      e["passed"] = nullptr;
      e["detail"] = std::string("skipped: ") + ex.what();
    } catch (const IdentityFailure& ex) {
      e["passed"] = false;
      e["detail"] = ex.what();
      all = false;
    }
    results.push_back(std::move(e));
  };
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw IdentityFailure(what);
  };

  record("discriminant_z12", [&] {
    const auto& p = s.params();
    const Rational expected = Rational(-432) * p.c * p.c * p.f[3].pow(4);
    const Rational got = s.discriminant_form().z12_coefficient();
    require(got == expected, "z^12 coefficient " + got.to_string() + " != " + expected.to_string());
    return got.to_string();
  });
  record("discriminant_budget", [&]() -> std::string {
    if (!smoothness_check(s).is_smooth()) throw DegenerateError("surface is not smooth");
    const auto r = singular_fiber_report(s);
    require(r.total_multiplicity == 12, "total multiplicity " + std::to_string(r.total_multiplicity));
    return "total multiplicity 12";
  });
  record("normal_form", [&]() -> std::string {
    const auto check = verify_normal_form(s);
    require(check.verified(), "normal form substitution failed");
    return to_string(check.type);
  });
  record("theta_on_W", [&]() -> std::string {
    const CubicW W(s);
    require(W.contains(theta(s, WPoint::base_point())), "theta(O) is off W");
    if (!o.seed.empty()) require(W.contains(theta(s, parse_seed(o))), "theta(seed) is off W");
    return "F_W vanishes";
  });
  if (!o.seed.empty()) {
    const WPoint seed = parse_seed(o);
    record("euler_relation", [&]() -> std::string {
      const P3Point image = theta(s, seed);
      require(tangent_plane(s, seed).evaluate(image.as_rational()).is_zero(), "tangent plane misses theta(P)");
      return "plane contains theta(P)";
    });
    record("tangent_point", [&] { return "Q = -[2]P = " + tangent_point(s, seed).to_string(); });
  }
  out.write(json{{"surface", io::to_json(s.params())}, {"identities", results}, {"all_passed", all}});
  return all ? kSuccess : kNegative;
}

int cmd_oracle(const Surface& s, const Options& o, const Output& out) {
  const auto points = brute_force_oracle(s, o.box);
  if (o.format == "csv") {
    out.write(io::points_csv(points, "oracle"));
    return kSuccess;
  }
  json list = json::array();
  std::set<Rational> fibers;
  for (const auto& p : points) {
    list.push_back(io::to_json(p));
    fibers.insert(p.t);
  }
  out.write(json{{"surface", io::to_json(s.params())},
                 {"box", {{"t_num", o.box.t_num}, {"t_den", o.box.t_den}, {"x_num", o.box.x_num}, {"x_den", o.box.x_den}}},
                 {"points", list},
                 {"fiber_count", fibers.size()}});
  return kSuccess;
}

int cmd_search(const Options& o, const Output& out) {
  CensusConfig cfg;
  cfg.samples = o.samples;
  cfg.height = o.height;
  cfg.rng_seed = o.rng_seed;
  cfg.family = parse_family(o.family);
  for (const auto& t : o.include) cfg.include.push_back(parse_tuple(t));
  cfg.seed_t_height = o.seed_t_height;
  cfg.seed_x_bound = o.seed_x_bound;
  const Census census = run_census(cfg);

  if (o.format == "csv") {
    std::ostringstream os;
    os << "a,b,c,d,e,f0,f1,f2,f3,smoothness,seed,certificate,picard_rank\n";
    for (const auto& r : census.rows) {
      const auto& p = r.params;
      os << p.a << ',' << p.b << ',' << p.c << ',' << p.d << ',' << p.e << ',' << p.f[0] << ',' << p.f[1] << ','
         << p.f[2] << ',' << p.f[3] << ',' << r.smoothness << ',' << (r.seed ? r.seed->to_string() : "") << ','
         << (r.hp_certified ? "HP-certified" : "") << ',' << r.picard_rank << '\n';
    }
    out.write(os.str());
    return kSuccess;
  }
  json rows = json::array();
  for (const auto& r : census.rows) {
    json row = {{"tuple", io::to_json(r.params)},
                {"smoothness", r.smoothness},
                {"points_found", r.points_found},
                {"certificate", r.hp_certified ? "HP-certified" : "none"},
                {"picard_rank", r.picard_rank}};
    row["seed"] = r.seed ? json(r.seed->to_string()) : json(nullptr);
    rows.push_back(std::move(row));
  }
  out.write(json{{"config",
                  {{"samples", cfg.samples},
                   {"height", cfg.height},
                   {"rng_seed", cfg.rng_seed},
                   {"family", to_string(cfg.family)},
                   {"seed_t_height", cfg.seed_t_height},
                   {"seed_x_bound", cfg.seed_x_bound}}},
                 {"rows", rows},
                 {"summary",
                  {{"tuples", census.rows.size()},
                   {"smooth", census.smooth},
                   {"singular", census.singular},
                   {"degenerate", census.degenerate},
                   {"hp_certified", census.certified}}}});
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rational-point tools for degree-one del Pezzo surfaces", "delpezzo"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_surface) {
    auto* opt = sub->add_option("--surface", o.surface_path, "Surface file (JSON)");
    if (needs_surface) opt->required();
    sub->add_option("--out", o.out_path, "Write output to this path instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto seed_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--seed", o.seed, "Seed point \"[x:y:z:w]\"");
    if (required) opt->required();
  };
  auto engine_opts = [&](CLI::App* sub) {
    sub->add_option("--n", o.gen.multiple_bound, "Largest multiple [n]P")->check(CLI::PositiveNumber);
    sub->add_option("--t-height", o.gen.t_height_bound, "Height bound for swept fibers")->check(CLI::PositiveNumber);
    sub->add_option("--depth", o.gen.depth, "BFS depth");
    sub->add_option("--max-points", o.gen.max_points, "Stop after this many points")->check(CLI::PositiveNumber);
    sub->add_option("--bit-cap", o.gen.bit_cap, "Coefficient bit-size cap")->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Evaluate the seed hypotheses");
  common(check, true);
  seed_opt(check, true);
  auto* classify = app.add_subcommand("classify", "Classify the singularities of the cubic model");
  common(classify, true);
  auto* smooth = app.add_subcommand("smooth", "Decide smoothness and cross-check modulo primes");
  common(smooth, true);
  smooth->add_option("--primes", o.primes, "Primes for the finite-field scan")->delimiter(',');
  auto* gen = app.add_subcommand("generate", "Generate rational points from a seed");
  common(gen, true);
  seed_opt(gen, true);
  engine_opts(gen);
  auto* sweep = app.add_subcommand("sweep", "Points on the tangent-plane section through the seed");
  common(sweep, true);
  seed_opt(sweep, true);
  sweep->add_option("--t-height", o.gen.t_height_bound, "Height bound for swept fibers")->check(CLI::PositiveNumber);
  auto* ident = app.add_subcommand("identities", "Run the exact identity checks");
  common(ident, true);
  seed_opt(ident, false);
  auto* oracle = app.add_subcommand("oracle", "Brute-force point search in a box");
  common(oracle, true);
  oracle->add_option("--t-num", o.box.t_num, "Bound on |numerator of t|")->check(CLI::NonNegativeNumber);
  oracle->add_option("--t-den", o.box.t_den, "Bound on the denominator of t")->check(CLI::NonNegativeNumber);
  oracle->add_option("--x-num", o.box.x_num, "Bound on |numerator of x|")->check(CLI::NonNegativeNumber);
  oracle->add_option("--x-den", o.box.x_den, "Bound on the denominator of x")->check(CLI::NonNegativeNumber);
  auto* search = app.add_subcommand("search-params", "Sample parameter tuples and look for certified seeds");
  common(search, false);
  search->add_option("--samples", o.samples, "Number of sampled tuples");
  search->add_option("--height", o.height, "Height bound for sampled parameters")->check(CLI::PositiveNumber);
  search->add_option("--rng-seed", o.rng_seed, "Random seed");
  search->add_option("--family", o.family, "general, dw or kloosterman")
      ->check(CLI::IsMember({"general", "dw", "kloosterman"}));
  search->add_option("--include", o.include, "Extra tuple a,b,c,d,e,f0,f1,f2,f3 (repeatable)");
  search->add_option("--seed-t-height", o.seed_t_height, "Fiber height for the seed search")
      ->check(CLI::PositiveNumber);
  search->add_option("--seed-x-bound", o.seed_x_bound, "Integer x bound for the seed search")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    const Output output(out, o.out_path);
    if (search->parsed()) return cmd_search(o, output);
    const Surface surface = Surface::build(io::load_surface(o.surface_path));
    if (check->parsed()) return cmd_check(surface, o, output);
    if (classify->parsed()) return cmd_classify(surface, output);
    if (smooth->parsed()) return cmd_smooth(surface, o, output);
    if (gen->parsed()) return cmd_generate(surface, o, output);
    if (sweep->parsed()) return cmd_sweep(surface, o, output);
    if (ident->parsed()) return cmd_identities(surface, o, output);
    if (oracle->parsed()) return cmd_oracle(surface, o, output);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BitCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DegenerateError& e) {
    err << "degenerate: " << e.what() << '\n';
    return kNegative;
  } catch (const IdentityFailure& e) {
    err << "identity failure: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInputError;
}

}  // namespace delpezzo::cli
