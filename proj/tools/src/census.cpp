#include "delpezzo/census.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <sstream>
#include <thread>

#include "delpezzo/errors.hpp"
#include "delpezzo/point_engine.hpp"

namespace delpezzo {

namespace {

Rational sample_rational(std::mt19937_64& rng, unsigned height, bool nonzero) {
  std::uniform_int_distribution<long> num(-static_cast<long>(height), static_cast<long>(height));
  std::uniform_int_distribution<long> den(1, static_cast<long>(height));
  for (;;) {
    Rational r(Integer(num(rng)), Integer(den(rng)));
    if (!nonzero || !r.is_zero()) return r;
  }
}

SurfaceParams sample_params(std::mt19937_64& rng, const CensusConfig& cfg) {
  auto q = [&](bool nonzero = false) { return sample_rational(rng, cfg.height, nonzero); };
  switch (cfg.family) {
    case CensusFamily::general: {
      SurfaceParams s{q(), q(), q(), q(), q(), {}};
      s.f = {q(), q(), q(), q(true)};
      return s;
    }
    case CensusFamily::dw: {
      SurfaceParams s{0, 0, q(), q(), q(), {0, 0, 0, 1}};
      return s;
    }
    case CensusFamily::kloosterman: {
      SurfaceParams s{0, 0, q(true), 0, q(true), {0, 0, 0, 1}};
      return s;
    }
  }
  throw InputError("census: unknown family");
}

void evaluate_row(CensusRow& row, const CensusConfig& cfg) {
  const Surface surface = Surface::build(row.params);
  const SmoothnessVerdict verdict = smoothness_check(surface);
  switch (verdict.status) {
    case SmoothnessVerdict::Status::smooth:
      row.smoothness = "smooth";
      break;
    case SmoothnessVerdict::Status::singular:
      row.smoothness = "singular";
      return;
    case SmoothnessVerdict::Status::degenerate:
      row.smoothness = "degenerate";
      return;
  }
  for (const Rational& t : rationals_by_height(cfg.seed_t_height)) {
    const FiberCurve fiber = surface.fiber_at(t);
    for (long xi = -cfg.seed_x_bound; xi <= cfg.seed_x_bound; ++xi) {
      const Rational x(xi);
      const auto root = is_square(fiber.rhs(x));
      if (!root) continue;
      for (const Rational& y : {*root, -*root}) {
        ++row.points_found;
        const WPoint p = WPoint::from_affine(t, x, y);
        if (!row.seed && check_hypotheses(surface, p).overall) {
          row.seed = p;
          row.hp_certified = true;
        }
        if (root->is_zero()) break;
      }
    }
  }
}

}  // namespace

CensusFamily parse_family(const std::string& name) {
  if (name == "general") return CensusFamily::general;
  if (name == "dw") return CensusFamily::dw;
  if (name == "kloosterman") return CensusFamily::kloosterman;
  throw InputError("unknown family '" + name + "' (general, dw, kloosterman)");
}

std::string to_string(CensusFamily family) {
  switch (family) {
    case CensusFamily::general:
      return "general";
    case CensusFamily::dw:
      return "dw";
    case CensusFamily::kloosterman:
      return "kloosterman";
  }
  return "?";
}

void CensusConfig::validate() const {
  if (samples == 0 && include.empty()) throw InputError("census: samples must be at least 1");
  if (height == 0) throw InputError("census: parameter height must be positive");
  if (seed_t_height == 0) throw InputError("census: seed t-height must be positive");
  if (seed_x_bound < 0) throw InputError("census: seed x bound must be non-negative");
}

SurfaceParams parse_tuple(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
  if (v.size() != 9) throw InputError("tuple '" + text + "' must list a,b,c,d,e,f0,f1,f2,f3");
  return {v[0], v[1], v[2], v[3], v[4], {v[5], v[6], v[7], v[8]}};
}

Census run_census(const CensusConfig& cfg) {
  cfg.validate();
  Census census;
  for (const auto& p : cfg.include) {
    if (p.f[3].is_zero()) throw InputError("census: included tuple has f3 = 0");
    census.rows.push_back({p, "", 0, std::nullopt, false, "not computed"});
  }
  std::mt19937_64 rng(cfg.rng_seed);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    census.rows.push_back({sample_params(rng, cfg), "", 0, std::nullopt, false, "not computed"});
  }

  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < workers; ++k) {
      pool.emplace_back([&, k] {
        try {
          for (std::size_t i = k; i < census.rows.size(); i += workers) evaluate_row(census.rows[i], cfg);
        } catch (...) {
          failures[k] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  for (const auto& row : census.rows) {
    if (row.smoothness == "smooth") ++census.smooth;
    if (row.smoothness == "singular") ++census.singular;
    if (row.smoothness == "degenerate") ++census.degenerate;
    if (row.hp_certified) ++census.certified;
  }
  return census;
}

}  // namespace delpezzo
