#include "delpezzo/point_engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "delpezzo/cubic_model.hpp"
#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

std::size_t bit_size(const FiberPoint& p) { return std::max({p.t.bit_size(), p.x.bit_size(), p.y.bit_size()}); }

// y with y^2 = v, both signs (one when v = 0), positive first.
std::vector<Rational> square_roots(const Rational& v) {
  auto root = is_square(v);
  if (!root) return {};
  if (root->is_zero()) return {Rational(0)};
  return {*root, -*root};
}

}  // namespace

HypothesisReport check_hypotheses(const Surface& surface, const WPoint& p) {
  if (!surface.contains(p)) throw InputError("hypotheses: point " + p.to_string() + " is not on S");
  const SurfaceParams& s = surface.params();
  HypothesisReport r;
  r.smooth = smoothness_check(surface).is_smooth();
  r.w0_nonzero = p.w() != 0;
  r.slope_condition = !(Rational(3) * Rational(p.z()) * s.f[3] + Rational(2) * s.f[2] * Rational(p.w())).is_zero();
  if (const auto aff = p.affine()) {
    r.separable = is_separable(surface.f() - UniPoly::constant(surface.f()(aff->t)));
    const FiberCurve fiber = surface.fiber_at(aff->t);
    if (fiber.is_singular()) {
      r.note = "fiber over t = " + aff->t.to_string() + " is singular";
    } else {
      r.torsion_order = ec::torsion_order(fiber, ECPoint(aff->x, aff->y));
      r.non_torsion = !r.torsion_order.has_value();
    }
  } else {
    r.note = "w0 = 0: the point lies on no affine fiber";
  }
  r.overall = r.smooth && r.w0_nonzero && r.slope_condition && r.separable && r.non_torsion;
  return r;
}

void GenerationConfig::validate() const {
  if (t_height_bound == 0) throw InputError("config: t-height bound must be positive");
  if (multiple_bound == 0) throw InputError("config: multiple bound must be positive");
  if (max_points == 0) throw InputError("config: max points must be positive");
  if (bit_cap == 0) throw InputError("config: bit cap must be positive");
}

std::string Provenance::to_string() const {
  switch (kind) {
    case Kind::seed:
      return "seed";
    case Kind::multiple:
      return "multiple(" + std::to_string(n) + ")";
    case Kind::tangent:
      return "tangent";
    case Kind::sweep:
      return "sweep";
    case Kind::hop:
      return "hop";
  }
  return "?";
}

bool verify_report(const Surface& surface, const GenerationReport& report) {
  for (const auto& gp : report.points) {
    if (!surface.contains(gp.point)) return false;
    const auto aff = gp.point.affine();
    if (!aff || aff->t != gp.affine.t || aff->x != gp.affine.x || aff->y != gp.affine.y) return false;
  }
  return true;
}

std::vector<Rational> rationals_by_height(unsigned bound) {
  struct Node {
    long p, q, r, s;  // open interval (p/q, r/s), r/s may be 1/0
  };
  std::vector<std::pair<long, long>> positive;
  std::vector<Node> stack{{0, 1, 1, 0}};
  const long h = bound;
  while (!stack.empty()) {
    const Node n = stack.back();
    stack.pop_back();
    const long num = n.p + n.r;
    const long den = n.q + n.s;
    if (std::max(num, den) > h) continue;
    positive.emplace_back(num, den);
    stack.push_back({n.p, n.q, num, den});
    stack.push_back({num, den, n.r, n.s});
  }
  std::vector<Rational> pos;
  pos.reserve(positive.size());
  for (const auto& [num, den] : positive) pos.emplace_back(Integer(num), Integer(den));
  std::sort(pos.begin(), pos.end(), [](const Rational& a, const Rational& b) {
    const Integer ha = a.height();
    const Integer hb = b.height();
    return ha != hb ? ha < hb : a < b;
  });
  std::vector<Rational> out{Rational(0)};
  for (const auto& r : pos) {
    out.push_back(r);
    out.push_back(-r);
  }
  return out;
}

std::vector<HopResult> u_hop(const Surface& surface, const FiberPoint& q) {
  const SurfaceParams& s = surface.params();
  if (surface.fiber_at(q.t).rhs(q.x) != q.y * q.y) {
    throw InputError("u_hop: (" + q.x.to_string() + ", " + q.y.to_string() + ") is not on the fiber over t = " +
                     q.t.to_string());
  }
  const Rational u0 = surface.f()(q.t);
  const Rational k = q.y * q.y - q.x * q.x * q.x;
  const Rational linear = s.a * q.x + s.d;
  std::vector<Rational> us{u0};
  if (!s.c.is_zero()) {
    const Rational u1 = -linear / s.c - u0;  // Vieta
    if (u1 != u0) us.push_back(u1);
  }
  // With c = 0 the quadratic is linear and its root is u0; when it vanishes
  // identically every u works and only f(t) = u0 is followed.
  std::vector<HopResult> out;
  for (const Rational& u : us) {
    const Rational residual = (s.c * u + linear) * u + s.b * q.x + s.e - k;
    if (!residual.is_zero()) throw IdentityFailure("u_hop: u = " + u.to_string() + " does not solve the hop quadratic");
    for (const Rational& t : distinct_rational_roots(surface.f() - UniPoly::constant(u))) {
      if (t == q.t) continue;
      FiberPoint moved{t, q.x, q.y};
      if (surface.fiber_at(t).rhs(q.x) != q.y * q.y) {
        throw IdentityFailure("u_hop: hopped point misses the fiber over t = " + t.to_string());
      }
      out.push_back({u, std::move(moved)});
    }
  }
  return out;
}

std::vector<FiberPoint> cp_sweep(const Surface& surface, const WPoint& p, const GenerationConfig& cfg) {
  const auto aff = p.affine();
  if (!aff) throw InputError("cp_sweep: seed has w = 0");
  const PullbackForm ell = pullback_plane(surface, tangent_plane(surface, p));
  if (ell.plane.is_zero()) throw IdentityFailure("cp_sweep: zero tangent plane at a smooth point");

  std::vector<Rational> ts = rationals_by_height(cfg.t_height_bound);
  if (std::find(ts.begin(), ts.end(), aff->t) == ts.end()) ts.push_back(aff->t);

  std::vector<FiberPoint> out;
  for (const Rational& t : ts) {
    const FiberLine line = restrict_to_fiber(ell, t);
    const FiberCurve fiber = surface.fiber_at(t);
    std::vector<FiberPoint> found;
    if (!line.is_vertical()) {
      for (const Rational& x : distinct_rational_roots(eliminated_cubic(line, fiber))) {
        found.push_back({t, x, -(line.alpha * x + line.c0) / line.beta});
      }
    } else if (!line.alpha.is_zero()) {
      const Rational x = -line.c0 / line.alpha;
      for (const Rational& y : square_roots(fiber.rhs(x))) found.push_back({t, x, y});
    }
    for (auto& fp : found) {
      if (fp.t == aff->t && fp.x == aff->x && fp.y == aff->y) continue;
      if (fiber.rhs(fp.x) != fp.y * fp.y) throw IdentityFailure("cp_sweep: emitted point is off its fiber");
      out.push_back(std::move(fp));
    }
  }
  return out;
}

GenerationReport generate(const Surface& surface, const WPoint& seed, const GenerationConfig& cfg) {
  cfg.validate();
  const HypothesisReport hyp = check_hypotheses(surface, seed);
  if (!hyp.overall) throw InputError("generate: seed " + seed.to_string() + " fails the hypotheses");

  GenerationReport report;
  std::set<FiberPoint> seen;
  auto stopped = [&] { return report.bit_cap_exceeded || report.max_points_reached; };

  // Returns the index of the new point, or nothing for duplicates and stops.
  auto emit = [&](const FiberPoint& fp, Provenance prov, unsigned level,
                  std::optional<std::size_t> parent) -> std::optional<std::size_t> {
    if (stopped() || seen.contains(fp)) return std::nullopt;
    if (bit_size(fp) > cfg.bit_cap) {
      report.bit_cap_exceeded = true;
      report.log.push_back("bit cap " + std::to_string(cfg.bit_cap) + " exceeded by a " + prov.to_string() +
                           " point over t = " + fp.t.to_string());
      return std::nullopt;
    }
    WPoint point = WPoint::from_affine(fp.t, fp.x, fp.y);
    if (!surface.contains(point)) throw IdentityFailure("generate: emitted point " + point.to_string() + " is off S");
    seen.insert(fp);
    ++report.fibers[fp.t];
    report.points.push_back({std::move(point), fp, prov, level, parent});
    if (report.points.size() >= cfg.max_points) report.max_points_reached = true;
    return report.points.size() - 1;
  };

  const AffineData seed_aff = *seed.affine();
  emit({seed_aff.t, seed_aff.x, seed_aff.y}, {}, 0, std::nullopt);

  std::vector<std::size_t> frontier{0};
  std::set<Rational> known_fibers{seed_aff.t};
  for (unsigned level = 0; level < cfg.depth && !frontier.empty() && !stopped(); ++level) {
    std::vector<std::size_t> added;
    for (const std::size_t idx : frontier) {
      if (stopped()) break;
      const GeneratedPoint q = report.points[idx];
      const unsigned next_level = level + 1;
      auto take = [&](const FiberPoint& fp, Provenance prov) {
        if (auto i = emit(fp, prov, next_level, idx)) added.push_back(*i);
      };
      const std::string where = q.point.to_string();
      const FiberCurve fiber = surface.fiber_at(q.affine.t);
      if (fiber.is_singular()) {
        report.log.push_back(where + ": singular fiber, skipped");
        continue;
      }
      const ECPoint base(q.affine.x, q.affine.y);

      if (const auto order = ec::torsion_order(fiber, base)) {
        report.log.push_back(where + ": torsion of order " + std::to_string(*order) + ", multiples skipped");
      } else {
        ECPoint acc = base;
        for (unsigned n = 2; n <= cfg.multiple_bound && !stopped(); ++n) {
          acc = ec::add(fiber, acc, base);
          if (acc.is_origin()) throw IdentityFailure("generate: non-torsion point reached O");
          take({q.affine.t, acc.x(), acc.y()}, {Provenance::Kind::multiple, static_cast<long>(n)});
        }
      }

      if (q.affine.y.is_zero()) {
        report.log.push_back(where + ": 2-torsion, tangent point skipped");
      } else {
        try {
          const ECPoint t = tangent_point(surface, q.point);
          take({q.affine.t, t.x(), t.y()}, {Provenance::Kind::tangent, 0});
        } catch (const DegenerateError& e) {
          report.log.push_back(where + ": " + e.what());
        }
      }

      for (const auto& hop : u_hop(surface, q.affine)) take(hop.point, {Provenance::Kind::hop, 0});

      try {
        for (const auto& fp : cp_sweep(surface, q.point, cfg)) take(fp, {Provenance::Kind::sweep, 0});
      } catch (const DegenerateError& e) {
        report.log.push_back(where + ": sweep skipped, " + e.what());
      }
    }
    std::vector<std::size_t> next;
    for (const std::size_t i : added) {
      if (!known_fibers.contains(report.points[i].affine.t)) next.push_back(i);
    }
    for (const std::size_t i : added) known_fibers.insert(report.points[i].affine.t);
    frontier = std::move(next);
  }
  report.all_verified = verify_report(surface, report);
  return report;
}

std::vector<FiberPoint> brute_force_oracle(const Surface& surface, const OracleBox& box) {
  if (box.t_num < 0 || box.t_den < 0 || box.x_num < 0 || box.x_den < 0) {
    throw InputError("oracle: box bounds must be non-negative");
  }
  auto box_rationals = [](long num_bound, long den_bound) {
    std::vector<Rational> out;
    for (long q = 1; q <= den_bound; ++q) {
      for (long p = -num_bound; p <= num_bound; ++p) {
        if (std::gcd(p, q) == 1 || (p == 0 && q == 1)) out.emplace_back(Integer(p), Integer(q));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  // Upper bound on the box size, checked before anything is enumerated.
  auto span = [](long num, long den) { return static_cast<double>(2 * num + 1) * static_cast<double>(den); };
  if (span(box.t_num, box.t_den) * span(box.x_num, box.x_den) > static_cast<double>(kOracleMaxPairs)) {
    throw InputError("oracle: box exceeds the soft limit");
  }
  const auto ts = box_rationals(box.t_num, box.t_den);
  const auto xs = box_rationals(box.x_num, box.x_den);

  std::vector<FiberPoint> out;
  for (const Rational& t : ts) {
    const FiberCurve fiber = surface.fiber_at(t);
    for (const Rational& x : xs) {
      auto ys = square_roots(fiber.rhs(x));
      std::sort(ys.begin(), ys.end());
      for (const Rational& y : ys) out.push_back({t, x, y});
    }
  }
  return out;
}

}  // namespace delpezzo
