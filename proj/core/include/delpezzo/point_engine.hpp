#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/elliptic.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/surface.hpp"
#include "delpezzo/wpoint.hpp"

namespace delpezzo {

struct HypothesisReport {
  bool smooth = false;
  bool w0_nonzero = false;
  bool slope_condition = false;  // 3 z0 f3 + 2 f2 w0 != 0
  bool separable = false;        // f(t) - f(z0/w0)
  bool non_torsion = false;
  bool overall = false;
  std::optional<int> torsion_order;  // set when the point is torsion on a smooth fiber
  std::string note;                  // why a fiber condition could not be evaluated
};

/// Throws InputError when P is not on S.
HypothesisReport check_hypotheses(const Surface& surface, const WPoint& p);

struct GenerationConfig {
  unsigned t_height_bound = 10;
  unsigned multiple_bound = 10;
  unsigned depth = 1;
  std::size_t max_points = 10000;
  std::size_t bit_cap = 65536;

  /// Throws InputError when a bound is zero.
  void validate() const;
};

/// A point on the fiber over t in Weierstrass coordinates.
struct FiberPoint {
  Rational t;
  Rational x;
  Rational y;
  friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
  friend auto operator<=>(const FiberPoint&, const FiberPoint&) = default;
};

struct Provenance {
  enum class Kind { seed, multiple, tangent, sweep, hop };
  Kind kind = Kind::seed;
  long n = 0;  // the multiplier for Kind::multiple
  std::string to_string() const;  // "seed", "multiple(3)", "tangent", "sweep", "hop"
};

struct GeneratedPoint {
  WPoint point;
  FiberPoint affine;
  Provenance provenance;
  unsigned level = 0;                  // BFS level of the point it was derived from, +1
  std::optional<std::size_t> parent;   // index into GenerationReport::points
};

struct GenerationReport {
  std::vector<GeneratedPoint> points;
  std::map<Rational, std::size_t> fibers;  // t -> number of points
  bool all_verified = false;
  bool bit_cap_exceeded = false;
  bool max_points_reached = false;
  std::vector<std::string> log;  // skipped strategies with reasons
};

/// Recomputes membership for every point of the report.
bool verify_report(const Surface& surface, const GenerationReport& report);

/// Positive rationals of height <= bound via Stern-Brocot, then closed under
/// sign with 0 first; ordered by height, then value (r before -r).
std::vector<Rational> rationals_by_height(unsigned bound);

struct HopResult {
  Rational u;
  FiberPoint point;
};

/// Moves an affine point (x0, y0) of the fiber over t0 to every other rational
/// fiber through the same (x0, y0). Throws InputError when (x0, y0) is not on
/// that fiber.
std::vector<HopResult> u_hop(const Surface& surface, const FiberPoint& q);

/// Rational points on the tangent-plane section through P over fibers of
/// height <= cfg.t_height_bound (and the fiber of P itself), P excluded.
/// Throws InputError when P is off S or has w = 0, DegenerateError when
/// theta(P) is singular on W.
std::vector<FiberPoint> cp_sweep(const Surface& surface, const WPoint& p, const GenerationConfig& cfg);

/// Breadth-first expansion from the seed. Throws InputError when the seed
/// fails the hypotheses; BitCapExceeded never escapes (the partial report is
/// flagged instead).
GenerationReport generate(const Surface& surface, const WPoint& seed, const GenerationConfig& cfg);

struct OracleBox {
  long t_num = 1;  // |numerator of t| <= t_num
  long t_den = 1;  // 1 <= denominator of t <= t_den
  long x_num = 5;
  long x_den = 1;
};
/// Soft limit on (2 t_num + 1) t_den (2 x_num + 1) x_den, the raw size of the oracle box.
/// Soft limit on (t, x) pairs examined by the oracle.
inline constexpr std::size_t kOracleMaxPairs = 50'000'000;

/// Every (t, x, y) with t and x in the box and y rational, ordered by t, x,
/// then y. A zero denominator bound gives an empty box. Throws InputError for
/// negative bounds or a box beyond the limit.
std::vector<FiberPoint> brute_force_oracle(const Surface& surface, const OracleBox& box);

}  // namespace delpezzo
