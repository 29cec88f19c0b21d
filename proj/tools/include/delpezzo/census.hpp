#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/surface.hpp"
#include "delpezzo/wpoint.hpp"

namespace delpezzo {

enum class CensusFamily {
  general,      // all nine parameters sampled
  dw,           // a = b = 0, f = t^3
  kloosterman,  // (0, 0, c, 0, e | 0, 0, 0, 1): y^2 = x^3 + c z^6 + e w^6
};

CensusFamily parse_family(const std::string& name);
std::string to_string(CensusFamily family);

struct CensusConfig {
  std::size_t samples = 20;
  unsigned height = 5;  // parameter height bound
  std::uint64_t rng_seed = 1;
  CensusFamily family = CensusFamily::general;
  std::vector<SurfaceParams> include;  // scanned ahead of the samples
  unsigned seed_t_height = 2;
  long seed_x_bound = 5;

  /// Throws InputError for zero samples (with nothing included) or bounds.
  void validate() const;
};

struct CensusRow {
  SurfaceParams params;
  std::string smoothness;           // smooth, singular or degenerate
  std::size_t points_found = 0;     // small points met during the seed search
  std::optional<WPoint> seed;       // first seed passing every hypothesis
  bool hp_certified = false;
  std::string picard_rank = "not computed";
};

struct Census {
  std::vector<CensusRow> rows;
  std::size_t smooth = 0;
  std::size_t singular = 0;
  std::size_t degenerate = 0;
  std::size_t certified = 0;
};

/// Parses "a,b,c,d,e,f0,f1,f2,f3".
SurfaceParams parse_tuple(const std::string& text);

/// Reproducible for a fixed rng_seed; rows are evaluated in parallel.
Census run_census(const CensusConfig& cfg);

}  // namespace delpezzo
