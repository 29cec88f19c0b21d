#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "delpezzo/errors.hpp"
#include "delpezzo/quad_ext.hpp"
#include "delpezzo/rational.hpp"

namespace delpezzo {

inline constexpr std::size_t kMaxVariables = 4;

/// Exponent vector; unused trailing slots stay zero.
using Exponents = std::array<unsigned, kMaxVariables>;

/// Total-degree graded order, ties broken lexicographically (X0 first).
struct GradedOrder {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const {
    const unsigned dl = std::accumulate(lhs.begin(), lhs.end(), 0U);
    const unsigned dr = std::accumulate(rhs.begin(), rhs.end(), 0U);
    if (dl != dr) return dl < dr;
    return lhs > rhs;
  }
};

namespace detail {
inline bool coefficient_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coefficient_is_zero(const QuadExt& c) { return c.is_zero(); }
// Writes the separator and coefficient of one term; a unit coefficient is
// dropped when a monomial follows. Returns whether a "*" is needed.
inline bool write_coefficient(std::ostream& os, const Rational& c, bool first, bool has_monomial) {
  const bool negative = c.sign() < 0;
  if (first) os << (negative ? "-" : "");
  else os << (negative ? " - " : " + ");
  const Rational mag = c.abs();
  if (has_monomial && mag == Rational(1)) return false;
  os << mag.to_string();
  return true;
}
inline bool write_coefficient(std::ostream& os, const QuadExt& c, bool first, bool /*has_monomial*/) {
  if (!first) os << " + ";
  os << "(" << c.to_string() << ")";
  return true;
}
}  // namespace detail

/// Sparse polynomial in up to four variables over K (Rational or QuadExt).
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality. Because QuadExt carries its field context, constants are always
/// supplied by the caller rather than conjured from nothing.
template <typename K>
class MultiPoly {
 public:
  using Terms = std::map<Exponents, K, GradedOrder>;

  explicit MultiPoly(std::size_t arity) : arity_(arity) {
    if (arity == 0 || arity > kMaxVariables) throw InputError("MultiPoly arity must be 1..4");
  }

  static MultiPoly constant(std::size_t arity, const K& value) {
    MultiPoly p(arity);
    p.add_term(Exponents{}, value);
    return p;
  }

  static MultiPoly variable(std::size_t arity, std::size_t index, const K& one) {
    MultiPoly p(arity);
    if (index >= arity) throw InputError("MultiPoly variable index out of range");
    Exponents e{};
    e[index] = 1;
    p.add_term(e, one);
    return p;
  }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds `coefficient` * monomial(e), dropping the term if it cancels.
  void add_term(const Exponents& e, const K& coefficient) {
    for (std::size_t i = arity_; i < kMaxVariables; ++i) {
      if (e[i] != 0) throw InputError("MultiPoly exponent beyond arity");
    }
    if (detail::coefficient_is_zero(coefficient)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, coefficient);
      return;
    }
    it->second += coefficient;
    if (detail::coefficient_is_zero(it->second)) terms_.erase(it);
  }

  /// Coefficient of monomial e, if present.
  const K* coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0U);
    for (const auto& [e, c] : terms_) {
      if (std::accumulate(e.begin(), e.end(), 0U) != d) return false;
    }
    return true;
  }

  /// True when variable `index` occurs in no term.
  bool is_free_of(std::size_t index) const {
    for (const auto& [e, c] : terms_) {
      if (e[index] != 0) return false;
    }
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& rhs) {
    require_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& rhs) {
    require_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  MultiPoly& operator*=(const MultiPoly& rhs) {
    require_arity(rhs);
    MultiPoly prod(arity_);
    for (const auto& [el, cl] : terms_) {
      for (const auto& [er, cr] : rhs.terms_) {
        Exponents e{};
        for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] = el[i] + er[i];
        prod.add_term(e, cl * cr);
      }
    }
    *this = std::move(prod);
    return *this;
  }

  MultiPoly& operator*=(const K& scalar) {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * scalar);
    *this = std::move(r);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(MultiPoly lhs, const MultiPoly& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(MultiPoly lhs, const K& rhs) { return lhs *= rhs; }
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.arity_ == rhs.arity_ && lhs.terms_ == rhs.terms_;
  }

  /// Replaces variable i by replacements[i]. All replacements must share an
  /// arity, which becomes the arity of the result.
  MultiPoly substitute(const std::vector<MultiPoly>& replacements) const {
    if (replacements.size() != arity_) throw InputError("substitute: one replacement per variable required");
    const std::size_t out_arity = replacements.front().arity();
    for (const auto& r : replacements) {
      if (r.arity() != out_arity) throw InputError("substitute: replacement arity mismatch");
    }
    // Cache powers per variable.
    std::vector<std::vector<MultiPoly>> powers(arity_);
    MultiPoly result(out_arity);
    for (const auto& [e, c] : terms_) {
      MultiPoly term = MultiPoly::constant(out_arity, c);
      for (std::size_t i = 0; i < arity_; ++i) {
        if (e[i] == 0) continue;
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(replacements[i]);
        while (cache.size() < e[i]) cache.push_back(cache.back() * replacements[i]);
        term *= cache[e[i] - 1];
      }
      result += term;
    }
    return result;
  }

  /// Evaluates at a point; `zero` supplies the additive identity of K.
  K evaluate(const std::vector<K>& point, const K& zero) const {
    if (point.size() != arity_) throw InputError("evaluate: point arity mismatch");
    K acc = zero;
    for (const auto& [e, c] : terms_) {
      K term = c;
      for (std::size_t i = 0; i < arity_; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
      }
      acc += term;
    }
    return acc;
  }

  /// Partial derivative in variable `index`.
  MultiPoly partial(std::size_t index) const {
    MultiPoly d(arity_);
    for (const auto& [e, c] : terms_) {
      if (e[index] == 0) continue;
      Exponents f = e;
      --f[index];
      K term = c;
      for (unsigned k = 1; k < e[index]; ++k) term += c;
      d.add_term(f, term);
    }
    return d;
  }

  /// Keeps only the terms whose exponents satisfy `keep`.
  template <typename Pred>
  MultiPoly filter(Pred keep) const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
      if (keep(e)) r.terms_.emplace(e, c);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const bool has_monomial = std::any_of(it->first.begin(), it->first.end(), [](auto e) { return e != 0; });
      bool star = detail::write_coefficient(os, it->second, first, has_monomial);
      first = false;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (it->first[i] == 0) continue;
        os << (star ? "*" : "") << "X" << i;
        star = true;
        if (it->first[i] > 1) os << "^" << it->first[i];
      }
    }
    return os.str();
  }

 private:
  void require_arity(const MultiPoly& rhs) const {
    if (rhs.arity_ != arity_) throw InputError("MultiPoly arity mismatch");
  }

  std::size_t arity_;
  Terms terms_;
};

}  // namespace delpezzo
