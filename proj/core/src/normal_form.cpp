#include <algorithm>
#include <functional>
#include <optional>

#include "delpezzo/cubic_model.hpp"
#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

// Scalars of the field the substitution lives in: Q, or Q(sqrt D).
template <typename K>
struct Field {
  std::function<K(const Rational&)> lift;
  K root;  // +sqrt(D)
};

Field<Rational> rational_field(const Rational& root) {
  return {[](const Rational& r) { return r; }, root};
}

Field<QuadExt> quadratic_field(const Rational& radicand) {
  return {[radicand](const Rational& r) { return QuadExt::embed(r, radicand); }, QuadExt::root(radicand)};
}

template <typename K>
MultiPoly<K> linear(const std::array<K, 4>& coeffs) {
  MultiPoly<K> out(4);
  for (std::size_t i = 0; i < 4; ++i) {
    Exponents e{};
    e[i] = 1;
    out.add_term(e, coeffs[i]);
  }
  return out;
}

template <typename K>
MultiPoly<K> cubic_form(const Field<K>& k, const SurfaceParams& s) {
  MultiPoly<K> F(4);
  F.add_term({3, 0, 0, 0}, k.lift(1));
  F.add_term({1, 0, 1, 1}, k.lift(s.a));
  F.add_term({1, 0, 0, 2}, k.lift(s.b));
  F.add_term({0, 0, 2, 1}, k.lift(s.c));
  F.add_term({0, 0, 1, 2}, k.lift(s.d));
  F.add_term({0, 0, 0, 3}, k.lift(s.e));
  F.add_term({0, 2, 0, 1}, k.lift(-1));
  return F;
}

// Lowest power of variable `var` among the terms (the order of vanishing at 0).
template <typename K>
unsigned vanishing_order(const MultiPoly<K>& p, std::size_t var) {
  unsigned order = ~0U;
  for (const auto& [e, c] : p.terms()) order = std::min(order, e[var]);
  return order;
}

// Specializes the listed variables to constants, keeping the arity.
template <typename K>
MultiPoly<K> specialize(const Field<K>& k, const MultiPoly<K>& p, const std::array<std::optional<long>, 4>& values) {
  std::vector<MultiPoly<K>> repl;
  for (std::size_t i = 0; i < 4; ++i) {
    if (values[i]) {
      repl.push_back(MultiPoly<K>::constant(4, k.lift(*values[i])));
    } else {
      repl.push_back(MultiPoly<K>::variable(4, i, k.lift(1)));
    }
  }
  return p.substitute(repl);
}

template <typename K>
NormalFormBranch run_branch(const Field<K>& k, const SurfaceParams& s, SingularityType type, int sign) {
  const K zero = k.lift(0);
  const K one = k.lift(1);
  const K r = sign > 0 ? k.root : -k.root;
  const K two = k.lift(2);
  const K a = k.lift(s.a);
  const K d = k.lift(s.d);

  NormalFormBranch branch;
  branch.sign = sign;
  std::vector<MultiPoly<K>> sub;
  MultiPoly<K> expected(4);
  if (type == SingularityType::two_A2 && !s.a.is_zero()) {
    branch.substitution = "a.i";
    const K scale = two * r / a;
    sub = {linear<K>({scale, -(d / a), -scale, zero}), linear<K>({zero, zero, -(one / two), one / two}),
           linear<K>({zero, zero, one / (two * r), one / (two * r)}), linear<K>({zero, one, zero, zero})};
    expected.add_term({1, 1, 0, 1}, one);
  } else if (type == SingularityType::two_A2) {
    branch.substitution = "a.ii";
    const K shift = d / (two * r);
    sub = {linear<K>({zero, zero, one, zero}), linear<K>({-(one / two), shift / two, zero, one / two}),
           linear<K>({one / (two * r), -(shift / (two * r)), zero, one / (two * r)}),
           linear<K>({zero, one, zero, zero})};
    expected.add_term({1, 1, 0, 1}, one);
  } else if (type == SingularityType::A5) {
    branch.substitution = "b";
    sub = {linear<K>({one / a, -(d / a), zero, zero}), linear<K>({zero, zero, one, zero}),
           linear<K>({zero, zero, zero, one}), linear<K>({zero, one, zero, zero})};
    expected.add_term({1, 1, 0, 1}, one);
  } else {
    branch.substitution = "c";
    sub = {linear<K>({zero, zero, one, zero}), linear<K>({zero, one, zero, zero}),
           linear<K>({zero, zero, zero, one}), linear<K>({one / r, zero, zero, zero})};
    expected.add_term({2, 0, 0, 1}, one);
  }

  const MultiPoly<K> image = cubic_form(k, s).substitute(sub);
  const MultiPoly<K> G = image.filter([](const Exponents& e) { return e[3] == 0; });
  branch.G = G.to_string();
  branch.shape_ok = image - G == expected && G.is_free_of(3);

  switch (type) {
    case SingularityType::two_A2: {
      // G(0, 0, 1) != 0
      const K value = G.evaluate({zero, zero, one, zero}, zero);
      branch.condition_ok = !(value == zero);
      break;
    }
    case SingularityType::A5: {
      // G(0, X1, 1) vanishes to order 1 at 0, G(X0, 0, 1) to order 3.
      const auto g0 = specialize(k, G, {0L, std::nullopt, 1L, std::nullopt});
      const auto g1 = specialize(k, G, {std::nullopt, 0L, 1L, std::nullopt});
      branch.condition_ok = !g0.is_zero() && !g1.is_zero() && vanishing_order(g0, 1) == 1 &&
                            vanishing_order(g1, 0) == 3;
      break;
    }
    case SingularityType::E6: {
      // G(0, X1, X2) = X2^3
      MultiPoly<K> cube(4);
      cube.add_term({0, 0, 3, 0}, one);
      branch.condition_ok = specialize(k, G, {0L, std::nullopt, std::nullopt, std::nullopt}) == cube;
      break;
    }
  }
  return branch;
}

template <typename K>
void run_branches(NormalFormCheck& check, const Field<K>& k, const SurfaceParams& s) {
  check.branches.push_back(run_branch(k, s, check.type, 1));
  if (check.type != SingularityType::A5) check.branches.push_back(run_branch(k, s, check.type, -1));
}

SingularityType regime(const SurfaceParams& s) {
  if (!s.c.is_zero()) return SingularityType::two_A2;
  if (!s.a.is_zero()) return SingularityType::A5;
  return SingularityType::E6;
}

}  // namespace

std::string to_string(SingularityType type) {
  switch (type) {
    case SingularityType::two_A2:
      return "2xA2";
    case SingularityType::A5:
      return "A5";
    case SingularityType::E6:
      return "E6";
  }
  return "?";
}

bool NormalFormCheck::verified() const {
  if (branches.empty()) return false;
  return std::all_of(branches.begin(), branches.end(),
                     [](const NormalFormBranch& b) { return b.shape_ok && b.condition_ok; });
}

NormalFormCheck verify_normal_form(const Surface& surface) {
  const SurfaceParams& s = surface.params();
  NormalFormCheck check;
  check.type = regime(s);
  if (check.type == SingularityType::A5) {
    check.branches.push_back(run_branch(rational_field(Rational(0)), s, check.type, 1));
    return check;
  }
  const Rational& radicand = check.type == SingularityType::two_A2 ? s.c : s.d;
  if (radicand.is_zero()) throw DegenerateError("normal form: a = c = d = 0");
  if (auto root = is_square(radicand)) {
    check.root_rational = true;
    run_branches(check, rational_field(*root), s);
  } else {
    check.root_rational = false;
    run_branches(check, quadratic_field(radicand), s);
  }
  return check;
}

SingularityReport classify_singularities(const Surface& surface) {
  const SurfaceParams& s = surface.params();
  SingularityReport report;
  report.type = regime(s);
  if (s.c.is_zero()) {
    report.locus = "[0:0:1:0]";
    report.points = {report.locus};
    report.sqrt_c_rational = true;
  } else if (auto root = is_square(s.c)) {
    for (const Rational& r : {*root, -*root}) {
      report.points.push_back(P3Point::from_rational({Rational(0), r, Rational(1), Rational(0)}).to_string());
    }
    report.locus = report.points[0] + ", " + report.points[1];
    report.sqrt_c_rational = true;
  } else {
    report.locus = "[0:±√" + s.c.to_string() + ":1:0]";
    report.sqrt_c_rational = false;
  }
  report.identity_verified = verify_normal_form(surface).verified();
  return report;
}

}  // namespace delpezzo
