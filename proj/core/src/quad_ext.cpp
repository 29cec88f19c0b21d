#include "delpezzo/quad_ext.hpp"

#include "delpezzo/errors.hpp"

namespace delpezzo {

QuadExt::QuadExt(Rational p, Rational q, Rational radicand)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(radicand)) {
  if (is_square(d_)) {
    throw InputError("QuadExt radicand " + d_.to_string() + " is a rational square");
  }
}

void QuadExt::require_same_field(const QuadExt& rhs) const {
  if (d_ != rhs.d_) {
    throw InputError("QuadExt context mismatch: sqrt(" + d_.to_string() + ") vs sqrt(" +
                     rhs.d_.to_string() + ")");
  }
}

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw InputError("division by zero in Q(sqrt(" + d_.to_string() + "))");
  return QuadExt(p_ / n, -q_ / n, d_, Unchecked{});
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  require_same_field(rhs);
  p_ += rhs.p_;
  q_ += rhs.q_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  require_same_field(rhs);
  p_ -= rhs.p_;
  q_ -= rhs.q_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  require_same_field(rhs);
  Rational p = p_ * rhs.p_ + q_ * rhs.q_ * d_;
  Rational q = p_ * rhs.q_ + q_ * rhs.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

std::string QuadExt::to_string() const {
  if (q_.is_zero()) return p_.to_string();
  std::string root = "sqrt(" + d_.to_string() + ")";
  std::string irr = q_ == Rational(1) ? root : (q_ == Rational(-1) ? "-" + root : q_.to_string() + "*" + root);
  if (p_.is_zero()) return irr;
  if (q_.sign() < 0) {
    std::string mag = (-q_) == Rational(1) ? root : (-q_).to_string() + "*" + root;
    return p_.to_string() + " - " + mag;
  }
  return p_.to_string() + " + " + irr;
}

}  // namespace delpezzo
