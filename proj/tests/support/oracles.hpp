#pragma once

// Reference computations that deliberately avoid the library's algorithms.

#include <array>
#include <vector>

#include "delpezzo/elliptic.hpp"
#include "delpezzo/rational.hpp"
#include "delpezzo/surface.hpp"
#include "delpezzo/uni_poly.hpp"

namespace oracle {

using delpezzo::ECPoint;
using delpezzo::FiberCurve;
using delpezzo::Rational;
using delpezzo::SurfaceParams;
using delpezzo::UniPoly;

/// Determinant by Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

/// Resultant as the determinant of the Sylvester matrix.
inline Rational sylvester_resultant(const UniPoly& f, const UniPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0) return f.leading().pow(n);
  if (n == 0) return g.leading().pow(m);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int row = 0; row < n; ++row) {
    for (int i = 0; i <= m; ++i) s[row][row + i] = f.coefficient(static_cast<std::size_t>(m - i));
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= n; ++i) s[n + row][row + i] = g.coefficient(static_cast<std::size_t>(n - i));
  }
  return determinant(std::move(s));
}

/// sum c_i t^i with explicit powers.
inline Rational evaluate_naive(const UniPoly& f, const Rational& t) {
  Rational acc(0);
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) acc += f.coefficients()[i] * t.pow(static_cast<long>(i));
  return acc;
}

/// Homogeneous A(z, w) and B(z, w) straight from the family definition.
inline std::array<Rational, 2> weierstrass_forms(const SurfaceParams& s, const Rational& z, const Rational& w) {
  const Rational fh = s.f[0] * w.pow(3) + s.f[1] * z * w * w + s.f[2] * z * z * w + s.f[3] * z.pow(3);
  const Rational A = s.a * fh * w + s.b * w.pow(4);
  const Rational B = s.c * fh * fh + s.d * fh * w.pow(3) + s.e * w.pow(6);
  return {A, B};
}

/// Point addition in Jacobian coordinates (X : Y : Z) ~ (X/Z^2, Y/Z^3).
struct Jacobian {
  Rational X, Y, Z;
};

inline Jacobian to_jacobian(const ECPoint& p) {
  if (p.is_origin()) return {Rational(1), Rational(1), Rational(0)};
  return {p.x(), p.y(), Rational(1)};
}

inline ECPoint from_jacobian(const Jacobian& p) {
  if (p.Z.is_zero()) return ECPoint::origin();
  const Rational z2 = p.Z * p.Z;
  return ECPoint(p.X / z2, p.Y / (z2 * p.Z));
}

inline Jacobian jacobian_double(const FiberCurve& e, const Jacobian& p) {
  if (p.Z.is_zero() || p.Y.is_zero()) return {Rational(1), Rational(1), Rational(0)};
  const Rational XX = p.X * p.X;
  const Rational YY = p.Y * p.Y;
  const Rational ZZ = p.Z * p.Z;
  const Rational S = Rational(4) * p.X * YY;
  const Rational M = Rational(3) * XX + e.A * ZZ * ZZ;
  const Rational X3 = M * M - Rational(2) * S;
  const Rational Y3 = M * (S - X3) - Rational(8) * YY * YY;
  const Rational Z3 = Rational(2) * p.Y * p.Z;
  return {X3, Y3, Z3};
}

inline Jacobian jacobian_add(const FiberCurve& e, const Jacobian& p, const Jacobian& q) {
  if (p.Z.is_zero()) return q;
  if (q.Z.is_zero()) return p;
  const Rational Z1Z1 = p.Z * p.Z;
  const Rational Z2Z2 = q.Z * q.Z;
  const Rational U1 = p.X * Z2Z2;
  const Rational U2 = q.X * Z1Z1;
  const Rational S1 = p.Y * q.Z * Z2Z2;
  const Rational S2 = q.Y * p.Z * Z1Z1;
  if (U1 == U2) {
    if (S1 != S2) return {Rational(1), Rational(1), Rational(0)};
    return jacobian_double(e, p);
  }
  const Rational H = U2 - U1;
  const Rational R = S2 - S1;
  const Rational HH = H * H;
  const Rational HHH = HH * H;
  const Rational X3 = R * R - HHH - Rational(2) * U1 * HH;
  const Rational Y3 = R * (U1 * HH - X3) - S1 * HHH;
  const Rational Z3 = p.Z * q.Z * H;
  return {X3, Y3, Z3};
}

/// [n]P by n - 1 repeated Jacobian additions (n >= 0).
inline ECPoint repeated_multiple(const FiberCurve& e, long n, const ECPoint& p) {
  Jacobian acc{Rational(1), Rational(1), Rational(0)};
  const Jacobian base = to_jacobian(p);
  for (long i = 0; i < n; ++i) acc = jacobian_add(e, acc, base);
  return from_jacobian(acc);
}

}  // namespace oracle
