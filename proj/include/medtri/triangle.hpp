#pragma once

// Triangle domain model: validity classification, median discriminants,
// exact medians, side reconstruction from medians, and the exact
// integer/rational area forms 16*S^2 (sides) and 9*S^2 (medians).

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "medtri/exact_arith.hpp"

namespace medtri {

enum class Shape { Valid, Degenerate, Invalid };

template <class N>
Shape classify(const N& a, const N& b, const N& c) {
  if (a <= 0 || b <= 0 || c <= 0)
    throw std::domain_error("classify: sides must be positive");
  std::array<const N*, 3> s{&a, &b, &c};
  std::sort(s.begin(), s.end(), [](const N* x, const N* y) { return *x < *y; });
  const N lhs = *s[0] + *s[1];
  if (lhs > *s[2]) return Shape::Valid;
  if (lhs == *s[2]) return Shape::Degenerate;
  return Shape::Invalid;
}

// A strictly valid triangle with sides normalized to a <= b <= c.
// Degenerate or impossible triples are not representable.
template <class N>
class Triangle {
 public:
  Triangle(N a, N b, N c) : s_{std::move(a), std::move(b), std::move(c)} {
    if (s_[0] <= 0 || s_[1] <= 0 || s_[2] <= 0)
      throw std::domain_error("triangle: sides must be positive");
    std::sort(s_.begin(), s_.end());
    if (s_[0] + s_[1] <= s_[2])
      throw std::domain_error("triangle: strict triangle inequality violated");
  }

  const N& a() const noexcept { return s_[0]; }
  const N& b() const noexcept { return s_[1]; }
  const N& c() const noexcept { return s_[2]; }
  const std::array<N, 3>& sides() const noexcept { return s_; }

  friend bool operator==(const Triangle& lhs, const Triangle& rhs) = default;

 private:
  std::array<N, 3> s_;
};

using IntTriangle = Triangle<BigInt>;
using RatTriangle = Triangle<Rational>;

inline RatTriangle to_rational(const IntTriangle& t) {
  return RatTriangle(Rational(t.a()), Rational(t.b()), Rational(t.c()));
}

template <class N, class K>
Triangle<N> scaled(const Triangle<N>& t, const K& k) {
  return Triangle<N>(t.a() * k, t.b() * k, t.c() * k);
}

// Squared-median discriminants: D_a = 2b^2 + 2c^2 - a^2 = (2*m_a)^2.
// exact_medians is present iff every median is exactly representable in N
// (perfect square with even root for integers, rational square root for
// rationals).
template <class N>
struct MedianData {
  N D_a;
  N D_b;
  N D_c;
  std::optional<std::array<N, 3>> exact_medians;
};

namespace detail {

// Half of an exact square root, when representable in N.
inline std::optional<BigInt> exact_half_sqrt(const BigInt& d) {
  if (mod_residue(d, 4) != 0) return std::nullopt;
  auto [root, exact] = isqrt_exact(d >> 2);
  if (!exact) return std::nullopt;
  return root;
}

inline std::optional<Rational> exact_half_sqrt(const Rational& d) {
  auto root = rat_sqrt_exact(d);
  if (!root) return std::nullopt;
  return *root / 2;
}

}  // namespace detail

template <class N>
MedianData<N> median_squares(const Triangle<N>& t) {
  const N a2 = t.a() * t.a();
  const N b2 = t.b() * t.b();
  const N c2 = t.c() * t.c();
  MedianData<N> md;
  md.D_a = 2 * b2 + 2 * c2 - a2;
  md.D_b = 2 * a2 + 2 * c2 - b2;
  md.D_c = 2 * a2 + 2 * b2 - c2;
  // Cross-check against the transformed form 3b^2 + 3c^2 - (a^2 + b^2 + c^2).
  const N sum_sq = a2 + b2 + c2;
  if (md.D_a != 3 * b2 + 3 * c2 - sum_sq || md.D_b != 3 * a2 + 3 * c2 - sum_sq ||
      md.D_c != 3 * a2 + 3 * b2 - sum_sq)
    throw std::logic_error("median_squares: discriminant forms disagree");
  auto ma = detail::exact_half_sqrt(md.D_a);
  auto mb = detail::exact_half_sqrt(md.D_b);
  auto mc = detail::exact_half_sqrt(md.D_c);
  if (ma && mb && mc) md.exact_medians = std::array<N, 3>{*ma, *mb, *mc};
  return md;
}

// Integer medians (m_a, m_b, m_c), present iff every discriminant is a
// perfect square with even root.
inline std::optional<std::array<BigInt, 3>> integer_medians(const IntTriangle& t) {
  return median_squares(t).exact_medians;
}

inline std::optional<std::array<Rational, 3>> rational_medians(const RatTriangle& t) {
  return median_squares(t).exact_medians;
}

// Reconstruct the triangle whose medians are (mu_a, mu_b, mu_c); sides come
// out as a = (2/3)sqrt(2*mu_b^2 + 2*mu_c^2 - mu_a^2) etc. Empty when any
// square root is irrational.
inline std::optional<RatTriangle> sides_from_medians(const BigInt& mu_a, const BigInt& mu_b,
                                                     const BigInt& mu_c) {
  if (classify(mu_a, mu_b, mu_c) != Shape::Valid)
    throw std::domain_error("sides_from_medians: medians must form a valid triangle");
  std::array<Rational, 3> side;
  const std::array<const BigInt*, 3> m{&mu_a, &mu_b, &mu_c};
  for (int i = 0; i < 3; ++i) {
    const BigInt& self = *m[i];
    const BigInt& other1 = *m[(i + 1) % 3];
    const BigInt& other2 = *m[(i + 2) % 3];
    const BigInt disc = 2 * other1 * other1 + 2 * other2 * other2 - self * self;
    if (disc <= 0)
      throw std::logic_error("sides_from_medians: nonpositive side discriminant");
    auto [root, exact] = isqrt_exact(disc);
    if (!exact) return std::nullopt;
    side[i] = Rational(2 * root, BigInt(3));
  }
  return RatTriangle(side[0], side[1], side[2]);
}

namespace detail {

// (p+q+r)(p+q-r)(p+r-q)(q+r-p), the shared quad-product behind both exact
// area forms. Zero exactly for degenerate triples.
template <class N>
N quad_product(const N& p, const N& q, const N& r) {
  return (p + q + r) * (p + q - r) * (p + r - q) * (q + r - p);
}

// The same product expressed through squares only:
// 4PQ - (P+Q-R)^2 with P = p^2, Q = q^2, R = r^2. Symmetric in P, Q, R.
template <class N>
N quad_product_from_squares(const N& P, const N& Q, const N& R) {
  const N s = P + Q - R;
  return 4 * P * Q - s * s;
}

}  // namespace detail

// 16*S^2 of a (possibly degenerate) side triple, exactly.
template <class N>
N heron16(const N& a, const N& b, const N& c) {
  if (classify(a, b, c) == Shape::Invalid)
    throw std::domain_error("heron16: sides do not form a triangle");
  return detail::quad_product(a, b, c);
}

template <class N>
N heron16(const Triangle<N>& t) {
  return detail::quad_product(t.a(), t.b(), t.c());
}

// 9*S^2 expressed through the medians of the triangle, exactly.
// Degenerate median triples give zero.
template <class N>
N median9(const N& m_a, const N& m_b, const N& m_c) {
  if (classify(m_a, m_b, m_c) == Shape::Invalid)
    throw std::domain_error("median9: medians do not form a triangle");
  return detail::quad_product(m_a, m_b, m_c);
}

enum class AreaClass { Integer, Rational, Irrational };

// Decide whether S = sqrt(v)/4 is an integer, a non-integer rational, or
// irrational, given v = 16*S^2.
inline AreaClass area_class(const BigInt& v) {
  if (v < 0) throw std::domain_error("area_class: negative 16*S^2");
  auto [root, exact] = isqrt_exact(v);
  if (!exact) return AreaClass::Irrational;
  return root % 4 == 0 ? AreaClass::Integer : AreaClass::Rational;
}

inline AreaClass area_class(const Rational& v) {
  if (v < 0) throw std::domain_error("area_class: negative 16*S^2");
  auto root = rat_sqrt_exact(v);
  if (!root) return AreaClass::Irrational;
  const Rational s = *root / 4;
  return boost::multiprecision::denominator(s) == 1 ? AreaClass::Integer
                                                    : AreaClass::Rational;
}

}  // namespace medtri
