#pragma once

// Mechanical verification of the equal-area identity system and the quartic
// apparatus around it.
//
// Universal pieces (hold for every valid input and are enforced):
//   - the eight equal-area products, all equal on a common 144*S^2 scale;
//   - the shift bookkeeping bracket identities;
//   - the quartic expansion (x+d)(y+d)(z+d)(w-d) = xyzw - T(d);
//   - the coefficient identities x+y+z-w = 16*m_a and
//     xy+xz-xw+yz-yw-zw = 96*m_a^2 - 8*m_c^2 - 18*c^2;
//   - xyzw = 576*S^2 and T(4*m_b - 4*m_a) = 0 for genuine triangles;
//   - the cubic-sum identity P_a(d) + Q_b(d) = 16(m_a+m_b)*R(d).
//
// Reported-only pieces (true under extra hypotheses at best; the audit
// records exact values instead of asserting):
//   - the quartic values at -delta2 and at -16*m_a;
//   - the linear coefficient versus the value the factored form implies.

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "medtri/triangle.hpp"

namespace medtri {

// ---------------------------------------------------------------------------
// Eight conditions
// ---------------------------------------------------------------------------

// The eight products, fraction-free. Products whose factors carry a
// half-integer term (3/2 * side), or squared-form medians, are stored with
// all four factors doubled, which scales them by 2^4 = 16; `scale` records
// the fold per slot. `normalized` maps every slot onto the common 144*S^2
// scale, where all eight must agree exactly.
struct ConditionReport {
  std::array<BigInt, 8> q;
  std::array<int, 8> scale;  // 1 or 16: factor-doubling fold already in q
  std::array<BigInt, 8> normalized;
  bool all_equal = false;
  // Factor quadruples of q1 (median form) and q2 (side form); the median
  // factors exist only when exact integer medians were supplied.
  std::array<BigInt, 4> side_factors{};
  std::array<BigInt, 4> median_factors{};
  bool has_median_factors = false;
};

namespace detail {

inline std::array<BigInt, 4> quad_factors(const BigInt& p, const BigInt& q, const BigInt& r) {
  return {p + q + r, p + q - r, p + r - q, q + r - p};
}

inline BigInt product4(const std::array<BigInt, 4>& f) { return f[0] * f[1] * f[2] * f[3]; }

inline ConditionReport finish_condition_report(ConditionReport rep) {
  // Odd slots hold 16*S^2 forms (-> x9), even slots 9*S^2 forms (-> x16,
  // minus whatever fold is already in).
  for (int i = 0; i < 8; ++i) {
    const int to_144 = (i % 2 == 0) ? 16 / rep.scale[i] : 9;
    rep.normalized[i] = rep.q[i] * to_144;
  }
  rep.all_equal = true;
  for (int i = 1; i < 8; ++i)
    rep.all_equal = rep.all_equal && rep.normalized[i] == rep.normalized[0];
  return rep;
}

}  // namespace detail

// Literal factor route: requires the true integer medians of (A, B, C).
inline ConditionReport eight_conditions(const BigInt& A, const BigInt& B, const BigInt& C,
                                        const BigInt& M_A, const BigInt& M_B,
                                        const BigInt& M_C) {
  if (classify(A, B, C) == Shape::Invalid)
    throw std::domain_error("eight_conditions: sides do not form a triangle");
  const BigInt D_a = 2 * B * B + 2 * C * C - A * A;
  const BigInt D_b = 2 * A * A + 2 * C * C - B * B;
  const BigInt D_c = 2 * A * A + 2 * B * B - C * C;
  if (4 * M_A * M_A != D_a || 4 * M_B * M_B != D_b || 4 * M_C * M_C != D_c)
    throw std::domain_error("eight_conditions: medians inconsistent with sides");

  ConditionReport rep;
  const auto f_med = detail::quad_factors(M_A, M_B, M_C);
  const auto f_side = detail::quad_factors(A, B, C);
  rep.q[0] = detail::product4(f_med);                                          // 9*S^2
  rep.q[1] = detail::product4(f_side);                                         // 16*S^2
  rep.q[2] = detail::product4(detail::quad_factors(2 * M_A, 2 * M_B, 3 * C));  // 144*S^2
  rep.q[3] = detail::product4(detail::quad_factors(A, B, 2 * M_C));            // 16*S^2
  rep.q[4] = detail::product4(detail::quad_factors(2 * M_A, 3 * B, 2 * M_C));  // 144*S^2
  rep.q[5] = detail::product4(detail::quad_factors(A, 2 * M_B, C));            // 16*S^2
  rep.q[6] = detail::product4(detail::quad_factors(3 * A, 2 * M_B, 2 * M_C));  // 144*S^2
  rep.q[7] = detail::product4(detail::quad_factors(2 * M_A, B, C));            // 16*S^2
  rep.scale = {1, 1, 16, 1, 16, 1, 16, 1};
  rep.side_factors = f_side;
  rep.median_factors = f_med;
  rep.has_median_factors = true;
  return detail::finish_condition_report(std::move(rep));
}

// Squared route: needs only the sides. Every product depends on the medians
// through their squares alone, so it is exact even when the medians are
// irrational. Accepts degenerate triples (all products zero).
inline ConditionReport eight_conditions(const BigInt& A, const BigInt& B, const BigInt& C) {
  if (classify(A, B, C) == Shape::Invalid)
    throw std::domain_error("eight_conditions: sides do not form a triangle");
  const BigInt A2 = A * A, B2 = B * B, C2 = C * C;
  const BigInt D_a = 2 * B2 + 2 * C2 - A2;
  const BigInt D_b = 2 * A2 + 2 * C2 - B2;
  const BigInt D_c = 2 * A2 + 2 * B2 - C2;
  using detail::quad_product_from_squares;

  ConditionReport rep;
  // D = (2m)^2, so median slots come out with doubled factors (x16 fold).
  rep.q[0] = quad_product_from_squares(D_a, D_b, D_c);
  rep.q[1] = quad_product_from_squares(A2, B2, C2);
  rep.q[2] = quad_product_from_squares(D_a, D_b, BigInt(9 * C2));
  rep.q[3] = quad_product_from_squares(A2, B2, D_c);
  rep.q[4] = quad_product_from_squares(D_a, BigInt(9 * B2), D_c);
  rep.q[5] = quad_product_from_squares(A2, D_b, C2);
  rep.q[6] = quad_product_from_squares(BigInt(9 * A2), D_b, D_c);
  rep.q[7] = quad_product_from_squares(D_a, B2, C2);
  rep.scale = {16, 1, 16, 1, 16, 1, 16, 1};
  rep.side_factors = detail::quad_factors(A, B, C);
  return detail::finish_condition_report(std::move(rep));
}

inline ConditionReport eight_conditions(const IntTriangle& t) {
  if (auto m = integer_medians(t))
    return eight_conditions(t.a(), t.b(), t.c(), (*m)[0], (*m)[1], (*m)[2]);
  return eight_conditions(t.a(), t.b(), t.c());
}

// ---------------------------------------------------------------------------
// Shift bookkeeping
// ---------------------------------------------------------------------------

// delta_i = (3/2)*side_i - median_i and theta_i = 2*median_i - side_i.
// Construction verifies all twenty-four bracket identities: adding the
// right shift to a base factor X/Y/Z/W reproduces the corresponding mixed
// factor of the eight conditions, in both the median and the side family.
struct ShiftProfile {
  Rational delta_a, delta_b, delta_c;
  Rational theta_a, theta_b, theta_c;
};

inline ShiftProfile shift_profile(const BigInt& A, const BigInt& B, const BigInt& C,
                                  const BigInt& M_A, const BigInt& M_B, const BigInt& M_C) {
  const Rational ra(A), rb(B), rc(C), ma(M_A), mb(M_B), mc(M_C);
  ShiftProfile p;
  p.delta_a = Rational(3, 2) * ra - ma;
  p.delta_b = Rational(3, 2) * rb - mb;
  p.delta_c = Rational(3, 2) * rc - mc;
  p.theta_a = 2 * ma - ra;
  p.theta_b = 2 * mb - rb;
  p.theta_c = 2 * mc - rc;

  const Rational half3 = Rational(3, 2);
  const Rational X_M = ma + mb + mc, Y_M = ma + mb - mc, Z_M = ma + mc - mb,
                 W_M = mc + mb - ma;
  const Rational X_S = ra + rb + rc, Y_S = ra + rb - rc, Z_S = ra + rc - rb,
                 W_S = rc + rb - ra;
  const bool medians_ok =
      X_M + p.delta_c == ma + mb + half3 * rc && Y_M - p.delta_c == ma + mb - half3 * rc &&
      Z_M + p.delta_c == ma + half3 * rc - mb && W_M + p.delta_c == half3 * rc + mb - ma &&
      X_M + p.delta_b == ma + half3 * rb + mc && Y_M + p.delta_b == ma + half3 * rb - mc &&
      Z_M - p.delta_b == ma + mc - half3 * rb && W_M + p.delta_b == mc + half3 * rb - ma &&
      X_M + p.delta_a == half3 * ra + mb + mc && Y_M + p.delta_a == half3 * ra + mb - mc &&
      Z_M + p.delta_a == half3 * ra + mc - mb && W_M - p.delta_a == mc + mb - half3 * ra;
  const bool sides_ok =
      X_S + p.theta_c == ra + rb + 2 * mc && Y_S - p.theta_c == ra + rb - 2 * mc &&
      Z_S + p.theta_c == ra + 2 * mc - rb && W_S + p.theta_c == 2 * mc + rb - ra &&
      X_S + p.theta_b == ra + 2 * mb + rc && Y_S + p.theta_b == ra + 2 * mb - rc &&
      Z_S - p.theta_b == ra + rc - 2 * mb && W_S + p.theta_b == rc + 2 * mb - ra &&
      X_S + p.theta_a == 2 * ma + rb + rc && Y_S + p.theta_a == 2 * ma + rb - rc &&
      Z_S + p.theta_a == 2 * ma + rc - rb && W_S - p.theta_a == rc + rb - 2 * ma;
  if (!medians_ok || !sides_ok)
    throw std::logic_error("shift_profile: bracket identity violated");
  return p;
}

// ---------------------------------------------------------------------------
// Quartic apparatus
// ---------------------------------------------------------------------------

// x = 4*m_a + 2*m_c + 3*c and its three companions; works for any number
// type, including exact rationals.
template <class N>
std::array<N, 4> xyzw_of(const N& m_a, const N& m_c, const N& c) {
  return {4 * m_a + 2 * m_c + 3 * c, 4 * m_a + 2 * m_c - 3 * c,
          4 * m_a + 3 * c - 2 * m_c, 3 * c + 2 * m_c - 4 * m_a};
}

// T(d) = d^4 + (x+y+z-w)d^3 + (xy+xz-xw+yz-yw-zw)d^2 + (xyz-xyw-xzw-yzw)d.
template <class N>
N t_polynomial(const N& x, const N& y, const N& z, const N& w, const N& d) {
  const N c3 = x + y + z - w;
  const N c2 = x * y + x * z - x * w + y * z - y * w - z * w;
  const N c1 = x * y * z - x * y * w - x * z * w - y * z * w;
  return d * d * d * d + c3 * d * d * d + c2 * d * d + c1 * d;
}

// (x+d)(y+d)(z+d)(w-d) == xyzw - T(d), a polynomial identity.
template <class N>
bool t_expansion_check(const N& x, const N& y, const N& z, const N& w, const N& d) {
  const N lhs = (x + d) * (y + d) * (z + d) * (w - d);
  return lhs == x * y * z * w - t_polynomial(x, y, z, w, d);
}

struct QuarticProfile {
  BigInt m_a, m_b, m_c, c;  // inputs
  BigInt x, y, z, w;
  BigInt delta;  // 4*m_b - 4*m_a, the nonzero root candidate
  BigInt coeff_cubic;  // x+y+z-w, always 16*m_a
  BigInt coeff_quad;   // always 96*m_a^2 - 8*m_c^2 - 18*c^2
  BigInt coeff_lin;
  BigInt factored_coeff_lin;  // 16*m_a * coeff_quad, what the factored form implies
  BigInt xyzw;
  BigInt t_value;        // T(delta)
  bool consistent = false;  // 9c^2 == 4(2*m_a^2 + 2*m_b^2 - m_c^2)
};

// Fills the x/y/z/w substitution and the quartic coefficients for any
// nonnegative inputs. The coefficient identities are universal and enforced;
// xyzw = 576*S^2 and T(delta) = 0 are enforced only when the four inputs are
// mutually consistent (medians and side c of one triangle).
inline QuarticProfile xyzw_profile(const BigInt& m_a, const BigInt& m_b, const BigInt& m_c,
                                   const BigInt& c) {
  if (m_a < 0 || m_b < 0 || m_c < 0 || c < 0)
    throw std::domain_error("xyzw_profile: inputs must be nonnegative");
  QuarticProfile p;
  p.m_a = m_a;
  p.m_b = m_b;
  p.m_c = m_c;
  p.c = c;
  const auto v = xyzw_of(m_a, m_c, c);
  p.x = v[0];
  p.y = v[1];
  p.z = v[2];
  p.w = v[3];
  p.delta = 4 * m_b - 4 * m_a;
  p.coeff_cubic = p.x + p.y + p.z - p.w;
  p.coeff_quad = p.x * p.y + p.x * p.z - p.x * p.w + p.y * p.z - p.y * p.w - p.z * p.w;
  p.coeff_lin = p.x * p.y * p.z - p.x * p.y * p.w - p.x * p.z * p.w - p.y * p.z * p.w;
  if (p.coeff_cubic != 16 * m_a)
    throw std::logic_error("xyzw_profile: cubic coefficient identity violated");
  if (p.coeff_quad != 96 * m_a * m_a - 8 * m_c * m_c - 18 * c * c)
    throw std::logic_error("xyzw_profile: quadratic coefficient identity violated");
  p.factored_coeff_lin = 16 * m_a * p.coeff_quad;
  p.xyzw = p.x * p.y * p.z * p.w;
  p.t_value = t_polynomial(p.x, p.y, p.z, p.w, p.delta);
  p.consistent = 9 * c * c == 4 * (2 * m_a * m_a + 2 * m_b * m_b - m_c * m_c);
  if (p.consistent) {
    if (p.xyzw != 64 * detail::quad_product(m_a, m_b, m_c))
      throw std::logic_error("xyzw_profile: xyzw != 576*S^2 for consistent inputs");
    if (p.t_value != 0)
      throw std::logic_error("xyzw_profile: T(delta) != 0 for consistent inputs");
  }
  return p;
}

inline QuarticProfile xyzw_profile(const IntTriangle& t) {
  auto m = integer_medians(t);
  if (!m) throw unsupported_input("xyzw_profile: triangle has no integer medians");
  return xyzw_profile((*m)[0], (*m)[1], (*m)[2], t.c());
}

struct QuarticRootEval {
  const char* label;
  BigInt candidate;
  BigInt value;  // quartic evaluated at the candidate
  bool vanishes;
};

// Exact quartic values at the four claimed roots {0, delta2, -delta2,
// -16*m_a}. For genuine triangles 0 and delta2 vanish; the other two are
// reported, not asserted.
inline std::array<QuarticRootEval, 4> quartic_root_audit(const QuarticProfile& p) {
  const auto eval = [&](const char* label, const BigInt& d) {
    BigInt value = t_polynomial(p.x, p.y, p.z, p.w, d);
    return QuarticRootEval{label, d, value, value == 0};
  };
  return {eval("0", BigInt(0)), eval("delta2", p.delta), eval("-delta2", -p.delta),
          eval("-16*m_a", -p.coeff_cubic)};
}

// ---------------------------------------------------------------------------
// Divisibility reports
// ---------------------------------------------------------------------------

// (a^2+b^2+c^2) mod 3 together with median residues; the implication under
// audit: if any median is a multiple of 3, all of them are.
struct Lemma2Report {
  int sum_sq_mod3 = 0;
  std::array<int, 3> median_mod3{};
  bool implication_holds = false;
};

inline Lemma2Report lemma2_check(const IntTriangle& t) {
  auto m = integer_medians(t);
  if (!m) throw unsupported_input("lemma2_check: triangle has no integer medians");
  Lemma2Report rep;
  rep.sum_sq_mod3 =
      mod_residue(t.a() * t.a() + t.b() * t.b() + t.c() * t.c(), 3);
  int zeros = 0;
  for (int i = 0; i < 3; ++i) {
    rep.median_mod3[i] = residue3((*m)[i]);
    if (rep.median_mod3[i] == 0) ++zeros;
  }
  rep.implication_holds = zeros == 0 || zeros == 3;
  return rep;
}

// rhs = 8*m_c^2 + 18*c^2 - 96*m_a^2, the quantity a nonzero integer root
// delta2 would have to square to. Squares are 0 or 1 mod 3 while
// rhs == 2*m_c^2 (mod 3), so a nonnegative square rhs forces m_c == 0 (mod 3).
struct Lemma3Report {
  BigInt rhs;
  int sign = 0;  // -1, 0, +1
  int rhs_mod3 = 0;
  int mc_mod3 = 0;
  bool is_square = false;              // false whenever rhs < 0
  std::optional<BigInt> delta2;        // exact root when rhs is a square
  bool constraint_holds = false;       // rhs a nonnegative square implies mc % 3 == 0
};

inline Lemma3Report lemma3_mod3(const BigInt& m_a, const BigInt& m_c, const BigInt& c) {
  if (m_a < 0 || m_c < 0 || c < 0)
    throw std::domain_error("lemma3_mod3: inputs must be nonnegative");
  Lemma3Report rep;
  rep.rhs = 8 * m_c * m_c + 18 * c * c - 96 * m_a * m_a;
  rep.sign = rep.rhs > 0 ? 1 : rep.rhs < 0 ? -1 : 0;
  rep.rhs_mod3 = residue3(rep.rhs);
  rep.mc_mod3 = residue3(m_c);
  if (rep.rhs >= 0) {
    auto [root, exact] = isqrt_exact(rep.rhs);
    rep.is_square = exact;
    if (exact) rep.delta2 = root;
  }
  rep.constraint_holds = !rep.is_square || rep.mc_mod3 == 0;
  return rep;
}

// ---------------------------------------------------------------------------
// Cubic-sum identity
// ---------------------------------------------------------------------------

inline BigInt cubic_p(const BigInt& m_a, const BigInt& m_c, const BigInt& c, const BigInt& d) {
  return d * d * d + 16 * m_a * d * d + (96 * m_a * m_a - 8 * m_c * m_c - 18 * c * c) * d +
         16 * m_a * (16 * m_a * m_a - 4 * m_c * m_c - 9 * c * c);
}

inline BigInt cubic_q(const BigInt& m_b, const BigInt& m_c, const BigInt& c, const BigInt& d) {
  return -d * d * d + 16 * m_b * d * d - (96 * m_b * m_b - 8 * m_c * m_c - 18 * c * c) * d +
         16 * m_b * (16 * m_b * m_b - 4 * m_c * m_c - 9 * c * c);
}

inline BigInt cubic_r(const BigInt& m_a, const BigInt& m_b, const BigInt& m_c,
                      const BigInt& c, const BigInt& d) {
  return d * d + 6 * (m_a - m_b) * d + 16 * (m_a * m_a - m_a * m_b + m_b * m_b) -
         (4 * m_c * m_c + 9 * c * c);
}

// P_a(d) + Q_b(d) == 16*(m_a + m_b) * R(d), a polynomial identity.
inline bool cubic_sum_check(const BigInt& m_a, const BigInt& m_b, const BigInt& m_c,
                            const BigInt& c, const BigInt& d) {
  return cubic_p(m_a, m_c, c, d) + cubic_q(m_b, m_c, c, d) ==
         16 * (m_a + m_b) * cubic_r(m_a, m_b, m_c, c, d);
}

}  // namespace medtri
