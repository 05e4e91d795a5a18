#pragma once

// Companion-triangle transform and the bounded descent driver.
//
// The companion of a triangle with exact medians (m_a, m_b, m_c) is the
// triangle with sides (2/3)m_a, (2/3)m_b, (2/3)m_c. Its medians are half the
// original sides and its squared area is 1/9 of the original 16*S^2 form.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "medtri/triangle.hpp"

namespace medtri {

namespace detail {

template <class N>
std::array<Rational, 3> medians_as_rational(const Triangle<N>& t) {
  auto md = median_squares(t).exact_medians;
  if (!md)
    throw unsupported_input("companion: triangle has no exact rational medians");
  return {Rational((*md)[0]), Rational((*md)[1]), Rational((*md)[2])};
}

}  // namespace detail

// Triangle with sides (2/3) of the input's medians, sorted. Verifies the
// construction: the companion's medians must equal half the input's sides.
template <class N>
RatTriangle companion(const Triangle<N>& t) {
  const auto m = detail::medians_as_rational(t);
  RatTriangle comp(m[0] * Rational(2, 3), m[1] * Rational(2, 3), m[2] * Rational(2, 3));
  auto comp_medians = median_squares(comp).exact_medians;
  if (!comp_medians)
    throw std::logic_error("companion: medians of the companion are not rational");
  std::array<Rational, 3> half_sides{Rational(t.a()) / 2, Rational(t.b()) / 2,
                                     Rational(t.c()) / 2};
  auto sorted_medians = *comp_medians;
  std::sort(sorted_medians.begin(), sorted_medians.end());
  std::sort(half_sides.begin(), half_sides.end());
  if (sorted_medians != half_sides)
    throw std::logic_error("companion: medians do not equal half the parent sides");
  return comp;
}

// 16*S^2 of the companion must be exactly 1/9 of the parent's.
template <class N>
bool area_ratio_check(const Triangle<N>& t) {
  const RatTriangle comp = companion(t);
  return heron16(comp) * 9 == Rational(heron16(t));
}

// Exact similarity of sorted side triples.
template <class N1, class N2>
bool similarity_check(const Triangle<N1>& t1, const Triangle<N2>& t2) {
  const Rational a1(t1.a()), b1(t1.b()), c1(t1.c());
  const Rational a2(t2.a()), b2(t2.b()), c2(t2.c());
  return a1 * b2 == a2 * b1 && a1 * c2 == a2 * c1;
}

enum class DescentGate {
  IntegerMedians,       // g1: the three medians are integers
  MediansDivisibleBy3,  // g2: every median is a multiple of 3
  SidesEven,            // g3: every side is even
  AreaMultipleOf3,      // g4: S is an integer divisible by 3
};

inline const char* descent_gate_name(DescentGate g) {
  switch (g) {
    case DescentGate::IntegerMedians: return "integer-medians";
    case DescentGate::MediansDivisibleBy3: return "medians-divisible-by-3";
    case DescentGate::SidesEven: return "sides-even";
    case DescentGate::AreaMultipleOf3: return "area-multiple-of-3";
  }
  return "?";
}

// One descent step: all gates are evaluated and reported; a child triangle is
// produced only when every gate passes.
struct DescentGateReport {
  std::array<BigInt, 3> parent_sides;
  bool medians_integer = false;
  std::array<bool, 3> medians_div3{false, false, false};
  std::array<bool, 3> sides_even{false, false, false};
  AreaClass parent_area = AreaClass::Irrational;
  bool area_div3 = false;  // S integer and S % 3 == 0
  std::optional<IntTriangle> child;
  std::vector<DescentGate> failed;  // empty iff child is present
};

inline DescentGateReport descent_step(const IntTriangle& t) {
  DescentGateReport report;
  report.parent_sides = t.sides();

  const auto medians = integer_medians(t);
  report.medians_integer = medians.has_value();
  if (!report.medians_integer) report.failed.push_back(DescentGate::IntegerMedians);

  bool all_div3 = false;
  if (medians) {
    all_div3 = true;
    for (int i = 0; i < 3; ++i) {
      report.medians_div3[i] = residue3((*medians)[i]) == 0;
      all_div3 = all_div3 && report.medians_div3[i];
    }
  }
  if (!all_div3) report.failed.push_back(DescentGate::MediansDivisibleBy3);

  bool all_even = true;
  for (int i = 0; i < 3; ++i) {
    report.sides_even[i] = mod_residue(t.sides()[i], 2) == 0;
    all_even = all_even && report.sides_even[i];
  }
  if (!all_even) report.failed.push_back(DescentGate::SidesEven);

  const BigInt h16 = heron16(t);
  report.parent_area = area_class(h16);
  if (report.parent_area == AreaClass::Integer) {
    const BigInt s = isqrt(h16) / 4;
    report.area_div3 = residue3(s) == 0;
  }
  if (!report.area_div3) report.failed.push_back(DescentGate::AreaMultipleOf3);

  if (report.failed.empty()) {
    // Gates guarantee integrality: sides 2m/3 by g2, child medians s/2 by g3.
    IntTriangle child((*medians)[0] * 2 / 3, (*medians)[1] * 2 / 3, (*medians)[2] * 2 / 3);
    if (heron16(child) * 9 != h16)
      throw std::logic_error("descent_step: child area is not parent/9");
    if (!integer_medians(child))
      throw std::logic_error("descent_step: child lost integer medians");
    report.child = std::move(child);
  }
  return report;
}

// Iterate descent_step while children are produced, at most max_iters steps.
// Terminates unconditionally: each child has strictly smaller 16*S^2.
inline std::vector<DescentGateReport> descent_run(const IntTriangle& t, int max_iters) {
  if (max_iters < 0) throw std::domain_error("descent_run: negative iteration bound");
  std::vector<DescentGateReport> trace;
  IntTriangle current = t;
  while (static_cast<int>(trace.size()) < max_iters) {
    trace.push_back(descent_step(current));
    if (!trace.back().child) break;
    current = *trace.back().child;
  }
  return trace;
}

}  // namespace medtri
