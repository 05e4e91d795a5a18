#pragma once

// Bounded enumeration of triangles with integer sides and integer medians.
//
// Triples a <= b <= c are scanned with c outermost; the smallest median
// discriminant D_c = 2a^2 + 2b^2 - c^2 is tested first since it rejects most
// candidates. The inner loop runs in 64-bit arithmetic with quadratic-residue
// pre-filters; every hit is re-derived and audited in exact arithmetic by
// certify(), so the fast path can only lose solutions, never fabricate them
// (and the test suite cross-checks it against the exact path on samples).

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "medtri/audit.hpp"
#include "medtri/companion.hpp"
#include "medtri/triangle.hpp"

namespace medtri {

// Keeps 2a^2 + 2b^2 comfortably inside 64 bits in the inner loop.
inline constexpr std::int64_t kMaxSearchSide = 50'000'000;

struct SearchConfig {
  std::int64_t max_side = 0;
  int shards = 1;
  bool use_even_filter = false;  // scan only all-even triples
  std::string output_path = "results.jsonl";
};

// Full audit record for one found triangle. Every audit flag must be true
// for a record to exist; certify() aborts otherwise.
struct CertifiedMedianTriangle {
  BigInt a, b, c;
  BigInt m_a, m_b, m_c;
  BigInt heron16_value;
  AreaClass area = AreaClass::Irrational;
  std::array<int, 3> side_mod3{};
  std::array<int, 3> median_mod3{};
  int sum_sq_mod3 = 0;
  bool eight_conditions_ok = false;
  bool t_zero_ok = false;
  bool lemma2_ok = false;
  bool nonsimilar_companion_ok = false;
  std::array<BigInt, 3> primitive{};  // gcd-reduced side triple
};

// Exact certification of one integer-median triangle. Throws
// unsupported_input when the medians are not integers and logic_error when a
// universal audit fails (which would mean an implementation bug).
inline CertifiedMedianTriangle certify(const IntTriangle& t) {
  const auto medians = integer_medians(t);
  if (!medians) throw unsupported_input("certify: triangle has no integer medians");

  CertifiedMedianTriangle rec;
  rec.a = t.a();
  rec.b = t.b();
  rec.c = t.c();
  rec.m_a = (*medians)[0];
  rec.m_b = (*medians)[1];
  rec.m_c = (*medians)[2];
  rec.heron16_value = heron16(t);
  rec.area = area_class(rec.heron16_value);
  for (int i = 0; i < 3; ++i) {
    rec.side_mod3[i] = residue3(t.sides()[i]);
    rec.median_mod3[i] = residue3((*medians)[i]);
  }
  rec.sum_sq_mod3 = mod_residue(t.a() * t.a() + t.b() * t.b() + t.c() * t.c(), 3);

  rec.eight_conditions_ok =
      eight_conditions(t.a(), t.b(), t.c(), rec.m_a, rec.m_b, rec.m_c).all_equal &&
      eight_conditions(t.a(), t.b(), t.c()).all_equal;
  rec.t_zero_ok = xyzw_profile(rec.m_a, rec.m_b, rec.m_c, rec.c).t_value == 0;
  rec.lemma2_ok = lemma2_check(t).implication_holds;
  rec.nonsimilar_companion_ok = !similarity_check(t, companion(t));
  if (!rec.eight_conditions_ok || !rec.t_zero_ok || !rec.lemma2_ok ||
      !rec.nonsimilar_companion_ok)
    throw std::logic_error("certify: universal audit failed for " + t.a().str() + "," +
                           t.b().str() + "," + t.c().str());

  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(rec.a, rec.b), rec.c);
  rec.primitive = {rec.a / g, rec.b / g, rec.c / g};
  return rec;
}

// Half-open range of the largest side handled by one worker.
struct Shard {
  std::int64_t c_begin = 0;
  std::int64_t c_end = 0;
};

// Partition [3, max_side] into `count` half-open ranges with roughly equal
// work, using the c^2 cost of scanning one largest-side value. Purely a
// function of (max_side, count).
inline std::vector<Shard> make_shards(std::int64_t max_side, int count) {
  if (max_side < 3) throw std::domain_error("make_shards: max_side must be >= 3");
  if (count < 1) throw std::domain_error("make_shards: shard count must be >= 1");
  long double total = 0;
  for (std::int64_t c = 3; c <= max_side; ++c) total += static_cast<long double>(c) * c;
  std::vector<Shard> shards;
  shards.reserve(static_cast<std::size_t>(count));
  std::int64_t begin = 3;
  long double cum = 0;
  for (int k = 0; k < count; ++k) {
    const long double target = total * (k + 1) / count;
    std::int64_t end = begin;
    while (end <= max_side && (cum < target || k == count - 1)) {
      cum += static_cast<long double>(end) * end;
      ++end;
    }
    shards.push_back({begin, end});
    begin = end;
  }
  shards.back().c_end = max_side + 1;
  return shards;
}

namespace detail {

struct RawHit {
  std::int64_t a, b, c;
  std::int64_t m_a, m_b, m_c;
};

// D must be 4*m^2: zero low bits mod 4, then D/4 a perfect square.
inline bool even_root_square(std::uint64_t d, std::int64_t* half_root) noexcept {
  if (d & 3u) return false;
  std::uint64_t m = 0;
  if (!is_square_u64(d >> 2, &m)) return false;
  *half_root = static_cast<std::int64_t>(m);
  return true;
}

template <class Sink>
void scan_c_range(std::int64_t c_begin, std::int64_t c_end, bool even_only,
                  std::uint64_t& scanned, Sink&& sink) {
  std::int64_t c = std::max<std::int64_t>(c_begin, 3);
  if (even_only && (c & 1)) ++c;
  const std::int64_t c_step = even_only ? 2 : 1;
  for (; c < c_end; c += c_step) {
    const std::int64_t c2 = c * c;
    std::int64_t b = (c + 1) / 2;
    if (even_only && (b & 1)) ++b;
    const std::int64_t b_step = even_only ? 2 : 1;
    for (; b <= c; b += b_step) {
      const std::int64_t b2 = b * b;
      const std::int64_t t_c = 2 * b2 - c2;  // D_c = 2a^2 + t_c
      const std::int64_t t_b = 2 * c2 - b2;  // D_b = 2a^2 + t_b
      std::int64_t a = c - b + 1;
      if (even_only && (a & 1)) ++a;
      const std::int64_t a_step = even_only ? 2 : 1;
      for (; a <= b; a += a_step) {
        ++scanned;
        const std::int64_t a2 = a * a;
        std::int64_t m_c;
        if (!even_root_square(static_cast<std::uint64_t>(2 * a2 + t_c), &m_c)) continue;
        std::int64_t m_b;
        if (!even_root_square(static_cast<std::uint64_t>(2 * a2 + t_b), &m_b)) continue;
        std::int64_t m_a;
        if (!even_root_square(static_cast<std::uint64_t>(2 * b2 + 2 * c2 - a2), &m_a))
          continue;
        sink(RawHit{a, b, c, m_a, m_b, m_c});
      }
    }
  }
}

// Single-triple probe through the same 64-bit tests the scan loop uses.
inline bool fast_integer_medians(std::int64_t a, std::int64_t b, std::int64_t c,
                                 RawHit* hit = nullptr) {
  const std::int64_t a2 = a * a, b2 = b * b, c2 = c * c;
  std::int64_t m_a, m_b, m_c;
  if (!even_root_square(static_cast<std::uint64_t>(2 * a2 + 2 * b2 - c2), &m_c)) return false;
  if (!even_root_square(static_cast<std::uint64_t>(2 * a2 + 2 * c2 - b2), &m_b)) return false;
  if (!even_root_square(static_cast<std::uint64_t>(2 * b2 + 2 * c2 - a2), &m_a)) return false;
  if (hit) *hit = RawHit{a, b, c, m_a, m_b, m_c};
  return true;
}

// Exact-arithmetic reference for the fast path; used by the soundness tests.
inline bool has_integer_medians(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (classify(BigInt(a), BigInt(b), BigInt(c)) != Shape::Valid) return false;
  return integer_medians(IntTriangle(a, b, c)).has_value();
}

}  // namespace detail

struct SearchResult {
  std::vector<CertifiedMedianTriangle> records;  // sorted by (c, b, a)
  std::uint64_t triples_scanned = 0;
};

// Enumerate, certify, and merge. Shards run concurrently over disjoint
// c-ranges; the merge concatenates them in range order, so the output is
// identical for every shard count.
inline SearchResult enumerate_median_triangles(const SearchConfig& cfg) {
  if (cfg.max_side < 3) throw std::domain_error("search: max_side must be >= 3");
  if (cfg.max_side > kMaxSearchSide)
    throw std::domain_error("search: max_side exceeds the supported bound");
  if (cfg.shards < 1) throw std::domain_error("search: shards must be >= 1");

  const auto shards = make_shards(cfg.max_side, cfg.shards);
  struct ShardOutput {
    std::vector<detail::RawHit> hits;
    std::uint64_t scanned = 0;
  };
  std::vector<std::future<ShardOutput>> futures;
  futures.reserve(shards.size());
  for (const Shard& shard : shards) {
    futures.push_back(std::async(std::launch::async, [shard, even = cfg.use_even_filter] {
      ShardOutput out;
      detail::scan_c_range(shard.c_begin, shard.c_end, even, out.scanned,
                           [&out](const detail::RawHit& h) { out.hits.push_back(h); });
      return out;
    }));
  }

  SearchResult result;
  for (auto& f : futures) {
    ShardOutput out = f.get();
    result.triples_scanned += out.scanned;
    for (const detail::RawHit& h : out.hits) {
      CertifiedMedianTriangle rec = certify(IntTriangle(h.a, h.b, h.c));
      if (rec.m_a != h.m_a || rec.m_b != h.m_b || rec.m_c != h.m_c)
        throw std::logic_error("search: fast-path medians disagree with exact medians");
      result.records.push_back(std::move(rec));
    }
  }
  return result;
}

// Scan up to max_side with no filtering and report whether every hit has all
// sides even. True (vacuously) when there are no hits. A true result at a
// calibration bound is the precondition for enabling the even filter beyond
// it.
inline bool even_filter_soundness(std::int64_t max_side) {
  SearchConfig cfg;
  cfg.max_side = max_side;
  cfg.shards = 1;
  cfg.use_even_filter = false;
  const SearchResult result = enumerate_median_triangles(cfg);
  return std::all_of(result.records.begin(), result.records.end(),
                     [](const CertifiedMedianTriangle& r) {
                       return r.a % 2 == 0 && r.b % 2 == 0 && r.c % 2 == 0;
                     });
}

// Records whose area is not irrational: integer or rational area would be a
// counterexample to the open problem and is the headline output.
inline std::vector<CertifiedMedianTriangle> counterexample_scan(
    const std::vector<CertifiedMedianTriangle>& records) {
  std::vector<CertifiedMedianTriangle> out;
  for (const auto& r : records)
    if (r.area != AreaClass::Irrational) out.push_back(r);
  return out;
}

}  // namespace medtri
