#pragma once

// Exact arbitrary-precision arithmetic kernel: integer square roots,
// perfect-square detection, exact rational square roots, residue helpers.
// No floating point anywhere; every result is exact or absent.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace medtri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an operation needs exact medians (or similar structure) that
// the given input does not possess. Distinct from std::domain_error, which
// flags arguments outside an operation's domain.
struct unsupported_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

template <std::size_t M>
constexpr std::array<bool, M> square_residue_table() {
  std::array<bool, M> t{};
  for (std::size_t i = 0; i < M; ++i) t[(i * i) % M] = true;
  return t;
}

inline constexpr auto kSquareMod64 = square_residue_table<64>();
inline constexpr auto kSquareMod63 = square_residue_table<63>();

}  // namespace detail

// Cheap non-square rejection: true is inconclusive, false is definitive.
inline bool square_candidate(std::uint64_t n) noexcept {
  return detail::kSquareMod64[n & 63u] && detail::kSquareMod63[n % 63u];
}

// floor(sqrt(n)) for unsigned 64-bit, Newton iteration on integers.
inline std::uint64_t isqrt_u64(std::uint64_t n) noexcept {
  if (n == 0) return 0;
  // Seed x >= sqrt(n), then the iteration decreases monotonically to the floor.
  const int shift = (std::bit_width(n) + 1) / 2;
  std::uint64_t x = std::uint64_t{1} << shift;
  std::uint64_t y = (x + n / x) >> 1;
  while (y < x) {
    x = y;
    y = (x + n / x) >> 1;
  }
  return x;
}

inline bool is_square_u64(std::uint64_t n, std::uint64_t* root = nullptr) noexcept {
  if (!square_candidate(n)) return false;
  const std::uint64_t r = isqrt_u64(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

// floor(sqrt(n)) for arbitrary-precision n >= 0.
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  if (n == 0) return BigInt(0);
  const unsigned bits = boost::multiprecision::msb(n) + 1u;
  BigInt x = BigInt(1) << ((bits + 1u) / 2u);
  BigInt y = (x + n / x) >> 1;
  while (y < x) {
    x = y;
    y = (x + n / x) >> 1;
  }
  return x;
}

struct IsqrtResult {
  BigInt root;  // floor(sqrt(n))
  bool exact;   // root * root == n
};

inline IsqrtResult isqrt_exact(const BigInt& n) {
  BigInt r = isqrt(n);
  bool exact = (r * r == n);
  return {std::move(r), exact};
}

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const auto low = static_cast<std::uint64_t>(n & 0xFFFFFFFFu);
  if (!detail::kSquareMod64[low & 63u]) return false;
  if (!detail::kSquareMod63[static_cast<std::uint64_t>(n % 63)]) return false;
  return isqrt_exact(n).exact;
}

// Exact rational square root: present iff numerator and denominator of the
// canonical form are both perfect squares.
inline std::optional<Rational> rat_sqrt_exact(const Rational& q) {
  if (q < 0) throw std::domain_error("rat_sqrt_exact: negative input");
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  auto [rn, num_ok] = isqrt_exact(num);
  if (!num_ok) return std::nullopt;
  auto [rd, den_ok] = isqrt_exact(den);
  if (!den_ok) return std::nullopt;
  return Rational(rn, rd);
}

// n mod m normalized to [0, m).
inline int mod_residue(const BigInt& n, int m) {
  BigInt r = n % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

inline int residue3(const BigInt& n) { return mod_residue(n, 3); }

inline std::int64_t to_i64(const BigInt& n, const char* what = "value") {
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min()) {
    throw std::domain_error(std::string(what) + ": exceeds 64-bit range");
  }
  return n.convert_to<std::int64_t>();
}

// "p/q" in lowest terms; whole values print without the denominator.
inline std::string rational_to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace medtri
