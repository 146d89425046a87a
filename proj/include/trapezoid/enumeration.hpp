#pragma once

// Closed-form counts of Sturmian, trapezoidal, semicentral and central words,
// and the exhaustive census that checks them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trapezoid/word.hpp"

namespace trapezoid {

using Count = std::uint64_t;

/// Number of k in [1, n] coprime with n; phi(1) = 1. Requires n >= 1.
Count euler_phi(long long n);

/// S(n) = 1 + sum_{i=1..n} (n - i + 1) phi(i). Requires n >= 1.
Count sturmian_count(long long n);

/// T(n) = sum_{i=0..floor((n-4)/2)} 2 (n - 2i - 3) phi(i + 2); 0 for n < 4.
/// Requires n >= 1.
Count nonsturmian_trapezoidal_count(long long n);

/// S(n) + T(n). Requires n >= 1.
Count trapezoidal_count(long long n);

/// 2 phi(n/2 + 1) for even n, 0 for odd n. Requires n >= 1.
Count semicentral_count(long long n);

/// phi(n + 2). Requires n >= 0.
Count central_count(long long n);

struct LedgerRow {
  std::size_t n = 0;
  Count sturmian_formula = 0;
  Count nonsturmian_trapezoidal_formula = 0;
  Count trapezoidal_total_formula = 0;
  Count semicentral_formula = 0;
  Count central_formula = 0;
  std::optional<Count> sturmian_brute;
  std::optional<Count> nonsturmian_trapezoidal_brute;
  std::optional<Count> trapezoidal_total_brute;
  std::optional<Count> semicentral_brute;
  std::optional<Count> central_brute;

  /// Every brute-force column that is present equals its formula column.
  bool matches() const noexcept;

  friend bool operator==(const LedgerRow&, const LedgerRow&) = default;
};

struct CountLedger {
  std::vector<LedgerRow> rows;

  bool matches() const noexcept;

  friend bool operator==(const CountLedger&, const CountLedger&) = default;
};

inline constexpr std::size_t kMaxFormulaLength = 64;
inline constexpr std::size_t kDefaultCensusLength = 16;
inline constexpr std::size_t kMaxCensusLength = 24;

/// Formula columns for n = 1..max_n (1 <= max_n <= 64).
CountLedger formula_ledger(std::size_t max_n);

enum CensusClass : unsigned {
  kCensusSturmian = 1u << 0,
  kCensusTrapezoidal = 1u << 1,  ///< also yields the non-Sturmian column when Sturmian is selected
  kCensusSemicentral = 1u << 2,
  kCensusCentral = 1u << 3,
  kCensusAll = kCensusSturmian | kCensusTrapezoidal | kCensusSemicentral | kCensusCentral,
};

struct CensusConfig {
  std::size_t max_length = kDefaultCensusLength;
  unsigned classes = kCensusAll;
  /// Worker threads; 0 selects std::thread::hardware_concurrency().
  std::size_t parallelism = 0;
};

/// Formula columns for n = 1..max_length plus brute-force tallies obtained by
/// classifying all 2^n words of each length. The result does not depend on
/// the parallelism degree. Throws std::invalid_argument unless
/// 1 <= max_length <= 24.
CountLedger census(const CensusConfig& config);

enum class WordClass { trapezoidal, sturmian, central, semicentral, closed_trapezoidal, open_trapezoidal, rich };

std::string_view to_string(WordClass c) noexcept;
std::optional<WordClass> parse_word_class(std::string_view name) noexcept;
const std::vector<WordClass>& all_word_classes();

inline constexpr std::size_t kMaxGenerateLength = 20;

/// All words of length n in the class, lexicographically ordered, by
/// exhaustive filtering. Throws std::invalid_argument unless 1 <= n <= 20.
std::vector<Word> generate(long long n, WordClass word_class);

/// The non-Sturmian trapezoidal words of length n built directly as pq with
/// p in Suff((~z_xux)^*), q in Pref(z_yuy^*), |p|, |q| >= |u| + 2, over all
/// central u and ordered letter pairs x != y. Sorted lexicographically.
/// Throws std::invalid_argument unless 1 <= n <= 64.
std::vector<Word> construct_nonsturmian_trapezoidal(long long n);

}  // namespace trapezoid
