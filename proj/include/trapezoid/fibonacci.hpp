#pragma once

// Prefixes of the Fibonacci word and their open/closed structure.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trapezoid/trapezoidal.hpp"
#include "trapezoid/word.hpp"

namespace trapezoid {

/// F_1..F_k with F_1 = F_2 = 1. Requires 1 <= k <= 93 (F_93 is the last
/// value that fits in 64 bits).
std::vector<std::uint64_t> fibonacci_numbers(long long k);

/// First n letters of the fixed point of a -> ab, b -> a, obtained by
/// iterating the substitution from a.
Word fibonacci_prefix(long long n);

/// s_3, ..., s_max_i where s_i is the palindromic prefix of length F_i - 2.
/// Requires 3 <= max_i <= 24 (longer prefixes exceed the word length cap).
std::vector<Word> palindromic_prefixes(long long max_i);

/// True iff some i >= 1 has F_{i+1} - 1 <= n <= 2 F_i - 2.
bool fibonacci_prefix_predicted_open(std::size_t n);

struct FibonacciAnalysis {
  std::size_t max_length = 0;
  /// Prefix lengths 1..verified_length are classified with is_closed.
  std::size_t verified_length = 0;
  /// Marker of the prefix of length n at index n - 1. Classified entries
  /// where available, predicted entries beyond verified_length.
  std::vector<Openness> sequence;
  /// Markers from the interval predicate, for every length.
  std::vector<Openness> predicted;
  /// Lengths of the maximal runs of equal markers. The final run is dropped
  /// when the prefix of length max_length + 1 would extend it.
  std::vector<std::size_t> run_lengths;
  /// Classified and predicted markers agree on every verified length.
  bool consistent = true;
};

inline constexpr std::size_t kMaxFibonacciAnalysis = 100000;
inline constexpr std::size_t kDefaultFibonacciVerification = 5000;

/// Throws std::invalid_argument unless 1 <= max_length <= 100000.
FibonacciAnalysis analyze_prefixes(long long max_length,
                                   std::size_t verify_up_to = kDefaultFibonacciVerification);

struct RunBoundaryWords {
  std::size_t i = 0;
  Word closed_run_end;  ///< prefix of length F_{i+2} - 2
  bool closed_run_end_is_central = false;
  Word open_run_end;  ///< prefix of length 2 F_i - 2
  bool open_run_end_is_semicentral = false;
  Letter x = Letter::a;
  Letter y = Letter::b;
  /// open_run_end == s_i x y s_i.
  bool open_run_end_is_sixys = false;
};

/// Requires 4 <= i <= 16.
RunBoundaryWords run_boundary_words(long long i);

}  // namespace trapezoid
