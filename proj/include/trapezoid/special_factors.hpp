#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trapezoid/word.hpp"

namespace trapezoid {

/// Special factors of a word, each list ordered by length and then
/// lexicographically.
struct SpecialFactors {
  std::vector<Word> left;
  std::vector<Word> right;
  std::vector<Word> bispecial;
};

/// The parameters H, K, L, R with their witnesses. For a word with no left
/// (right) special factor L (R) is 0 and l_w (r_w) is absent.
struct DeLucaParameters {
  std::size_t H = 0;
  std::size_t K = 0;
  std::size_t L = 0;
  std::size_t R = 0;
  Word h_w;  ///< longest repeated prefix
  Word k_w;  ///< longest repeated suffix
  std::optional<Word> l_w;  ///< longest left special factor
  std::optional<Word> r_w;  ///< longest right special factor

  friend bool operator==(const DeLucaParameters&, const DeLucaParameters&) = default;
};

SpecialFactors special_factors(const Word& w);

/// Throws std::invalid_argument on the empty word. When several longest
/// special factors exist, the witness is the lexicographically smallest.
DeLucaParameters de_luca_parameters(const Word& w);

/// R_w alone, without materializing the special factors.
std::size_t right_special_threshold(const Word& w);

/// Length of the longest repeated prefix (H_w - 1). Linear time.
std::size_t longest_repeated_prefix_length(const Word& w);

/// Length of the longest repeated suffix (K_w - 1). Linear time.
std::size_t longest_repeated_suffix_length(const Word& w);

}  // namespace trapezoid
