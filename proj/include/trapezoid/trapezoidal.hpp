#pragma once

// Trapezoidal recognition, open/closed classification, the pq factorization
// of non-Sturmian trapezoidal words, richness and semicentral words.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "trapezoid/special_factors.hpp"
#include "trapezoid/word.hpp"

namespace trapezoid {

enum class Openness { open, closed };

constexpr std::string_view to_string(Openness o) noexcept { return o == Openness::open ? "open" : "closed"; }

struct PqSplit {
  Word p;
  Word q;
};

struct SemicentralTriple {
  Word u;
  Letter x = Letter::a;
  Letter y = Letter::b;
};

struct TrapezoidalReport {
  Word word;
  bool is_trapezoidal = false;
  bool is_sturmian = false;
  bool is_rich = false;
  bool is_palindrome = false;
  Openness openness = Openness::closed;
  bool is_semicentral = false;
  DeLucaParameters parameters;
  std::vector<std::size_t> complexity;
  std::optional<Word> closed_witness;
  std::optional<PqSplit> pq_split;
  std::optional<SemicentralTriple> semicentral_triple;
};

/// Closed iff w is empty or its longest repeated prefix has no internal
/// occurrence. Single letters are closed (ε occurs exactly at 0 and 1).
bool is_closed(const Word& w);

inline Openness openness(const Word& w) { return is_closed(w) ? Openness::closed : Openness::open; }

/// Longest border of w with no internal occurrence, if any.
std::optional<Word> closed_witness(const Word& w);

/// Ten equivalent characterizations of closedness, each evaluated by a
/// direct scan that does not go through is_closed:
///  0 some factor occurs exactly twice, as prefix and as suffix
///  1 the longest repeated prefix has no internal occurrence
///  2 the longest repeated suffix has no internal occurrence
///  3 the longest repeated prefix is not right special
///  4 the longest repeated suffix is not left special
///  5 some border has no internal occurrence
///  6 the longest border has no internal occurrence
///  7 w is a complete return to its longest repeated prefix
///  8 w is a complete return to its longest border
///  9 w = uv = zu with v, z nonempty and no factor in Sigma u Sigma
/// Throws std::invalid_argument on the empty word.
std::array<bool, 10> closed_characterization_oracles(const Word& w);

/// R_w + K_w = |w|. Throws std::invalid_argument on the empty word.
bool is_trapezoidal(const Word& w);

/// w = pq with |q| = K_w, p in Suff((~z_f)^*), q in Pref(z_g^*). Throws
/// PreconditionError unless w is trapezoidal and not Sturmian; throws
/// InvariantViolation if a membership check fails.
PqSplit dalessandro_factorization(const Word& w);

/// |w| + 1 distinct palindromic factors (ε included).
bool is_rich(const Word& w);

/// Trapezoidal with h_w = k_w = r_w = l_w. Throws std::invalid_argument on
/// the empty word.
bool is_semicentral(const Word& w);

/// w = u x y u with u central and x != y. Throws PreconditionError unless w
/// is semicentral.
SemicentralTriple semicentral_decompose(const Word& w);

/// All predicates and witnesses. Throws std::invalid_argument on the empty
/// word and InvariantViolation if the report contradicts a known inclusion.
TrapezoidalReport classify(const Word& w);

struct SturmianPalindromeChecks {
  bool is_palindrome = false;
  bool is_sturmian = false;
  bool is_closed_trapezoidal = false;
  std::size_t period = 0;
  std::size_t R = 0;
  /// Closed trapezoidal words: h_w is a palindrome iff w is a Sturmian
  /// palindrome. Vacuously true otherwise.
  bool longest_repeated_prefix_law = true;
  /// Palindromes: Sturmian iff period = R + 1. Vacuously true otherwise.
  bool period_law = true;
  /// Closed trapezoidal words: the longest left and right special factors
  /// coincide and are central. Vacuously true otherwise.
  bool special_factor_law = true;
};

/// Throws std::invalid_argument on the empty word.
SturmianPalindromeChecks sturmian_palindrome_tests(const Word& w);

}  // namespace trapezoid
