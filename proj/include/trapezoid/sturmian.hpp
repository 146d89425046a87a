#pragma once

// Balance, minimal pathological pairs, central roots and central words.

#include <cstddef>
#include <optional>
#include <vector>

#include "trapezoid/word.hpp"

namespace trapezoid {

/// A minimal pathological pair (f, g) = (xux, yuy). `f` is the member whose
/// first occurrence comes first in the host word; `g_position` is the first
/// occurrence of g, which starts after the designated f ends.
struct PathologicalDecomposition {
  Word f;
  Word g;
  Word u;  ///< central root
  Letter x = Letter::a;
  Letter y = Letter::b;
  std::size_t f_position = 0;
  std::size_t g_position = 0;
};

/// w = x^n, or w = u1 x y u2 = u2 y x u1 with x != y.
struct CentralDecomposition {
  enum class Kind { letter_power, cross };
  Kind kind = Kind::letter_power;
  // letter_power
  Letter letter = Letter::a;
  std::size_t exponent = 0;
  // cross
  Word u1;
  Word u2;
  Letter x = Letter::a;
  Letter y = Letter::b;
};

bool is_balanced(const Word& w);

/// Finite Sturmian words are exactly the balanced binary words.
inline bool is_finite_sturmian(const Word& w) { return is_balanced(w); }

/// Empty optional for balanced words.
std::optional<PathologicalDecomposition> minimal_pathological_pair(const Word& w);

/// Throws PreconditionError on balanced input.
Word central_root(const Word& w);

/// True iff w has two coprime periods p, q with |w| = p + q - 2. Periods
/// larger than |w| hold vacuously, so letter powers (p = 1, q = |w| + 1) and ε
/// qualify.
bool is_central(const Word& w);

/// w is a palindrome and both awa and bwb are balanced.
bool is_central_via_palindrome_extension(const Word& w);

/// Throws PreconditionError when w is not central. ε is reported as a^0.
CentralDecomposition central_decomposition(const Word& w);

/// All central words of length n in lexicographic order; there are phi(n+2).
std::vector<Word> central_words(std::size_t n);

}  // namespace trapezoid
