#include "trapezoid/sturmian.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "trapezoid/error.hpp"

namespace trapezoid {

namespace {

// a-count prefix sums: counts[i] = |w[0..i)|_a.
std::vector<std::size_t> a_counts(const Word& w) {
  std::vector<std::size_t> counts(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) counts[i + 1] = counts[i] + (w[i] == Letter::a ? 1 : 0);
  return counts;
}

// Smallest window length at which a-counts of two windows differ by 2, or 0.
std::size_t first_unbalanced_length(const std::vector<std::size_t>& counts) {
  const std::size_t n = counts.size() - 1;
  for (std::size_t len = 2; len <= n; ++len) {
    std::size_t lo = counts[len] - counts[0];
    std::size_t hi = lo;
    for (std::size_t i = 1; i + len <= n; ++i) {
      const std::size_t c = counts[i + len] - counts[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return len;
  }
  return 0;
}

}  // namespace

bool is_balanced(const Word& w) { return first_unbalanced_length(a_counts(w)) == 0; }

std::optional<PathologicalDecomposition> minimal_pathological_pair(const Word& w) {
  const auto counts = a_counts(w);
  const std::size_t len = first_unbalanced_length(counts);
  if (len == 0) return std::nullopt;

  // At the minimal violating length the a-counts span exactly two values
  // apart: windows of maximal count are all xux with x = a, windows of
  // minimal count are all bub.
  std::size_t lo = len;
  std::size_t hi = 0;
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    lo = std::min(lo, counts[i + len] - counts[i]);
    hi = std::max(hi, counts[i + len] - counts[i]);
  }
  if (hi - lo != 2) throw InvariantViolation("minimal_pathological_pair: count spread is not 2");

  std::optional<std::size_t> first_rich;  // first window with count hi
  std::optional<std::size_t> first_poor;  // first window with count lo
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    const std::size_t c = counts[i + len] - counts[i];
    const Word window = w.substr(i, len);
    if (c == hi) {
      if (!first_rich) first_rich = i;
      if (window != w.substr(*first_rich, len)) throw InvariantViolation("minimal_pathological_pair: two distinct aua factors");
    } else if (c == lo) {
      if (!first_poor) first_poor = i;
      if (window != w.substr(*first_poor, len)) throw InvariantViolation("minimal_pathological_pair: two distinct bub factors");
    }
  }

  const Word rich = w.substr(*first_rich, len);
  const Word poor = w.substr(*first_poor, len);
  const Word u = rich.substr(1, len - 2);
  if (rich[0] != Letter::a || rich[len - 1] != Letter::a || poor[0] != Letter::b || poor[len - 1] != Letter::b ||
      poor.substr(1, len - 2) != u || !is_palindrome(u)) {
    throw InvariantViolation("minimal_pathological_pair: pair is not of the form (aua, bub)");
  }

  PathologicalDecomposition d;
  d.u = u;
  if (*first_rich < *first_poor) {
    d.f = rich;
    d.g = poor;
    d.x = Letter::a;
    d.y = Letter::b;
    d.f_position = *first_rich;
    d.g_position = *first_poor;
  } else {
    d.f = poor;
    d.g = rich;
    d.x = Letter::b;
    d.y = Letter::a;
    d.f_position = *first_poor;
    d.g_position = *first_rich;
  }
  if (d.g_position < d.f_position + len) throw InvariantViolation("minimal_pathological_pair: f and g overlap");
  return d;
}

Word central_root(const Word& w) {
  auto d = minimal_pathological_pair(w);
  if (!d) throw PreconditionError("central_root: word '" + w.str() + "' is balanced");
  return d->u;
}

bool is_central(const Word& w) {
  const std::size_t n = w.size();
  // p + q = n + 2 with p <= q; both in [1, n + 1].
  for (std::size_t p = 1; 2 * p <= n + 2; ++p) {
    const std::size_t q = n + 2 - p;
    if (std::gcd(p, q) == 1 && has_period(w, p) && has_period(w, q)) return true;
  }
  return false;
}

bool is_central_via_palindrome_extension(const Word& w) {
  return is_palindrome(w) && is_balanced(Letter::a + w + Letter::a) && is_balanced(Letter::b + w + Letter::b);
}

CentralDecomposition central_decomposition(const Word& w) {
  CentralDecomposition d;
  if (w.empty()) return d;
  for (Letter x : kLetters) {
    if (w.count(x) == w.size()) {
      d.letter = x;
      d.exponent = w.size();
      return d;
    }
  }
  if (!is_central(w)) throw PreconditionError("central_decomposition: word '" + w.str() + "' is not central");
  for (std::size_t i = 0; i + 2 <= w.size(); ++i) {
    const Letter x = w[i];
    const Letter y = w[i + 1];
    if (x == y) continue;
    const Word u1 = w.prefix(i);
    const Word u2 = w.suffix(w.size() - i - 2);
    if (u2 + y + x + u1 == w) {
      d.kind = CentralDecomposition::Kind::cross;
      d.u1 = u1;
      d.u2 = u2;
      d.x = x;
      d.y = y;
      return d;
    }
  }
  throw InvariantViolation("central_decomposition: central word '" + w.str() + "' has no cross decomposition");
}

std::vector<Word> central_words(std::size_t n) {
  // Central words are palindromes; enumerating the first half in
  // lexicographic order enumerates the palindromes in lexicographic order.
  if (n > 64) throw std::invalid_argument("central_words: length must be at most 64");
  const std::size_t half = (n + 1) / 2;
  std::vector<Word> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << half); ++bits) {
    const Word left = Word::from_bits(bits, half);
    const Word w = left + reversal(left.prefix(n / 2));
    if (is_central(w)) out.push_back(w);
  }
  return out;
}

}  // namespace trapezoid
