#pragma once

// Finite words over the binary alphabet {a, b} and the classical
// stringology primitives built on them: factors, occurrences, borders,
// periods and palindromes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace trapezoid {

enum class Letter : std::uint8_t { a = 0, b = 1 };

constexpr char to_char(Letter x) noexcept { return x == Letter::a ? 'a' : 'b'; }
constexpr Letter other(Letter x) noexcept { return x == Letter::a ? Letter::b : Letter::a; }
constexpr Letter letter_from_char(char c) noexcept { return c == 'b' ? Letter::b : Letter::a; }

inline constexpr Letter kLetters[] = {Letter::a, Letter::b};

/// Immutable-by-value finite word over {a, b}. Letters are stored as the
/// ASCII characters 'a' and 'b', so the natural string order is the
/// lexicographic order with a < b.
class Word {
 public:
  static constexpr std::size_t kMaxLength = std::size_t{1} << 16;

  Word() = default;

  /// Parses a string over {a, b}. Throws ParseError naming the first
  /// offending character and its 0-based position.
  static Word parse(std::string_view text);

  /// Like parse, but also accepts the literal token "eps" for the empty word.
  static Word parse_token(std::string_view text);

  /// The word of the given length whose i-th letter is bit (length-1-i) of
  /// `bits` (0 -> a, 1 -> b). Increasing `bits` enumerates Sigma^length in
  /// lexicographic order.
  static Word from_bits(std::uint64_t bits, std::size_t length);

  static Word power(Letter x, std::size_t n);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letter_from_char(letters_[i]); }

  std::string_view view() const noexcept { return letters_; }
  const std::string& str() const noexcept { return letters_; }

  Word substr(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len, len); }

  bool has_prefix(const Word& u) const noexcept { return view().starts_with(u.view()); }
  bool has_suffix(const Word& u) const noexcept { return view().ends_with(u.view()); }

  std::size_t count(Letter x) const noexcept;

  Word& append(Letter x);
  Word& append(const Word& w);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs.append(rhs); }
  friend Word operator+(Word lhs, Letter x) { return lhs.append(x); }
  friend Word operator+(Letter x, const Word& rhs) { return Word::power(x, 1).append(rhs); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) noexcept {
    return lhs.letters_.compare(rhs.letters_) <=> 0;
  }

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Renders ε as "eps" and every other word as its letters.
std::string display(const Word& w);

struct OccurrenceList {
  Word factor;
  std::vector<std::size_t> positions;
};

struct PeriodData {
  std::size_t period = 0;
  Word fractional_root;
  Word longest_border;
};

/// Distinct factors of length n, in lexicographic order. Throws
/// std::invalid_argument for negative n; n > |w| yields the empty set.
std::set<Word> factors_of_length(const Word& w, long long n);

/// f_w(0), ..., f_w(|w|).
std::vector<std::size_t> factor_complexity(const Word& w);

OccurrenceList occurrences(const Word& host, const Word& factor);

Word reversal(const Word& w);

bool is_palindrome(const Word& w) noexcept;

/// KMP failure table: entry i is the length of the longest proper border of
/// the prefix of length i + 1.
std::vector<std::size_t> failure_function(std::string_view s);

/// Z-array: entry i is the length of the longest common prefix of s and
/// s[i..]. Entry 0 is |s|.
std::vector<std::size_t> z_function(std::string_view s);

/// Throws std::invalid_argument on the empty word.
PeriodData period_data(const Word& w);

/// Throws std::invalid_argument on the empty word.
bool is_primitive(const Word& w);

/// True iff p is a period of w (vacuously true for p >= |w|). Requires p > 0.
bool has_period(const Word& w, std::size_t p) noexcept;

/// Proper borders in increasing length order, starting with ε for nonempty w.
std::vector<Word> borders(const Word& w);

/// All distinct palindromic factors including ε, lexicographically ordered.
std::set<Word> palindromic_factors(const Word& w);

/// Number of distinct palindromic factors including ε. Linear time via a
/// palindromic tree.
std::size_t count_palindromic_factors(const Word& w);

/// Prefix of length n of the infinite periodic word root^omega.
Word periodic_extension(const Word& root, std::size_t n);

}  // namespace trapezoid

template <>
struct std::hash<trapezoid::Word> {
  std::size_t operator()(const trapezoid::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.view());
  }
};
