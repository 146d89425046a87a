#include "trapezoid/word.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "trapezoid/error.hpp"

namespace trapezoid {

Word Word::parse(std::string_view text) {
  if (text.size() > kMaxLength) {
    throw ParseError("word of length " + std::to_string(text.size()) + " exceeds the maximum length " +
                         std::to_string(kMaxLength),
                     kMaxLength, text[kMaxLength]);
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'a' && text[i] != 'b') {
      std::string shown = (text[i] >= 0x20 && text[i] < 0x7f) ? std::string(1, text[i]) : "\\x" + std::to_string(static_cast<unsigned char>(text[i]));
      throw ParseError("invalid character '" + shown + "' at position " + std::to_string(i) +
                           " (expected 'a' or 'b')",
                       i, text[i]);
    }
  }
  return Word(std::string(text));
}

Word Word::parse_token(std::string_view text) {
  if (text == "eps") return Word();
  return parse(text);
}

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
  if (length > 64) throw std::invalid_argument("from_bits: length must be at most 64");
  std::string s(length, 'a');
  for (std::size_t i = 0; i < length; ++i) {
    if ((bits >> (length - 1 - i)) & 1u) s[i] = 'b';
  }
  return Word(std::move(s));
}

Word Word::power(Letter x, std::size_t n) {
  if (n > kMaxLength) throw std::length_error("Word::power: length exceeds maximum");
  return Word(std::string(n, to_char(x)));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size()) throw std::out_of_range("Word::substr: position out of range");
  return Word(letters_.substr(pos, len));
}

std::size_t Word::count(Letter x) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), to_char(x)));
}

Word& Word::append(Letter x) {
  if (size() + 1 > kMaxLength) throw std::length_error("Word::append: length exceeds maximum");
  letters_.push_back(to_char(x));
  return *this;
}

Word& Word::append(const Word& w) {
  if (size() + w.size() > kMaxLength) throw std::length_error("Word::append: length exceeds maximum");
  letters_ += w.letters_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.view(); }

std::string display(const Word& w) { return w.empty() ? std::string("eps") : w.str(); }

std::set<Word> factors_of_length(const Word& w, long long n) {
  if (n < 0) throw std::invalid_argument("factors_of_length: negative length");
  std::set<Word> out;
  const auto len = static_cast<std::size_t>(n);
  if (len > w.size()) return out;
  for (std::size_t i = 0; i + len <= w.size(); ++i) out.insert(w.substr(i, len));
  return out;
}

std::vector<std::size_t> factor_complexity(const Word& w) {
  const std::string_view s = w.view();
  std::vector<std::size_t> f(s.size() + 1);
  std::unordered_set<std::string_view> seen;
  for (std::size_t n = 0; n <= s.size(); ++n) {
    seen.clear();
    for (std::size_t i = 0; i + n <= s.size(); ++i) seen.insert(s.substr(i, n));
    f[n] = seen.size();
  }
  return f;
}

OccurrenceList occurrences(const Word& host, const Word& factor) {
  OccurrenceList out{factor, {}};
  const std::string_view h = host.view();
  const std::string_view u = factor.view();
  if (u.size() > h.size()) return out;
  if (u.empty()) {
    out.positions.resize(h.size() + 1);
    for (std::size_t i = 0; i <= h.size(); ++i) out.positions[i] = i;
    return out;
  }
  // KMP scan of host against the factor.
  const auto fail = failure_function(u);
  std::size_t k = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    while (k > 0 && h[i] != u[k]) k = fail[k - 1];
    if (h[i] == u[k]) ++k;
    if (k == u.size()) {
      out.positions.push_back(i + 1 - u.size());
      k = fail[k - 1];
    }
  }
  return out;
}

Word reversal(const Word& w) {
  std::string s(w.view().rbegin(), w.view().rend());
  return Word::parse(s);
}

bool is_palindrome(const Word& w) noexcept {
  const std::string_view s = w.view();
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

std::vector<std::size_t> failure_function(std::string_view s) {
  std::vector<std::size_t> fail(s.size(), 0);
  for (std::size_t i = 1, k = 0; i < s.size(); ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

std::vector<std::size_t> z_function(std::string_view s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n == 0) return z;
  z[0] = n;
  for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

PeriodData period_data(const Word& w) {
  if (w.empty()) throw std::invalid_argument("period_data: the empty word has no period");
  const std::size_t border = failure_function(w.view()).back();
  const std::size_t period = w.size() - border;
  return PeriodData{period, w.prefix(period), w.prefix(border)};
}

bool is_primitive(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_primitive: empty word");
  const std::size_t p = period_data(w).period;
  return !(p < w.size() && w.size() % p == 0);
}

bool has_period(const Word& w, std::size_t p) noexcept {
  const std::string_view s = w.view();
  for (std::size_t i = 0; i + p < s.size(); ++i) {
    if (s[i] != s[i + p]) return false;
  }
  return true;
}

std::vector<Word> borders(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) return out;
  const auto fail = failure_function(w.view());
  for (std::size_t k = fail.back(); k > 0; k = fail[k - 1]) out.push_back(w.prefix(k));
  out.push_back(Word());
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Palindromic tree (eertree). Node 0 is the imaginary root of length -1,
// node 1 the empty palindrome; every further node is a distinct nonempty
// palindromic factor.
struct Eertree {
  struct Node {
    long length;
    std::size_t suffix_link;
    std::array<std::size_t, 2> next{0, 0};
    std::size_t end;  // end position (exclusive) of the first occurrence
  };

  explicit Eertree(std::string_view s) : text(s) {
    nodes.push_back({-1, 0, {0, 0}, 0});
    nodes.push_back({0, 0, {0, 0}, 0});
    std::size_t last = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::size_t c = s[i] == 'b' ? 1 : 0;
      std::size_t cur = last;
      while (!extends(cur, i)) cur = nodes[cur].suffix_link;
      if (nodes[cur].next[c] != 0) {
        last = nodes[cur].next[c];
        continue;
      }
      Node node{nodes[cur].length + 2, 1, {0, 0}, i + 1};
      if (node.length > 1) {
        std::size_t link = nodes[cur].suffix_link;
        while (!extends(link, i)) link = nodes[link].suffix_link;
        node.suffix_link = nodes[link].next[c];
      }
      nodes.push_back(node);
      nodes[cur].next[c] = nodes.size() - 1;
      last = nodes.size() - 1;
    }
  }

  bool extends(std::size_t node, std::size_t i) const {
    const long before = static_cast<long>(i) - nodes[node].length - 1;
    return before >= 0 && text[static_cast<std::size_t>(before)] == text[i];
  }

  std::string_view text;
  std::vector<Node> nodes;
};

}  // namespace

std::set<Word> palindromic_factors(const Word& w) {
  const Eertree tree(w.view());
  std::set<Word> out{Word()};
  for (std::size_t k = 2; k < tree.nodes.size(); ++k) {
    const auto& node = tree.nodes[k];
    const auto len = static_cast<std::size_t>(node.length);
    out.insert(w.substr(node.end - len, len));
  }
  return out;
}

std::size_t count_palindromic_factors(const Word& w) {
  // Distinct nonempty palindromes plus ε.
  return Eertree(w.view()).nodes.size() - 1;
}

Word periodic_extension(const Word& root, std::size_t n) {
  if (root.empty()) throw std::invalid_argument("periodic_extension: empty root");
  std::string s(n, 'a');
  for (std::size_t i = 0; i < n; ++i) s[i] = root.view()[i % root.size()];
  return Word::parse(s);
}

}  // namespace trapezoid
