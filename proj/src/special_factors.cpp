#include "trapezoid/special_factors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

namespace trapezoid {

namespace {

constexpr unsigned kExtA = 1;
constexpr unsigned kExtB = 2;
constexpr unsigned kBoth = kExtA | kExtB;

unsigned ext_bit(char c) { return c == 'b' ? kExtB : kExtA; }

bool shortlex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

// For every length n, classify the length-n factors by the letters that
// precede / follow them, using the windows of length n + 1.
struct ExtensionScan {
  std::vector<Word> left;
  std::vector<Word> right;

  explicit ExtensionScan(const Word& w) {
    const std::string_view s = w.view();
    std::unordered_map<std::string_view, unsigned> left_ext;
    std::unordered_map<std::string_view, unsigned> right_ext;
    for (std::size_t n = 0; n < s.size(); ++n) {
      left_ext.clear();
      right_ext.clear();
      for (std::size_t i = 0; i + n + 1 <= s.size(); ++i) {
        right_ext[s.substr(i, n)] |= ext_bit(s[i + n]);
        left_ext[s.substr(i + 1, n)] |= ext_bit(s[i]);
      }
      std::size_t found = 0;
      for (const auto& [u, bits] : left_ext) {
        if (bits == kBoth) {
          left.push_back(Word::parse(u));
          ++found;
        }
      }
      for (const auto& [u, bits] : right_ext) {
        if (bits == kBoth) {
          right.push_back(Word::parse(u));
          ++found;
        }
      }
      // Special factors are closed under taking prefixes (left) and
      // suffixes (right), so once a length has none, no longer one exists.
      if (found == 0) break;
    }
    std::sort(left.begin(), left.end(), shortlex_less);
    std::sort(right.begin(), right.end(), shortlex_less);
  }
};

std::optional<Word> longest_smallest(const std::vector<Word>& sorted) {
  if (sorted.empty()) return std::nullopt;
  const std::size_t top = sorted.back().size();
  auto it = std::find_if(sorted.begin(), sorted.end(), [top](const Word& u) { return u.size() == top; });
  return *it;
}

}  // namespace

SpecialFactors special_factors(const Word& w) {
  ExtensionScan scan(w);
  SpecialFactors out{std::move(scan.left), std::move(scan.right), {}};
  std::set_intersection(out.left.begin(), out.left.end(), out.right.begin(), out.right.end(),
                        std::back_inserter(out.bispecial), shortlex_less);
  return out;
}

std::size_t right_special_threshold(const Word& w) {
  const std::string_view s = w.view();
  std::unordered_map<std::string_view, unsigned> right_ext;
  std::size_t R = 0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    right_ext.clear();
    bool any = false;
    for (std::size_t i = 0; i + n + 1 <= s.size(); ++i) {
      unsigned& bits = right_ext[s.substr(i, n)];
      bits |= ext_bit(s[i + n]);
      any = any || bits == kBoth;
    }
    if (!any) break;
    R = n + 1;
  }
  return R;
}

std::size_t longest_repeated_prefix_length(const Word& w) {
  const auto z = z_function(w.view());
  std::size_t best = 0;
  for (std::size_t i = 1; i < z.size(); ++i) best = std::max(best, z[i]);
  return best;
}

std::size_t longest_repeated_suffix_length(const Word& w) {
  return longest_repeated_prefix_length(reversal(w));
}

DeLucaParameters de_luca_parameters(const Word& w) {
  if (w.empty()) throw std::invalid_argument("de_luca_parameters: the empty word has no parameters");
  DeLucaParameters p;
  const std::size_t h = longest_repeated_prefix_length(w);
  const std::size_t k = longest_repeated_suffix_length(w);
  p.H = h + 1;
  p.K = k + 1;
  p.h_w = w.prefix(h);
  p.k_w = w.suffix(k);

  const ExtensionScan scan(w);
  p.l_w = longest_smallest(scan.left);
  p.r_w = longest_smallest(scan.right);
  p.L = p.l_w ? p.l_w->size() + 1 : 0;
  p.R = p.r_w ? p.r_w->size() + 1 : 0;
  return p;
}

}  // namespace trapezoid
