#pragma once

// Brute-force reference implementations used as test oracles. Everything
// here works on plain std::string over {a, b} with naive quadratic or cubic
// scans and shares no code with the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> all_words(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::string s(n, 'a');
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> (n - 1 - i)) & 1u) s[i] = 'b';
    }
    out.push_back(s);
  }
  return out;
}

inline std::set<std::string> factors(const std::string& w, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

inline std::set<std::string> all_factors(const std::string& w) {
  std::set<std::string> out;
  for (std::size_t n = 0; n <= w.size(); ++n) {
    auto f = factors(w, n);
    out.insert(f.begin(), f.end());
  }
  return out;
}

/// f_w(0..|w|+1); the trailing entry is 0.
inline std::vector<std::size_t> complexity(const std::string& w) {
  std::vector<std::size_t> f;
  for (std::size_t n = 0; n <= w.size() + 1; ++n) f.push_back(factors(w, n).size());
  return f;
}

inline std::vector<std::size_t> occurrences(const std::string& w, const std::string& u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < u.size(); ++j) match = match && w[i + j] == u[j];
    if (match) out.push_back(i);
  }
  return out;
}

inline std::size_t count_a(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), 'a')); }

inline bool balanced(const std::string& w) {
  for (std::size_t n = 1; n <= w.size(); ++n) {
    const auto f = factors(w, n);
    for (const auto& u : f) {
      for (const auto& v : f) {
        const long d = static_cast<long>(count_a(u)) - static_cast<long>(count_a(v));
        if (d > 1 || d < -1) return false;
      }
    }
  }
  return true;
}

inline std::string reverse(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

inline bool palindrome(const std::string& s) { return s == reverse(s); }

inline std::vector<std::string> left_special(const std::string& w) {
  const auto f = all_factors(w);
  std::vector<std::string> out;
  for (const auto& u : f) {
    if (f.count("a" + u) && f.count("b" + u)) out.push_back(u);
  }
  return out;
}

inline std::vector<std::string> right_special(const std::string& w) {
  const auto f = all_factors(w);
  std::vector<std::string> out;
  for (const auto& u : f) {
    if (f.count(u + "a") && f.count(u + "b")) out.push_back(u);
  }
  return out;
}

inline std::size_t max_len_plus_one(const std::vector<std::string>& v) {
  std::size_t best = 0;
  for (const auto& u : v) best = std::max(best, u.size() + 1);
  return best;
}

struct Params {
  std::size_t H, K, L, R;
};

inline Params parameters(const std::string& w) {
  Params p{};
  for (p.H = 0; p.H <= w.size() && occurrences(w, w.substr(0, p.H)).size() != 1; ++p.H) {
  }
  for (p.K = 0; p.K <= w.size() && occurrences(w, w.substr(w.size() - p.K)).size() != 1; ++p.K) {
  }
  p.L = max_len_plus_one(left_special(w));
  p.R = max_len_plus_one(right_special(w));
  return p;
}

inline bool has_period(const std::string& w, std::size_t p) {
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

/// w = a^n, w = b^n, or w = u ab v = v ba u.
inline bool central_by_equations(const std::string& w) {
  if (w.find('b') == std::string::npos || w.find('a') == std::string::npos) return true;
  for (std::size_t i = 0; i + 2 <= w.size(); ++i) {
    const std::string u = w.substr(0, i);
    const std::string v = w.substr(i + 2);
    if (w == u + "ab" + v && w == v + "ba" + u) return true;
  }
  return false;
}

inline std::set<std::string> palindromes(const std::string& w) {
  std::set<std::string> out;
  for (const auto& u : all_factors(w)) {
    if (palindrome(u)) out.insert(u);
  }
  return out;
}

/// Every factor that is a complete return to a palindrome is a palindrome.
inline bool rich_by_complete_returns(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      const std::string r = w.substr(i, j - i);
      for (std::size_t k = 0; k < r.size(); ++k) {
        const std::string u = r.substr(0, k);
        if (!palindrome(u)) continue;
        const auto occ = occurrences(r, u);
        const bool complete_return = occ.size() == 2 && occ[0] == 0 && occ[1] == r.size() - u.size();
        if (complete_return && !palindrome(r)) return false;
      }
    }
  }
  return true;
}

/// Definition: some proper factor occurs exactly twice, as prefix and suffix.
inline bool closed(const std::string& w) {
  if (w.empty()) return true;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto occ = occurrences(w, w.substr(0, k));
    if (occ.size() == 2 && occ[0] == 0 && occ[1] == w.size() - k) return true;
  }
  return false;
}

/// The seven equivalent descriptions of trapezoidal words:
///  0 the trapezoid shape of f_w defined by m = min(R,K), M = max(R,K)
///  1 |w| = L + H
///  2 |w| = R + K
///  3 at most one left special factor per length
///  4 at most one right special factor per length
///  5 f_w(n) <= n + 1
///  6 |f_w(n+1) - f_w(n)| <= 1
inline std::array<bool, 7> trapezoidal_characterizations(const std::string& w) {
  const auto f = complexity(w);
  const Params p = parameters(w);
  const std::size_t n = w.size();
  std::array<bool, 7> c{};

  const std::size_t m = std::min(p.R, p.K);
  const std::size_t M = std::max(p.R, p.K);
  c[0] = true;
  for (std::size_t i = 0; i <= m; ++i) c[0] = c[0] && f[i] == i + 1;
  for (std::size_t i = m; i + 1 <= M; ++i) c[0] = c[0] && f[i + 1] == f[i];
  for (std::size_t i = M; i <= n; ++i) c[0] = c[0] && f[i + 1] + 1 == f[i];

  c[1] = n == p.L + p.H;
  c[2] = n == p.R + p.K;
  auto at_most_one_per_length = [n](const std::vector<std::string>& special) {
    std::vector<std::size_t> per_length(n + 1, 0);
    for (const auto& u : special) ++per_length[u.size()];
    return std::all_of(per_length.begin(), per_length.end(), [](std::size_t k) { return k <= 1; });
  };
  c[3] = at_most_one_per_length(left_special(w));
  c[4] = at_most_one_per_length(right_special(w));
  c[5] = true;
  c[6] = true;
  for (std::size_t i = 0; i <= n; ++i) {
    c[5] = c[5] && f[i] <= i + 1;
    const long d = static_cast<long>(f[i + 1]) - static_cast<long>(f[i]);
    c[6] = c[6] && d <= 1 && d >= -1;
  }
  return c;
}

inline unsigned long long phi(unsigned long long n) {
  unsigned long long k = 0;
  for (unsigned long long i = 1; i <= n; ++i) k += std::gcd(i, n) == 1 ? 1 : 0;
  return k;
}

}  // namespace oracle
