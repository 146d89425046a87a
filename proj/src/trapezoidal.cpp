#include "trapezoid/trapezoidal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trapezoid/error.hpp"
#include "trapezoid/sturmian.hpp"

namespace trapezoid {

namespace {

void require_nonempty(const Word& w, const char* op) {
  if (w.empty()) throw std::invalid_argument(std::string(op) + ": the empty word is not a valid input");
}

// Naive helpers for the closedness characterizations; deliberately free of
// the Z-array / KMP machinery used by the production path.
std::vector<std::size_t> scan_occurrences(std::string_view host, std::string_view u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + u.size() <= host.size(); ++i) {
    if (host.substr(i, u.size()) == u) out.push_back(i);
  }
  return out;
}

bool only_prefix_and_suffix(std::string_view host, std::string_view u) {
  for (std::size_t i : scan_occurrences(host, u)) {
    if (i != 0 && i != host.size() - u.size()) return false;
  }
  return true;
}

bool complete_return(std::string_view host, std::string_view u) {
  const auto occ = scan_occurrences(host, u);
  return occ.size() == 2 && occ[0] == 0 && occ[1] == host.size() - u.size();
}

bool contains(std::string_view host, std::string_view u) { return host.find(u) != std::string_view::npos; }

std::string_view scan_longest_repeated_prefix(std::string_view s) {
  for (std::size_t len = s.size(); len-- > 0;) {
    if (scan_occurrences(s, s.substr(0, len)).size() >= 2) return s.substr(0, len);
  }
  return {};
}

std::string_view scan_longest_repeated_suffix(std::string_view s) {
  for (std::size_t len = s.size(); len-- > 0;) {
    if (scan_occurrences(s, s.substr(s.size() - len)).size() >= 2) return s.substr(s.size() - len);
  }
  return {};
}

std::string_view scan_longest_border(std::string_view s) {
  for (std::size_t len = s.size(); len-- > 0;) {
    if (s.substr(0, len) == s.substr(s.size() - len)) return s.substr(0, len);
  }
  return {};
}

bool right_special_in(std::string_view s, std::string_view u) {
  return contains(s, std::string(u) + 'a') && contains(s, std::string(u) + 'b');
}

bool left_special_in(std::string_view s, std::string_view u) {
  return contains(s, 'a' + std::string(u)) && contains(s, 'b' + std::string(u));
}

}  // namespace

bool is_closed(const Word& w) {
  if (w.size() <= 1) return true;
  const auto z = z_function(w.view());
  std::size_t h = 0;
  for (std::size_t i = 1; i < z.size(); ++i) h = std::max(h, z[i]);
  // Every occurrence of h other than the prefix one must be the suffix one.
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (z[i] >= h && i != w.size() - h) return false;
  }
  return true;
}

std::optional<Word> closed_witness(const Word& w) {
  const auto all = borders(w);
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    const auto occ = occurrences(w, *it).positions;
    bool internal = false;
    for (std::size_t i : occ) internal = internal || (i != 0 && i != w.size() - it->size());
    if (!internal) return *it;
  }
  return std::nullopt;
}

std::array<bool, 10> closed_characterization_oracles(const Word& w) {
  require_nonempty(w, "closed_characterization_oracles");
  const std::string_view s = w.view();
  const std::string_view h = scan_longest_repeated_prefix(s);
  const std::string_view k = scan_longest_repeated_suffix(s);
  const std::string_view border = scan_longest_border(s);

  std::array<bool, 10> c{};
  for (std::size_t len = 0; len < s.size() && !c[0]; ++len) c[0] = complete_return(s, s.substr(0, len));
  c[1] = only_prefix_and_suffix(s, h);
  c[2] = only_prefix_and_suffix(s, k);
  c[3] = !right_special_in(s, h);
  c[4] = !left_special_in(s, k);
  for (std::size_t len = 0; len < s.size() && !c[5]; ++len) {
    if (s.substr(0, len) == s.substr(s.size() - len)) c[5] = only_prefix_and_suffix(s, s.substr(0, len));
  }
  c[6] = only_prefix_and_suffix(s, border);
  c[7] = complete_return(s, h);
  c[8] = complete_return(s, border);
  for (std::size_t len = 0; len < s.size() && !c[9]; ++len) {
    const std::string_view u = s.substr(0, len);
    if (u != s.substr(s.size() - len)) continue;
    bool framed = false;
    for (char x : {'a', 'b'}) {
      for (char y : {'a', 'b'}) framed = framed || contains(s, x + std::string(u) + y);
    }
    c[9] = !framed;
  }
  return c;
}

bool is_trapezoidal(const Word& w) {
  require_nonempty(w, "is_trapezoidal");
  return right_special_threshold(w) + longest_repeated_suffix_length(w) + 1 == w.size();
}

PqSplit dalessandro_factorization(const Word& w) {
  require_nonempty(w, "dalessandro_factorization");
  const auto pair = minimal_pathological_pair(w);
  if (!pair) throw PreconditionError("dalessandro_factorization: word '" + w.str() + "' is Sturmian");
  if (!is_trapezoidal(w)) throw PreconditionError("dalessandro_factorization: word '" + w.str() + "' is not trapezoidal");

  const DeLucaParameters params = de_luca_parameters(w);
  PqSplit split{w.prefix(w.size() - params.K), w.suffix(params.K)};

  const Word zf = period_data(pair->f).fractional_root;
  const Word zg = period_data(pair->g).fractional_root;
  if (reversal(split.p) != periodic_extension(zf, split.p.size())) {
    throw InvariantViolation("dalessandro_factorization: p = " + split.p.str() + " is not a suffix of a power of ~z_f = " +
                             reversal(zf).str());
  }
  if (split.q != periodic_extension(zg, split.q.size())) {
    throw InvariantViolation("dalessandro_factorization: q = " + split.q.str() + " is not a prefix of a power of z_g = " +
                             zg.str());
  }
  if (params.R != split.p.size() || !params.r_w || *params.r_w != split.p.prefix(params.R - 1)) {
    throw InvariantViolation("dalessandro_factorization: longest right special factor is not the longest proper prefix of p");
  }
  return split;
}

bool is_rich(const Word& w) { return count_palindromic_factors(w) == w.size() + 1; }

bool is_semicentral(const Word& w) {
  require_nonempty(w, "is_semicentral");
  if (!is_trapezoidal(w)) return false;
  const DeLucaParameters p = de_luca_parameters(w);
  return p.l_w && p.r_w && p.h_w == p.k_w && p.h_w == *p.l_w && p.h_w == *p.r_w;
}

SemicentralTriple semicentral_decompose(const Word& w) {
  if (w.empty() || !is_semicentral(w)) {
    throw PreconditionError("semicentral_decompose: word '" + w.str() + "' is not semicentral");
  }
  if (w.size() % 2 != 0) throw InvariantViolation("semicentral_decompose: semicentral word of odd length");
  const std::size_t half = (w.size() - 2) / 2;
  SemicentralTriple t{w.prefix(half), w[half], w[half + 1]};
  if (t.x == t.y || w.suffix(half) != t.u || !is_central(t.u)) {
    throw InvariantViolation("semicentral_decompose: '" + w.str() + "' is not of the form uxyu with u central");
  }
  return t;
}

TrapezoidalReport classify(const Word& w) {
  require_nonempty(w, "classify");
  TrapezoidalReport r;
  r.word = w;
  r.parameters = de_luca_parameters(w);
  r.complexity = factor_complexity(w);
  r.is_trapezoidal = r.parameters.R + r.parameters.K == w.size();
  r.is_sturmian = is_finite_sturmian(w);
  r.is_rich = is_rich(w);
  r.is_palindrome = is_palindrome(w);
  r.openness = openness(w);
  r.closed_witness = closed_witness(w);

  const auto& p = r.parameters;
  r.is_semicentral = r.is_trapezoidal && p.l_w && p.r_w && p.h_w == p.k_w && p.h_w == *p.l_w && p.h_w == *p.r_w;
  if (r.is_semicentral) r.semicentral_triple = semicentral_decompose(w);
  if (r.is_trapezoidal && !r.is_sturmian) r.pq_split = dalessandro_factorization(w);

  const bool closed = r.openness == Openness::closed;
  if (r.is_semicentral && closed) throw InvariantViolation("classify: semicentral word reported closed");
  if (r.is_trapezoidal && closed && !r.is_sturmian) throw InvariantViolation("classify: closed trapezoidal word is not Sturmian");
  if (r.is_trapezoidal && r.is_palindrome && (!r.is_sturmian || !closed)) {
    throw InvariantViolation("classify: trapezoidal palindrome is not a closed Sturmian word");
  }
  if (r.is_sturmian && !r.is_trapezoidal) throw InvariantViolation("classify: Sturmian word is not trapezoidal");
  if (r.is_trapezoidal && !r.is_rich) throw InvariantViolation("classify: trapezoidal word is not rich");
  if (closed != r.closed_witness.has_value()) throw InvariantViolation("classify: closed witness disagrees with openness");
  return r;
}

SturmianPalindromeChecks sturmian_palindrome_tests(const Word& w) {
  require_nonempty(w, "sturmian_palindrome_tests");
  SturmianPalindromeChecks c;
  const DeLucaParameters params = de_luca_parameters(w);
  c.is_palindrome = is_palindrome(w);
  c.is_sturmian = is_finite_sturmian(w);
  c.is_closed_trapezoidal = params.R + params.K == w.size() && is_closed(w);
  c.period = period_data(w).period;
  c.R = params.R;
  if (c.is_closed_trapezoidal) {
    c.longest_repeated_prefix_law = is_palindrome(params.h_w) == (c.is_sturmian && c.is_palindrome);
    c.special_factor_law = params.l_w == params.r_w && (!params.l_w || is_central(*params.l_w));
  }
  if (c.is_palindrome) c.period_law = c.is_sturmian == (c.period == c.R + 1);
  return c;
}

}  // namespace trapezoid
