#include "trapezoid/fibonacci.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "trapezoid/sturmian.hpp"

namespace trapezoid {

std::vector<std::uint64_t> fibonacci_numbers(long long k) {
  if (k < 1 || k > 93) throw std::invalid_argument("fibonacci_numbers: k must be in [1, 93], got " + std::to_string(k));
  std::vector<std::uint64_t> f{1};
  while (f.size() < static_cast<std::size_t>(k)) f.push_back(f.size() < 2 ? 1 : f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

Word fibonacci_prefix(long long n) {
  if (n < 0) throw std::invalid_argument("fibonacci_prefix: negative length");
  if (static_cast<std::size_t>(n) > Word::kMaxLength) throw std::invalid_argument("fibonacci_prefix: length exceeds the word length cap");
  const auto len = static_cast<std::size_t>(n);
  std::string current = "a";
  while (current.size() < len) {
    std::string next;
    next.reserve(current.size() * 2);
    for (char c : current) next += c == 'a' ? "ab" : "a";
    current = std::move(next);
  }
  current.resize(len);
  return Word::parse(current);
}

std::vector<Word> palindromic_prefixes(long long max_i) {
  if (max_i < 3 || max_i > 24) throw std::invalid_argument("palindromic_prefixes: max_i must be in [3, 24]");
  const auto fib = fibonacci_numbers(max_i);
  const Word f = fibonacci_prefix(static_cast<long long>(fib.back() - 2));
  std::vector<Word> out;
  for (long long i = 3; i <= max_i; ++i) out.push_back(f.prefix(fib[static_cast<std::size_t>(i - 1)] - 2));
  return out;
}

bool fibonacci_prefix_predicted_open(std::size_t n) {
  // F_{i+1} - 1 grows, so stop once the interval starts beyond n.
  std::uint64_t fi = 1;    // F_i
  std::uint64_t fi1 = 1;   // F_{i+1}
  while (fi1 - 1 <= n) {
    if (n <= 2 * fi - 2 && fi1 - 1 <= n) return true;
    const std::uint64_t next = fi + fi1;
    fi = fi1;
    fi1 = next;
  }
  return false;
}

FibonacciAnalysis analyze_prefixes(long long max_length, std::size_t verify_up_to) {
  if (max_length < 1 || static_cast<std::size_t>(max_length) > kMaxFibonacciAnalysis) {
    throw std::invalid_argument("analyze_prefixes: max_length must be in [1, " + std::to_string(kMaxFibonacciAnalysis) + "]");
  }
  FibonacciAnalysis a;
  a.max_length = static_cast<std::size_t>(max_length);
  a.verified_length = std::min({a.max_length, verify_up_to, Word::kMaxLength});

  a.predicted.reserve(a.max_length);
  for (std::size_t n = 1; n <= a.max_length; ++n) {
    a.predicted.push_back(fibonacci_prefix_predicted_open(n) ? Openness::open : Openness::closed);
  }
  a.sequence = a.predicted;

  const Word f = fibonacci_prefix(static_cast<long long>(a.verified_length));
  for (std::size_t n = 1; n <= a.verified_length; ++n) {
    a.sequence[n - 1] = openness(f.prefix(n));
    a.consistent = a.consistent && a.sequence[n - 1] == a.predicted[n - 1];
  }

  std::size_t run = 0;
  for (std::size_t n = 0; n < a.sequence.size(); ++n) {
    ++run;
    if (n + 1 == a.sequence.size() || a.sequence[n + 1] != a.sequence[n]) {
      a.run_lengths.push_back(run);
      run = 0;
    }
  }
  const Openness after = fibonacci_prefix_predicted_open(a.max_length + 1) ? Openness::open : Openness::closed;
  if (after == a.sequence.back()) a.run_lengths.pop_back();
  return a;
}

RunBoundaryWords run_boundary_words(long long i) {
  if (i < 4 || i > 16) throw std::invalid_argument("run_boundary_words: i must be in [4, 16]");
  const auto fib = fibonacci_numbers(i + 2);
  const auto F = [&](long long j) { return fib[static_cast<std::size_t>(j - 1)]; };
  const Word f = fibonacci_prefix(static_cast<long long>(F(i + 2) - 2));

  RunBoundaryWords r;
  r.i = static_cast<std::size_t>(i);
  r.closed_run_end = f.prefix(F(i + 2) - 2);
  r.closed_run_end_is_central = is_central(r.closed_run_end);
  r.open_run_end = f.prefix(2 * F(i) - 2);
  r.open_run_end_is_semicentral = is_semicentral(r.open_run_end);
  r.x = i % 2 == 0 ? Letter::b : Letter::a;
  r.y = other(r.x);
  const Word s_i = f.prefix(F(i) - 2);
  r.open_run_end_is_sixys = r.open_run_end == s_i + r.x + r.y + s_i;
  return r;
}

}  // namespace trapezoid
