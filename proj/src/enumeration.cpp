#include "trapezoid/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "trapezoid/sturmian.hpp"
#include "trapezoid/trapezoidal.hpp"

namespace trapezoid {

namespace {

void require_positive(long long n, const char* op) {
  if (n < 1) throw std::invalid_argument(std::string(op) + ": n must be at least 1, got " + std::to_string(n));
}

struct Tally {
  Count sturmian = 0;
  Count trapezoidal = 0;
  Count nonsturmian_trapezoidal = 0;
  Count semicentral = 0;
  Count central = 0;

  Tally& operator+=(const Tally& o) {
    sturmian += o.sturmian;
    trapezoidal += o.trapezoidal;
    nonsturmian_trapezoidal += o.nonsturmian_trapezoidal;
    semicentral += o.semicentral;
    central += o.central;
    return *this;
  }
};

Tally classify_range(std::size_t n, std::uint64_t first, std::uint64_t last, unsigned classes) {
  Tally t;
  for (std::uint64_t bits = first; bits < last; ++bits) {
    const Word w = Word::from_bits(bits, n);
    const bool sturmian = (classes & kCensusSturmian) != 0 && is_balanced(w);
    if (sturmian) ++t.sturmian;
    if ((classes & (kCensusTrapezoidal | kCensusSemicentral)) != 0 && is_trapezoidal(w)) {
      ++t.trapezoidal;
      if (!sturmian) ++t.nonsturmian_trapezoidal;
      if ((classes & kCensusSemicentral) != 0 && is_semicentral(w)) ++t.semicentral;
    }
    if ((classes & kCensusCentral) != 0 && is_central(w)) ++t.central;
  }
  return t;
}

// Splits Sigma^n into blocks sharing a fixed-length prefix and tallies them
// on `workers` threads. Per-block results are summed in block order.
Tally parallel_tally(std::size_t n, unsigned classes, std::size_t workers) {
  const std::size_t prefix_bits = std::min<std::size_t>(n, 8);
  const std::size_t blocks = std::size_t{1} << prefix_bits;
  const std::uint64_t block_size = std::uint64_t{1} << (n - prefix_bits);
  std::vector<Tally> per_block(blocks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t b = next++; b < blocks; b = next++) {
      per_block[b] = classify_range(n, b * block_size, (b + 1) * block_size, classes);
    }
  };
  workers = std::clamp<std::size_t>(workers, 1, blocks);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  Tally total;
  for (const Tally& t : per_block) total += t;
  return total;
}

}  // namespace

Count euler_phi(long long n) {
  require_positive(n, "euler_phi");
  auto m = static_cast<Count>(n);
  Count result = m;
  for (Count p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Count sturmian_count(long long n) {
  require_positive(n, "sturmian_count");
  Count s = 1;
  for (long long i = 1; i <= n; ++i) s += static_cast<Count>(n - i + 1) * euler_phi(i);
  return s;
}

Count nonsturmian_trapezoidal_count(long long n) {
  require_positive(n, "nonsturmian_trapezoidal_count");
  Count t = 0;
  // Empty range for n < 4; floor division must not round toward zero.
  for (long long i = 0; 2 * i <= n - 4; ++i) t += 2 * static_cast<Count>(n - 2 * i - 3) * euler_phi(i + 2);
  return t;
}

Count trapezoidal_count(long long n) {
  require_positive(n, "trapezoidal_count");
  return sturmian_count(n) + nonsturmian_trapezoidal_count(n);
}

Count semicentral_count(long long n) {
  require_positive(n, "semicentral_count");
  return n % 2 != 0 ? 0 : 2 * euler_phi(n / 2 + 1);
}

Count central_count(long long n) {
  if (n < 0) throw std::invalid_argument("central_count: n must be non-negative");
  return euler_phi(n + 2);
}

bool LedgerRow::matches() const noexcept {
  auto same = [](const std::optional<Count>& brute, Count formula) { return !brute || *brute == formula; };
  return same(sturmian_brute, sturmian_formula) && same(nonsturmian_trapezoidal_brute, nonsturmian_trapezoidal_formula) &&
         same(trapezoidal_total_brute, trapezoidal_total_formula) && same(semicentral_brute, semicentral_formula) &&
         same(central_brute, central_formula);
}

bool CountLedger::matches() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const LedgerRow& r) { return r.matches(); });
}

CountLedger formula_ledger(std::size_t max_n) {
  if (max_n < 1 || max_n > kMaxFormulaLength) {
    throw std::invalid_argument("formula_ledger: max_n must be in [1, " + std::to_string(kMaxFormulaLength) + "]");
  }
  CountLedger ledger;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto k = static_cast<long long>(n);
    LedgerRow row;
    row.n = n;
    row.sturmian_formula = sturmian_count(k);
    row.nonsturmian_trapezoidal_formula = nonsturmian_trapezoidal_count(k);
    row.trapezoidal_total_formula = row.sturmian_formula + row.nonsturmian_trapezoidal_formula;
    row.semicentral_formula = semicentral_count(k);
    row.central_formula = central_count(k);
    ledger.rows.push_back(row);
  }
  return ledger;
}

CountLedger census(const CensusConfig& config) {
  if (config.max_length < 1 || config.max_length > kMaxCensusLength) {
    throw std::invalid_argument("census: max_length must be in [1, " + std::to_string(kMaxCensusLength) + "]");
  }
  std::size_t workers = config.parallelism;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  CountLedger ledger = formula_ledger(config.max_length);
  const unsigned c = config.classes;
  for (LedgerRow& row : ledger.rows) {
    const Tally t = parallel_tally(row.n, c, workers);
    if (c & kCensusSturmian) row.sturmian_brute = t.sturmian;
    if (c & kCensusTrapezoidal) row.trapezoidal_total_brute = t.trapezoidal;
    if ((c & kCensusTrapezoidal) && (c & kCensusSturmian)) row.nonsturmian_trapezoidal_brute = t.nonsturmian_trapezoidal;
    if (c & kCensusSemicentral) row.semicentral_brute = t.semicentral;
    if (c & kCensusCentral) row.central_brute = t.central;
  }
  return ledger;
}

namespace {

constexpr std::array<std::pair<WordClass, std::string_view>, 7> kClassNames{{
    {WordClass::trapezoidal, "trapezoidal"},
    {WordClass::sturmian, "sturmian"},
    {WordClass::central, "central"},
    {WordClass::semicentral, "semicentral"},
    {WordClass::closed_trapezoidal, "closed_trapezoidal"},
    {WordClass::open_trapezoidal, "open_trapezoidal"},
    {WordClass::rich, "rich"},
}};

bool in_class(const Word& w, WordClass c) {
  switch (c) {
    case WordClass::trapezoidal: return is_trapezoidal(w);
    case WordClass::sturmian: return is_balanced(w);
    case WordClass::central: return is_central(w);
    case WordClass::semicentral: return is_semicentral(w);
    case WordClass::closed_trapezoidal: return is_trapezoidal(w) && is_closed(w);
    case WordClass::open_trapezoidal: return is_trapezoidal(w) && !is_closed(w);
    case WordClass::rich: return is_rich(w);
  }
  return false;
}

}  // namespace

std::string_view to_string(WordClass c) noexcept {
  for (const auto& [value, name] : kClassNames) {
    if (value == c) return name;
  }
  return "unknown";
}

std::optional<WordClass> parse_word_class(std::string_view name) noexcept {
  for (const auto& [value, text] : kClassNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

const std::vector<WordClass>& all_word_classes() {
  static const std::vector<WordClass> classes = [] {
    std::vector<WordClass> v;
    for (const auto& entry : kClassNames) v.push_back(entry.first);
    return v;
  }();
  return classes;
}

std::vector<Word> generate(long long n, WordClass word_class) {
  if (n < 1 || n > static_cast<long long>(kMaxGenerateLength)) {
    throw std::invalid_argument("generate: n must be in [1, " + std::to_string(kMaxGenerateLength) + "], got " +
                                std::to_string(n));
  }
  const auto len = static_cast<std::size_t>(n);
  std::vector<Word> out;
  if (word_class == WordClass::central) return central_words(len);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    Word w = Word::from_bits(bits, len);
    if (in_class(w, word_class)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> construct_nonsturmian_trapezoidal(long long n) {
  if (n < 1 || n > static_cast<long long>(kMaxFormulaLength)) {
    throw std::invalid_argument("construct_nonsturmian_trapezoidal: n must be in [1, 64]");
  }
  const auto len = static_cast<std::size_t>(n);
  std::set<Word> words;
  for (std::size_t root = 0; 2 * root + 4 <= len; ++root) {
    for (const Word& u : central_words(root)) {
      for (Letter x : kLetters) {
        const Letter y = other(x);
        const Word zf = period_data(x + u + x).fractional_root;
        const Word zg = period_data(y + u + y).fractional_root;
        for (std::size_t p_len = root + 2; p_len + root + 2 <= len; ++p_len) {
          words.insert(reversal(periodic_extension(zf, p_len)) + periodic_extension(zg, len - p_len));
        }
      }
    }
  }
  return {words.begin(), words.end()};
}

}  // namespace trapezoid
