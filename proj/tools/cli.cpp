#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trapezoid/enumeration.hpp"
#include "trapezoid/error.hpp"
#include "trapezoid/fibonacci.hpp"
#include "trapezoid/serialize.hpp"
#include "trapezoid/trapezoidal.hpp"

namespace trapezoid::cli {

namespace {

enum class Format { plain, json, tsv };

const std::map<std::string, Format> kFormats{{"plain", Format::plain}, {"json", Format::json}, {"tsv", Format::tsv}};

/// Raised for conditions that map to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t default_jobs() {
  if (const char* env = std::getenv(kJobsEnvVar)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

Word read_word(const std::string& positional, const std::string& file) {
  if (file.empty()) return Word::parse_token(positional);
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open '" + file + "'");
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  return Word::parse_token(line);
}

void warn_if_slow(std::size_t census_max, std::ostream& err) {
  if (census_max > 20) {
    err << "warning: brute-force census up to n = " << census_max << " classifies " << (std::uint64_t{2} << census_max)
        << " words and may take a long time\n";
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::size_t>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::vector<std::pair<std::string, std::string>> report_fields(const TrapezoidalReport& r) {
  const auto& p = r.parameters;
  std::vector<std::pair<std::string, std::string>> f{
      {"word", r.word.str()},
      {"trapezoidal", yes_no(r.is_trapezoidal)},
      {"sturmian", yes_no(r.is_sturmian)},
      {"rich", yes_no(r.is_rich)},
      {"palindrome", yes_no(r.is_palindrome)},
      {"openness", std::string(to_string(r.openness))},
      {"semicentral", yes_no(r.is_semicentral)},
      {"H", std::to_string(p.H)},
      {"K", std::to_string(p.K)},
      {"L", std::to_string(p.L)},
      {"R", std::to_string(p.R)},
      {"h_w", display(p.h_w)},
      {"k_w", display(p.k_w)},
      {"l_w", p.l_w ? display(*p.l_w) : "none"},
      {"r_w", p.r_w ? display(*p.r_w) : "none"},
      {"complexity", join(r.complexity, " ")},
  };
  if (r.closed_witness) f.emplace_back("closed_witness", display(*r.closed_witness));
  if (r.pq_split) {
    f.emplace_back("p", display(r.pq_split->p));
    f.emplace_back("q", display(r.pq_split->q));
  }
  if (r.semicentral_triple) {
    f.emplace_back("u", display(r.semicentral_triple->u));
    f.emplace_back("x", std::string(1, to_char(r.semicentral_triple->x)));
    f.emplace_back("y", std::string(1, to_char(r.semicentral_triple->y)));
  }
  return f;
}

int cmd_analyze(const Word& w, Format fmt, std::ostream& out) {
  if (w.empty()) throw UsageError("analyze requires a nonempty word");
  const TrapezoidalReport r = classify(w);
  if (fmt == Format::json) {
    out << to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& [key, value] : report_fields(r)) {
    if (fmt == Format::tsv) {
      out << key << '\t' << value << '\n';
    } else {
      out << std::left << std::setw(16) << key << value << '\n';
    }
  }
  return kExitOk;
}

int cmd_complexity(const Word& w, Format fmt, std::ostream& out) {
  const auto f = factor_complexity(w);
  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    j["word"] = w.str();
    j["complexity"] = f;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t n = 0; n < f.size(); ++n) out << n << '\t' << f[n] << '\n';
  return kExitOk;
}

enum class CountMode { formula, brute, both };

int cmd_count(long long n, CountMode mode, Format fmt, std::size_t jobs, std::ostream& out, std::ostream& err) {
  if (n < 1) throw UsageError("count: n must be at least 1");
  const bool brute = mode != CountMode::formula;
  if (brute && n > static_cast<long long>(kMaxCensusLength)) {
    throw UsageError("count: brute-force counting requires n <= " + std::to_string(kMaxCensusLength));
  }
  if (n > static_cast<long long>(kMaxFormulaLength)) {
    throw UsageError("count: n must be at most " + std::to_string(kMaxFormulaLength));
  }
  LedgerRow row = formula_ledger(static_cast<std::size_t>(n)).rows.back();
  if (brute) warn_if_slow(static_cast<std::size_t>(n), err);
  if (brute) row = census({static_cast<std::size_t>(n), kCensusAll, jobs}).rows.back();
  const bool ok = row.matches();

  std::vector<std::pair<std::string, std::string>> f{{"n", std::to_string(n)}};
  if (mode != CountMode::brute) {
    f.emplace_back("S", std::to_string(row.sturmian_formula));
    f.emplace_back("T", std::to_string(row.nonsturmian_trapezoidal_formula));
    f.emplace_back("total", std::to_string(row.trapezoidal_total_formula));
    f.emplace_back("SC", std::to_string(row.semicentral_formula));
    f.emplace_back("central", std::to_string(row.central_formula));
  }
  if (brute) {
    f.emplace_back("S_brute", std::to_string(*row.sturmian_brute));
    f.emplace_back("T_brute", std::to_string(*row.nonsturmian_trapezoidal_brute));
    f.emplace_back("total_brute", std::to_string(*row.trapezoidal_total_brute));
    f.emplace_back("SC_brute", std::to_string(*row.semicentral_brute));
    f.emplace_back("central_brute", std::to_string(*row.central_brute));
  }
  if (mode == CountMode::both) f.emplace_back("verdict", ok ? "MATCH" : "MISMATCH");

  if (fmt == Format::json) {
    nlohmann::ordered_json j;
    for (const auto& [key, value] : f) {
      if (key == "verdict") {
        j[key] = value;
      } else {
        j[key] = std::stoull(value);
      }
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : f) {
      if (fmt == Format::tsv) {
        out << key << '\t' << value << '\n';
      } else {
        out << std::left << std::setw(14) << key << value << '\n';
      }
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

void print_ledger_plain(const CountLedger& ledger, std::ostream& out) {
  // Same columns as the TSV encoding, right-aligned.
  std::istringstream tsv(to_tsv(ledger));
  std::string line;
  while (std::getline(tsv, line)) {
    std::istringstream cells(line);
    std::string cell;
    bool first = true;
    while (std::getline(cells, cell, '\t')) {
      out << (first ? "" : " ") << std::right << std::setw(first ? 3 : 14) << cell;
      first = false;
    }
    out << '\n';
  }
}

int cmd_table(long long max_n, bool brute, long long brute_max, Format fmt, std::size_t jobs, std::ostream& out,
              std::ostream& err) {
  if (max_n < 1 || max_n > static_cast<long long>(kMaxFormulaLength)) {
    throw UsageError("table: max_n must be in [1, " + std::to_string(kMaxFormulaLength) + "]");
  }
  CountLedger ledger = formula_ledger(static_cast<std::size_t>(max_n));
  if (brute) {
    const long long cap = brute_max > 0 ? brute_max : std::min<long long>(max_n, kDefaultCensusLength);
    if (cap > static_cast<long long>(kMaxCensusLength)) {
      throw UsageError("table: brute-force columns are limited to n <= " + std::to_string(kMaxCensusLength));
    }
    warn_if_slow(static_cast<std::size_t>(std::min(cap, max_n)), err);
    const CountLedger counted = census({static_cast<std::size_t>(std::min(cap, max_n)), kCensusAll, jobs});
    for (std::size_t i = 0; i < counted.rows.size(); ++i) ledger.rows[i] = counted.rows[i];
  }
  switch (fmt) {
    case Format::json: out << to_json(ledger).dump(2) << '\n'; break;
    case Format::tsv: out << to_tsv(ledger); break;
    case Format::plain: print_ledger_plain(ledger, out); break;
  }
  return ledger.matches() ? kExitOk : kExitMismatch;
}

int cmd_fibonacci(long long max_length, bool runs, long long verify, Format fmt, std::ostream& out) {
  if (max_length < 1 || max_length > static_cast<long long>(kMaxFibonacciAnalysis)) {
    throw UsageError("fibonacci: max_length must be in [1, " + std::to_string(kMaxFibonacciAnalysis) + "]");
  }
  if (verify < 0) throw UsageError("fibonacci: --verify must be non-negative");
  const FibonacciAnalysis a = analyze_prefixes(max_length, static_cast<std::size_t>(verify));
  switch (fmt) {
    case Format::json: out << to_json(a).dump(2) << '\n'; break;
    case Format::tsv:
      out << to_tsv(a);
      if (runs) out << "runs\t" << join(a.run_lengths, "\t") << '\n';
      break;
    case Format::plain:
      out << to_compact(a) << '\n';
      if (runs) out << join(a.run_lengths, ",") << '\n';
      if (a.verified_length < a.max_length) {
        out << "verified 1.." << a.verified_length << ", predicted beyond\n";
      }
      break;
  }
  return a.consistent ? kExitOk : kExitMismatch;
}

int cmd_generate(long long n, const std::string& class_name, Format fmt, std::ostream& out) {
  const auto word_class = parse_word_class(class_name);
  if (!word_class) {
    std::string valid;
    for (WordClass c : all_word_classes()) valid += (valid.empty() ? "" : ", ") + std::string(to_string(c));
    throw UsageError("unknown class '" + class_name + "'; valid classes: " + valid);
  }
  if (n < 1 || n > static_cast<long long>(kMaxGenerateLength)) {
    throw UsageError("generate: n must be in [1, " + std::to_string(kMaxGenerateLength) + "]");
  }
  const auto words = generate(n, *word_class);
  if (fmt == Format::json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const Word& w : words) j.push_back(w.str());
    out << j.dump() << '\n';
  } else {
    for (const Word& w : words) out << w << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trapezoidal words: classification, counting and Fibonacci prefixes", "trapezoid"};
  app.require_subcommand(1);

  Format format = Format::plain;
  std::size_t jobs = default_jobs();
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, std::string("Census worker threads (default: $") + kJobsEnvVar + " or all cores)");
  };

  std::string word_text;
  std::string word_file;
  auto add_word = [&](CLI::App* sub) {
    auto* positional = sub->add_option("word", word_text, "Word over {a,b}; 'eps' or \"\" for the empty word");
    auto* file = sub->add_option("--file", word_file, "Read the word from the first line of a file");
    positional->excludes(file);
  };

  auto* analyze = app.add_subcommand("analyze", "Classify a word and report its parameters");
  add_word(analyze);
  add_format(analyze);

  auto* complexity = app.add_subcommand("complexity", "Factor complexity f_w(n) as (n, count) rows");
  add_word(complexity);
  add_format(complexity);

  long long n = 0;
  bool flag_formula = false;
  bool flag_brute = false;
  bool flag_both = false;
  auto* count = app.add_subcommand("count", "Closed-form and brute-force counts for one length");
  count->add_option("n", n, "Word length")->required();
  auto* f_formula = count->add_flag("--formula", flag_formula, "Closed forms only (default)");
  auto* f_brute = count->add_flag("--brute", flag_brute, "Exhaustive census only");
  auto* f_both = count->add_flag("--both", flag_both, "Both, with a MATCH/MISMATCH verdict");
  f_formula->excludes(f_brute)->excludes(f_both);
  f_brute->excludes(f_both);
  add_format(count);
  add_jobs(count);

  bool table_brute = false;
  long long brute_max = 0;
  auto* table = app.add_subcommand("table", "Count ledger for lengths 1..max_n");
  table->add_option("max_n", n, "Largest length")->required();
  table->add_flag("--brute", table_brute, "Add brute-force columns");
  table->add_option("--brute-max", brute_max, "Largest length for brute-force columns (default min(max_n, 16))");
  add_format(table);
  add_jobs(table);

  bool runs = false;
  long long verify = static_cast<long long>(kDefaultFibonacciVerification);
  auto* fibonacci = app.add_subcommand("fibonacci", "Open/closed markers of the Fibonacci word prefixes");
  fibonacci->add_option("max_length", n, "Longest prefix")->required();
  fibonacci->add_flag("--runs", runs, "Also print the run lengths");
  fibonacci->add_option("--verify", verify, "Classify prefixes up to this length directly");
  add_format(fibonacci);

  std::string class_name;
  auto* gen = app.add_subcommand("generate", "List all words of a class and length");
  gen->add_option("n", n, "Word length")->required();
  gen->add_option("class", class_name, "trapezoidal, sturmian, central, semicentral, closed_trapezoidal, "
                                       "open_trapezoidal or rich")
      ->required();
  add_format(gen);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(read_word(word_text, word_file), format, out);
    if (complexity->parsed()) return cmd_complexity(read_word(word_text, word_file), format, out);
    if (count->parsed()) {
      const CountMode mode = flag_both ? CountMode::both : flag_brute ? CountMode::brute : CountMode::formula;
      return cmd_count(n, mode, format, jobs, out, err);
    }
    if (table->parsed()) return cmd_table(n, table_brute, brute_max, format, jobs, out, err);
    if (fibonacci->parsed()) return cmd_fibonacci(n, runs, verify, format, out);
    if (gen->parsed()) return cmd_generate(n, class_name, format, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace trapezoid::cli
