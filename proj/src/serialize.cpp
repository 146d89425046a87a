#include "trapezoid/serialize.hpp"

#include <sstream>

namespace trapezoid {

namespace {

std::string letter(Letter x) { return std::string(1, to_char(x)); }

char marker(Openness o) { return o == Openness::open ? 'o' : 'c'; }

bool has_brute_columns(const CountLedger& ledger) {
  for (const LedgerRow& r : ledger.rows) {
    if (r.sturmian_brute || r.nonsturmian_trapezoidal_brute || r.trapezoidal_total_brute || r.semicentral_brute ||
        r.central_brute) {
      return true;
    }
  }
  return false;
}

void put_optional(std::ostream& os, const std::optional<Count>& v) {
  os << '\t';
  if (v) os << *v;
}

}  // namespace

nlohmann::ordered_json to_json(const DeLucaParameters& p) {
  nlohmann::ordered_json j;
  j["H"] = p.H;
  j["K"] = p.K;
  j["L"] = p.L;
  j["R"] = p.R;
  j["h_w"] = p.h_w.str();
  j["k_w"] = p.k_w.str();
  if (p.l_w) j["l_w"] = p.l_w->str();
  if (p.r_w) j["r_w"] = p.r_w->str();
  return j;
}

nlohmann::ordered_json to_json(const TrapezoidalReport& r) {
  nlohmann::ordered_json j;
  j["word"] = r.word.str();
  j["is_trapezoidal"] = r.is_trapezoidal;
  j["is_sturmian"] = r.is_sturmian;
  j["is_rich"] = r.is_rich;
  j["is_palindrome"] = r.is_palindrome;
  j["openness"] = std::string(to_string(r.openness));
  j["is_semicentral"] = r.is_semicentral;
  j["parameters"] = to_json(r.parameters);
  j["complexity"] = r.complexity;
  if (r.closed_witness) j["closed_witness"] = r.closed_witness->str();
  if (r.pq_split) j["pq_split"] = {{"p", r.pq_split->p.str()}, {"q", r.pq_split->q.str()}};
  if (r.semicentral_triple) {
    j["semicentral_triple"] = {
        {"u", r.semicentral_triple->u.str()}, {"x", letter(r.semicentral_triple->x)}, {"y", letter(r.semicentral_triple->y)}};
  }
  return j;
}

nlohmann::ordered_json to_json(const CountLedger& ledger) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const LedgerRow& r : ledger.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["sturmian_formula"] = r.sturmian_formula;
    row["nonsturmian_trapezoidal_formula"] = r.nonsturmian_trapezoidal_formula;
    row["trapezoidal_total_formula"] = r.trapezoidal_total_formula;
    row["semicentral_formula"] = r.semicentral_formula;
    row["central_formula"] = r.central_formula;
    if (r.sturmian_brute) row["sturmian_brute"] = *r.sturmian_brute;
    if (r.nonsturmian_trapezoidal_brute) row["nonsturmian_trapezoidal_brute"] = *r.nonsturmian_trapezoidal_brute;
    if (r.trapezoidal_total_brute) row["trapezoidal_total_brute"] = *r.trapezoidal_total_brute;
    if (r.semicentral_brute) row["semicentral_brute"] = *r.semicentral_brute;
    if (r.central_brute) row["central_brute"] = *r.central_brute;
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json j;
  j["rows"] = std::move(rows);
  j["matches"] = ledger.matches();
  return j;
}

std::string to_tsv(const CountLedger& ledger) {
  const bool brute = has_brute_columns(ledger);
  std::ostringstream os;
  os << "n\tS\tT\ttotal\tSC\tcentral";
  if (brute) os << "\tS_brute\tT_brute\ttotal_brute\tSC_brute\tcentral_brute";
  os << '\n';
  for (const LedgerRow& r : ledger.rows) {
    os << r.n << '\t' << r.sturmian_formula << '\t' << r.nonsturmian_trapezoidal_formula << '\t'
       << r.trapezoidal_total_formula << '\t' << r.semicentral_formula << '\t' << r.central_formula;
    if (brute) {
      put_optional(os, r.sturmian_brute);
      put_optional(os, r.nonsturmian_trapezoidal_brute);
      put_optional(os, r.trapezoidal_total_brute);
      put_optional(os, r.semicentral_brute);
      put_optional(os, r.central_brute);
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json to_json(const FibonacciAnalysis& a) {
  nlohmann::ordered_json j;
  j["max_length"] = a.max_length;
  j["verified_length"] = a.verified_length;
  j["sequence"] = to_compact(a);
  std::string predicted;
  for (Openness o : a.predicted) predicted += marker(o);
  j["predicted"] = predicted;
  j["run_lengths"] = a.run_lengths;
  j["consistent"] = a.consistent;
  return j;
}

std::string to_tsv(const FibonacciAnalysis& a) {
  std::ostringstream os;
  os << "length";
  for (std::size_t n = 1; n <= a.sequence.size(); ++n) os << '\t' << n;
  os << "\nmarker";
  for (Openness o : a.sequence) os << '\t' << marker(o);
  os << '\n';
  return os.str();
}

std::string to_compact(const FibonacciAnalysis& a) {
  std::string s;
  s.reserve(a.sequence.size());
  for (Openness o : a.sequence) s += marker(o);
  return s;
}

}  // namespace trapezoid
