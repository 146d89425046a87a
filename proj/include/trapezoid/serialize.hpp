#pragma once

// Stable machine-readable encodings of reports, ledgers and Fibonacci
// analyses. JSON schemas only ever gain fields.

#include <string>

#include "json.hpp"

#include "trapezoid/enumeration.hpp"
#include "trapezoid/fibonacci.hpp"
#include "trapezoid/trapezoidal.hpp"

namespace trapezoid {

nlohmann::ordered_json to_json(const DeLucaParameters& p);

/// Field names follow TrapezoidalReport; letters are one-character strings;
/// absent optionals are omitted.
nlohmann::ordered_json to_json(const TrapezoidalReport& r);

nlohmann::ordered_json to_json(const CountLedger& ledger);

/// Header row then one row per n. Columns: n, S, T, total, SC, central,
/// followed by the brute-force columns when any row carries them.
std::string to_tsv(const CountLedger& ledger);

nlohmann::ordered_json to_json(const FibonacciAnalysis& a);

/// Two rows: "length" followed by 1..max_length, "marker" followed by c/o.
std::string to_tsv(const FibonacciAnalysis& a);

/// One c/o character per prefix length.
std::string to_compact(const FibonacciAnalysis& a);

}  // namespace trapezoid
