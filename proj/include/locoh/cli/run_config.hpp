#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locoh/arith/field.hpp"

namespace locoh::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Desk-scale bounds.
inline constexpr int kMaxIndex = 200;
inline constexpr int kMaxD = 100;
inline constexpr int kMaxN = 100;

enum class Command { VerifyLemma1, Factors, Cohomology, Frobenius };
enum class Format { Json, Csv, Text };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::VerifyLemma1: return "verify-lemma1";
    case Command::Factors: return "factors";
    case Command::Cohomology: return "cohomology";
    case Command::Frobenius: return "frobenius";
  }
  return "unknown";
}

/// Bad command line or configuration; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::VerifyLemma1;
  Field field = Field::rationals();
  int max_i = 0;              // verify-lemma1
  std::vector<int> index_set;  // factors (i values) and frobenius (n values)
  int d_min = 0;              // cohomology
  int d_max = 0;
  std::optional<std::uint64_t> seed;
  std::string output;  // empty: stdout
  Format format = Format::Json;
};

inline Field parse_field(std::string_view spec) {
  try {
    return Field::parse(spec);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw UsageError("--format must be json, csv or text");
}

/// Comma-separated integers and inclusive ranges, e.g. "1..20" or "1,7,25"
/// or "6,8..12". Order is kept; duplicates are rejected.
inline std::vector<int> parse_index_set(std::string_view expr) {
  auto to_int = [&](std::string_view tok) {
    if (tok.empty() || tok.size() > 9) throw UsageError("bad index set '" + std::string(expr) + "'");
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') throw UsageError("bad index set '" + std::string(expr) + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  std::vector<int> out;
  std::set<int> seen;
  auto push = [&](int v) {
    if (!seen.insert(v).second) throw UsageError("duplicate index " + std::to_string(v) + " in set");
    out.push_back(v);
  };
  std::size_t start = 0;
  while (start <= expr.size()) {
    std::size_t comma = expr.find(',', start);
    std::string_view item = expr.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      push(to_int(item));
    } else {
      int lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
      if (lo > hi) throw UsageError("empty range '" + std::string(item) + "'");
      if (hi - lo > 10000) throw UsageError("range too long '" + std::string(item) + "'");
      for (int v = lo; v <= hi; ++v) push(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("empty index set");
  return out;
}

inline void validate(const RunConfig& cfg) {
  auto in = [](int v, int lo, int hi) { return v >= lo && v <= hi; };
  switch (cfg.command) {
    case Command::VerifyLemma1:
      if (!in(cfg.max_i, 1, kMaxIndex))
        throw UsageError("--max-i must be in 1.." + std::to_string(kMaxIndex));
      break;
    case Command::Factors:
      for (int i : cfg.index_set)
        if (!in(i, 1, kMaxIndex)) throw UsageError("factor indices must be in 1.." + std::to_string(kMaxIndex));
      break;
    case Command::Cohomology:
      if (!in(cfg.d_min, 2, kMaxD) || !in(cfg.d_max, 2, kMaxD) || cfg.d_min > cfg.d_max)
        throw UsageError("need 2 <= --d-min <= --d-max <= " + std::to_string(kMaxD));
      break;
    case Command::Frobenius:
      for (int n : cfg.index_set)
        if (!in(n, 6, kMaxN)) throw UsageError("n values must be in 6.." + std::to_string(kMaxN));
      break;
  }
  if (cfg.index_set.empty() && (cfg.command == Command::Factors || cfg.command == Command::Frobenius))
    throw UsageError("empty index set");
}

}  // namespace locoh::cli
