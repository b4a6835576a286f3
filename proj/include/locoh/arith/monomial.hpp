#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>

#include "locoh/error.hpp"

namespace locoh {

/// The six indeterminates of the ambient ring k[x, y, s, t][u, v].
enum class Var : std::uint8_t { x = 0, y = 1, u = 2, v = 3, s = 4, t = 5 };

inline constexpr std::size_t kNumVars = 6;

inline constexpr std::array<Var, kNumVars> kAllVars = {Var::x, Var::y, Var::u, Var::v, Var::s, Var::t};

// Lexicographic tie-break order inside a degree: t > s > y > x > v > u.
inline constexpr std::array<Var, kNumVars> kLexPriority = {Var::t, Var::s, Var::y, Var::x, Var::v, Var::u};

// Factor order inside a printed term (alphabetical, so "s*x^3*y", "s*t^2").
inline constexpr std::array<Var, kNumVars> kPrintOrder = {Var::s, Var::t, Var::u, Var::v, Var::x, Var::y};

inline char var_name(Var v) {
  static constexpr char names[] = {'x', 'y', 'u', 'v', 's', 't'};
  return names[static_cast<std::size_t>(v)];
}

inline std::optional<Var> var_from_char(char c) {
  switch (c) {
    case 'x': return Var::x;
    case 'y': return Var::y;
    case 'u': return Var::u;
    case 'v': return Var::v;
    case 's': return Var::s;
    case 't': return Var::t;
    default: return std::nullopt;
  }
}

/// Power product x^a y^b u^c v^d s^e t^f. Absent variables have exponent 0;
/// the all-zero monomial is 1.
class Monomial {
 public:
  Monomial() = default;

  Monomial(std::initializer_list<std::pair<Var, std::uint32_t>> powers) {
    for (auto [v, e] : powers) exps_[idx(v)] += e;
  }

  static Monomial of(Var v, std::uint32_t e = 1) { return Monomial{{v, e}}; }

  std::uint32_t exponent(Var v) const { return exps_[idx(v)]; }
  void set_exponent(Var v, std::uint32_t e) { exps_[idx(v)] = e; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exps_[i] = exps_[i] + o.exps_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.exps_[i] = o.exps_[i] - exps_[i];
    return r;
  }

  /// True when only variables from `allowed` occur.
  bool uses_only(std::initializer_list<Var> allowed) const {
    for (Var v : kAllVars) {
      if (exponent(v) == 0) continue;
      bool ok = false;
      for (Var a : allowed) ok = ok || a == v;
      if (!ok) return false;
    }
    return true;
  }

  bool operator==(const Monomial&) const = default;

  /// Graded lexicographic comparison with t > s > y > x > v > u.
  /// Returns negative, zero or positive.
  int compare(const Monomial& o) const {
    auto da = degree(), db = o.degree();
    if (da != db) return da < db ? -1 : 1;
    for (Var v : kLexPriority) {
      auto a = exponent(v), b = o.exponent(v);
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  bool operator<(const Monomial& o) const { return compare(o) < 0; }

  std::string to_string() const {
    std::string out;
    for (Var v : kPrintOrder) {
      auto e = exponent(v);
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += var_name(v);
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }

 private:
  static std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

  std::array<std::uint32_t, kNumVars> exps_{};
};

}  // namespace locoh
