#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locoh/arith/field.hpp"
#include "locoh/arith/monomial.hpp"
#include "locoh/error.hpp"

namespace locoh {

struct Term {
  Monomial monomial;
  Scalar coeff;

  bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over a Field in the variables x, y, u, v, s, t.
///
/// Terms are stored in strictly descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality and
/// to_string() is canonical.
class MultiPoly {
 public:
  explicit MultiPoly(Field field = Field::rationals()) : field_(field) {}

  static MultiPoly constant(const Field& field, const Scalar& c) {
    MultiPoly p(field);
    Scalar r = field.reduce(c);
    if (r != 0) p.terms_.push_back({Monomial{}, r});
    return p;
  }
  static MultiPoly constant(const Field& field, long c) { return constant(field, Scalar(c)); }

  static MultiPoly monomial(const Field& field, const Monomial& m, const Scalar& c = Scalar(1)) {
    MultiPoly p(field);
    Scalar r = field.reduce(c);
    if (r != 0) p.terms_.push_back({m, r});
    return p;
  }

  static MultiPoly var(const Field& field, Var v, std::uint32_t e = 1) {
    return monomial(field, Monomial::of(v, e));
  }

  /// Builds from arbitrary (possibly repeated, unreduced) terms.
  static MultiPoly from_terms(const Field& field, const std::vector<Term>& terms) {
    std::map<Monomial, Scalar> acc;
    for (const auto& t : terms) {
      auto [it, inserted] = acc.try_emplace(t.monomial, field.reduce(t.coeff));
      if (!inserted) it->second = field.add(it->second, field.reduce(t.coeff));
    }
    return from_map(field, acc);
  }

  /// Parses the canonical text form (and a little more: whitespace,
  /// parentheses and rational coefficients are accepted).
  static MultiPoly parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  bool is_one() const { return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1; }

  const Term& leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::OutOfRange, "leading term of zero polynomial");
    return terms_.front();
  }

  Scalar coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return Scalar(0);
  }

  Scalar constant_term() const { return coefficient(Monomial{}); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
    return d;
  }

  int degree_in(Var v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.exponent(v)));
    return d;
  }

  bool uses_only(std::initializer_list<Var> allowed) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.monomial.uses_only(allowed); });
  }

  /// Homogeneous with respect to the total degree in `vars` (the zero
  /// polynomial counts as homogeneous).
  bool is_homogeneous_in(std::initializer_list<Var> vars) const {
    std::optional<std::uint32_t> deg;
    for (const auto& t : terms_) {
      std::uint32_t d = 0;
      for (Var v : vars) d += t.monomial.exponent(v);
      if (deg && *deg != d) return false;
      deg = d;
    }
    return true;
  }

  bool operator==(const MultiPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

  MultiPoly operator-() const {
    MultiPoly r(field_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial, field_.neg(t.coeff)});
    return r;
  }

  MultiPoly operator+(const MultiPoly& o) const { return merge(o, false); }
  MultiPoly operator-(const MultiPoly& o) const { return merge(o, true); }

  MultiPoly operator*(const MultiPoly& o) const {
    require_same_field(o);
    if (is_zero() || o.is_zero()) return MultiPoly(field_);
    std::map<Monomial, Scalar> acc;
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Scalar c = field_.mul(a.coeff, b.coeff);
        auto [it, inserted] = acc.try_emplace(a.monomial * b.monomial, c);
        if (!inserted) it->second = field_.add(it->second, c);
      }
    }
    return from_map(field_, acc);
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scale(const Scalar& c) const {
    Scalar r = field_.reduce(c);
    MultiPoly out(field_);
    if (r == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial, field_.mul(t.coeff, r)});
    return out;
  }

  MultiPoly times_monomial(const Monomial& m) const {
    MultiPoly out(field_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff});
    return out;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(field_, 1);
    MultiPoly base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Replaces `v` by the scalar `value`.
  MultiPoly substitute(Var v, const Scalar& value) const {
    Scalar c = field_.reduce(value);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Scalar coeff = t.coeff;
      for (std::uint32_t i = 0; i < t.monomial.exponent(v); ++i) coeff = field_.mul(coeff, c);
      Monomial m = t.monomial;
      m.set_exponent(v, 0);
      out.push_back({m, coeff});
    }
    return from_terms(field_, out);
  }

  /// Same polynomial read over another field (coefficients reduced).
  MultiPoly change_field(const Field& target) const { return from_terms(target, terms_); }

  std::string to_string() const;

 private:
  static MultiPoly from_map(const Field& field, const std::map<Monomial, Scalar>& acc) {
    MultiPoly p(field);
    p.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (it->second != 0) p.terms_.push_back({it->first, it->second});
    return p;
  }

  void require_same_field(const MultiPoly& o) const {
    if (!(field_ == o.field_))
      throw Error(ErrorCode::FieldMismatch, "operands over " + field_.spec() + " and " + o.field_.spec());
  }

  MultiPoly merge(const MultiPoly& o, bool subtract) const {
    require_same_field(o);
    MultiPoly r(field_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int cmp;
      if (i == terms_.size()) cmp = -1;
      else if (j == o.terms_.size()) cmp = 1;
      else cmp = terms_[i].monomial.compare(o.terms_[j].monomial);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? field_.neg(t.coeff) : t.coeff});
      } else {
        Scalar c = subtract ? field_.sub(terms_[i].coeff, o.terms_[j].coeff)
                            : field_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({terms_[i].monomial, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Field field_;
  std::vector<Term> terms_;
};

/// Exact quotient a / b in the polynomial ring, or nullopt when b does not
/// divide a. Reduces against the leading term of b; the first remainder term
/// that the leading term of b does not divide proves non-divisibility.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::FieldMismatch, "operands over " + a.field().spec() + " and " + b.field().spec());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact_divide by zero polynomial");
  const Field& k = a.field();
  if (a.is_zero()) return MultiPoly(k);
  if (b.num_terms() == 1) {
    const Term& lt = b.leading_term();
    Scalar inv = k.inv(lt.coeff);
    std::vector<Term> q;
    q.reserve(a.num_terms());
    for (const auto& t : a.terms()) {
      if (!lt.monomial.divides(t.monomial)) return std::nullopt;
      q.push_back({lt.monomial.quotient_of(t.monomial), k.mul(t.coeff, inv)});
    }
    return MultiPoly::from_terms(k, q);
  }
  const Term lt = b.leading_term();
  Scalar inv = k.inv(lt.coeff);
  MultiPoly rem = a;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    if (!lt.monomial.divides(r.monomial)) return std::nullopt;
    Term q{lt.monomial.quotient_of(r.monomial), k.mul(r.coeff, inv)};
    quotient.push_back(q);
    rem -= b.times_monomial(q.monomial).scale(q.coeff);
  }
  return MultiPoly::from_terms(k, quotient);
}

inline bool divides(const MultiPoly& b, const MultiPoly& a) { return exact_divide(a, b).has_value(); }

namespace detail {

inline std::string scalar_to_string(const Scalar& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace detail

inline std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool negative = field_.sign(t.coeff) < 0;
    Scalar mag = negative ? Scalar(-t.coeff) : t.coeff;
    if (negative) out += '-';
    else if (i > 0) out += '+';
    if (t.monomial.is_one()) {
      out += detail::scalar_to_string(mag);
    } else if (mag == 1) {
      out += t.monomial.to_string();
    } else {
      out += detail::scalar_to_string(mag) + "*" + t.monomial.to_string();
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  MultiPoly parse() {
    MultiPoly p = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned exponent() {
    mpz_class e = integer();
    if (e > 100000) fail("exponent too large");
    return static_cast<unsigned>(e.get_ui());
  }

  MultiPoly sum() {
    MultiPoly acc(field_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiPoly t = product();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else break;
    }
    return acc;
  }

  MultiPoly product() {
    MultiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    MultiPoly base(field_);
    if (c == '(') {
      ++pos_;
      base = sum();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (accept('/')) den = integer();
      if (den == 0) fail("zero denominator");
      base = MultiPoly::constant(field_, Scalar(num, den));
    } else if (auto v = var_from_char(c)) {
      ++pos_;
      base = MultiPoly::var(field_, *v);
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (accept('^')) base = base.pow(exponent());
    return base;
  }

  const Field& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly MultiPoly::parse(const Field& field, std::string_view text) {
  return detail::PolyParser(field, text).parse();
}

}  // namespace locoh
