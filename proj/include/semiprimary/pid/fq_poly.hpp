#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "semiprimary/errors.hpp"
#include "semiprimary/field/finite_field.hpp"

namespace semiprimary {

/// Univariate polynomial over a FiniteField, coefficients constant first, no trailing zeros.
class FqPoly {
 public:
  using Elem = FiniteField::Elem;

  explicit FqPoly(FieldPtr f, std::vector<Elem> c = {}) : f_(std::move(f)), c_(std::move(c)) { trim(); }

  static FqPoly x_power(FieldPtr f, std::size_t e, Elem coeff = 1) {
    std::vector<Elem> c(e + 1, 0);
    c[e] = coeff;
    return FqPoly(std::move(f), c);
  }

  const FieldPtr& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  FqPoly operator+(const FqPoly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(at(i), o.at(i));
    return FqPoly(f_, r);
  }
  FqPoly operator-(const FqPoly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(at(i), o.at(i));
    return FqPoly(f_, r);
  }
  FqPoly operator*(const FqPoly& o) const {
    if (is_zero() || o.is_zero()) return FqPoly(f_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i])
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    return FqPoly(f_, r);
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const {
    if (d.is_zero()) throw InvalidParameter("division by the zero polynomial");
    std::vector<Elem> r = c_;
    if (r.size() < d.c_.size()) return {FqPoly(f_), *this};
    std::vector<Elem> q(r.size() - d.c_.size() + 1, 0);
    Elem li = f_->inv(d.lead());
    for (std::size_t i = r.size(); i-- >= d.c_.size();) {
      Elem c = f_->mul(r[i], li);
      std::size_t shift = i + 1 - d.c_.size();
      q[shift] = c;
      if (c)
        for (std::size_t j = 0; j < d.c_.size(); ++j) r[shift + j] = f_->sub(r[shift + j], f_->mul(c, d.c_[j]));
      if (i == 0) break;
    }
    return {FqPoly(f_, q), FqPoly(f_, r)};
  }
  FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }

  FqPoly monic() const {
    if (is_zero()) return *this;
    Elem li = f_->inv(lead());
    std::vector<Elem> r = c_;
    for (auto& x : r) x = f_->mul(x, li);
    return FqPoly(f_, r);
  }

  FqPoly pow(unsigned e) const {
    FqPoly r(f_, {1}), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// this^e mod m, e possibly large.
  FqPoly powmod(std::uint64_t e, const FqPoly& m) const {
    FqPoly r = FqPoly(f_, {1}) % m, b = *this % m;
    while (e) {
      if (e & 1) r = (r * b) % m;
      b = (b * b) % m;
      e >>= 1;
    }
    return r;
  }

  friend FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
      FqPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const FqPoly& a, const FqPoly& b) { return *a.f_ == *b.f_ && a.c_ == b.c_; }

  /// "t^2 + t + 1"; extension coefficients printed as their integer index in brackets.
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (!c_[i]) continue;
      if (!out.empty()) out += " + ";
      std::string coeff = f_->degree() == 1 ? std::to_string(c_[i]) : "[" + std::to_string(c_[i]) + "]";
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (mono.empty()) out += coeff;
      else out += (c_[i] == 1 ? "" : coeff + "*") + mono;
    }
    return out;
  }

  /// Inverse of to_string: terms c*t^k separated by + or -, c decimal or [index].
  static FqPoly parse(const std::string& text, FieldPtr f, const std::string& var = "t") {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty polynomial");
    FqPoly acc(f);
    std::size_t pos = 0;
    while (pos < s.size()) {
      bool negate = false;
      if (s[pos] == '+' || s[pos] == '-') negate = s[pos++] == '-';
      std::size_t end = pos;
      int depth = 0;
      while (end < s.size() && (depth > 0 || (s[end] != '+' && s[end] != '-'))) {
        if (s[end] == '[') ++depth;
        if (s[end] == ']') --depth;
        ++end;
      }
      std::string term = s.substr(pos, end - pos);
      if (term.empty()) throw ParseError("bad polynomial '" + text + "'");
      acc = acc + parse_term(term, f, var, negate, text);
      pos = end;
    }
    return acc;
  }

 private:
  static FqPoly parse_term(const std::string& term, const FieldPtr& f, const std::string& var, bool negate,
                           const std::string& text) {
    Elem coeff = 1;
    std::size_t exp = 0;
    std::string rest = term;
    auto bad = [&] { return ParseError("bad polynomial term '" + term + "' in '" + text + "'"); };
    auto read_coeff = [&](const std::string& c) -> Elem {
      try {
        std::size_t used = 0;
        if (c.size() > 2 && c.front() == '[' && c.back() == ']') {
          unsigned long v = std::stoul(c.substr(1, c.size() - 2), &used);
          if (used != c.size() - 2 || v >= f->order()) throw bad();
          return static_cast<Elem>(v);
        }
        long long v = std::stoll(c, &used);
        if (used != c.size()) throw bad();
        return f->from_int(v);
      } catch (const std::logic_error&) {
        throw bad();
      }
    };
    auto star = rest.find('*');
    if (star != std::string::npos) {
      coeff = read_coeff(rest.substr(0, star));
      rest = rest.substr(star + 1);
    } else if (rest.rfind(var, 0) != 0) {
      coeff = read_coeff(rest);
      rest.clear();
    }
    if (!rest.empty()) {
      if (rest.rfind(var, 0) != 0) throw bad();
      rest = rest.substr(var.size());
      if (rest.empty()) exp = 1;
      else if (rest[0] == '^') {
        try {
          std::size_t used = 0;
          exp = std::stoul(rest.substr(1), &used);
          if (used != rest.size() - 1) throw bad();
        } catch (const std::logic_error&) {
          throw bad();
        }
      } else
        throw bad();
    }
    if (negate) coeff = f->neg(coeff);
    return x_power(f, exp, coeff);
  }

  Elem at(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldPtr f_;
  std::vector<Elem> c_;
};

}  // namespace semiprimary
