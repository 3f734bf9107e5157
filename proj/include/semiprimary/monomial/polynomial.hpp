#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "semiprimary/errors.hpp"

namespace semiprimary {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded order: total degree first, then X before Y (larger leading exponents first).
struct MonomialLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline std::vector<std::string> default_variable_names(std::size_t k) {
  static const char* small[] = {"X", "Y", "Z", "W"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i)
    names.push_back(k <= 4 ? std::string(small[i]) : "X" + std::to_string(i + 1));
  return names;
}

inline std::string monomial_to_string(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

/// Polynomial over the prime field F_p in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Exponent, std::uint32_t, MonomialLess>;

  Polynomial(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  static Polynomial monomial(std::uint32_t p, Exponent e, std::uint32_t coeff = 1) {
    Polynomial f(p, e.size());
    f.add_term(e, coeff);
    return f;
  }

  static Polynomial constant(std::uint32_t p, std::size_t nvars, std::int64_t c) {
    Polynomial f(p, nvars);
    f.add_term(Exponent(nvars, 0), mod(c, p));
    return f;
  }

  std::uint32_t characteristic() const { return p_; }
  std::size_t variables() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  void add_term(const Exponent& e, std::uint32_t coeff) {
    coeff %= p_;
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(e, coeff);
    if (!fresh) {
      it->second = (it->second + coeff) % p_;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(p_, nvars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_)
        r.add_term(add_exponents(ea, eb), static_cast<std::uint32_t>((std::uint64_t{ca} * cb) % p_));
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result = constant(p_, nvars_, 1);
    Polynomial base = *this;
    while (k) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      bool unit = total_degree(it->first) == 0;
      if (it->second != 1 || unit) {
        out += std::to_string(it->second);
        if (!unit) out += "*";
      }
      if (!unit) out += monomial_to_string(it->first, names);
    }
    return out;
  }
  std::string to_string() const { return to_string(default_variable_names(nvars_)); }

  /// Parses strings such as "X^2*Y + 2*Y^3 - 1".
  static Polynomial parse(std::string_view text, std::uint32_t p, const std::vector<std::string>& names) {
    Parser ps{text, 0, p, names};
    return ps.run();
  }
  static Polynomial parse(std::string_view text, std::uint32_t p, std::size_t nvars) {
    return parse(text, p, default_variable_names(nvars));
  }

 private:
  static std::uint32_t mod(std::int64_t c, std::uint32_t p) {
    auto m = c % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(m < 0 ? m + p : m);
  }

  struct Parser {
    std::string_view s;
    std::size_t pos;
    std::uint32_t p;
    const std::vector<std::string>& names;

    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const {
      throw ParseError("polynomial '" + std::string(s) + "': " + what + " at offset " + std::to_string(pos));
    }
    std::int64_t number() {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected number");
      return std::stoll(std::string(s.substr(start, pos - start)));
    }
    Polynomial run() {
      Polynomial out(p, names.size());
      skip();
      if (pos == s.size()) fail("empty input");
      bool first = true;
      while (true) {
        skip();
        if (pos == s.size()) break;
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
          sign = s[pos] == '-' ? -1 : 1;
          ++pos;
        } else if (!first) {
          fail("expected '+' or '-'");
        }
        first = false;
        term(out, sign);
      }
      return out;
    }
    void term(Polynomial& out, int sign) {
      std::int64_t coeff = sign;
      Exponent e(names.size(), 0);
      bool any = false;
      while (true) {
        skip();
        if (pos == s.size()) break;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
          coeff *= number();
        } else if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
          std::size_t best = names.size();
          std::size_t best_len = 0;
          for (std::size_t i = 0; i < names.size(); ++i)
            if (s.substr(pos, names[i].size()) == names[i] && names[i].size() > best_len) {
              best = i;
              best_len = names[i].size();
            }
          if (best == names.size()) fail("unknown variable");
          pos += best_len;
          skip();
          int k = 1;
          if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip();
            k = static_cast<int>(number());
          }
          e[best] += k;
        } else {
          fail("unexpected character");
        }
        any = true;
        skip();
        if (pos < s.size() && s[pos] == '*') {
          ++pos;
          continue;
        }
        break;
      }
      if (!any) fail("empty term");
      out.add_term(e, mod(coeff, p));
    }
  };

  std::uint32_t p_;
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace semiprimary
