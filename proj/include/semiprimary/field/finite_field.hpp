#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "semiprimary/errors.hpp"

namespace semiprimary {

/// GF(p^k). Elements are indices 0..q-1 read as base-p digit vectors (constant digit first)
/// of a polynomial in the generator `a` modulo a fixed irreducible polynomial.
/// Prime fields (k = 1) allow p < 2^31 with computed arithmetic; extensions need q <= 65536.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField(std::uint32_t p, unsigned k = 1) : p_(p), k_(k) {
    if (p < 2 || !is_prime32(p)) throw InvalidParameter("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw InvalidParameter("field degree must be at least 1");
    if (k == 1) {
      if (p >= (1u << 31)) throw InvalidParameter("prime field too large");
      q_ = p;
      return;
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      if (q > 65536) throw InvalidParameter("extension field order exceeds 65536");
    }
    q_ = static_cast<std::uint32_t>(q);
    build_tables();
  }

  static std::shared_ptr<const FiniteField> make(std::uint32_t p, unsigned k = 1) {
    return std::make_shared<const FiniteField>(p, k);
  }

  /// Parses "F4", "F9", "GF(8)", "Z2", "F2^3".
  static std::shared_ptr<const FiniteField> parse(const std::string& s) {
    std::string t = s;
    if (t.rfind("GF(", 0) == 0 && t.back() == ')') t = t.substr(3, t.size() - 4);
    else if (t.rfind("F", 0) == 0 || t.rfind("Z", 0) == 0) t = t.substr(1);
    if (t.empty()) throw ParseError("bad field '" + s + "'");
    std::uint64_t base = 0, exp = 1;
    auto caret = t.find('^');
    try {
      std::size_t used = 0;
      base = std::stoull(t.substr(0, caret), &used);
      if (used != t.substr(0, caret).size()) throw ParseError("bad field '" + s + "'");
      if (caret != std::string::npos) exp = std::stoull(t.substr(caret + 1));
    } catch (const std::logic_error&) {
      throw ParseError("bad field '" + s + "'");
    }
    if (caret == std::string::npos) {
      for (std::uint64_t p = 2; p * p <= base; ++p)
        if (base % p == 0) {
          unsigned k = 0;
          std::uint64_t b = base;
          while (b % p == 0) b /= p, ++k;
          if (b != 1) throw ParseError("field order " + std::to_string(base) + " is not a prime power");
          return make(static_cast<std::uint32_t>(p), k);
        }
      return make(static_cast<std::uint32_t>(base), 1);
    }
    return make(static_cast<std::uint32_t>(base), static_cast<unsigned>(exp));
  }

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  std::string name() const { return "F" + std::to_string(q_); }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % p_);
    if (p_ == 2) return a ^ b;
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * place;
      a /= p_, b /= p_, place *= p_;
    }
    return r;
  }
  Elem neg(Elem a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((p_ - a % p_) % p_) * place;
      a /= p_, place *= p_;
    }
    return r;
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw InvalidParameter("zero has no inverse");
    if (k_ == 1) return pow(a, p_ - 2);
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Integer n as a field element.
  Elem from_int(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<Elem>(m);
  }

  /// A generator of the multiplicative group (extension fields only).
  Elem primitive() const {
    if (k_ == 1) {
      for (Elem g = 1; g < p_; ++g)
        if (multiplicative_order(g) == p_ - 1) return g;
    }
    return exp_.empty() ? 1 : exp_[1];
  }

  std::uint64_t multiplicative_order(Elem a) const {
    if (a == 0) throw InvalidParameter("zero has no multiplicative order");
    std::uint64_t n = q_ - 1, ord = n;
    for (std::uint64_t f = 2; f * f <= n; ++f)
      if (n % f == 0) {
        while (n % f == 0) n /= f;
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
      }
    if (n > 1 && ord % n == 0 && pow(a, ord / n) == 1) ord /= n;
    return ord;
  }

  /// a lies in the subfield F_{p^d} (d must divide k).
  bool in_subfield(Elem a, unsigned d) const {
    if (d == 0 || k_ % d != 0) throw InvalidParameter("subfield degree must divide the field degree");
    std::uint64_t pd = 1;
    for (unsigned i = 0; i < d; ++i) pd *= p_;
    return pow(a, pd) == a;
  }

  /// Smallest d with a in F_{p^d}.
  unsigned element_degree(Elem a) const {
    for (unsigned d = 1; d <= k_; ++d)
      if (k_ % d == 0 && in_subfield(a, d)) return d;
    return k_;
  }

  std::vector<Elem> subfield_elements(unsigned d) const {
    std::vector<Elem> out;
    for (Elem a = 0; a < q_; ++a)
      if (in_subfield(a, d)) out.push_back(a);
    return out;
  }

  std::vector<unsigned> subfield_degrees() const {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= k_; ++d)
      if (k_ % d == 0) out.push_back(d);
    return out;
  }

  /// Base-p digits, constant first.
  std::vector<std::uint8_t> digits(Elem a) const {
    std::vector<std::uint8_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) d[i] = static_cast<std::uint8_t>(a % p_), a /= p_;
    return d;
  }
  Elem from_digits(const std::vector<std::uint8_t>& d) const {
    Elem r = 0;
    for (unsigned i = k_; i-- > 0;) r = r * p_ + d[i];
    return r;
  }

  /// "a^2 + 1"-style text for extension elements, decimal for prime fields.
  std::string format(Elem x) const {
    if (k_ == 1) return std::to_string(x);
    auto d = digits(x);
    std::string out;
    for (unsigned i = k_; i-- > 0;) {
      if (d[i] == 0) continue;
      if (!out.empty()) out += " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
      if (mono.empty()) out += std::to_string(d[i]);
      else out += (d[i] == 1 ? "" : std::to_string(d[i]) + "*") + mono;
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.p_ == b.p_ && a.k_ == b.k_; }

  static bool is_prime32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  // Multiplies digit vectors modulo the current modulus.
  std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint64_t> r(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
    for (unsigned d = 2 * k_ - 1; d >= k_; --d) {
      std::uint64_t c = r[d];
      if (c == 0) continue;
      r[d] = 0;
      for (unsigned i = 0; i < k_; ++i) r[d - k_ + i] = (r[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
    return {r.begin(), r.begin() + k_};
  }

  // Searches monic modulus polynomials (lowest coefficients first, in index order) for one
  // where `a` is primitive: irreducible modulus and a cyclic generator in one step.
  void build_tables() {
    std::uint64_t count = q_;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      modulus_.assign(k_ + 1, 0);
      std::uint64_t t = idx;
      for (unsigned i = 0; i < k_; ++i) modulus_[i] = static_cast<std::uint32_t>(t % p_), t /= p_;
      modulus_[k_] = 1;
      if (modulus_[0] == 0) continue;
      exp_.assign(q_ - 1, 0);
      log_.assign(q_, 0);
      std::vector<std::uint32_t> x(k_, 0), acc(k_, 0);
      x[1] = 1;
      acc[0] = 1;
      bool ok = true;
      std::vector<bool> seen(q_, false);
      for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        Elem v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * p_ + acc[i];
        if (seen[v] || v == 0) {
          ok = false;
          break;
        }
        seen[v] = true;
        exp_[e] = v;
        log_[v] = e;
        acc = poly_mulmod(acc, x);
      }
      if (ok) return;
    }
    throw Error("no primitive modulus found");
  }

  std::uint32_t p_, q_ = 0;
  unsigned k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_, log_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace semiprimary
