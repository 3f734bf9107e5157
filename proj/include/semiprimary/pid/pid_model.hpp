#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiprimary/classify/classify.hpp"
#include "semiprimary/errors.hpp"
#include "semiprimary/pid/fq_poly.hpp"
#include "semiprimary/pid/integer.hpp"

namespace semiprimary {

/// Nonzero proper ideal (m) of Z or (f) of F_q[t].
class PidIdeal {
 public:
  static PidIdeal integer(std::uint64_t m) {
    if (m < 2) throw InvalidParameter("generator of an ideal of Z must be at least 2");
    PidIdeal i;
    i.m_ = m;
    return i;
  }

  static PidIdeal polynomial(const FqPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw InvalidParameter("generator must have degree at least 1");
    PidIdeal i;
    i.f_ = f.monic();
    return i;
  }

  /// "Z:12", "12", or "F4[t]:t^2+[2]" / "F2[t]:t^3".
  static PidIdeal parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || s.substr(0, colon) == "Z") {
      std::string num = colon == std::string::npos ? s : s.substr(colon + 1);
      try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(num, &used);
        if (used != num.size() || num[0] == '-') throw ParseError("bad integer '" + num + "'");
        return integer(v);
      } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + num + "'");
      }
    }
    std::string amb = s.substr(0, colon);
    auto br = amb.find("[t]");
    if (br == std::string::npos || br + 3 != amb.size()) throw ParseError("ambient must be Z or Fq[t], got '" + amb + "'");
    return polynomial(FqPoly::parse(s.substr(colon + 1), FiniteField::parse(amb.substr(0, br))));
  }

  bool is_integer() const { return !f_.has_value(); }
  std::uint64_t generator_integer() const { return m_; }
  const FqPoly& generator_polynomial() const { return *f_; }

  std::string to_string() const {
    if (is_integer()) return "(" + std::to_string(m_) + ") in Z";
    return "(" + f_->to_string() + ") in " + f_->field()->name() + "[t]";
  }

 private:
  PidIdeal() = default;
  std::uint64_t m_ = 0;
  std::optional<FqPoly> f_;
};

struct PidDelta {
  Extended delta;               // nullopt means infinity
  std::optional<std::string> prime_base;
  std::string factorization;

  std::string to_string() const {
    std::string s = "delta: " + format_extended(delta);
    if (prime_base) s += "; base: " + *prime_base;
    return s + "; factorization: " + factorization;
  }
};

namespace detail {

// Smallest-degree irreducible factor block of a monic f: product of its distinct
// irreducible factors of the least degree d.
inline std::pair<FqPoly, int> least_degree_block(const FqPoly& f) {
  const auto& F = f.field();
  FqPoly t = FqPoly::x_power(F, 1);
  FqPoly h = t % f;
  for (int d = 1; d <= f.degree(); ++d) {
    h = h.powmod(F->order(), f);
    FqPoly g = gcd(h - t, f);
    if (g.degree() > 0) return {g, d};
  }
  return {f, f.degree()};
}

}  // namespace detail

/// delta of (g): k when g is a prime power p^k (up to units), infinity otherwise.
inline PidDelta pid_delta(const PidIdeal& i) {
  PidDelta out;
  if (i.is_integer()) {
    std::uint64_t m = i.generator_integer();
    auto fac = factor_u64(m);
    for (std::size_t j = 0; j < fac.size(); ++j) {
      if (j) out.factorization += " * ";
      out.factorization += std::to_string(fac[j].first) + (fac[j].second > 1 ? "^" + std::to_string(fac[j].second) : "");
    }
    if (auto pp = prime_power(m)) {
      out.delta = pp->second;
      out.prime_base = "(" + std::to_string(pp->first) + ")";
    }
    return out;
  }
  FqPoly f = i.generator_polynomial();
  auto [block, d] = detail::least_degree_block(f);
  if (block.degree() != d) {
    // several distinct irreducible factors of degree d
    out.factorization = "(" + block.to_string() + ") has " + std::to_string(block.degree() / d) +
                        " distinct irreducible factors of degree " + std::to_string(d);
    return out;
  }
  unsigned k = 0;
  FqPoly rest = f;
  while (rest.degree() > 0) {
    auto [q, r] = rest.divmod(block);
    if (!r.is_zero()) break;
    rest = q;
    ++k;
  }
  if (rest.degree() == 0) {
    out.delta = k;
    out.prime_base = "(" + block.to_string() + ")";
    out.factorization = "(" + block.to_string() + ")" + (k > 1 ? "^" + std::to_string(k) : "");
  } else {
    out.factorization = "(" + block.to_string() + ")^" + std::to_string(k) + " * (" + rest.to_string() + ")";
  }
  return out;
}

}  // namespace semiprimary
