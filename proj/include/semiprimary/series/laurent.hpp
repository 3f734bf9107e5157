#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "semiprimary/errors.hpp"
#include "semiprimary/field/finite_field.hpp"
#include "semiprimary/series/spec.hpp"

namespace semiprimary {

namespace series_detail {

using Elem = FiniteField::Elem;
using Coeffs = std::vector<Elem>;

// Truncated power series products: all results have length `len`.
inline Coeffs mul(const FiniteField& f, const Coeffs& a, const Coeffs& b, std::size_t len) {
  Coeffs r(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (b[j]) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

inline Coeffs pow(const FiniteField& f, Coeffs a, unsigned n, std::size_t len) {
  Coeffs r(len, 0);
  if (len) r[0] = 1;
  a.resize(std::min(a.size(), len));
  while (n) {
    if (n & 1) r = mul(f, r, a, len);
    n >>= 1;
    if (n) a = mul(f, a, a, len);
  }
  return r;
}

// Long division 1/a; a[0] must be nonzero.
inline Coeffs inv(const FiniteField& f, const Coeffs& a, std::size_t len) {
  if (a.empty() || !a[0]) throw InvalidParameter("series inverse needs a unit constant term");
  Coeffs r(len, 0);
  Elem i0 = f.inv(a[0]);
  for (std::size_t k = 0; k < len; ++k) {
    Elem s = k == 0 ? 1 : 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j)
      if (a[j] && r[k - j]) s = f.sub(s, f.mul(a[j], r[k - j]));
    r[k] = f.mul(s, i0);
  }
  return r;
}

}  // namespace series_detail

/// Element X^order * (c_0 + c_1 X + ...) of F_q((X)). Exact elements are Laurent polynomials;
/// otherwise coefficients are known only below order + coeffs.size().
class TruncatedLaurent {
 public:
  using Elem = FiniteField::Elem;

  explicit TruncatedLaurent(FieldPtr f) : f_(std::move(f)) {}

  static TruncatedLaurent monomial(FieldPtr f, Elem a, int e) { return polynomial(std::move(f), e, {a}); }

  static TruncatedLaurent polynomial(FieldPtr f, int order, std::vector<Elem> c) {
    TruncatedLaurent x(std::move(f));
    x.order_ = order;
    x.c_ = std::move(c);
    x.normalize();
    return x;
  }

  /// Known coefficients only; everything from order + c.size() on is unknown.
  static TruncatedLaurent series(FieldPtr f, int order, std::vector<Elem> c) {
    TruncatedLaurent x(std::move(f));
    x.order_ = order;
    x.c_ = std::move(c);
    x.exact_ = false;
    x.normalize();
    return x;
  }

  const FieldPtr& field() const { return f_; }
  bool is_zero() const { return exact_ && c_.empty(); }
  bool exact() const { return exact_; }
  int order() const {
    if (c_.empty()) throw PrecisionError(exact_ ? "order of zero" : "order beyond known precision");
    return order_;
  }
  /// Absolute exponent from which coefficients are unknown (INT_MAX when exact).
  int precision() const { return exact_ ? INT_MAX : order_ + static_cast<int>(c_.size()); }
  const std::vector<Elem>& unit_part() const { return c_; }

  Elem coeff(int e) const {
    if (e >= precision()) throw PrecisionError("coefficient of X^" + std::to_string(e) + " beyond known precision");
    if (e < order_ || e - order_ >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(e - order_)];
  }

  friend TruncatedLaurent operator*(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    if (a.is_zero() || b.is_zero()) return TruncatedLaurent(a.f_);
    if (a.c_.empty() || b.c_.empty()) throw PrecisionError("product of elements with unknown order");
    TruncatedLaurent r(a.f_);
    r.order_ = a.order_ + b.order_;
    r.exact_ = a.exact_ && b.exact_;
    std::size_t len = r.exact_ ? a.c_.size() + b.c_.size() - 1
                               : std::min(a.exact_ ? SIZE_MAX : a.c_.size(), b.exact_ ? SIZE_MAX : b.c_.size());
    r.c_ = series_detail::mul(*a.f_, a.c_, b.c_, len);
    r.normalize();
    return r;
  }

  friend TruncatedLaurent operator+(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.order_, b.order_);
    int hi = std::min(a.precision(), b.precision());
    bool exact = hi == INT_MAX;
    if (exact) hi = std::max(a.order_ + static_cast<int>(a.c_.size()), b.order_ + static_cast<int>(b.c_.size()));
    std::vector<Elem> c(static_cast<std::size_t>(std::max(hi - lo, 0)), 0);
    for (int e = lo; e < hi; ++e) c[static_cast<std::size_t>(e - lo)] = a.f_->add(a.coeff(e), b.coeff(e));
    return exact ? polynomial(a.f_, lo, std::move(c)) : series(a.f_, lo, std::move(c));
  }

  TruncatedLaurent scaled(Elem a) const {
    if (!a) return TruncatedLaurent(f_);
    TruncatedLaurent r = *this;
    for (auto& x : r.c_) x = f_->mul(x, a);
    return r;
  }

  /// Inverse to `rel` known coefficients; monomials invert exactly.
  TruncatedLaurent inv(std::size_t rel = 0) const {
    if (is_zero()) throw InvalidParameter("inverse of zero");
    if (c_.empty()) throw PrecisionError("inverse of an element with unknown order");
    if (exact_ && c_.size() == 1) return monomial(f_, f_->inv(c_[0]), -order_);
    if (!exact_) rel = rel ? std::min(rel, c_.size()) : c_.size();
    if (rel == 0) throw PrecisionError("inverse of a non-monomial polynomial needs a target precision");
    return series(f_, -order_, series_detail::inv(*f_, c_, rel));
  }

  /// Negative exponents go through inv(rel).
  TruncatedLaurent pow(int n, std::size_t rel = 0) const {
    if (n < 0) return inv(rel).pow(-n);
    if (is_zero()) {
      if (n == 0) return monomial(f_, 1, 0);
      return *this;
    }
    TruncatedLaurent r = monomial(f_, 1, 0), b = *this;
    unsigned e = static_cast<unsigned>(n);
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i]) continue;
      int e = order_ + static_cast<int>(i);
      std::string coeff = f_->degree() == 1 ? std::to_string(c_[i]) : "(" + f_->format(c_[i]) + ")";
      std::string mono = e == 0 ? "" : e == 1 ? "X" : "X^" + std::to_string(e);
      if (!out.empty()) out += " + ";
      if (mono.empty()) out += coeff;
      else out += (c_[i] == 1 ? "" : coeff + "*") + mono;
    }
    if (!exact_) out += (out.empty() ? "" : " + ") + std::string("O(X^") + std::to_string(precision()) + ")";
    return out;
  }

  friend bool operator==(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    return *a.f_ == *b.f_ && a.exact_ == b.exact_ && a.order_ == b.order_ && a.c_ == b.c_;
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && !c_[lead]) ++lead;
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      order_ += static_cast<int>(lead);
    }
    if (exact_)
      while (!c_.empty() && !c_.back()) c_.pop_back();
    if (exact_ && c_.empty()) order_ = 0;
  }

  FieldPtr f_;
  int order_ = 0;
  std::vector<Elem> c_;
  bool exact_ = true;
};

namespace series_detail {

inline bool slots_member(const TruncatedLaurent& x, const FiniteField& f, const std::vector<Subspace>& slots) {
  if (x.is_zero()) return true;
  int c = static_cast<int>(slots.size());
  if (x.unit_part().empty()) {
    if (x.precision() >= c) return true;  // known zero through the conductor
    throw PrecisionError("membership needs coefficients through X^" + std::to_string(c - 1));
  }
  if (x.order() < 0) return false;
  if (x.order() >= c) return true;
  if (x.precision() < c) throw PrecisionError("membership needs coefficients through X^" + std::to_string(c - 1));
  for (int e = x.order(); e < c; ++e)
    if (!slot::contains(f, slots[static_cast<std::size_t>(e)], x.coeff(e))) return false;
  return true;
}

}  // namespace series_detail

inline bool member(const TruncatedLaurent& x, const SeriesRingSpec& r) {
  return series_detail::slots_member(x, *r.field(), r.slots());
}
inline bool member(const TruncatedLaurent& x, const SeriesIdealSpec& i) {
  return series_detail::slots_member(x, *i.field(), i.slots());
}

/// x in E_n(S): x^n not in S.
template <class Spec>
bool in_En(const TruncatedLaurent& x, const Spec& s, unsigned n) {
  return !member(x.pow(static_cast<int>(n)), s);
}

/// x^n in A_n(S): x^n in S.
template <class Spec>
bool power_in_An(const TruncatedLaurent& x, const Spec& s, unsigned n) {
  return member(x.pow(static_cast<int>(n)), s);
}

}  // namespace semiprimary
