#pragma once

#include <cstdint>
#include <vector>

namespace semiprimary {

using Digits = std::vector<std::uint8_t>;

inline std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1;
  for (std::uint32_t e = p - 2; e; e >>= 1, a = a * a % p)
    if (e & 1U) r = r * a % p;
  return r;
}

/// Row-reduced subspace of F_p^d. Pivots sit on the highest nonzero coordinate,
/// so the complement of the pivot set is spanned by low-index basis vectors.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Digits>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v modulo the subspace in place.
  void reduce(Digits& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::uint32_t c = v[pivots_[r]];
      if (!c) continue;
      std::uint32_t f = p_ - c;
      for (std::size_t j = 0; j < dim_; ++j) v[j] = static_cast<std::uint8_t>((v[j] + f * rows_[r][j]) % p_);
    }
  }

  bool contains(Digits v) const {
    reduce(v);
    for (auto x : v)
      if (x) return false;
    return true;
  }

  /// Returns true when v enlarged the subspace.
  bool insert(Digits v) {
    reduce(v);
    std::size_t piv = dim_;
    for (std::size_t j = dim_; j-- > 0;)
      if (v[j]) {
        piv = j;
        break;
      }
    if (piv == dim_) return false;
    std::uint32_t inv = inverse_mod_p(v[piv], p_);
    for (auto& x : v) x = static_cast<std::uint8_t>(x * inv % p_);
    for (auto& row : rows_) {
      std::uint32_t c = row[piv];
      if (!c) continue;
      std::uint32_t f = p_ - c;
      for (std::size_t j = 0; j < dim_; ++j) row[j] = static_cast<std::uint8_t>((row[j] + f * v[j]) % p_);
    }
    // keep rows ordered by pivot so equal subspaces have equal representations
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < piv) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), piv);
    return true;
  }

  bool insert_all(const Subspace& o) {
    bool grew = false;
    for (const auto& r : o.rows_) grew |= insert(r);
    return grew;
  }

  bool subset_of(const Subspace& o) const {
    for (const auto& r : rows_)
      if (!o.contains(r)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.rows_ < b.rows_; }

 private:
  std::uint32_t p_ = 2;
  std::size_t dim_ = 0;
  std::vector<Digits> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace semiprimary
