#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "semiprimary/errors.hpp"
#include "semiprimary/ring/finite_ring.hpp"

namespace semiprimary {

/// Grows an additive subgroup (given as set + member list) by one element.
inline bool adjoin_additive(const FiniteRing& r, ElementSet& set, std::vector<Elem>& members, Elem g) {
  if (set.contains(g)) return false;
  const std::size_t base = members.size();
  for (Elem shift = g; !set.contains(shift); shift = r.add(shift, g))
    for (std::size_t i = 0; i < base; ++i) {
      Elem t = r.add(members[i], shift);
      if (!set.contains(t)) {
        set.insert(t);
        members.push_back(t);
      }
    }
  return true;
}

/// An ideal of a finite ring, stored as a membership bitset plus additive generators.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, ElementSet members, std::vector<Elem> additive_gens, std::vector<Elem> display = {})
      : ring_(std::move(ring)), members_(std::move(members)), gens_(std::move(additive_gens)), display_(std::move(display)) {}

  const FiniteRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  bool contains(Elem e) const { return members_.contains(e); }
  std::size_t size() const { return members_.count(); }
  bool is_proper() const { return !members_.contains(ring_->one()); }
  bool is_zero() const { return gens_.empty(); }
  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& additive_gens() const { return gens_; }

  /// Generators used for display: the constructing generators when known.
  const std::vector<Elem>& generators() const { return display_.empty() ? gens_ : display_; }

  bool subset_of(const Ideal& o) const { return members_.subset_of(o.members_); }

  std::string to_string() const {
    if (gens_.empty()) return "(0)";
    if (!is_proper()) return "(1)";
    std::string out = "(";
    const auto& g = generators();
    for (std::size_t i = 0; i < g.size(); ++i) out += (i ? ", " : "") + ring_->format(g[i]);
    return out + ")";
  }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.ring_ == b.ring_ && a.members_ == b.members_; }

 private:
  RingPtr ring_;
  ElementSet members_;
  std::vector<Elem> gens_;
  std::vector<Elem> display_;
};

inline void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring_ptr() != b.ring_ptr()) throw RingMismatch("ideals belong to different rings");
}

inline Ideal zero_ideal(const RingPtr& r) {
  ElementSet s(r->order());
  s.insert(0);
  return Ideal(r, std::move(s), {});
}

inline Ideal unit_ideal(const RingPtr& r) {
  ElementSet s(r->order());
  s.fill();
  return Ideal(r, std::move(s), r->additive_gens(), {r->one()});
}

/// Additive subgroup generated by the given elements; the result is not checked to be an ideal.
inline Ideal additive_span(const RingPtr& r, const std::vector<Elem>& elems, std::vector<Elem> display = {}) {
  ElementSet set(r->order());
  set.insert(0);
  std::vector<Elem> members{0}, kept;
  for (Elem g : elems)
    if (adjoin_additive(*r, set, members, g)) kept.push_back(g);
  return Ideal(r, std::move(set), std::move(kept), std::move(display));
}

inline Ideal ideal_generated(const RingPtr& r, const std::vector<Elem>& gens) {
  std::vector<Elem> products;
  for (Elem g : gens)
    for (Elem a : r->additive_gens()) products.push_back(r->mul(g, a));
  std::vector<Elem> display;
  for (Elem g : gens)
    if (g != 0 && std::find(display.begin(), display.end(), g) == display.end()) display.push_back(g);
  return additive_span(r, products, std::move(display));
}

inline Ideal principal_ideal(const RingPtr& r, Elem x) { return ideal_generated(r, {x}); }

/// Validates that a subset is an ideal; throws InvalidParameter otherwise.
inline Ideal ideal_from_members(const RingPtr& r, const ElementSet& members) {
  if (members.universe() != r->order() || !members.contains(0)) throw InvalidParameter("ideal must contain 0");
  auto elems = members.elements();
  Ideal span = additive_span(r, elems);
  if (!(span.members() == members)) throw InvalidParameter("subset is not closed under addition");
  for (Elem g : span.additive_gens())
    for (Elem a : r->additive_gens())
      if (!members.contains(r->mul(g, a))) throw InvalidParameter("subset is not closed under multiplication");
  return span;
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const RingPtr& r = a.ring_ptr();
  ElementSet set = a.members();
  std::vector<Elem> members = set.elements(), kept = a.additive_gens();
  for (Elem g : b.additive_gens())
    if (adjoin_additive(*r, set, members, g)) kept.push_back(g);
  std::vector<Elem> display = a.generators();
  for (Elem g : b.generators()) display.push_back(g);
  return Ideal(r, std::move(set), std::move(kept), std::move(display));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const RingPtr& r = a.ring_ptr();
  std::vector<Elem> products;
  for (Elem x : a.additive_gens())
    for (Elem y : b.additive_gens()) products.push_back(r->mul(x, y));
  std::vector<Elem> display;
  for (Elem x : a.generators())
    for (Elem y : b.generators()) {
      Elem z = r->mul(x, y);
      if (z != 0 && std::find(display.begin(), display.end(), z) == display.end()) display.push_back(z);
    }
  return additive_span(r, products, std::move(display));
}

inline Ideal ideal_power(const Ideal& a, unsigned k) {
  if (k == 0) return unit_ideal(a.ring_ptr());
  Ideal result = a;
  for (unsigned i = 1; i < k; ++i) result = ideal_product(result, a);
  return result;
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  ElementSet s = a.members();
  s &= b.members();
  return additive_span(a.ring_ptr(), s.elements());
}

/// Exponent that detects nilpotency modulo any ideal: if some power of x lies in I, this one does.
inline unsigned nilpotency_bound(const FiniteRing& r) { return static_cast<unsigned>(std::bit_width(r.order())); }

inline Ideal radical(const Ideal& i) {
  const FiniteRing& r = i.ring();
  const auto& cls = r.associates();
  const unsigned L = nilpotency_bound(r);
  ElementSet rad_reps(r.order());
  for (Elem rep : cls.reps)
    if (i.contains(r.pow(rep, L))) rad_reps.insert(rep);
  ElementSet members(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    if (rad_reps.contains(cls.rep[x])) members.insert(x);
  return additive_span(i.ring_ptr(), members.elements());
}

inline Ideal nilradical(const RingPtr& r) { return radical(zero_ideal(r)); }

struct PrimeCheck {
  bool prime = false;
  std::optional<std::pair<Elem, Elem>> witness;  // a, b outside I with ab in I
};

/// In a finite ring prime and maximal coincide. Scans associate-class representatives.
inline PrimeCheck check_prime(const Ideal& i) {
  if (!i.is_proper()) return {false, std::nullopt};
  const FiniteRing& r = i.ring();
  std::vector<Elem> outside;
  for (Elem rep : r.associates().reps)
    if (!i.contains(rep)) outside.push_back(rep);
  for (std::size_t a = 0; a < outside.size(); ++a)
    for (std::size_t b = a; b < outside.size(); ++b)
      if (i.contains(r.mul(outside[a], outside[b]))) return {false, std::make_pair(outside[a], outside[b])};
  return {true, std::nullopt};
}

inline bool is_prime(const Ideal& i) { return check_prime(i).prime; }

inline bool is_radical_ideal(const Ideal& i) { return radical(i) == i; }

inline constexpr std::size_t kDefaultIdealBudget = 20000;

/// All ideals, as the closure of the principal ideals under pairwise sums. Sorted by size.
inline std::vector<Ideal> enumerate_ideals(const RingPtr& r, std::size_t budget = kDefaultIdealBudget) {
  std::vector<Ideal> principals;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Ideal> all;
  auto record = [&](Ideal id) {
    if (!seen.insert(id.members()).second) return false;
    if (all.size() >= budget)
      throw BudgetExceeded("ideal enumeration of " + r->name() + " exceeds budget of " + std::to_string(budget) + " ideals");
    all.push_back(std::move(id));
    return true;
  };
  record(zero_ideal(r));
  for (Elem rep : r->associates().reps) {
    if (rep == 0) continue;
    Ideal p = principal_ideal(r, rep);
    if (record(p)) principals.push_back(p);
  }
  for (std::size_t at = 1; at < all.size(); ++at)
    for (std::size_t k = 0; k < principals.size(); ++k) {
      if (principals[k].subset_of(all[at])) continue;
      Ideal s = ideal_sum(all[at], principals[k]);
      record(std::move(s));
    }
  std::sort(all.begin(), all.end(), [](const Ideal& a, const Ideal& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.members() < b.members();
  });
  return all;
}

/// Image of an ideal under a surjective ring map given elementwise.
inline Ideal map_ideal(const Ideal& i, const RingPtr& target, const std::vector<Elem>& map) {
  std::vector<Elem> images, display;
  for (Elem g : i.additive_gens()) images.push_back(map[g]);
  for (Elem g : i.generators()) display.push_back(map[g]);
  Ideal gen = ideal_generated(target, images);
  return Ideal(target, gen.members(), gen.additive_gens(), display);
}

/// Preimage of an ideal of the target under an elementwise ring map.
inline Ideal preimage_ideal(const RingPtr& source, const Ideal& j, const std::vector<Elem>& map) {
  ElementSet s(source->order());
  for (Elem x = 0; x < source->order(); ++x)
    if (j.contains(map[x])) s.insert(x);
  return additive_span(source, s.elements());
}

}  // namespace semiprimary
