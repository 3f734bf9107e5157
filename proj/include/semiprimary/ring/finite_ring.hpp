#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "semiprimary/errors.hpp"
#include "semiprimary/monomial/polynomial.hpp"
#include "semiprimary/ring/element_set.hpp"
#include "semiprimary/ring/fp_linear.hpp"

namespace semiprimary {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

enum class RingKind { Cyclic, Table, Algebra };

inline constexpr std::size_t kMaxTableOrder = 4096;
inline constexpr std::size_t kMaxAlgebraOrder = std::size_t{1} << 16;
inline constexpr std::size_t kMaxCyclicOrder = std::size_t{1} << 20;

/// Finite-dimensional commutative F_p-algebra with a monomial basis.
struct AlgebraData {
  std::uint32_t p = 2;
  std::vector<Exponent> basis;  // basis[0] is the constant monomial
  std::vector<std::string> names;
  Exponent caps;                // ambient truncation exponents
  std::vector<Elem> cap_image;  // image of every monomial below caps (mixed radix)
  std::vector<Elem> sc;         // sc[i*d+j] = basis_i * basis_j
};

/// Units modulo which products and memberships are unchanged.
struct AssociateClasses {
  std::vector<Elem> rep;   // rep[x] = least element of x*U
  std::vector<Elem> reps;  // distinct representatives, ascending
};

class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
  struct Token {};

 public:
  using BinOp = std::function<Elem(Elem, Elem)>;

  FiniteRing(Token, RingKind kind, std::size_t order, std::string name, nlohmann::json spec)
      : kind_(kind), order_(order), name_(std::move(name)), spec_(std::move(spec)) {}

  static RingPtr cyclic(std::uint64_t n) {
    if (n < 2 || n > kMaxCyclicOrder) throw InvalidParameter("zn: modulus must lie in [2, 2^20], got " + std::to_string(n));
    auto r = std::make_shared<FiniteRing>(Token{}, RingKind::Cyclic, n, "Z" + std::to_string(n),
                                          nlohmann::json{{"kind", "zn"}, {"n", n}});
    r->one_ = 1;
    r->gens_ = {1};
    return r;
  }

  /// Builds a ring from explicit operations; element 0 must be the additive identity.
  static RingPtr table(std::string name, std::size_t order, const BinOp& add, const BinOp& mul, Elem one,
                       std::vector<std::string> labels, nlohmann::json spec) {
    if (order < 1 || order > kMaxTableOrder)
      throw InvalidParameter("ring order " + std::to_string(order) + " exceeds the table limit " + std::to_string(kMaxTableOrder));
    if (labels.size() != order) throw InvalidParameter("label count does not match ring order");
    auto r = std::make_shared<FiniteRing>(Token{}, RingKind::Table, order, std::move(name), std::move(spec));
    r->one_ = one;
    r->add_.resize(order * order);
    r->mul_.resize(order * order);
    r->neg_.assign(order, 0);
    for (Elem a = 0; a < order; ++a)
      for (Elem b = 0; b < order; ++b) {
        Elem s = add(a, b), m = mul(a, b);
        if (s >= order || m >= order) throw InvalidParameter("table operation left the ring");
        r->add_[a * order + b] = static_cast<std::uint16_t>(s);
        r->mul_[a * order + b] = static_cast<std::uint16_t>(m);
        if (s == 0) r->neg_[a] = b;
      }
    r->labels_ = std::move(labels);
    for (Elem e = 0; e < order; ++e) {
      auto key = strip(r->labels_[e]);
      if (!r->label_index_.emplace(key, e).second) throw InvalidParameter("duplicate element label " + key);
    }
    r->gens_ = r->greedy_additive_gens();
    return r;
  }

  static RingPtr algebra(AlgebraData data, std::string name, nlohmann::json spec) {
    std::size_t d = data.basis.size();
    if (d == 0 || total_degree(data.basis[0]) != 0) throw InvalidParameter("algebra basis must start with 1");
    std::size_t order = 1;
    for (std::size_t i = 0; i < d; ++i) {
      order *= data.p;
      if (order > kMaxAlgebraOrder) throw InvalidParameter("algebra order exceeds 2^16");
    }
    auto r = std::make_shared<FiniteRing>(Token{}, RingKind::Algebra, order, std::move(name), std::move(spec));
    r->one_ = 1;
    Elem w = 1;
    for (std::size_t i = 0; i < d; ++i, w *= data.p) r->weights_.push_back(w);
    r->gens_ = r->weights_;
    r->alg_ = std::move(data);
    const auto& a = r->alg_;
    r->left_.assign(d * order, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (Elem b = 1; b < order; ++b) {
        // peel off the lowest nonzero digit of b
        std::size_t j = 0;
        while ((b / r->weights_[j]) % a.p == 0) ++j;
        Elem rest = b - r->weights_[j];
        r->left_[i * order + b] = r->add_digits(r->left_[i * order + rest], a.sc[i * d + j]);
      }
    return r;
  }

  RingKind kind() const { return kind_; }
  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  const nlohmann::json& spec() const { return spec_; }
  const AlgebraData* algebra_data() const { return kind_ == RingKind::Algebra ? &alg_ : nullptr; }
  std::size_t dimension() const { return alg_.basis.size(); }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const {
    switch (kind_) {
      case RingKind::Cyclic: {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= order_ ? s - order_ : s);
      }
      case RingKind::Table: return add_[a * order_ + b];
      case RingKind::Algebra: return add_digits(a, b);
    }
    return 0;
  }

  Elem neg(Elem a) const {
    switch (kind_) {
      case RingKind::Cyclic: return a == 0 ? 0 : static_cast<Elem>(order_ - a);
      case RingKind::Table: return neg_[a];
      case RingKind::Algebra: return scale_digits(a, alg_.p - 1);
    }
    return 0;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    switch (kind_) {
      case RingKind::Cyclic: return static_cast<Elem>(std::uint64_t{a} * b % order_);
      case RingKind::Table: return mul_[a * order_ + b];
      case RingKind::Algebra: {
        Elem acc = 0;
        if (alg_.p == 2) {
          for (std::size_t i = 0; a; ++i, a >>= 1U)
            if (a & 1U) acc ^= left_[i * order_ + b];
          return acc;
        }
        for (std::size_t i = 0; a; ++i, a /= alg_.p)
          if (auto c = a % alg_.p) acc = add_digits(acc, scale_digits(left_[i * order_ + b], c));
        return acc;
      }
    }
    return 0;
  }

  Elem pow(Elem a, std::uint64_t k) const {
    Elem result = one_;
    while (k) {
      if (k & 1U) result = mul(result, a);
      k >>= 1U;
      if (k) a = mul(a, a);
    }
    return result;
  }

  /// k-fold sum of a.
  Elem times(Elem a, std::uint64_t k) const {
    Elem result = 0;
    while (k) {
      if (k & 1U) result = add(result, a);
      k >>= 1U;
      if (k) a = add(a, a);
    }
    return result;
  }

  std::uint64_t characteristic() const {
    std::uint64_t k = 1;
    for (Elem x = one_; x != 0; x = add(x, one_)) ++k;
    return k;
  }

  /// Additive generators of the ring.
  const std::vector<Elem>& additive_gens() const { return gens_; }

  bool is_unit(Elem a) const {
    switch (kind_) {
      case RingKind::Cyclic: return std::gcd(std::uint64_t{a}, std::uint64_t{order_}) == 1;
      case RingKind::Algebra: return a % alg_.p != 0;
      case RingKind::Table: return units().contains(a);
    }
    return false;
  }

  const ElementSet& units() const {
    std::call_once(units_once_, [this] {
      units_ = ElementSet(order_);
      if (kind_ == RingKind::Table) {
        for (Elem a = 0; a < order_; ++a)
          for (Elem b = 0; b < order_; ++b)
            if (mul_[a * order_ + b] == one_) {
              units_.insert(a);
              break;
            }
      } else {
        for (Elem a = 0; a < order_; ++a)
          if (is_unit(a)) units_.insert(a);
      }
    });
    return units_;
  }

  /// Idempotent power of a, i.e. a^k with a^k = a^(2k).
  Elem idempotent_power(Elem a) const {
    Elem slow = a, fast = mul(a, a);
    while (slow != fast) {
      slow = mul(slow, a);
      fast = mul(mul(fast, a), a);
    }
    return slow;
  }

  const AssociateClasses& associates() const {
    std::call_once(assoc_once_, [this] { build_associates(); });
    return assoc_;
  }

  std::string format(Elem e) const {
    switch (kind_) {
      case RingKind::Cyclic: return std::to_string(e);
      case RingKind::Table: return labels_[e];
      case RingKind::Algebra: return to_polynomial(e).to_string(alg_.names);
    }
    return {};
  }

  Polynomial to_polynomial(Elem e) const {
    Polynomial f(alg_.p, alg_.names.size());
    for (std::size_t i = 0; e; ++i, e /= alg_.p)
      if (auto c = e % alg_.p) f.add_term(alg_.basis[i], c);
    return f;
  }

  Elem from_polynomial(const Polynomial& f) const {
    if (kind_ != RingKind::Algebra) throw RingMismatch("polynomial given for a non-algebra ring");
    Elem acc = 0;
    for (const auto& [e, c] : f.terms()) {
      std::size_t idx = 0;
      bool killed = false;
      for (std::size_t v = 0; v < alg_.caps.size(); ++v) {
        if (e[v] >= alg_.caps[v]) {
          killed = true;
          break;
        }
        idx = idx * static_cast<std::size_t>(alg_.caps[v]) + static_cast<std::size_t>(e[v]);
      }
      if (!killed) acc = add_digits(acc, scale_digits(alg_.cap_image[idx], c));
    }
    return acc;
  }

  Elem parse(std::string_view text) const {
    switch (kind_) {
      case RingKind::Cyclic: {
        auto s = strip(std::string(text));
        std::size_t used = 0;
        long long v = 0;
        try {
          v = std::stoll(s, &used);
        } catch (const std::exception&) {
          throw ParseError("expected an integer, got '" + s + "'");
        }
        if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'");
        auto n = static_cast<long long>(order_);
        return static_cast<Elem>(((v % n) + n) % n);
      }
      case RingKind::Table: {
        auto it = label_index_.find(strip(std::string(text)));
        if (it == label_index_.end()) throw ParseError("no element labelled '" + std::string(text) + "' in " + name_);
        return it->second;
      }
      case RingKind::Algebra: return from_polynomial(Polynomial::parse(text, alg_.p, alg_.names));
    }
    return 0;
  }

  Digits digits(Elem e) const {
    Digits v(dimension());
    for (std::size_t i = 0; i < v.size(); ++i, e /= alg_.p) v[i] = static_cast<std::uint8_t>(e % alg_.p);
    return v;
  }

  Elem from_digits(const Digits& v) const {
    Elem e = 0;
    for (std::size_t i = v.size(); i-- > 0;) e = e * alg_.p + v[i];
    return e;
  }

  /// Checks the commutative ring axioms; throws InvalidParameter with a counterexample.
  void verify_axioms() const {
    auto fail = [this](const std::string& what, Elem a, Elem b, Elem c) {
      throw InvalidParameter(name_ + ": " + what + " fails at (" + format(a) + ", " + format(b) + ", " + format(c) + ")");
    };
    if (kind_ == RingKind::Cyclic) return;
    std::vector<Elem> firsts;
    if (kind_ == RingKind::Algebra) {
      firsts = gens_;
    } else if (order_ <= 128) {
      for (Elem a = 0; a < order_; ++a) firsts.push_back(a);
    } else {
      firsts = gens_;
    }
    // With multiplication additive in the first slot, checking associativity on
    // additive generators there covers every element.
    std::vector<Elem> others = kind_ == RingKind::Algebra ? gens_ : std::vector<Elem>{};
    if (others.empty())
      for (Elem a = 0; a < order_; ++a) others.push_back(a);
    for (Elem a = 0; a < order_ && kind_ == RingKind::Table; ++a) {
      if (add(a, 0) != a) fail("additive identity", a, 0, 0);
      if (mul(a, one_) != a) fail("multiplicative identity", a, one_, 0);
      if (add(a, neg(a)) != 0) fail("additive inverse", a, 0, 0);
      for (Elem b = 0; b < order_; ++b) {
        if (add(a, b) != add(b, a)) fail("additive commutativity", a, b, 0);
        if (mul(a, b) != mul(b, a)) fail("commutativity", a, b, 0);
      }
    }
    if (kind_ == RingKind::Algebra)
      for (Elem a : others)
        if (mul(a, one_) != a) fail("multiplicative identity", a, one_, 0);
    for (Elem a : firsts)
      for (Elem b : others)
        for (Elem c : others) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("associativity", a, b, c);
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) fail("distributivity", a, b, c);
          if (kind_ == RingKind::Table && add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity", a, b, c);
        }
    if (kind_ == RingKind::Algebra)
      for (Elem a : others)
        for (Elem b : others)
          if (mul(a, b) != mul(b, a)) fail("commutativity", a, b, 0);
  }

 private:
  static std::string strip(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
  }

  Elem add_digits(Elem a, Elem b) const {
    const std::uint32_t p = alg_.p;
    if (p == 2) return a ^ b;
    Elem out = 0, w = 1;
    while (a || b) {
      out += w * ((a % p + b % p) % p);
      a /= p;
      b /= p;
      w *= p;
    }
    return out;
  }

  Elem scale_digits(Elem a, std::uint32_t c) const {
    const std::uint32_t p = alg_.p;
    Elem out = 0, w = 1;
    for (; a; a /= p, w *= p) out += w * ((a % p) * c % p);
    return out;
  }

  std::vector<Elem> greedy_additive_gens() const {
    std::vector<Elem> gens;
    ElementSet span(order_);
    span.insert(0);
    std::vector<Elem> members{0};
    for (Elem x = 0; x < order_; ++x) {
      if (span.contains(x)) continue;
      gens.push_back(x);
      std::vector<Elem> base = members;
      for (Elem shift = x; !span.contains(shift); shift = add(shift, x))
        for (Elem s : base) {
          Elem t = add(s, shift);
          if (!span.contains(t)) {
            span.insert(t);
            members.push_back(t);
          }
        }
    }
    return gens;
  }

  void build_associates() const {
    assoc_.rep.assign(order_, 0);
    if (kind_ == RingKind::Cyclic) {
      ElementSet seen(order_);
      for (Elem x = 0; x < order_; ++x) {
        auto g = static_cast<Elem>(std::gcd(std::uint64_t{x}, std::uint64_t{order_}) % order_);
        assoc_.rep[x] = g;
        if (!seen.contains(g)) {
          seen.insert(g);
          assoc_.reps.push_back(g);
        }
      }
      return;
    }
    // small generating set for the unit group, then orbits by breadth-first search
    const ElementSet& u = units();
    std::vector<Elem> ugens;
    ElementSet group(order_);
    group.insert(one_);
    std::vector<Elem> gmembers{one_};
    u.for_each([&](Elem x) {
      if (group.contains(x)) return;
      ugens.push_back(x);
      for (std::size_t i = 0; i < gmembers.size(); ++i)
        for (Elem g : ugens) {
          Elem y = mul(gmembers[i], g);
          if (!group.contains(y)) {
            group.insert(y);
            gmembers.push_back(y);
          }
        }
    });
    ElementSet done(order_);
    std::vector<Elem> orbit;
    for (Elem x = 0; x < order_; ++x) {
      if (done.contains(x)) continue;
      assoc_.reps.push_back(x);
      orbit.assign(1, x);
      done.insert(x);
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        assoc_.rep[orbit[i]] = x;
        for (Elem g : ugens) {
          Elem y = mul(orbit[i], g);
          if (!done.contains(y)) {
            done.insert(y);
            orbit.push_back(y);
          }
        }
      }
    }
  }

  RingKind kind_;
  std::size_t order_;
  std::string name_;
  nlohmann::json spec_;
  Elem one_ = 1;
  std::vector<Elem> gens_;

  std::vector<std::uint16_t> add_, mul_;
  std::vector<Elem> neg_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Elem> label_index_;

  AlgebraData alg_;
  std::vector<Elem> weights_;
  std::vector<Elem> left_;

  mutable std::once_flag units_once_, assoc_once_;
  mutable ElementSet units_;
  mutable AssociateClasses assoc_;
};

}  // namespace semiprimary
