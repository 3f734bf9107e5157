#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semiprimary/errors.hpp"
#include "semiprimary/field/finite_field.hpp"
#include "semiprimary/ring/fp_linear.hpp"

namespace semiprimary {

/// Coefficient slots: F_p-subspaces of F_q stored as digit rows of field elements.
namespace slot {

using Elem = FiniteField::Elem;

inline Subspace zero(const FiniteField& f) { return Subspace(f.characteristic(), f.degree()); }

inline Subspace full(const FiniteField& f) {
  Subspace s = zero(f);
  for (unsigned i = 0; i < f.degree(); ++i) {
    Digits d(f.degree(), 0);
    d[i] = 1;
    s.insert(d);
  }
  return s;
}

inline Subspace span(const FiniteField& f, const std::vector<Elem>& gens) {
  Subspace s = zero(f);
  for (Elem a : gens) {
    if (a >= f.order()) throw InvalidParameter("element index " + std::to_string(a) + " outside " + f.name());
    s.insert(f.digits(a));
  }
  return s;
}

inline Subspace subfield(const FiniteField& f, unsigned d) {
  if (d == 0 || f.degree() % d) throw InvalidParameter(f.name() + " has no subfield of degree " + std::to_string(d));
  return span(f, f.subfield_elements(d));
}

inline bool contains(const FiniteField& f, const Subspace& s, Elem a) { return s.contains(f.digits(a)); }

inline std::vector<Elem> basis(const FiniteField& f, const Subspace& s) {
  std::vector<Elem> out;
  for (const auto& r : s.rows()) out.push_back(f.from_digits(r));
  return out;
}

/// Membership table indexed by element.
inline std::vector<bool> table(const FiniteField& f, const Subspace& s) {
  std::vector<bool> t(f.order());
  for (Elem a = 0; a < f.order(); ++a) t[a] = contains(f, s, a);
  return t;
}

inline std::optional<unsigned> subfield_degree(const FiniteField& f, const Subspace& s) {
  for (unsigned d : f.subfield_degrees())
    if (s == subfield(f, d)) return d;
  return std::nullopt;
}

inline Subspace scaled(const FiniteField& f, const Subspace& s, Elem a) {
  Subspace out = zero(f);
  for (Elem b : basis(f, s)) out.insert(f.digits(f.mul(a, b)));
  return out;
}

/// First basis product a*b outside c, if any.
inline std::optional<std::pair<Elem, Elem>> product_escape(const FiniteField& f, const Subspace& a, const Subspace& b,
                                                          const Subspace& c) {
  for (Elem x : basis(f, a))
    for (Elem y : basis(f, b))
      if (!contains(f, c, f.mul(x, y))) return std::make_pair(x, y);
  return std::nullopt;
}

inline std::string subfield_name(const FiniteField& f, unsigned d) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) q *= f.characteristic();
  return "F" + std::to_string(q);
}

inline std::string name(const FiniteField& f, const Subspace& s) {
  if (s.rank() == 0) return "0";
  if (auto d = subfield_degree(f, s)) return subfield_name(f, *d);
  std::string out = "<";
  auto b = basis(f, s);
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  return out + ">";
}

inline nlohmann::json to_json(const FiniteField& f, const Subspace& s) {
  if (s.rank() == 0) return "0";
  if (auto d = subfield_degree(f, s)) return subfield_name(f, *d);
  return basis(f, s);
}

/// "0", a subfield name such as "F2", or a list of basis element indices.
inline Subspace from_json(const FiniteField& f, const nlohmann::json& j) {
  if (j.is_string()) {
    std::string t = j.get<std::string>();
    if (t == "0") return zero(f);
    auto sub = FiniteField::parse(t);
    if (sub->characteristic() != f.characteristic() || f.degree() % sub->degree())
      throw ParseError("'" + t + "' is not a subfield of " + f.name());
    return subfield(f, sub->degree());
  }
  if (j.is_array()) {
    std::vector<Elem> gens;
    for (const auto& x : j) {
      if (!x.is_number_unsigned()) throw ParseError("slot basis entries must be element indices");
      gens.push_back(x.get<Elem>());
    }
    return span(f, gens);
  }
  throw ParseError("slot must be \"0\", a subfield name, or a basis list");
}

}  // namespace slot

/// R = {f in F_q[[X]] : coeff_e(f) in C_e for e < c}; every e >= c is unconstrained.
class SeriesRingSpec {
 public:
  SeriesRingSpec(FieldPtr f, std::vector<Subspace> slots) : f_(std::move(f)), slots_(std::move(slots)) {
    for (auto& s : slots_)
      if (s.dim() != f_->degree()) throw InvalidParameter("slot dimension does not match the field");
    Subspace all = slot::full(*f_);
    while (!slots_.empty() && slots_.back() == all) slots_.pop_back();
  }

  static SeriesRingSpec power_series(FieldPtr f) { return SeriesRingSpec(std::move(f), {}); }

  /// k + k_1 X + ... shorthand: one subfield degree per constrained exponent, 0 meaning the zero slot.
  static SeriesRingSpec from_degrees(FieldPtr f, const std::vector<unsigned>& degs) {
    std::vector<Subspace> s;
    for (unsigned d : degs) s.push_back(d ? slot::subfield(*f, d) : slot::zero(*f));
    return SeriesRingSpec(std::move(f), std::move(s));
  }

  const FieldPtr& field() const { return f_; }
  unsigned conductor() const { return static_cast<unsigned>(slots_.size()); }
  const std::vector<Subspace>& slots() const { return slots_; }
  Subspace slot(unsigned e) const { return e < slots_.size() ? slots_[e] : slot::full(*f_); }
  bool is_valuation_type() const { return slots_.empty(); }

  std::string to_string() const {
    if (slots_.empty()) return f_->name() + "[[X]]";
    std::string out;
    for (unsigned e = 0; e < slots_.size(); ++e) {
      if (slots_[e].rank() == 0) continue;
      if (!out.empty()) out += " + ";
      out += slot::name(*f_, slots_[e]) + (e == 0 ? "" : e == 1 ? " X" : " X^" + std::to_string(e));
    }
    std::string tail = slots_.size() == 1 ? "X" : "X^" + std::to_string(slots_.size());
    return out + " + " + tail + " " + f_->name() + "[[X]]";
  }

  nlohmann::json to_json() const {
    nlohmann::json s = nlohmann::json::object();
    for (unsigned e = 0; e < slots_.size(); ++e) s[std::to_string(e)] = slot::to_json(*f_, slots_[e]);
    return {{"field", f_->name()}, {"conductor", conductor()}, {"slots", s}};
  }

  /// Unlisted slots below the conductor are zero. Does not validate closure.
  static SeriesRingSpec from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("conductor"))
      throw ParseError("series ring needs \"field\" and \"conductor\"");
    auto f = FiniteField::parse(j.at("field").get<std::string>());
    return SeriesRingSpec(f, read_slots(*f, j));
  }

  friend bool operator==(const SeriesRingSpec& a, const SeriesRingSpec& b) {
    return *a.f_ == *b.f_ && a.slots_ == b.slots_;
  }

  static std::vector<Subspace> read_slots(const FiniteField& f, const nlohmann::json& j) {
    auto c = j.at("conductor");
    if (!c.is_number_unsigned() || c.get<unsigned>() > 4096) throw ParseError("conductor must be a small nonnegative integer");
    std::vector<Subspace> s(c.get<unsigned>(), slot::zero(f));
    if (j.contains("slots")) {
      if (!j.at("slots").is_object()) throw ParseError("\"slots\" must be an object keyed by exponent");
      for (const auto& [k, v] : j.at("slots").items()) {
        unsigned e = 0;
        try {
          std::size_t used = 0;
          e = static_cast<unsigned>(std::stoul(k, &used));
          if (used != k.size()) throw ParseError("bad slot key '" + k + "'");
        } catch (const std::logic_error&) {
          throw ParseError("bad slot key '" + k + "'");
        }
        if (e >= s.size()) throw ParseError("slot " + k + " is at or beyond the conductor");
        s[e] = slot::from_json(f, v);
      }
    }
    return s;
  }

 private:
  FieldPtr f_;
  std::vector<Subspace> slots_;
};

/// I = {f in R : coeff_e(f) in D_e for e < c_I}.
class SeriesIdealSpec {
 public:
  SeriesIdealSpec(SeriesRingSpec ring, std::vector<Subspace> slots) : ring_(std::move(ring)), slots_(std::move(slots)) {
    Subspace all = slot::full(*ring_.field());
    while (!slots_.empty() && slots_.back() == all) slots_.pop_back();
  }

  static SeriesIdealSpec maximal(const SeriesRingSpec& r) {
    std::vector<Subspace> s = r.slots();
    if (s.empty()) s.push_back(slot::zero(*r.field()));
    s[0] = slot::zero(*r.field());
    return SeriesIdealSpec(r, std::move(s));
  }

  /// X^m F_q[[X]].
  static SeriesIdealSpec tail(const SeriesRingSpec& r, unsigned m) {
    return SeriesIdealSpec(r, std::vector<Subspace>(m, slot::zero(*r.field())));
  }

  const SeriesRingSpec& ring() const { return ring_; }
  const FieldPtr& field() const { return ring_.field(); }
  unsigned conductor() const { return static_cast<unsigned>(slots_.size()); }
  const std::vector<Subspace>& slots() const { return slots_; }
  Subspace slot(unsigned e) const { return e < slots_.size() ? slots_[e] : slot::full(*ring_.field()); }
  bool is_maximal() const { return *this == maximal(ring_); }

  std::string to_string() const {
    const auto& f = *ring_.field();
    std::string out;
    for (unsigned e = 0; e < slots_.size(); ++e) {
      if (slots_[e].rank() == 0) continue;
      if (!out.empty()) out += " + ";
      out += slot::name(f, slots_[e]) + (e == 0 ? "" : e == 1 ? " X" : " X^" + std::to_string(e));
    }
    std::string tail = slots_.size() == 0 ? "" : slots_.size() == 1 ? "X " : "X^" + std::to_string(slots_.size()) + " ";
    return (out.empty() ? "" : out + " + ") + tail + f.name() + "[[X]]";
  }

  nlohmann::json to_json() const {
    nlohmann::json s = nlohmann::json::object();
    for (unsigned e = 0; e < slots_.size(); ++e)
      if (slots_[e].rank()) s[std::to_string(e)] = slot::to_json(*field(), slots_[e]);
    return {{"ring", ring_.to_json()}, {"conductor", conductor()}, {"slots", s}};
  }

  /// {"ring": {...}, "conductor": c, "slots": {...}} or {"ring": {...}, "ideal": "M"}.
  static SeriesIdealSpec from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("ring")) throw ParseError("series ideal needs \"ring\"");
    auto r = SeriesRingSpec::from_json(j.at("ring"));
    if (j.contains("ideal")) {
      if (j.at("ideal") != "M") throw ParseError("only \"M\" is a named series ideal");
      return maximal(r);
    }
    if (!j.contains("conductor")) throw ParseError("series ideal needs \"conductor\" or \"ideal\":\"M\"");
    return SeriesIdealSpec(r, SeriesRingSpec::read_slots(*r.field(), j));
  }

  friend bool operator==(const SeriesIdealSpec& a, const SeriesIdealSpec& b) {
    return a.ring_ == b.ring_ && a.slots_ == b.slots_;
  }

 private:
  SeriesRingSpec ring_;
  std::vector<Subspace> slots_;
};

struct SpecViolation {
  std::string message;
  int e = -1, e2 = -1;
};

/// Empty when every closure condition holds.
inline std::optional<SpecViolation> validate_spec(const SeriesRingSpec& r) {
  const auto& f = *r.field();
  unsigned c = r.conductor();
  if (c == 0) return std::nullopt;
  if (!slot::contains(f, r.slot(0), 1)) return SpecViolation{"C_0 does not contain 1", 0, -1};
  for (unsigned e = 0; e < c; ++e)
    for (unsigned e2 = e; e + e2 < c; ++e2)
      if (auto bad = slot::product_escape(f, r.slot(e), r.slot(e2), r.slot(e + e2)))
        return SpecViolation{"C_" + std::to_string(e) + " * C_" + std::to_string(e2) + " not in C_" +
                                 std::to_string(e + e2) + " (" + f.format(bad->first) + " * " + f.format(bad->second) + ")",
                             static_cast<int>(e), static_cast<int>(e2)};
  return std::nullopt;
}

inline std::optional<SpecViolation> validate_spec(const SeriesIdealSpec& i) {
  if (auto v = validate_spec(i.ring())) return v;
  const auto& f = *i.field();
  unsigned c = i.conductor();
  if (c == 0 || !(i.slot(0).rank() == 0)) return SpecViolation{"ideal is not proper (D_0 must be 0)", 0, -1};
  for (unsigned e = 0; e < c; ++e)
    if (!i.slot(e).subset_of(i.ring().slot(e)))
      return SpecViolation{"D_" + std::to_string(e) + " not in C_" + std::to_string(e), static_cast<int>(e), -1};
  for (unsigned e = 0; e < c; ++e)
    for (unsigned e2 = 0; e + e2 < c; ++e2)
      if (auto bad = slot::product_escape(f, i.ring().slot(e), i.slot(e2), i.slot(e + e2)))
        return SpecViolation{"C_" + std::to_string(e) + " * D_" + std::to_string(e2) + " not in D_" +
                                 std::to_string(e + e2) + " (" + f.format(bad->first) + " * " + f.format(bad->second) + ")",
                             static_cast<int>(e), static_cast<int>(e2)};
  return std::nullopt;
}

template <class Spec>
void require_valid(const Spec& s) {
  if (auto v = validate_spec(s)) throw InvalidParameter("invalid series spec: " + v->message);
}

}  // namespace semiprimary
