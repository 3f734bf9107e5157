#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semiprimary/classify/classify.hpp"
#include "semiprimary/errors.hpp"
#include "semiprimary/valuation/rational.hpp"

namespace semiprimary {

/// Value groups handled: Z, Q and the four lexicographic sums of two of them.
class OrderedGroup {
 public:
  enum class Tag { Z, Q, ZZ, QQ, ZQ, QZ };

  explicit OrderedGroup(Tag t) : tag_(t) {}

  static std::vector<OrderedGroup> catalog() {
    return {OrderedGroup(Tag::Z), OrderedGroup(Tag::Q), OrderedGroup(Tag::ZZ),
            OrderedGroup(Tag::QQ), OrderedGroup(Tag::ZQ), OrderedGroup(Tag::QZ)};
  }

  /// Accepts "Z", "Q", "Z+Q", "Z⊕Q", "ZxQ".
  static OrderedGroup parse(const std::string& s) {
    std::string t;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.compare(i, 3, "⊕") == 0) {
        t += '+';
        i += 2;
      } else if (s[i] == 'x' || s[i] == '+') {
        t += '+';
      } else if (s[i] != ' ') {
        t += s[i];
      }
    }
    for (const auto& g : catalog())
      if (g.name() == t) return g;
    throw InvalidParameter("unsupported value group '" + s + "'; expected one of Z, Q, Z+Z, Q+Q, Z+Q, Q+Z");
  }

  Tag tag() const { return tag_; }
  unsigned rank() const { return tag_ == Tag::Z || tag_ == Tag::Q ? 1 : 2; }
  /// Component i (0 or 1) is Z rather than Q.
  bool discrete(unsigned i) const {
    switch (tag_) {
      case Tag::Z: return true;
      case Tag::Q: return false;
      case Tag::ZZ: return true;
      case Tag::QQ: return false;
      case Tag::ZQ: return i == 0;
      case Tag::QZ: return i == 1;
    }
    return false;
  }

  std::string name() const {
    switch (tag_) {
      case Tag::Z: return "Z";
      case Tag::Q: return "Q";
      case Tag::ZZ: return "Z+Z";
      case Tag::QQ: return "Q+Q";
      case Tag::ZQ: return "Z+Q";
      case Tag::QZ: return "Q+Z";
    }
    return "";
  }

  friend bool operator==(const OrderedGroup&, const OrderedGroup&) = default;

 private:
  Tag tag_;
};

/// Coordinate of a cut point: a rational or one of the two infinite sentinels.
struct CutCoord {
  enum class Kind { NegInf, Finite, PosInf } kind = Kind::Finite;
  Rational value;

  static CutCoord fin(Rational r) { return {Kind::Finite, r}; }
  static CutCoord neg_inf() { return {Kind::NegInf, {}}; }
  static CutCoord pos_inf() { return {Kind::PosInf, {}}; }
  bool finite() const { return kind == Kind::Finite; }

  friend bool operator==(const CutCoord& a, const CutCoord& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const CutCoord& a, const CutCoord& b) {
    if (a.kind != b.kind) return a.kind <=> b.kind;
    if (a.kind != Kind::Finite) return std::strong_ordering::equal;
    return a.value <=> b.value;
  }

  std::string to_string() const {
    if (kind == Kind::NegInf) return "-inf";
    if (kind == Kind::PosInf) return "inf";
    return value.to_string();
  }
  static CutCoord parse(const std::string& s) {
    if (s == "-inf") return neg_inf();
    if (s == "inf" || s == "+inf") return pos_inf();
    return fin(Rational::parse(s));
  }
};

/// Element of a catalog group; b is ignored in rank 1.
struct GroupElem {
  Rational a, b;
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

inline GroupElem operator+(const GroupElem& x, const GroupElem& y) { return {x.a + y.a, x.b + y.b}; }
inline GroupElem operator-(const GroupElem& x, const GroupElem& y) { return {x.a - y.a, x.b - y.b}; }
inline GroupElem scale(std::int64_t k, const GroupElem& x) { return {Rational(k) * x.a, Rational(k) * x.b}; }

/// Ideal of a valuation domain with value group G: {x : v(x) > cut} or {v(x) >= cut},
/// or the zero / unit ideal. Cut points live in the divisible hull with infinite
/// sentinels in the second coordinate. Constructors canonicalize, so equal sets give
/// equal descriptors.
class ValIdealDesc {
 public:
  enum class Kind { Zero, Unit, Cut };

  static ValIdealDesc zero(OrderedGroup g) { return ValIdealDesc(g, Kind::Zero); }
  static ValIdealDesc unit(OrderedGroup g) { return ValIdealDesc(g, Kind::Unit); }

  static ValIdealDesc cut(OrderedGroup g, Rational x, CutCoord y, bool strict) {
    ValIdealDesc d(g, Kind::Cut);
    d.x_ = x;
    d.y_ = g.rank() == 1 ? CutCoord::fin(0) : y;
    d.strict_ = strict;
    d.canonicalize();
    return d;
  }
  static ValIdealDesc cut(OrderedGroup g, Rational x, bool strict) { return cut(g, x, CutCoord::fin(0), strict); }

  static ValIdealDesc maximal(OrderedGroup g) { return cut(g, 0, CutCoord::fin(0), true); }

  /// The height-one prime {v(x) : first coordinate > 0}; rank 2 only.
  static ValIdealDesc middle_prime(OrderedGroup g) {
    if (g.rank() != 2) throw InvalidParameter("group " + g.name() + " has no middle prime");
    return cut(g, 0, CutCoord::pos_inf(), true);
  }

  /// "Z+Q cut=1/2,0 strict", "Q cut=1", "Z+Z zero", "Q+Q unit", "Q+Z P", "Z M".
  static ValIdealDesc parse(const std::string& text) {
    std::istringstream in(text);
    std::string gname, tok;
    in >> gname;
    if (gname.empty()) throw ParseError("empty ideal descriptor");
    OrderedGroup g = OrderedGroup::parse(gname);
    std::optional<ValIdealDesc> out;
    bool strict = false;
    std::string cutText;
    while (in >> tok) {
      if (tok == "strict") strict = true;
      else if (tok == "nonstrict") strict = false;
      else if (tok == "zero") out = zero(g);
      else if (tok == "unit") out = unit(g);
      else if (tok == "M") out = maximal(g);
      else if (tok == "P") out = middle_prime(g);
      else if (tok.rfind("cut=", 0) == 0) cutText = tok.substr(4);
      else throw ParseError("unexpected token '" + tok + "' in '" + text + "'");
    }
    if (out) return *out;
    if (cutText.empty()) throw ParseError("descriptor '" + text + "' has no cut");
    auto comma = cutText.find(',');
    if (g.rank() == 1) {
      if (comma != std::string::npos) throw ParseError("rank-one cut takes one coordinate");
      return cut(g, Rational::parse(cutText), strict);
    }
    if (comma == std::string::npos) throw ParseError("rank-two cut needs two coordinates");
    return cut(g, Rational::parse(cutText.substr(0, comma)), CutCoord::parse(cutText.substr(comma + 1)), strict);
  }

  const OrderedGroup& group() const { return g_; }
  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_unit() const { return kind_ == Kind::Unit; }
  bool is_proper() const { return kind_ != Kind::Unit; }
  const Rational& x() const { return x_; }
  const CutCoord& y() const { return y_; }
  bool strict() const { return strict_; }

  /// v(x) = e lies in the ideal (for nonzero x).
  bool contains(const GroupElem& e) const {
    if (kind_ == Kind::Zero) return false;
    bool nonneg = g_.rank() == 1 ? e.a >= 0 : (e.a > 0 || (e.a == 0 && e.b >= 0));
    if (!nonneg) return false;
    if (kind_ == Kind::Unit) return true;
    return raw_above(g_, x_, y_, strict_, e);
  }

  std::string to_string() const {
    if (kind_ == Kind::Zero) return g_.name() + " zero";
    if (kind_ == Kind::Unit) return g_.name() + " unit";
    std::string s = g_.name() + " cut=" + x_.to_string();
    if (g_.rank() == 2) s += "," + y_.to_string();
    return strict_ ? s + " strict" : s;
  }

  friend bool operator==(const ValIdealDesc& a, const ValIdealDesc& b) {
    if (!(a.g_ == b.g_) || a.kind_ != b.kind_) return false;
    if (a.kind_ != Kind::Cut) return true;
    return a.x_ == b.x_ && a.y_ == b.y_ && a.strict_ == b.strict_;
  }

  /// Membership semantics of a cut before canonicalization; used by window oracles.
  static bool raw_above(const OrderedGroup& g, const Rational& x, const CutCoord& y, bool strict, const GroupElem& e) {
    std::strong_ordering c = e.a <=> x;
    if (g.rank() == 2 && c == std::strong_ordering::equal) c = CutCoord::fin(e.b) <=> y;
    return c == std::strong_ordering::greater || (c == std::strong_ordering::equal && !strict);
  }

 private:
  ValIdealDesc(OrderedGroup g, Kind k) : g_(g), kind_(k) {}

  void canonicalize() {
    if (g_.rank() == 1) {
      if (g_.discrete(0)) {
        x_ = strict_ ? Rational(x_.floor() + 1) : Rational(x_.ceil());
        strict_ = false;
      }
    } else {
      if (y_.kind == CutCoord::Kind::NegInf) strict_ = false;
      if (y_.kind == CutCoord::Kind::PosInf) strict_ = true;
      if (g_.discrete(1) && y_.finite()) {
        y_.value = strict_ ? Rational(y_.value.floor() + 1) : Rational(y_.value.ceil());
        strict_ = false;
      }
      if (g_.discrete(0)) {
        if (!x_.is_integer()) {
          x_ = Rational(x_.ceil());
          y_ = CutCoord::neg_inf();
          strict_ = false;
        } else if (y_.kind == CutCoord::Kind::PosInf) {
          x_ = x_ + 1;
          y_ = CutCoord::neg_inf();
          strict_ = false;
        }
      }
    }
    if (raw_above(g_, x_, y_, strict_, GroupElem{0, 0})) *this = unit(g_);
  }

  OrderedGroup g_;
  Kind kind_;
  Rational x_;
  CutCoord y_ = CutCoord::fin(0);
  bool strict_ = false;
};

/// a is inside b as sets.
inline bool vd_subset(const ValIdealDesc& a, const ValIdealDesc& b) {
  if (!(a.group() == b.group())) throw InvalidParameter("descriptors over different groups");
  if (a.is_zero() || b.is_unit()) return true;
  if (b.is_zero() || a.is_unit()) return false;
  auto c = a.x() <=> b.x();
  if (c == std::strong_ordering::equal && a.group().rank() == 2) c = a.y() <=> b.y();
  if (c == std::strong_ordering::greater) return true;
  if (c == std::strong_ordering::less) return false;
  return a.strict() || !b.strict();
}

/// n-th ideal power: the cut scales by n.
inline ValIdealDesc vd_power(const ValIdealDesc& d, unsigned n) {
  if (n == 0 || d.is_unit()) return ValIdealDesc::unit(d.group());
  if (d.is_zero()) return d;
  CutCoord y = d.y();
  if (y.finite()) y.value = Rational(n) * y.value;
  return ValIdealDesc::cut(d.group(), Rational(n) * d.x(), y, d.strict());
}

/// Radical. In rank 2 it is M when the ideal meets the convex subgroup 0+B, the middle prime otherwise.
inline ValIdealDesc vd_sqrt(const ValIdealDesc& d) {
  if (d.is_unit()) throw InvalidParameter("radical of the unit ideal requested");
  if (d.is_zero()) return d;
  const auto& g = d.group();
  if (g.rank() == 1) return ValIdealDesc::maximal(g);
  if (d.x() == 0 && d.y().finite()) return ValIdealDesc::maximal(g);
  return ValIdealDesc::middle_prime(g);
}

inline bool vd_is_n_semiprimary(const ValIdealDesc& d, unsigned n) {
  require_positive(n);
  if (!d.is_proper()) throw InvalidParameter("ideal is not proper");
  if (d.is_zero()) return true;
  return vd_subset(vd_power(vd_sqrt(d), n), d);
}

inline bool vd_is_prime(const ValIdealDesc& d) { return d.is_proper() && vd_sqrt(d) == d; }

/// Least n with the ideal n-semiprimary, or infinity.
inline Extended vd_delta(const ValIdealDesc& d) {
  if (!d.is_proper()) throw InvalidParameter("ideal is not proper");
  if (d.is_zero()) return 1;
  ValIdealDesc p = vd_sqrt(d);
  if (vd_power(p, 2) == p) return vd_subset(p, d) ? Extended(1) : std::nullopt;
  // P^n shrinks strictly; the cut of d is finite so some n reaches it
  for (unsigned n = 1;; ++n) {
    if (vd_subset(vd_power(p, n), d)) return n;
    if (n > 1000000) throw BudgetExceeded("delta search exceeded 10^6");
  }
}

// ---- window oracles ----
// Brute force over lattice points of [-10,10]^rank. Coordinates are scaled integers
// (scale 1 on Z components, `den` on Q components) so the loops stay cheap.

namespace detail {

struct ScaledCut {
  const ValIdealDesc* d;
  std::int64_t sa, sb;  // scale per coordinate

  bool nonneg(std::int64_t a, std::int64_t b) const { return d->group().rank() == 1 ? a >= 0 : (a > 0 || (a == 0 && b >= 0)); }

  // sign of (v / s) - r
  static int cmp(std::int64_t v, std::int64_t s, const Rational& r) {
    __int128 l = static_cast<__int128>(v) * r.den(), rr = static_cast<__int128>(r.num()) * s;
    return l < rr ? -1 : (l > rr ? 1 : 0);
  }

  bool contains(std::int64_t a, std::int64_t b) const {
    if (d->is_zero() || !nonneg(a, b)) return false;
    if (d->is_unit()) return true;
    int c = cmp(a, sa, d->x());
    if (c == 0 && d->group().rank() == 2) {
      const CutCoord& y = d->y();
      c = y.kind == CutCoord::Kind::NegInf ? 1 : y.kind == CutCoord::Kind::PosInf ? -1 : cmp(b, sb, y.value);
    }
    return c > 0 || (c == 0 && !d->strict());
  }
};

inline std::vector<std::int64_t> window_coords(bool discrete, std::int64_t r, std::int64_t scale, std::int64_t step) {
  std::vector<std::int64_t> out;
  std::int64_t s = discrete ? 1 : scale;
  std::int64_t st = discrete ? 1 : step;
  for (std::int64_t v = -r * s; v <= r * s; v += st) out.push_back(v);
  return out;
}

}  // namespace detail

/// Points of G inside [-r, r]^rank, step 1 on Z components and 1/den on Q components.
inline std::vector<GroupElem> window_points(const OrderedGroup& g, int r, int den) {
  std::vector<GroupElem> pts;
  auto as = detail::window_coords(g.discrete(0), r, den, 1);
  if (g.rank() == 1) {
    for (auto a : as) pts.push_back({Rational(a, g.discrete(0) ? 1 : den), 0});
    return pts;
  }
  auto bs = detail::window_coords(g.discrete(1), r, den, 1);
  for (auto a : as)
    for (auto b : bs) pts.push_back({Rational(a, g.discrete(0) ? 1 : den), Rational(b, g.discrete(1) ? 1 : den)});
  return pts;
}

inline bool window_nonneg(const OrderedGroup& g, const GroupElem& e) {
  return g.rank() == 1 ? e.a >= 0 : (e.a > 0 || (e.a == 0 && e.b >= 0));
}

struct WindowReport {
  bool agree = true;
  std::string first_mismatch;
};

/// Compares vd_power(d, n) and vd_sqrt(d) with brute force on [-10,10]^rank: grid step 1/2 on
/// Q components, summands on the finer grid 1/(2n). A point h lies in S^n exactly when some
/// g in S has h - (n-1)g in S (take g the least summand); h lies in the radical when kh is in S
/// for some k <= 64, enough for cuts inside the window.
inline WindowReport window_check(const ValIdealDesc& d, unsigned n) {
  WindowReport rep;
  const auto& g = d.group();
  const std::int64_t D = 2 * static_cast<std::int64_t>(n);
  const std::int64_t sa = g.discrete(0) ? 1 : D, sb = g.discrete(1) ? 1 : D;
  detail::ScaledCut s{&d, sa, sb};
  ValIdealDesc pw = vd_power(d, n);
  detail::ScaledCut pws{&pw, sa, sb};
  std::optional<ValIdealDesc> rad;
  if (d.is_proper() && !d.is_zero()) rad = vd_sqrt(d);
  const bool two = g.rank() == 2;
  // h on the 1/2 grid, expressed in scaled units
  auto ha = detail::window_coords(g.discrete(0), 10, D, n);
  auto hb = two ? detail::window_coords(g.discrete(1), 10, D, n) : std::vector<std::int64_t>{0};
  auto ga = detail::window_coords(g.discrete(0), 10, D, 1);
  auto gb = two ? detail::window_coords(g.discrete(1), 10, D, 1) : std::vector<std::int64_t>{0};
  std::vector<std::pair<std::int64_t, std::int64_t>> parts;
  for (auto a : ga)
    for (auto b : gb)
      if (s.contains(a, b)) parts.emplace_back(a, b);
  auto fail = [&](const std::string& what, std::int64_t a, std::int64_t b) {
    if (rep.agree)
      rep.first_mismatch = what + " at (" + Rational(a, sa).to_string() + "," + Rational(b, sb).to_string() + ") for " + d.to_string();
    rep.agree = false;
  };
  const std::int64_t m = static_cast<std::int64_t>(n) - 1;
  for (auto a : ha)
    for (auto b : hb) {
      bool brute = false;
      if (n == 1) brute = s.contains(a, b);
      else
        for (const auto& [pa, pb] : parts)
          if (s.contains(a - m * pa, b - m * pb)) {
            brute = true;
            break;
          }
      if (brute != pws.contains(a, b)) fail("power " + std::to_string(n), a, b);
      if (rad) {
        bool in = false;
        if (s.nonneg(a, b) && (a != 0 || b != 0))
          for (std::int64_t k = 1; k <= 64 && !in; ++k) in = s.contains(k * a, k * b);
        detail::ScaledCut rs{&*rad, sa, sb};
        if (in != rs.contains(a, b)) fail("radical", a, b);
      }
    }
  return rep;
}

/// Subset by brute force on the window (only meaningful when the cuts lie inside it).
inline bool window_subset(const ValIdealDesc& a, const ValIdealDesc& b, int den = 12) {
  const auto& g = a.group();
  detail::ScaledCut sa{&a, g.discrete(0) ? 1 : den, g.discrete(1) ? 1 : den};
  detail::ScaledCut sb{&b, sa.sa, sa.sb};
  auto as = detail::window_coords(g.discrete(0), 10, den, 1);
  auto bs = g.rank() == 2 ? detail::window_coords(g.discrete(1), 10, den, 1) : std::vector<std::int64_t>{0};
  for (auto x : as)
    for (auto y : bs)
      if (sa.contains(x, y) && !sb.contains(x, y)) return false;
  return true;
}

// ---- family table ----

struct FamilyRow {
  std::string family;
  std::size_t samples = 0;
  std::string verdict;         // "yes", "no" or "mixed": some n makes the member n-semiprimary
  std::string powerful_verdict;
  std::string example;
  Extended example_delta;
};

struct ValuationTable {
  OrderedGroup group;
  std::vector<FamilyRow> rows;

  const FamilyRow& row(const std::string& family) const {
    for (const auto& r : rows)
      if (r.family == family) return r;
    throw InvalidParameter("no family '" + family + "' for group " + group.name());
  }

  std::string to_text() const {
    std::string s;
    for (const auto& r : rows)
      s += group.name() + " | " + r.family + " | " + r.verdict + " | e.g. " + r.example + " delta " +
           format_extended(r.example_delta) + "\n";
    return s;
  }
};

/// Sample cut descriptors covering every ideal family of the group.
inline std::vector<ValIdealDesc> sample_ideals(const OrderedGroup& g) {
  std::vector<ValIdealDesc> out{ValIdealDesc::zero(g)};
  std::vector<Rational> xs{0, Rational(1, 3), Rational(1, 2), 1, Rational(3, 2), 2, 3, Rational(7, 2), 5};
  std::vector<CutCoord> ys{CutCoord::neg_inf(), CutCoord::fin(-3), CutCoord::fin(Rational(-1, 2)), CutCoord::fin(0),
                           CutCoord::fin(Rational(1, 3)), CutCoord::fin(1), CutCoord::fin(2), CutCoord::fin(Rational(5, 2)),
                           CutCoord::fin(4), CutCoord::pos_inf()};
  auto push = [&](const ValIdealDesc& d) {
    if (!d.is_proper()) return;
    for (const auto& o : out)
      if (o == d) return;
    out.push_back(d);
  };
  for (const auto& x : xs)
    for (bool strict : {false, true}) {
      if (g.rank() == 1) push(ValIdealDesc::cut(g, x, strict));
      else
        for (const auto& y : ys) push(ValIdealDesc::cut(g, x, y, strict));
    }
  return out;
}

inline std::string family_of(const ValIdealDesc& d) {
  const auto& g = d.group();
  if (d.is_zero()) return "zero";
  ValIdealDesc m = ValIdealDesc::maximal(g);
  if (d == m) return "M";
  if (g.rank() == 1) return "other";
  ValIdealDesc p = ValIdealDesc::middle_prime(g);
  if (d == p) return "P";
  return vd_subset(d, p) ? "below P" : "between P and M";
}

inline std::vector<std::string> family_names(const OrderedGroup& g) {
  if (g.rank() == 1) return {"zero", "other", "M"};
  return {"zero", "below P", "P", "between P and M", "M"};
}

/// For each ideal family, whether some n makes its members n-semiprimary. In valuation
/// domains the n-powerful semiprimary verdict coincides and is reported alongside.
inline ValuationTable vd_example_table(const OrderedGroup& g) {
  ValuationTable t{g, {}};
  auto samples = sample_ideals(g);
  for (const auto& fam : family_names(g)) {
    FamilyRow row;
    row.family = fam;
    std::size_t yes = 0;
    for (const auto& d : samples) {
      if (family_of(d) != fam) continue;
      Extended n = vd_delta(d);
      if (row.samples == 0 || (!row.example_delta && n)) {
        row.example = d.to_string();
        row.example_delta = n;
      }
      ++row.samples;
      if (n) ++yes;
    }
    row.verdict = yes == row.samples ? "yes" : (yes == 0 ? "no" : "mixed");
    row.powerful_verdict = row.verdict;
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace semiprimary
