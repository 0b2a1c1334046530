#pragma once

#include <string>
#include <vector>

#include "bbcell/errors.hpp"
#include "bbcell/rational.hpp"

namespace bbcell {

/// Identifies the coefficient ring of a value: the rational field, or the
/// truncated dual-number ring Q[eps]/(eps^N). Mixed-ring arithmetic is
/// rejected at runtime.
struct CoeffRing {
  enum class Kind { kRational, kDual };
  Kind kind = Kind::kRational;
  int eps_order = 0;  // N, only meaningful for kDual

  static CoeffRing rational() { return {Kind::kRational, 0}; }
  static CoeffRing dual(int n) { return {Kind::kDual, n}; }

  bool is_dual() const { return kind == Kind::kDual; }
  bool operator==(const CoeffRing& o) const {
    return kind == o.kind && eps_order == o.eps_order;
  }
  bool operator!=(const CoeffRing& o) const { return !(*this == o); }

  std::string str() const {
    return is_dual() ? "dual " + std::to_string(eps_order) : "rational";
  }
};

/// Element of Q[eps]/(eps^N). coeff(k) is the coefficient of eps^k.
class DualNumber {
 public:
  static constexpr int kMaxOrder = 16;

  explicit DualNumber(int order) : c_(check_order(order)) {}
  DualNumber(int order, Rational constant) : c_(check_order(order)) {
    c_[0] = std::move(constant);
  }
  static DualNumber eps(int order, int power = 1) {
    DualNumber x(order);
    if (power < order) x.c_[static_cast<size_t>(power)] = Rational(1);
    return x;
  }

  int order() const { return static_cast<int>(c_.size()); }
  const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  void set_coeff(int k, Rational v) { c_[static_cast<size_t>(k)] = std::move(v); }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_unit() const { return !c_[0].is_zero(); }

  /// Smallest k with coeff(k) != 0; returns order() for zero.
  int valuation() const {
    for (int k = 0; k < order(); ++k)
      if (!c_[static_cast<size_t>(k)].is_zero()) return k;
    return order();
  }

  DualNumber operator-() const {
    DualNumber r(order());
    for (int k = 0; k < order(); ++k) r.c_[static_cast<size_t>(k)] = -coeff(k);
    return r;
  }
  DualNumber operator+(const DualNumber& o) const {
    check_same(o);
    DualNumber r(order());
    for (int k = 0; k < order(); ++k)
      r.c_[static_cast<size_t>(k)] = coeff(k) + o.coeff(k);
    return r;
  }
  DualNumber operator-(const DualNumber& o) const { return *this + (-o); }
  DualNumber operator*(const DualNumber& o) const {
    check_same(o);
    DualNumber r(order());
    for (int i = 0; i < order(); ++i) {
      if (coeff(i).is_zero()) continue;
      for (int j = 0; i + j < order(); ++j) {
        if (o.coeff(j).is_zero()) continue;
        r.c_[static_cast<size_t>(i + j)] += coeff(i) * o.coeff(j);
      }
    }
    return r;
  }
  DualNumber& operator+=(const DualNumber& o) { return *this = *this + o; }
  DualNumber& operator-=(const DualNumber& o) { return *this = *this - o; }
  DualNumber& operator*=(const DualNumber& o) { return *this = *this * o; }

  /// Inverse of a unit: b0(1+z) with z nilpotent inverts via the finite
  /// geometric series.
  DualNumber inverse() const {
    if (!is_unit()) throw DivisionByNonUnit("dual number with zero constant term");
    const Rational inv0 = c_[0].inverse();
    DualNumber z(order());  // 1 - inv0 * this, nilpotent
    for (int k = 1; k < order(); ++k)
      z.c_[static_cast<size_t>(k)] = -(inv0 * coeff(k));
    DualNumber acc(order(), Rational(1));
    DualNumber pw(order(), Rational(1));
    for (int k = 1; k < order(); ++k) {
      pw = pw * z;
      acc += pw;
    }
    for (int k = 0; k < order(); ++k)
      acc.c_[static_cast<size_t>(k)] *= inv0;
    return acc;
  }
  DualNumber operator/(const DualNumber& o) const { return *this * o.inverse(); }

  bool operator==(const DualNumber& o) const {
    check_same(o);
    return c_ == o.c_;
  }
  bool operator!=(const DualNumber& o) const { return !(*this == o); }

  std::string str() const {
    std::string s;
    for (int k = 0; k < order(); ++k) {
      const Rational& a = coeff(k);
      if (a.is_zero()) continue;
      Rational mag = a.sign() < 0 ? -a : a;
      if (s.empty()) {
        if (a.sign() < 0) s += "-";
      } else {
        s += a.sign() < 0 ? " - " : " + ";
      }
      std::string body;
      if (k == 0) {
        body = mag.str();
      } else {
        std::string e = k == 1 ? "eps" : "eps^" + std::to_string(k);
        body = (mag == Rational(1)) ? e : mag.str() + "*" + e;
      }
      s += body;
    }
    return s.empty() ? "0" : s;
  }

 private:
  static std::vector<Rational> check_order(int order) {
    if (order < 1 || order > kMaxOrder)
      throw Error("dual-number order must be in [1, 16]");
    return std::vector<Rational>(static_cast<size_t>(order));
  }
  void check_same(const DualNumber& o) const {
    if (order() != o.order())
      throw MixedRings("dual numbers of different truncation order");
  }

  std::vector<Rational> c_;
};

/// Descriptor of an ideal of coefficients. Over a field: zero or unit.
/// Over Q[eps]/(eps^N) (local principal): zero, unit, or <eps^k>.
struct CoeffIdeal {
  int eps_power = -1;  // -1: zero ideal; 0: unit ideal; k>0: <eps^k>

  static CoeffIdeal zero() { return {-1}; }
  static CoeffIdeal unit() { return {0}; }
  static CoeffIdeal power(int k) { return {k}; }

  bool is_zero() const { return eps_power < 0; }
  bool is_unit() const { return eps_power == 0; }
  bool operator==(const CoeffIdeal& o) const { return eps_power == o.eps_power; }
  bool operator!=(const CoeffIdeal& o) const { return !(*this == o); }

  /// True when this ideal contains o.
  bool contains(const CoeffIdeal& o) const {
    if (o.is_zero()) return true;
    if (is_zero()) return false;
    return eps_power <= o.eps_power;
  }

  std::string str() const {
    if (is_zero()) return "0";
    if (is_unit()) return "<1>";
    return eps_power == 1 ? "<eps>" : "<eps^" + std::to_string(eps_power) + ">";
  }
};

inline CoeffIdeal coeff_ideal(const std::vector<Rational>& gens) {
  for (const auto& g : gens)
    if (!g.is_zero()) return CoeffIdeal::unit();
  return CoeffIdeal::zero();
}

inline CoeffIdeal coeff_ideal(const std::vector<DualNumber>& gens) {
  int best = -1;
  for (const auto& g : gens) {
    if (g.order() != gens.front().order())
      throw MixedRings("coeff_ideal over mixed dual rings");
    int v = g.valuation();
    if (v == g.order()) continue;  // zero generator
    if (best < 0 || v < best) best = v;
  }
  return best < 0 ? CoeffIdeal::zero() : CoeffIdeal::power(best);
}

template <class R>
struct coeff_traits;

template <>
struct coeff_traits<Rational> {
  static CoeffRing ring_of(const Rational&) { return CoeffRing::rational(); }
  static Rational zero(const CoeffRing&) { return Rational(0); }
  static Rational one(const CoeffRing&) { return Rational(1); }
};

template <>
struct coeff_traits<DualNumber> {
  static CoeffRing ring_of(const DualNumber& x) {
    return CoeffRing::dual(x.order());
  }
  static DualNumber zero(const CoeffRing& r) { return DualNumber(r.eps_order); }
  static DualNumber one(const CoeffRing& r) {
    return DualNumber(r.eps_order, Rational(1));
  }
};

}  // namespace bbcell
