#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bbcell/dual.hpp"
#include "bbcell/errors.hpp"
#include "bbcell/exponent.hpp"

namespace bbcell {

/// Multivariate polynomial over an exact coefficient ring. Terms are held
/// in descending lexicographic order of exponents with no zero coefficients,
/// so equality is structural and printing is canonical.
template <class R>
class Polynomial {
 public:
  using Term = std::pair<Exponent, R>;

  Polynomial(int dim, CoeffRing ring) : dim_(dim), ring_(ring) {}

  static Polynomial zero(int dim, CoeffRing ring) { return Polynomial(dim, ring); }

  static Polynomial constant(int dim, CoeffRing ring, R value) {
    return monomial(dim, ring, zero_exponent(dim), std::move(value));
  }

  static Polynomial monomial(int dim, CoeffRing ring, Exponent e, R coeff) {
    Polynomial p(dim, ring);
    if (static_cast<int>(e.size()) != dim)
      throw DimensionMismatch("monomial exponent has wrong dimension");
    if (coeff_traits<R>::ring_of(coeff) != ring)
      throw MixedRings("coefficient from a different ring");
    if (!coeff.is_zero()) p.terms_.emplace_back(std::move(e), std::move(coeff));
    return p;
  }

  static Polynomial variable(int dim, CoeffRing ring, int var) {
    return monomial(dim, ring, unit_exponent(dim, var), coeff_traits<R>::one(ring));
  }

  static Polynomial from_terms(int dim, CoeffRing ring, std::vector<Term> terms) {
    Polynomial p(dim, ring);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  int dim() const { return dim_; }
  const CoeffRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_monomial() const { return terms_.size() == 1; }

  R coeff_at(const Exponent& e) const {
    for (const auto& [m, c] : terms_)
      if (m == e) return c;
    return coeff_traits<R>::zero(ring_);
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, m[static_cast<size_t>(var)]);
    return d;
  }

  int total_deg() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  Polynomial operator-() const {
    Polynomial r(dim_, ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(dim_, ring_);
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && lex_compare(terms_[i].first, o.terms_[j].first) > 0)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() ||
                 lex_compare(terms_[i].first, o.terms_[j].first) < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        R c = terms_[i].second + o.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    std::map<Exponent, R, LexDesc> acc;
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Exponent m = ma + mb;
        R c = ca * cb;
        auto it = acc.find(m);
        if (it == acc.end()) {
          if (!c.is_zero()) acc.emplace(std::move(m), std::move(c));
        } else {
          it->second += c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
    Polynomial r(dim_, ring_);
    r.terms_.assign(acc.begin(), acc.end());
    return r;
  }

  Polynomial scaled(const R& c) const {
    Polynomial r(dim_, ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) {
      R v = a * c;
      if (!v.is_zero()) r.terms_.emplace_back(m, std::move(v));
    }
    return r;
  }

  /// this * c * x^e in one pass.
  Polynomial times_term(const Exponent& e, const R& c) const {
    Polynomial r(dim_, ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) {
      R v = a * c;
      if (!v.is_zero()) r.terms_.emplace_back(m + e, std::move(v));
    }
    return r;
  }

  /// Sets variable var to zero: drops every term with a positive exponent
  /// there. Fibers over 0 of one-parameter families are taken this way.
  Polynomial substitute_zero(int var) const {
    Polynomial r(dim_, ring_);
    for (const auto& [m, c] : terms_)
      if (m[static_cast<size_t>(var)] == 0) r.terms_.emplace_back(m, c);
    return r;
  }

  /// Drops variable var from the exponent vectors; requires that no term
  /// uses it.
  Polynomial drop_variable(int var) const {
    Polynomial r(dim_ - 1, ring_);
    for (const auto& [m, c] : terms_) {
      if (m[static_cast<size_t>(var)] != 0)
        throw Error("drop_variable: variable still occurs");
      Exponent e;
      e.reserve(m.size() - 1);
      for (size_t i = 0; i < m.size(); ++i)
        if (static_cast<int>(i) != var) e.push_back(m[i]);
      r.terms_.emplace_back(std::move(e), c);
    }
    r.normalize();
    return r;
  }

  /// Inserts a fresh variable (exponent 0 everywhere) at position var.
  Polynomial insert_variable(int var) const {
    Polynomial r(dim_ + 1, ring_);
    for (const auto& [m, c] : terms_) {
      Exponent e;
      e.reserve(m.size() + 1);
      for (size_t i = 0; i <= m.size(); ++i) {
        if (static_cast<int>(i) == var) e.push_back(0);
        if (i < m.size()) e.push_back(m[i]);
      }
      r.terms_.emplace_back(std::move(e), c);
    }
    r.normalize();
    return r;
  }

  /// Reorders variables: new variable i is old variable perm[i].
  Polynomial permute_variables(const std::vector<int>& perm) const {
    Polynomial r(dim_, ring_);
    for (const auto& [m, c] : terms_) {
      Exponent e(m.size());
      for (size_t i = 0; i < m.size(); ++i)
        e[i] = m[static_cast<size_t>(perm[i])];
      r.terms_.emplace_back(std::move(e), c);
    }
    r.normalize();
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return dim_ == o.dim_ && ring_ == o.ring_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Structural total order used for canonical sorting of polynomial lists.
  bool before(const Polynomial& o) const {
    size_t k = std::min(terms_.size(), o.terms_.size());
    for (size_t i = 0; i < k; ++i) {
      int c = lex_compare(terms_[i].first, o.terms_[i].first);
      if (c != 0) return c < 0;
    }
    return terms_.size() < o.terms_.size();
  }

 private:
  struct LexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const {
      return lex_compare(a, b) > 0;
    }
  };

  void check_compatible(const Polynomial& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("polynomial dimension mismatch");
    if (ring_ != o.ring_) throw MixedRings("polynomials over different rings");
  }

  void normalize() {
    for (const auto& [m, c] : terms_) {
      if (static_cast<int>(m.size()) != dim_)
        throw DimensionMismatch("term exponent has wrong dimension");
      if (coeff_traits<R>::ring_of(c) != ring_)
        throw MixedRings("term coefficient from a different ring");
    }
    std::map<Exponent, R, LexDesc> acc;
    for (auto& [m, c] : terms_) {
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
      }
    }
    terms_.clear();
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms_.emplace_back(m, std::move(c));
  }

  int dim_;
  CoeffRing ring_;
  std::vector<Term> terms_;
};

using PolyQ = Polynomial<Rational>;
using PolyD = Polynomial<DualNumber>;

/// Result of the torus translation t.f. The polynomial lives in d+1
/// variables with the parameter t at position 0; shift is the minimal power
/// of t that clears negative exponents.
template <class R>
struct TorusTranslate {
  Polynomial<R> poly;
  long long shift;
};

/// t.f = t^shift * sum t^{-xi.e} c_e x^e with all t-exponents nonnegative.
template <class R>
TorusTranslate<R> torus_act(const Polynomial<R>& f, const WeightVector& xi) {
  if (xi.dim() != f.dim())
    throw DimensionMismatch("weight dimension mismatch in torus action");
  long long shift = 0;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    long long w = xi.value(m);
    if (first || w > shift) shift = w;
    first = false;
  }
  if (first) shift = 0;
  std::vector<typename Polynomial<R>::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) {
    long long tdeg = shift - xi.value(m);
    Exponent e;
    e.reserve(m.size() + 1);
    e.push_back(static_cast<int>(tdeg));
    e.insert(e.end(), m.begin(), m.end());
    terms.emplace_back(std::move(e), c);
  }
  return {Polynomial<R>::from_terms(f.dim() + 1, f.ring(), std::move(terms)),
          shift};
}

template <class R>
std::string poly_str(const Polynomial<R>& f,
                     const std::vector<std::string>& var_names);

inline std::vector<std::string> default_var_names(int dim) {
  std::vector<std::string> v;
  for (int i = 1; i <= dim; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

namespace detail {

inline std::string monomial_str(const Exponent& e,
                                const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

// One printed piece: sign, magnitude text, whether magnitude is "1".
struct Piece {
  bool negative;
  std::string body;
};

inline void append_piece(std::string& s, const Piece& p) {
  if (s.empty()) {
    if (p.negative) s += "-";
  } else {
    s += p.negative ? " - " : " + ";
  }
  s += p.body;
}

inline Piece term_piece(const Exponent& e, const Rational& c,
                        const std::vector<std::string>& names) {
  Rational mag = c.sign() < 0 ? -c : c;
  std::string mono = monomial_str(e, names);
  std::string body;
  if (mono.empty())
    body = mag.str();
  else if (mag == Rational(1))
    body = mono;
  else
    body = mag.str() + "*" + mono;
  return {c.sign() < 0, body};
}

}  // namespace detail

template <>
inline std::string poly_str<Rational>(const PolyQ& f,
                                      const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms())
    detail::append_piece(s, detail::term_piece(m, c, names));
  return s;
}

/// Dual polynomials print fully distributed over eps powers, so output can
/// be parsed back with the same grammar.
template <>
inline std::string poly_str<DualNumber>(const PolyD& f,
                                        const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    for (int k = 0; k < c.order(); ++k) {
      const Rational& a = c.coeff(k);
      if (a.is_zero()) continue;
      Rational mag = a.sign() < 0 ? -a : a;
      std::string mono = detail::monomial_str(m, names);
      std::string eps =
          k == 0 ? "" : (k == 1 ? "eps" : "eps^" + std::to_string(k));
      std::string body;
      if (eps.empty() && mono.empty())
        body = mag.str();
      else {
        std::string factors;
        if (!(mag == Rational(1))) factors = mag.str();
        if (!eps.empty()) factors += (factors.empty() ? "" : "*") + eps;
        if (!mono.empty()) factors += (factors.empty() ? "" : "*") + mono;
        body = factors;
      }
      detail::append_piece(s, {a.sign() < 0, body});
    }
  }
  return s;
}

template <class R>
std::string poly_str(const Polynomial<R>& f) {
  return poly_str<R>(f, default_var_names(f.dim()));
}

}  // namespace bbcell
