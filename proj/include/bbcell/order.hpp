#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbcell/errors.hpp"
#include "bbcell/exponent.hpp"
#include "bbcell/polynomial.hpp"

namespace bbcell {

/// Signed refinement of a weight order: a sign per variable and a priority
/// permutation. Ties of the weight form are broken lexicographically on
/// (sign[perm[0]]*e[perm[0]], sign[perm[1]]*e[perm[1]], ...).
struct SignedOrder {
  std::vector<int> sign;  // +1 or -1 per variable, indexed by variable
  std::vector<int> perm;  // perm[k] = variable compared at position k

  static SignedOrder all_plus_identity(int dim) {
    SignedOrder s;
    s.sign.assign(static_cast<size_t>(dim), 1);
    s.perm.resize(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) s.perm[static_cast<size_t>(i)] = i;
    return s;
  }

  int dim() const { return static_cast<int>(sign.size()); }

  bool valid() const {
    if (perm.size() != sign.size()) return false;
    std::vector<bool> hit(perm.size(), false);
    for (int p : perm) {
      if (p < 0 || p >= dim() || hit[static_cast<size_t>(p)]) return false;
      hit[static_cast<size_t>(p)] = true;
    }
    for (int s : sign)
      if (s != 1 && s != -1) return false;
    return true;
  }

  bool operator==(const SignedOrder& o) const {
    return sign == o.sign && perm == o.perm;
  }

  std::string str() const {
    std::string s;
    for (size_t k = 0; k < perm.size(); ++k) {
      if (k) s += ",";
      int v = perm[k];
      s += sign[static_cast<size_t>(v)] > 0 ? "+" : "-";
      s += std::to_string(v + 1);
    }
    return s;
  }
};

enum class Polarity { kPlus, kMinus };

enum class Cmp { kLess, kGreater, kEqual, kIncomparable };

/// Quasi-homogeneous order: a weight vector, optionally refined to a total
/// order by a signed tie-break. Polarity kMinus reverses the tie-break
/// exactly (equivalently, flips every tie-break sign), realizing the second
/// member of the limit-order pair.
class QHOrder {
 public:
  QHOrder(WeightVector w, std::optional<SignedOrder> tie, Polarity pol)
      : w_(std::move(w)), tie_(std::move(tie)), pol_(pol) {
    if (tie_ && (!tie_->valid() || tie_->dim() != w_.dim()))
      throw Error("invalid signed order refinement");
  }

  static QHOrder partial(WeightVector w) {
    return QHOrder(std::move(w), std::nullopt, Polarity::kPlus);
  }

  static QHOrder total(WeightVector w, SignedOrder tie, Polarity pol) {
    return QHOrder(std::move(w), std::move(tie), pol);
  }

  /// The canonical pair of total orders for a weight: identical all-plus
  /// identity tie-break, opposite polarity.
  static std::pair<QHOrder, QHOrder> canonical_pair(const WeightVector& w) {
    SignedOrder tie = SignedOrder::all_plus_identity(w.dim());
    return {QHOrder(w, tie, Polarity::kPlus), QHOrder(w, tie, Polarity::kMinus)};
  }

  int dim() const { return w_.dim(); }
  const WeightVector& weight() const { return w_; }
  bool is_total() const { return tie_.has_value(); }
  const std::optional<SignedOrder>& tie_break() const { return tie_; }
  Polarity polarity() const { return pol_; }

  /// Sign effectively multiplying e[var] in the tie-break comparison; the
  /// Minus polarity flips it.
  int effective_sign(int var) const {
    if (!tie_) throw Error("effective_sign needs a total order");
    int s = tie_->sign[static_cast<size_t>(var)];
    return pol_ == Polarity::kMinus ? -s : s;
  }

  Cmp compare(const Exponent& a, const Exponent& b) const {
    if (static_cast<int>(a.size()) != dim() ||
        static_cast<int>(b.size()) != dim())
      throw DimensionMismatch("exponent dimension mismatch in compare");
    long long wa = w_.value(a), wb = w_.value(b);
    if (wa != wb) return wa < wb ? Cmp::kLess : Cmp::kGreater;
    if (a == b) return Cmp::kEqual;
    if (!tie_) return Cmp::kIncomparable;
    for (int k = 0; k < dim(); ++k) {
      int v = tie_->perm[static_cast<size_t>(k)];
      long long sa = static_cast<long long>(effective_sign(v)) * a[static_cast<size_t>(v)];
      long long sb = static_cast<long long>(effective_sign(v)) * b[static_cast<size_t>(v)];
      if (sa != sb) return sa < sb ? Cmp::kLess : Cmp::kGreater;
    }
    return Cmp::kEqual;  // unreachable: a != b differ somewhere
  }

  /// Strict less-than; requires a total order.
  bool less(const Exponent& a, const Exponent& b) const {
    if (!tie_) throw Error("less needs a total order");
    return compare(a, b) == Cmp::kLess;
  }

  /// True when the variable is positive: positive weight, or zero weight
  /// with effective tie-break sign +1. Partial orders cannot classify
  /// zero-weight variables.
  bool variable_positive(int var) const {
    long long w = w_.xi[static_cast<size_t>(var)];
    if (w != 0) return w > 0;
    if (!tie_)
      throw UndeterminedPolarity("zero-weight variable under a partial order");
    return effective_sign(var) > 0;
  }

  std::vector<bool> positivity() const {
    std::vector<bool> p;
    p.reserve(static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i) p.push_back(variable_positive(i));
    return p;
  }

  std::string str() const {
    std::string s = "w=" + w_.str();
    if (tie_) {
      s += ";tiebreak=" + tie_->str();
      s += ";polarity=";
      s += pol_ == Polarity::kPlus ? "+" : "-";
    }
    return s;
  }

 private:
  WeightVector w_;
  std::optional<SignedOrder> tie_;
  Polarity pol_;
};

/// Initial form: all maximal terms under a partial order (can be several),
/// the single maximal term under a total order.
template <class R>
Polynomial<R> initial_form(const Polynomial<R>& f, const QHOrder& o) {
  if (f.is_zero()) throw ZeroPolynomial("initial form of zero");
  if (o.dim() != f.dim())
    throw DimensionMismatch("order dimension mismatch in initial_form");
  std::vector<typename Polynomial<R>::Term> best;
  for (const auto& term : f.terms()) {
    if (best.empty()) {
      best.push_back(term);
      continue;
    }
    switch (o.compare(term.first, best.front().first)) {
      case Cmp::kGreater:
        best.clear();
        best.push_back(term);
        break;
      case Cmp::kIncomparable:
        // Partial order: keep every term of maximal weight.
        best.push_back(term);
        break;
      case Cmp::kLess:
      case Cmp::kEqual:
        break;
    }
  }
  return Polynomial<R>::from_terms(f.dim(), f.ring(), std::move(best));
}

/// Leading term under a total order.
template <class R>
typename Polynomial<R>::Term leading_term(const Polynomial<R>& f,
                                          const QHOrder& o) {
  Polynomial<R> in = initial_form(f, o);
  return in.terms().front();
}

}  // namespace bbcell
