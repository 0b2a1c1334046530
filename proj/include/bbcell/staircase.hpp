#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bbcell/errors.hpp"
#include "bbcell/exponent.hpp"

namespace bbcell {

struct NotDownwardClosed : Error {
  NotDownwardClosed(Exponent present, Exponent missing)
      : Error("not downward closed: contains " + exponent_str(present) +
              " but not " + exponent_str(missing)),
        present(std::move(present)),
        missing(std::move(missing)) {}
  Exponent present;
  Exponent missing;
};

/// A standard set (staircase): finite downward-closed subset of N^d.
/// Elements are kept sorted ascending lex.
class StandardSet {
 public:
  /// Accepts iff the set is downward closed; deduplicates and sorts.
  static StandardSet validate(int dim, std::vector<Exponent> elems) {
    std::sort(elems.begin(), elems.end(), [](const Exponent& a, const Exponent& b) {
      return lex_compare(a, b) < 0;
    });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    StandardSet s;
    s.dim_ = dim;
    s.elems_ = std::move(elems);
    for (const auto& e : s.elems_) {
      if (static_cast<int>(e.size()) != dim)
        throw DimensionMismatch("staircase element of wrong dimension");
      for (int v : e)
        if (v < 0) throw Error("staircase element with negative entry");
    }
    for (const auto& e : s.elems_) {
      for (int i = 0; i < dim; ++i) {
        if (e[static_cast<size_t>(i)] == 0) continue;
        Exponent pred = e;
        --pred[static_cast<size_t>(i)];
        if (!s.contains(pred)) throw NotDownwardClosed(e, pred);
      }
    }
    return s;
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Exponent>& elements() const { return elems_; }

  bool contains(const Exponent& e) const {
    return std::binary_search(
        elems_.begin(), elems_.end(), e,
        [](const Exponent& a, const Exponent& b) { return lex_compare(a, b) < 0; });
  }

  /// Minimal generators of the complement monoid ideal, ascending lex.
  std::vector<Exponent> outer_corners() const {
    std::vector<Exponent> corners;
    std::vector<int> extents(static_cast<size_t>(dim_), size() + 1);
    for (const Exponent& c : box_exponents(extents)) {
      if (contains(c)) continue;
      bool minimal = true;
      for (int i = 0; i < dim_ && minimal; ++i) {
        if (c[static_cast<size_t>(i)] == 0) continue;
        Exponent pred = c;
        --pred[static_cast<size_t>(i)];
        if (!contains(pred)) minimal = false;
      }
      if (minimal) corners.push_back(c);
    }
    return corners;
  }

  bool operator==(const StandardSet& o) const {
    return dim_ == o.dim_ && elems_ == o.elems_;
  }
  bool operator!=(const StandardSet& o) const { return !(*this == o); }

  std::string str() const {
    std::string s = "{";
    for (size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ",";
      s += exponent_str(elems_[i]);
    }
    return s + "}";
  }

 private:
  int dim_ = 0;
  std::vector<Exponent> elems_;
};

/// Heights along the distinguished variable: for each monomial m in the
/// remaining variables (exponent with coordinate var set to 0), h(m) is the
/// unique value with x_var^{h-1} m inside the staircase and x_var^h m
/// outside; h(m) = 0 off the projection. Only nonzero heights are listed,
/// ascending lex; they sum to the cardinality.
inline std::vector<std::pair<Exponent, int>> heights(const StandardSet& delta,
                                                     int var) {
  std::vector<std::pair<Exponent, int>> out;
  std::set<Exponent> seen;
  for (const Exponent& e : delta.elements()) {
    Exponent m = e;
    m[static_cast<size_t>(var)] = 0;
    if (!seen.insert(m).second) continue;
    int h = 0;
    Exponent probe = m;
    while (true) {
      probe[static_cast<size_t>(var)] = h;
      if (!delta.contains(probe)) break;
      ++h;
    }
    out.emplace_back(std::move(m), h);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return lex_compare(a.first, b.first) < 0;
  });
  return out;
}

/// Cumulative heights H(m) = sum of h(m') over m' with m'^+ at most m^+ in
/// the supplied total order on exponents (m^+ = x_var^{h(m)} m).
inline std::vector<std::pair<Exponent, int>> cumulative_heights(
    const StandardSet& delta, int var,
    const std::function<bool(const Exponent&, const Exponent&)>& less) {
  auto h = heights(delta, var);
  std::vector<Exponent> tops;
  tops.reserve(h.size());
  for (const auto& [m, hm] : h) {
    Exponent top = m;
    top[static_cast<size_t>(var)] = hm;
    tops.push_back(top);
  }
  std::vector<std::pair<Exponent, int>> out;
  for (size_t i = 0; i < h.size(); ++i) {
    int total = 0;
    for (size_t j = 0; j < h.size(); ++j)
      if (j == i || less(tops[j], tops[i])) total += h[j].second;
    out.emplace_back(h[i].first, total);
  }
  return out;
}

/// Every staircase of the given cardinality, exactly once, in a canonical
/// order. Intended for test-corpus generation at desk scale.
inline std::vector<StandardSet> enumerate_standard_sets(int dim, int n) {
  if (dim < 1 || dim > 4 || n < 1 || n > 8)
    throw Error("enumerate_standard_sets supports d <= 4, n <= 8");
  std::set<std::vector<Exponent>> layer = {{zero_exponent(dim)}};
  for (int k = 1; k < n; ++k) {
    std::set<std::vector<Exponent>> next;
    for (const auto& elems : layer) {
      StandardSet s = StandardSet::validate(dim, elems);
      // Addable exponents: outer corners keep the result downward closed.
      for (const Exponent& c : s.outer_corners()) {
        std::vector<Exponent> grown = elems;
        grown.push_back(c);
        std::sort(grown.begin(), grown.end(),
                  [](const Exponent& a, const Exponent& b) {
                    return lex_compare(a, b) < 0;
                  });
        next.insert(std::move(grown));
      }
    }
    layer = std::move(next);
  }
  std::vector<StandardSet> out;
  out.reserve(layer.size());
  for (const auto& elems : layer)
    out.push_back(StandardSet::validate(dim, elems));
  return out;
}

}  // namespace bbcell
