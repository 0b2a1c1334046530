#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bbcell/errors.hpp"
#include "bbcell/rational.hpp"

namespace bbcell {

/// Exponent vector of a monomial in d variables.
using Exponent = std::vector<int>;

inline Exponent zero_exponent(int dim) {
  return Exponent(static_cast<size_t>(dim), 0);
}

inline Exponent unit_exponent(int dim, int var) {
  Exponent e = zero_exponent(dim);
  e[static_cast<size_t>(var)] = 1;
  return e;
}

inline int total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

/// Componentwise a - b; caller guarantees divisibility.
inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

/// Componentwise partial order: a <= b.
inline bool divides(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// -1, 0, +1 for lexicographic comparison (first coordinate dominant).
inline int lex_compare(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

/// Strict grevlex comparison restricted to coordinates [lo, hi).
inline int grevlex_compare_range(const Exponent& a, const Exponent& b, int lo,
                                 int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[static_cast<size_t>(i)];
    db += b[static_cast<size_t>(i)];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int ai = a[static_cast<size_t>(i)], bi = b[static_cast<size_t>(i)];
    if (ai != bi) return ai > bi ? -1 : 1;  // larger last entry is smaller
  }
  return 0;
}

inline int grevlex_compare(const Exponent& a, const Exponent& b) {
  return grevlex_compare_range(a, b, 0, static_cast<int>(a.size()));
}

inline std::string exponent_str(const Exponent& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

/// Integer weight vector; rationals are accepted at parse time and cleared
/// to integers before construction.
struct WeightVector {
  std::vector<long long> xi;

  int dim() const { return static_cast<int>(xi.size()); }

  long long value(const Exponent& e) const {
    if (e.size() != xi.size())
      throw DimensionMismatch("weight/exponent dimension mismatch");
    long long s = 0;
    for (size_t i = 0; i < xi.size(); ++i) s += xi[i] * e[i];
    return s;
  }

  bool operator==(const WeightVector& o) const { return xi == o.xi; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < xi.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(xi[i]);
    }
    return s + ")";
  }
};

/// All exponents e with e[i] < extents[i], in ascending lex order.
inline std::vector<Exponent> box_exponents(const std::vector<int>& extents) {
  std::vector<Exponent> out;
  Exponent cur(extents.size(), 0);
  const int d = static_cast<int>(extents.size());
  for (int i = 0; i < d; ++i)
    if (extents[static_cast<size_t>(i)] <= 0) return out;
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0) {
      if (++cur[static_cast<size_t>(i)] < extents[static_cast<size_t>(i)]) break;
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const Exponent& a, const Exponent& b) { return lex_compare(a, b) < 0; });
  return out;
}

}  // namespace bbcell
