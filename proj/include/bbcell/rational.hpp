#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "bbcell/errors.hpp"

namespace bbcell {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational number. Always reduced, denominator > 0, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) {}
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByNonUnit("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = BigRat(std::move(num), std::move(den));
  }
  explicit Rational(BigRat v) : v_(std::move(v)) {}
  explicit Rational(const BigInt& n) : v_(n) {}

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_unit() const { return !v_.is_zero(); }

  Rational operator-() const { return Rational(BigRat(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(BigRat(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(BigRat(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(BigRat(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByNonUnit("rational division by zero");
    return Rational(BigRat(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByNonUnit("inverse of zero");
    return Rational(BigRat(1 / v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  int sign() const { return v_.sign(); }

  std::string str() const {
    if (den() == 1) return num().str();
    return num().str() + "/" + den().str();
  }

 private:
  BigRat v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace bbcell
