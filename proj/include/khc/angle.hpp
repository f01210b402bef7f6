#pragma once

#include <boost/rational.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace khc {

using Rational = boost::rational<long long>;

/// Eigenvalue of a unit-circle monodromy operator, stored as the rational
/// turning number a in [0,1) with lambda = exp(-2*pi*i*a).
/// Angle 0 encodes the eigenvalue 1; addition is mod 1.
class Angle {
public:
  Angle() : value_(0) {}
  explicit Angle(const Rational& value) : value_(normalized(value)) {}
  Angle(long long num, long long den);

  const Rational& value() const { return value_; }
  long long num() const { return value_.numerator(); }
  long long den() const { return value_.denominator(); }
  bool is_zero() const { return value_.numerator() == 0; }

  Angle operator+(const Angle& o) const { return Angle(value_ + o.value_); }
  Angle operator-(const Angle& o) const { return Angle(value_ - o.value_); }

  /// (1 - a) mod 1: the angle of the inverse eigenvalue.
  Angle inverse() const { return Angle(-value_); }

  std::string str() const;

  /// Parses "a/b" or "a"; the value is reduced mod 1.
  static Angle parse(std::string_view text);

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Angle& a, const Angle& b) { return a.value_ != b.value_; }
  friend bool operator<(const Angle& a, const Angle& b) { return a.value_ < b.value_; }
  friend bool operator>(const Angle& a, const Angle& b) { return b < a; }
  friend bool operator<=(const Angle& a, const Angle& b) { return !(b < a); }
  friend bool operator>=(const Angle& a, const Angle& b) { return !(a < b); }

private:
  static Rational normalized(Rational v);

  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const Angle& a);

}  // namespace khc
