#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "mlgap/bigfloat.hpp"

namespace mlgap {

/// Closed interval [lower, upper] with endpoints rounded outward on every
/// operation, so the exact real result of a computation is always enclosed.
class Interval {
 public:
  explicit Interval(Precision prec = default_precision());
  Interval(BigFloat lower, BigFloat upper);

  static Interval point(long value, Precision prec);
  static Interval point(const mpz_class& value, Precision prec);
  static Interval point(const mpq_class& value, Precision prec);
  /// Encloses the exact value of a decimal literal such as "0.174813".
  static Interval decimal(std::string_view text, Precision prec);

  const BigFloat& lower() const { return lower_; }
  const BigFloat& upper() const { return upper_; }
  Precision precision() const { return lower_.precision(); }

  BigFloat width() const;
  BigFloat midpoint() const;

  bool contains(const mpq_class& value) const;
  bool contains(const Interval& inner) const;
  bool certainly_positive() const { return lower_.sign() > 0; }
  bool certainly_negative() const { return upper_.sign() < 0; }
  bool certainly_less(const Interval& rhs) const { return upper_ < rhs.lower_; }

  /// "[lo, hi]" with `decimals` digits, lower end rounded down and upper end up.
  std::string to_string(int decimals) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

 private:
  BigFloat lower_;
  BigFloat upper_;
};

Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
/// x^s for x > 0 and any real s, as exp(s log x).
Interval pow(const Interval& base, const Interval& exponent);
/// Pointwise max: encloses max(a, b) for every a in the first and b in the second.
Interval max(const Interval& a, const Interval& b);
/// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b);

}  // namespace mlgap
