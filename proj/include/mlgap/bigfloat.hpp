#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace mlgap {

/// Working precision of an MPFR value, stored in bits.
struct Precision {
  mpfr_prec_t bits = 0;

  /// Bits needed to carry `digits` significant decimal digits, plus guard bits.
  static Precision decimal_digits(int digits);
  static Precision from_bits(mpfr_prec_t bits) { return Precision{bits}; }

  friend bool operator==(Precision, Precision) = default;
};

inline constexpr int kDefaultDecimalDigits = 50;

inline Precision default_precision() {
  return Precision::decimal_digits(kDefaultDecimalDigits);
}

/// Owning wrapper around an `mpfr_t`. Arithmetic operators round to nearest;
/// directed rounding goes through the explicit `*_rounded` helpers and is
/// what `Interval` builds on.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = default_precision());
  BigFloat(long value, Precision prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_string(std::string_view text, Precision prec,
                              mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_rational(const mpq_class& q, Precision prec,
                                mpfr_rnd_t rnd = MPFR_RNDN);
  static BigFloat from_integer(const mpz_class& z, Precision prec,
                               mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }
  Precision precision() const { return Precision{mpfr_get_prec(value_)}; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Fixed-point decimal rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals, mpfr_rnd_t rnd = MPFR_RNDN) const;
  /// Exact rational value of the binary float.
  mpq_class to_rational() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);

}  // namespace mlgap
