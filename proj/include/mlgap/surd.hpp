#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mlgap/interval.hpp"

namespace mlgap {

/// Exact quadratic irrational (a + b*sqrt(D)) / c.
///
/// Canonical form: c > 0, gcd(a, b, c) = 1, D square-free and > 1 when
/// b != 0; rationals are stored with b = 0 and D = 0.
class Surd {
 public:
  Surd() = default;
  Surd(long value);  // NOLINT(google-explicit-constructor)
  Surd(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  Surd(mpz_class a, mpz_class b, mpz_class c, mpz_class d);

  static Surd sqrt_of(const mpz_class& n);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  mpq_class rational() const;
  int sign() const;
  Surd conjugate() const;

  /// Outward-rounded enclosure at the given working precision.
  Interval enclose(Precision prec) const;
  std::string to_string() const;

  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  friend Surd operator/(const Surd& x, const Surd& y);
  Surd operator-() const;

  /// Exact ordering. Throws std::domain_error when the radicands generate
  /// different quadratic fields; use SurdSum for those.
  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);
  friend bool operator==(const Surd& x, const Surd& y);

 private:
  void canonicalize();

  mpz_class a_{0};
  mpz_class b_{0};
  mpz_class c_{1};
  mpz_class d_{0};
};

/// Square-free decomposition n = k^2 * m. Trial division up to
/// min(cbrt(n), 10^6) followed by a perfect-square test on the cofactor;
/// exact whenever n < 10^18.
void square_free_split(const mpz_class& n, mpz_class& k, mpz_class& m);

/// Symbolic sum of surds whose radicands may differ, e.g. sqrt(2) + sqrt(3).
/// Held as q + sum_D r_D * sqrt(D) with rational q, r_D and square-free D;
/// nothing is collapsed to a float.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Surd& term);  // NOLINT(google-explicit-constructor)

  const mpq_class& rational_part() const { return rational_; }
  const std::map<mpz_class, mpq_class>& radical_parts() const { return radicals_; }
  bool is_zero() const { return rational_ == 0 && radicals_.empty(); }

  Interval enclose(Precision prec) const;
  std::string to_string() const;

  friend SurdSum operator+(SurdSum x, const SurdSum& y);
  friend SurdSum operator-(SurdSum x, const SurdSum& y);
  SurdSum operator-() const;

  /// Sign by refining enclosures; exact zero is detected symbolically.
  /// Throws std::runtime_error if 2^16 bits do not separate it from zero.
  int sign() const;

  friend std::strong_ordering operator<=>(const SurdSum& x, const SurdSum& y);
  friend bool operator==(const SurdSum& x, const SurdSum& y) { return (x - y).is_zero(); }

 private:
  void add(const mpq_class& coefficient, const mpz_class& radicand);
  mpq_class rational_{0};
  std::map<mpz_class, mpq_class> radicals_;
};

/// Enclosure of width below 10^-digits.
Interval approx(const SurdSum& value, int digits);

}  // namespace mlgap
