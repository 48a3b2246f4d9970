#include "mlgap/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mlgap {

Precision Precision::decimal_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  // log2(10) ~ 3.3219; 16 guard bits cover rounding in short chains.
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 16;
  return Precision{std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN)};
}

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(value_, prec.bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision prec) {
  mpfr_init2(value_, prec.bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_string(std::string_view text, Precision prec, mpfr_rnd_t rnd) {
  BigFloat out(prec);
  const std::string buffer(text);
  if (mpfr_set_str(out.value_, buffer.c_str(), 10, rnd) != 0) {
    throw std::invalid_argument("not a decimal number: '" + buffer + "'");
  }
  return out;
}

BigFloat BigFloat::from_rational(const mpq_class& q, Precision prec, mpfr_rnd_t rnd) {
  BigFloat out(prec);
  mpfr_set_q(out.value_, q.get_mpq_t(), rnd);
  return out;
}

BigFloat BigFloat::from_integer(const mpz_class& z, Precision prec, mpfr_rnd_t rnd) {
  BigFloat out(prec);
  mpfr_set_z(out.value_, z.get_mpz_t(), rnd);
  return out;
}

std::string BigFloat::to_fixed(int decimals, mpfr_rnd_t rnd) const {
  const char* mode = nullptr;
  switch (rnd) {
    case MPFR_RNDD: mode = "%.*RDf"; break;
    case MPFR_RNDU: mode = "%.*RUf"; break;
    case MPFR_RNDZ: mode = "%.*RZf"; break;
    default: mode = "%.*RNf"; break;
  }
  const int size = mpfr_snprintf(nullptr, 0, mode, decimals, value_);
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), mode, decimals, value_);
  return std::string(buffer.data(), static_cast<std::size_t>(size));
}

mpq_class BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) throw std::domain_error("non-finite value has no rational form");
  mpz_class mantissa;
  const mpfr_exp_t exponent = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  mpq_class out(mantissa);
  if (exponent >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return out;
}

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  BigFloat out(Precision{joint_prec(*this, rhs)});
  mpfr_add(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  BigFloat out(Precision{joint_prec(*this, rhs)});
  mpfr_sub(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  BigFloat out(Precision{joint_prec(*this, rhs)});
  mpfr_mul(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  BigFloat out(Precision{joint_prec(*this, rhs)});
  mpfr_div(out.value_, value_, rhs.value_, MPFR_RNDN);
  return *this = std::move(out);
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat out(Precision{joint_prec(base, exponent)});
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return out;
}

}  // namespace mlgap
