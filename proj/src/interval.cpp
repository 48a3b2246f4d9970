#include "mlgap/interval.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mlgap {

namespace {

Precision joint(const Interval& a, const Interval& b) {
  return Precision{std::max(a.precision().bits, b.precision().bits)};
}

template <typename Op>
BigFloat rounded(Precision prec, mpfr_rnd_t rnd, Op op) {
  BigFloat out(prec);
  op(out.raw(), rnd);
  return out;
}

const BigFloat& min_of(const std::array<BigFloat, 4>& v) {
  return *std::min_element(v.begin(), v.end(), [](const auto& x, const auto& y) { return x < y; });
}

const BigFloat& max_of(const std::array<BigFloat, 4>& v) {
  return *std::max_element(v.begin(), v.end(), [](const auto& x, const auto& y) { return x < y; });
}

}  // namespace

Interval::Interval(Precision prec) : lower_(prec), upper_(prec) {}

Interval::Interval(BigFloat lower, BigFloat upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (upper_ < lower_) throw std::invalid_argument("interval endpoints out of order");
}

Interval Interval::point(long value, Precision prec) {
  return point(mpz_class(value), prec);
}

Interval Interval::point(const mpz_class& value, Precision prec) {
  return Interval(BigFloat::from_integer(value, prec, MPFR_RNDD),
                  BigFloat::from_integer(value, prec, MPFR_RNDU));
}

Interval Interval::point(const mpq_class& value, Precision prec) {
  return Interval(BigFloat::from_rational(value, prec, MPFR_RNDD),
                  BigFloat::from_rational(value, prec, MPFR_RNDU));
}

Interval Interval::decimal(std::string_view text, Precision prec) {
  return Interval(BigFloat::from_string(text, prec, MPFR_RNDD),
                  BigFloat::from_string(text, prec, MPFR_RNDU));
}

BigFloat Interval::width() const {
  return rounded(precision(), MPFR_RNDU,
                 [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_sub(r, upper_.raw(), lower_.raw(), m); });
}

BigFloat Interval::midpoint() const {
  BigFloat sum = rounded(Precision{precision().bits + 1}, MPFR_RNDN, [&](mpfr_ptr r, mpfr_rnd_t m) {
    mpfr_add(r, upper_.raw(), lower_.raw(), m);
  });
  mpfr_div_2ui(sum.raw(), sum.raw(), 1, MPFR_RNDN);
  return sum;
}

bool Interval::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lower_.raw(), value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(upper_.raw(), value.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return lower_ <= inner.lower_ && inner.upper_ <= upper_;
}

std::string Interval::to_string(int decimals) const {
  return "[" + lower_.to_fixed(decimals, MPFR_RNDD) + ", " + upper_.to_fixed(decimals, MPFR_RNDU) +
         "]";
}

Interval operator+(const Interval& a, const Interval& b) {
  const Precision p = joint(a, b);
  return Interval(rounded(p, MPFR_RNDD,
                          [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_add(r, a.lower_.raw(), b.lower_.raw(), m); }),
                  rounded(p, MPFR_RNDU,
                          [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_add(r, a.upper_.raw(), b.upper_.raw(), m); }));
}

Interval operator-(const Interval& a, const Interval& b) {
  const Precision p = joint(a, b);
  return Interval(rounded(p, MPFR_RNDD,
                          [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_sub(r, a.lower_.raw(), b.upper_.raw(), m); }),
                  rounded(p, MPFR_RNDU,
                          [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_sub(r, a.upper_.raw(), b.lower_.raw(), m); }));
}

Interval operator*(const Interval& a, const Interval& b) {
  const Precision p = joint(a, b);
  const std::array<const BigFloat*, 2> xs{&a.lower_, &a.upper_};
  const std::array<const BigFloat*, 2> ys{&b.lower_, &b.upper_};
  std::array<BigFloat, 4> down{BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  std::array<BigFloat, 4> up{BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      mpfr_mul(down[2 * i + j].raw(), xs[i]->raw(), ys[j]->raw(), MPFR_RNDD);
      mpfr_mul(up[2 * i + j].raw(), xs[i]->raw(), ys[j]->raw(), MPFR_RNDU);
    }
  }
  return Interval(min_of(down), max_of(up));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lower_.sign() <= 0 && b.upper_.sign() >= 0) {
    throw std::domain_error("interval division by an interval containing zero");
  }
  const Precision p = joint(a, b);
  const std::array<const BigFloat*, 2> xs{&a.lower_, &a.upper_};
  const std::array<const BigFloat*, 2> ys{&b.lower_, &b.upper_};
  std::array<BigFloat, 4> down{BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  std::array<BigFloat, 4> up{BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      mpfr_div(down[2 * i + j].raw(), xs[i]->raw(), ys[j]->raw(), MPFR_RNDD);
      mpfr_div(up[2 * i + j].raw(), xs[i]->raw(), ys[j]->raw(), MPFR_RNDU);
    }
  }
  return Interval(min_of(down), max_of(up));
}

Interval Interval::operator-() const {
  return Interval(-upper_, -lower_);
}

Interval sqrt(const Interval& x) {
  if (x.lower().sign() < 0) throw std::domain_error("sqrt of an interval with negative part");
  const Precision p = x.precision();
  return Interval(rounded(p, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_sqrt(r, x.lower().raw(), m); }),
                  rounded(p, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_sqrt(r, x.upper().raw(), m); }));
}

Interval exp(const Interval& x) {
  const Precision p = x.precision();
  return Interval(rounded(p, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_exp(r, x.lower().raw(), m); }),
                  rounded(p, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_exp(r, x.upper().raw(), m); }));
}

Interval log(const Interval& x) {
  if (x.lower().sign() <= 0) throw std::domain_error("log of an interval reaching zero");
  const Precision p = x.precision();
  return Interval(rounded(p, MPFR_RNDD, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_log(r, x.lower().raw(), m); }),
                  rounded(p, MPFR_RNDU, [&](mpfr_ptr r, mpfr_rnd_t m) { mpfr_log(r, x.upper().raw(), m); }));
}

Interval pow(const Interval& base, const Interval& exponent) {
  return exp(exponent * log(base));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(a.lower() < b.lower() ? b.lower() : a.lower(),
                  a.upper() < b.upper() ? b.upper() : a.upper());
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(a.lower() < b.lower() ? a.lower() : b.lower(),
                  a.upper() < b.upper() ? b.upper() : a.upper());
}

}  // namespace mlgap
