#include "mlgap/surd.hpp"

#include <stdexcept>

namespace mlgap {

void square_free_split(const mpz_class& n, mpz_class& k, mpz_class& m) {
  if (n < 0) throw std::domain_error("square_free_split of a negative number");
  k = 1;
  if (n <= 1) {
    m = n;
    return;
  }
  mpz_class rest = n;
  mpz_class free_part = 1;
  mpz_class bound;
  mpz_root(bound.get_mpz_t(), n.get_mpz_t(), 3);
  bound += 1;
  const unsigned long limit = bound > 1000000 ? 1000000UL : bound.get_ui();
  for (unsigned long p = 2; p <= limit; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > rest) break;
    unsigned long count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++count;
    }
    for (unsigned long i = 0; i + 1 < count; i += 2) k *= p;
    if (count % 2 == 1) free_part *= p;
  }
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    k *= r;
  } else {
    free_part *= rest;
  }
  m = free_part;
}

Surd::Surd(long value) : a_(value) {}

Surd::Surd(const mpq_class& value) : a_(value.get_num()), c_(value.get_den()) { canonicalize(); }

Surd::Surd(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  canonicalize();
}

Surd Surd::sqrt_of(const mpz_class& n) { return Surd(0, 1, 1, n); }

void Surd::canonicalize() {
  if (c_ == 0) throw std::domain_error("surd with zero denominator");
  if (d_ < 0) throw std::domain_error("surd with negative radicand");
  if (b_ != 0 && d_ != 0) {
    mpz_class k;
    mpz_class m;
    square_free_split(d_, k, m);
    b_ *= k;
    d_ = m;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
    }
  }
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
  }
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

mpq_class Surd::rational() const {
  if (!is_rational()) throw std::domain_error("surd is irrational: " + to_string());
  mpq_class out(a_, c_);
  out.canonicalize();
  return out;
}

int Surd::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 D
  const int cmp_sq = cmp(mpz_class(a_ * a_), mpz_class(b_ * b_ * d_));
  if (cmp_sq == 0) return 0;
  return cmp_sq > 0 ? sa : sb;
}

Surd Surd::conjugate() const { return Surd(a_, -b_, c_, d_); }

Surd Surd::operator-() const { return Surd(-a_, -b_, c_, d_); }

namespace {

/// Common radicand of two surds; rationals fit any field.
mpz_class common_field(const Surd& x, const Surd& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
  throw std::domain_error("surds " + x.to_string() + " and " + y.to_string() +
                          " lie in different quadratic fields");
}

}  // namespace

Surd operator+(const Surd& x, const Surd& y) {
  const mpz_class d = common_field(x, y);
  return Surd(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
  const mpz_class d = common_field(x, y);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
}

Surd operator/(const Surd& x, const Surd& y) {
  if (y.sign() == 0) throw std::domain_error("surd division by zero");
  // 1/y = c (a - b sqrt D) / (a^2 - b^2 D)
  const mpz_class norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  const Surd inverse(y.c_ * y.a_, -y.c_ * y.b_, norm, y.d_);
  return x * inverse;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const Surd& x, const Surd& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

Interval Surd::enclose(Precision prec) const {
  Interval num = Interval::point(a_, prec);
  if (b_ != 0) num = num + Interval::point(b_, prec) * sqrt(Interval::point(d_, prec));
  return num / Interval::point(c_, prec);
}

namespace {

std::string radical_term(const mpz_class& coef, const mpz_class& d, bool leading) {
  std::string out;
  mpz_class mag = abs(coef);
  if (coef < 0) out += leading ? "-" : " - ";
  else if (!leading) out += " + ";
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt(" + d.get_str() + ")";
  return out;
}

}  // namespace

std::string Surd::to_string() const {
  if (is_rational()) return rational().get_str();
  std::string num;
  if (a_ != 0) num = a_.get_str();
  num += radical_term(b_, d_, a_ == 0);
  if (c_ == 1) return num;
  return "(" + num + ")/" + c_.get_str();
}

SurdSum::SurdSum(const Surd& term) {
  rational_ = mpq_class(term.a(), term.c());
  rational_.canonicalize();
  if (!term.is_rational()) {
    mpq_class coefficient(term.b(), term.c());
    coefficient.canonicalize();
    add(coefficient, term.radicand());
  }
}

void SurdSum::add(const mpq_class& coefficient, const mpz_class& radicand) {
  auto [it, inserted] = radicals_.try_emplace(radicand, coefficient);
  if (!inserted) it->second += coefficient;
  if (it->second == 0) radicals_.erase(it);
}

SurdSum operator+(SurdSum x, const SurdSum& y) {
  x.rational_ += y.rational_;
  for (const auto& [d, r] : y.radicals_) x.add(r, d);
  return x;
}

SurdSum SurdSum::operator-() const {
  SurdSum out;
  out.rational_ = -rational_;
  for (const auto& [d, r] : radicals_) out.radicals_.emplace(d, -r);
  return out;
}

SurdSum operator-(SurdSum x, const SurdSum& y) { return x + (-y); }

Interval SurdSum::enclose(Precision prec) const {
  Interval out = Interval::point(rational_, prec);
  for (const auto& [d, r] : radicals_) {
    out = out + Interval::point(r, prec) * sqrt(Interval::point(d, prec));
  }
  return out;
}

std::string SurdSum::to_string() const {
  if (radicals_.empty()) return rational_.get_str();
  std::string out;
  bool leading = true;
  if (rational_ != 0) {
    out = rational_.get_str();
    leading = false;
  }
  for (const auto& [d, r] : radicals_) {
    const mpq_class mag = abs(r);
    if (r < 0) out += leading ? "-" : " - ";
    else if (!leading) out += " + ";
    if (mag.get_den() == 1) {
      if (mag != 1) out += mag.get_str() + "*";
      out += "sqrt(" + d.get_str() + ")";
    } else {
      if (mag.get_num() != 1) out += mag.get_num().get_str() + "*";
      out += "sqrt(" + d.get_str() + ")/" + mag.get_den().get_str();
    }
    leading = false;
  }
  return out;
}

int SurdSum::sign() const {
  if (is_zero()) return 0;
  if (radicals_.empty()) return sgn(rational_);
  if (radicals_.size() == 1) {
    const auto& [d, r] = *radicals_.begin();
    const Surd single(rational_.get_num() * r.get_den(), r.get_num() * rational_.get_den(),
                      rational_.get_den() * r.get_den(), d);
    return single.sign();
  }
  for (mpfr_prec_t bits = 128; bits <= (1 << 16); bits *= 2) {
    const Interval e = enclose(Precision{bits});
    if (e.certainly_positive()) return 1;
    if (e.certainly_negative()) return -1;
  }
  throw std::runtime_error("could not separate " + to_string() + " from zero");
}

std::strong_ordering operator<=>(const SurdSum& x, const SurdSum& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Interval approx(const SurdSum& value, int digits) {
  if (digits < 1) throw std::invalid_argument("approx needs at least one digit");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpq_class target(1, scale);
  for (mpfr_prec_t bits = Precision::decimal_digits(digits).bits;; bits *= 2) {
    Interval e = value.enclose(Precision{bits});
    if (e.width().to_rational() < target) return e;
  }
}

}  // namespace mlgap
