#include "mlgap/cf_value.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mlgap/continuant.hpp"

namespace mlgap {

Digit CfExpansion::digit(std::size_t i) const {
  if (i < pre.size()) return pre[i];
  if (period.empty()) throw std::out_of_range("digit past the end of a finite expansion");
  return period[(i - pre.size()) % period.size()];
}

std::string CfExpansion::to_string() const {
  std::string out = "[0;";
  bool first = true;
  for (Digit d : pre) {
    if (!first) out += ',';
    out += std::to_string(d);
    first = false;
  }
  if (!period.empty()) {
    if (!first) out += ',';
    out += '(';
    for (std::size_t i = 0; i < period.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(period[i]);
    }
    out += ')';
  }
  return out + "]";
}

CfExpansion normalized(const CfExpansion& x) {
  if (x.is_finite()) return x;
  std::vector<Digit> period(x.period.begin(), x.period.end());
  const std::size_t n = period.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = period[i] == period[i - p];
    if (repeats) {
      period.resize(p);
      break;
    }
  }
  std::vector<Digit> pre(x.pre.begin(), x.pre.end());
  while (!pre.empty() && pre.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    pre.pop_back();
  }
  return CfExpansion{Word(std::move(pre)), Word(std::move(period))};
}

Surd eval_periodic(const Word& pre, const Word& period) {
  if (period.empty()) throw std::invalid_argument("eval_periodic needs a nonempty period");
  // x = (P + P' x) / (Q + Q' x)  =>  Q' x^2 + (Q - P') x - P = 0, positive root.
  const ContinuantMatrix m = continuants(period);
  const mpz_class lin = m.q - m.p_prev;
  const mpz_class disc = lin * lin + 4 * m.p * m.q_prev;
  const Surd tail(-lin, 1, 2 * m.q_prev, disc);
  if (pre.empty()) return tail;
  const ContinuantMatrix u = continuants(pre);
  return (Surd(u.p) + Surd(u.p_prev) * tail) / (Surd(u.q) + Surd(u.q_prev) * tail);
}

Surd value_of(const CfExpansion& x) {
  if (x.is_finite()) return Surd(finite_value(x.pre));
  return eval_periodic(x.pre, x.period);
}

namespace {
std::strong_ordering from_sign(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}
}  // namespace

std::strong_ordering compare_digit_rule(const CfExpansion& x, const CfExpansion& y) {
  if (x.is_finite() || y.is_finite()) {
    throw std::invalid_argument("digit rule needs two infinite expansions");
  }
  // Past this horizon both sequences have repeated jointly, so they are equal.
  const std::size_t horizon = std::max(x.pre.size(), y.pre.size()) +
                              std::lcm(x.period.size(), y.period.size());
  for (std::size_t i = 0; i < horizon; ++i) {
    const Digit a = x.digit(i);
    const Digit b = y.digit(i);
    if (a == b) continue;
    const std::size_t k = i + 1;
    const int s = (k % 2 == 0) ? (a - b) : (b - a);
    return from_sign(s);
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_exact(const CfExpansion& x, const CfExpansion& y) {
  return SurdSum(value_of(x)) <=> SurdSum(value_of(y));
}

std::strong_ordering compare_cf(const CfExpansion& x, const CfExpansion& y) {
  if (!x.is_finite() && !y.is_finite()) return compare_digit_rule(x, y);
  return compare_exact(x, y);
}

}  // namespace mlgap
