#pragma once

#include <compare>
#include <string>

#include "mlgap/surd.hpp"
#include "mlgap/word.hpp"

namespace mlgap {

/// Eventually periodic expansion [0; pre, period, period, ...]. An empty
/// period means the finite expansion [0; pre].
struct CfExpansion {
  Word pre;
  Word period;

  bool is_finite() const { return period.empty(); }
  /// Digit a_{i+1}, i.e. zero-based position i after the leading 0.
  Digit digit(std::size_t i) const;
  /// "[0;2,(2,1)]": the parenthesised group repeats forever.
  std::string to_string() const;

  friend bool operator==(const CfExpansion&, const CfExpansion&) = default;
};

/// Shortest description of the same sequence: primitive period, and the
/// preperiod shortened while its last digit matches the period's last digit.
CfExpansion normalized(const CfExpansion& x);

/// Exact value of [0; pre, period repeated]; `period` must be nonempty.
Surd eval_periodic(const Word& pre, const Word& period);

/// Exact value of any expansion, finite ones included.
Surd value_of(const CfExpansion& x);

/// Ordering by the alternating digit rule: at the first index k (1-based)
/// where the digits differ, x > y iff (-1)^k (x_k - y_k) > 0. Both
/// expansions must be infinite.
std::strong_ordering compare_digit_rule(const CfExpansion& x, const CfExpansion& y);

/// Ordering of the exact values.
std::strong_ordering compare_exact(const CfExpansion& x, const CfExpansion& y);

/// Digit rule for two infinite expansions, exact rationals or surds otherwise.
std::strong_ordering compare_cf(const CfExpansion& x, const CfExpansion& y);

}  // namespace mlgap
