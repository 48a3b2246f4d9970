#pragma once

#include <gmpxx.h>

#include <optional>

#include "mlgap/interval.hpp"
#include "mlgap/word.hpp"

namespace mlgap {

/// r -> (r + 1) / ((alpha r + beta)(gamma r + delta)): the ratio
/// |I(a w)| / |I(a)| as a function of r = q_{n-1}/q_n of the prefix a.
/// With M(w) = [[P', P], [Q', Q]] the coefficients are
/// alpha = P, beta = Q, gamma = P + P', delta = Q + Q'.
struct RatioFn {
  Word extension;
  mpz_class alpha;
  mpz_class beta;
  mpz_class gamma;
  mpz_class delta;

  mpq_class operator()(const mpq_class& r) const;
  Interval operator()(const Interval& r) const;
  /// "(r+1)/((3r+5)(4r+7))"
  std::string to_string() const;
};

RatioFn ratio_fn(const Word& extension);

struct RatioMax {
  /// Enclosure of max over r in [0,1]; a point when the max is rational.
  Interval value;
  /// Exact value when the maximum sits at r = 0 or r = 1.
  std::optional<mpq_class> exact;
  /// Where the maximum is attained (exact endpoints or an enclosure of r*).
  Interval argmax;
};

/// Critical points solve (r + 1)^2 = (alpha - beta)(gamma - delta)/(alpha gamma);
/// the maximum is the largest of f(0), f(1) and f(r*) when r* lies in (0,1).
RatioMax max_ratio(const RatioFn& f, Precision prec = default_precision());

/// Independent upper bound by branch and bound over dyadic subintervals,
/// using the monotone majorant (b + 1)/((alpha a + beta)(gamma a + delta))
/// on [a, b]; stops once the leading piece is narrower than 2^-depth.
mpq_class max_ratio_by_subdivision(const RatioFn& f, int depth = 20);

}  // namespace mlgap
