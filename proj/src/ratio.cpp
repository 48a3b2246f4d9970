#include "mlgap/ratio.hpp"

#include <queue>
#include <stdexcept>

#include "mlgap/continuant.hpp"

namespace mlgap {

mpq_class RatioFn::operator()(const mpq_class& r) const {
  mpq_class out = (r + 1) / ((alpha * r + beta) * (gamma * r + delta));
  out.canonicalize();
  return out;
}

Interval RatioFn::operator()(const Interval& r) const {
  const Precision p = r.precision();
  const Interval one = Interval::point(1L, p);
  return (r + one) / ((Interval::point(alpha, p) * r + Interval::point(beta, p)) *
                      (Interval::point(gamma, p) * r + Interval::point(delta, p)));
}

std::string RatioFn::to_string() const {
  auto factor = [](const mpz_class& k, const mpz_class& c) {
    return "(" + (k == 1 ? std::string() : k.get_str()) + "r+" + c.get_str() + ")";
  };
  return "(r+1)/(" + factor(alpha, beta) + factor(gamma, delta) + ")";
}

RatioFn ratio_fn(const Word& extension) {
  if (extension.empty()) throw std::invalid_argument("ratio function of the empty extension");
  const ContinuantMatrix m = continuants(extension);
  return RatioFn{extension, m.p, m.q, m.p + m.p_prev, m.q + m.q_prev};
}

RatioMax max_ratio(const RatioFn& f, Precision prec) {
  const mpq_class at0 = f(mpq_class(0));
  const mpq_class at1 = f(mpq_class(1));
  RatioMax best{Interval::point(at0, prec), at0, Interval::point(0L, prec)};
  if (at1 > at0) best = RatioMax{Interval::point(at1, prec), at1, Interval::point(1L, prec)};

  // (r + 1)^2 = t; interior root iff 1 < t < 4
  mpq_class t = mpq_class((f.alpha - f.beta) * (f.gamma - f.delta)) / mpq_class(f.alpha * f.gamma);
  t.canonicalize();
  if (t > 1 && t < 4) {
    const Interval r = sqrt(Interval::point(t, prec)) - Interval::point(1L, prec);
    const Interval v = f(r);
    // the interior critical point is the unique maximum on (-1, inf)
    if (!v.certainly_less(best.value)) best = RatioMax{v, std::nullopt, r};
  }
  return best;
}

mpq_class max_ratio_by_subdivision(const RatioFn& f, int depth) {
  struct Piece {
    mpq_class lo;
    mpq_class hi;
    mpq_class bound;
    bool operator<(const Piece& o) const { return bound < o.bound; }
  };
  auto majorant = [&](const mpq_class& a, const mpq_class& b) {
    mpq_class u = (b + 1) / ((f.alpha * a + f.beta) * (f.gamma * a + f.delta));
    u.canonicalize();
    return u;
  };
  mpq_class width_floor(1);
  mpq_div_2exp(width_floor.get_mpq_t(), width_floor.get_mpq_t(), static_cast<mp_bitcnt_t>(depth));

  mpq_class floor_value = std::max(f(mpq_class(0)), f(mpq_class(1)));
  std::priority_queue<Piece> queue;
  queue.push({0, 1, majorant(0, 1)});
  while (true) {
    Piece top = queue.top();
    queue.pop();
    if (top.hi - top.lo <= width_floor) return top.bound;
    mpq_class mid = (top.lo + top.hi) / 2;
    mid.canonicalize();
    floor_value = std::max(floor_value, f(mid));
    for (auto [a, b] : {std::pair{top.lo, mid}, std::pair{mid, top.hi}}) {
      mpq_class u = majorant(a, b);
      if (u >= floor_value) queue.push({a, b, std::move(u)});
    }
  }
}

}  // namespace mlgap
