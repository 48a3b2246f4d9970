#include "mlgap/jp.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "mlgap/cf_value.hpp"
#include "mlgap/continuant.hpp"

namespace mlgap {

GaussSystem make_gauss_system(const SftSpec& spec) {
  if (spec.is_block_shift() || !spec.adjacency.empty()) {
    throw std::invalid_argument(spec.name + ": dimension estimates need a letter subshift (no blocks)");
  }
  GaussSystem sys{spec, compile(spec), 0};
  for (const Word& f : spec.forbidden) sys.memory = std::max(sys.memory, static_cast<int>(f.size()) - 1);
  if (sys.graph.size() == 0) throw std::invalid_argument(spec.name + ": empty subshift");
  if (!is_transitive(sys.graph)) throw std::invalid_argument(spec.name + " is not transitive");
  return sys;
}

mpz_class trace_power(const GaussSystem& sys, int n) {
  if (n < 1) throw std::invalid_argument("trace_power needs n >= 1");
  const auto size = static_cast<std::size_t>(sys.graph.size());
  using Matrix = std::vector<std::vector<mpz_class>>;
  Matrix a(size, std::vector<mpz_class>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (int j : sys.graph.next[i]) a[i][static_cast<std::size_t>(j)] = 1;
  }
  Matrix power = a;
  for (int step = 1; step < n; ++step) {
    Matrix out(size, std::vector<mpz_class>(size, 0));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t k = 0; k < size; ++k) {
        if (power[i][k] == 0) continue;
        for (std::size_t j = 0; j < size; ++j) {
          if (a[k][j] != 0) out[i][j] += power[i][k];
        }
      }
    }
    power = std::move(out);
  }
  mpz_class trace = 0;
  for (std::size_t i = 0; i < size; ++i) trace += power[i][i];
  return trace;
}

Surd multiplier_by_continuants(const Word& w) {
  const ContinuantMatrix m = continuants(w);
  const Surd x = eval_periodic(Word{}, w);
  const Surd denom = Surd(mpq_class(m.q)) + Surd(mpq_class(m.q_prev)) * x;
  return Surd(1) / (denom * denom);
}

Surd multiplier_by_points(const Word& w) {
  Surd out(1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Surd x = eval_periodic(Word{}, w.rotated(i));
    out = out * x * x;
  }
  return out;
}

std::vector<PeriodicOrbit> enumerate_orbits(const GaussSystem& sys, int n, Precision prec) {
  if (n < 1 || n > kMaxOrbitPeriod) throw std::invalid_argument("orbit period out of range");
  const LabeledGraph& g = sys.graph;
  std::vector<PeriodicOrbit> out;
  std::vector<int> path;
  std::vector<Digit> digits;
  // depth-first over paths of length n; a path closes when its last vertex
  // steps back to the first
  auto visit = [&](auto&& self, int v) -> void {
    path.push_back(v);
    digits.push_back(g.label[static_cast<std::size_t>(v)]);
    if (static_cast<int>(path.size()) == n) {
      const auto& nx = g.next[static_cast<std::size_t>(v)];
      if (std::find(nx.begin(), nx.end(), path.front()) != nx.end()) {
        Word w(digits);
        if (w.is_primitive() && w.min_rotation() == w) {
          Surd lambda = multiplier_by_continuants(w);
          BigFloat log_lambda = log(lambda.enclose(prec).midpoint());
          out.push_back(PeriodicOrbit{std::move(w), std::move(lambda), std::move(log_lambda)});
        }
      }
    } else {
      for (int u : g.next[static_cast<std::size_t>(v)]) self(self, u);
    }
    path.pop_back();
    digits.pop_back();
  };
  for (int v = 0; v < g.size(); ++v) visit(visit, v);
  std::sort(out.begin(), out.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) { return a.word < b.word; });
  return out;
}

std::vector<PeriodicOrbit> orbit_table(const GaussSystem& sys, int max_period, Precision prec, int threads) {
  std::vector<std::vector<PeriodicOrbit>> per(static_cast<std::size_t>(max_period) + 1);
  threads = std::max(1, threads);
  // longest periods first so the big jobs start early
  std::vector<int> periods;
  for (int n = max_period; n >= 1; --n) periods.push_back(n);
  for (std::size_t i = 0; i < periods.size(); i += static_cast<std::size_t>(threads)) {
    std::vector<std::pair<int, std::future<std::vector<PeriodicOrbit>>>> jobs;
    for (std::size_t j = i; j < std::min(periods.size(), i + static_cast<std::size_t>(threads)); ++j) {
      const int n = periods[j];
      jobs.emplace_back(n, std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                      [&sys, n, prec] { return enumerate_orbits(sys, n, prec); }));
    }
    for (auto& [n, job] : jobs) per[static_cast<std::size_t>(n)] = job.get();
  }
  std::vector<PeriodicOrbit> out;
  for (auto& v : per) {
    for (auto& o : v) out.push_back(std::move(o));
  }
  return out;
}

BigFloat jp_determinant(const std::vector<PeriodicOrbit>& orbits, int available_period, const BigFloat& s,
                        int order, TraceSign sign) {
  if (order < 0) throw std::invalid_argument("negative determinant order");
  if (order > available_period) {
    throw std::invalid_argument("order " + std::to_string(order) + " exceeds the enumerated periods (" +
                                std::to_string(available_period) + ")");
  }
  const Precision prec = s.precision();
  std::vector<BigFloat> trace(static_cast<std::size_t>(order) + 1, BigFloat(0, prec));
  const BigFloat one(1, prec);
  for (const PeriodicOrbit& o : orbits) {
    const int d = static_cast<int>(o.word.size());
    if (d > order) continue;
    const BigFloat weight = exp(s * o.log_multiplier);
    const BigFloat lambda = exp(o.log_multiplier);
    BigFloat weight_m = weight;
    BigFloat lambda_m = lambda;
    const BigFloat size(d, prec);
    for (int n = d; n <= order; n += d) {
      const bool flip = sign == TraceSign::Alternating && n % 2 == 1;
      const BigFloat denom = flip ? one + lambda_m : one - lambda_m;
      trace[static_cast<std::size_t>(n)] += size * weight_m / denom;
      weight_m *= weight;
      lambda_m *= lambda;
    }
  }
  std::vector<BigFloat> c(static_cast<std::size_t>(order) + 1, BigFloat(0, prec));
  c[0] = one;
  BigFloat total = one;
  for (int m = 1; m <= order; ++m) {
    BigFloat acc(0, prec);
    for (int j = 1; j <= m; ++j) acc += trace[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(m - j)];
    c[static_cast<std::size_t>(m)] = -acc / BigFloat(m, prec);
    total += c[static_cast<std::size_t>(m)];
  }
  return total;
}

BigFloat largest_root(const std::vector<PeriodicOrbit>& orbits, int available_period, int order,
                      const BigFloat& tolerance, TraceSign sign) {
  const Precision prec = tolerance.precision();
  auto at = [&](const BigFloat& s) { return jp_determinant(orbits, available_period, s, order, sign); };
  BigFloat hi = BigFloat::from_rational(mpq_class(99, 100), prec);
  BigFloat f_hi = at(hi);
  for (int k = 98; k >= 1; --k) {
    BigFloat lo = BigFloat::from_rational(mpq_class(k, 100), prec);
    BigFloat f_lo = at(lo);
    if (f_lo.sign() == 0) return lo;
    if (f_lo.sign() != f_hi.sign()) {
      const BigFloat two(2, prec);
      while (hi - lo > tolerance) {
        BigFloat mid = (lo + hi) / two;
        BigFloat f_mid = at(mid);
        if (f_mid.sign() == 0) return mid;
        if (f_mid.sign() == f_lo.sign()) {
          lo = std::move(mid);
          f_lo = std::move(f_mid);
        } else {
          hi = std::move(mid);
        }
      }
      return (lo + hi) / two;
    }
    hi = std::move(lo);
    f_hi = std::move(f_lo);
  }
  throw std::domain_error("determinant of order " + std::to_string(order) + " has no sign change on (0.01, 0.99)");
}

int default_order(const GaussSystem& sys) { return sys.spec.alphabet.size() <= 3 ? 8 : 6; }

DimEstimate estimate_dimension(const GaussSystem& sys, int order, double tolerance, int threads) {
  if (order < 2) throw std::invalid_argument("estimate needs order >= 2");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const Precision prec = Precision::decimal_digits(kJpDecimalDigits);
  const std::vector<PeriodicOrbit> orbits = orbit_table(sys, order, prec, threads);
  BigFloat tol(0, prec);
  mpfr_set_d(tol.raw(), tolerance, MPFR_RNDN);
  const double value = largest_root(orbits, order, order, tol).to_double();
  const double previous = largest_root(orbits, order, order - 1, tol).to_double();
  return DimEstimate{sys.spec.name, value, order, std::abs(value - previous), "HEURISTIC"};
}

namespace {

struct CylinderLog {
  mpz_class q;
  mpz_class q_sum;  ///< q + q_prev
  double log_length;
};

CylinderLog make_log(const mpz_class& q, const mpz_class& q_prev) {
  const mpz_class sum = q + q_prev;
  return CylinderLog{q, sum, -(std::log(q.get_d()) + std::log(sum.get_d()))};
}

// log sum_w exp(s * log|I(w)|) + s * shift, stable in double
double log_sum(const std::vector<CylinderLog>& ws, double s, double shift) {
  double top = -HUGE_VAL;
  for (const auto& w : ws) top = std::max(top, s * w.log_length);
  double acc = 0;
  for (const auto& w : ws) acc += std::exp(s * w.log_length - top);
  return top + std::log(acc) + s * shift;
}

// root of the decreasing function s -> log_sum(s) on [0, 1], clamped
double root_in_unit(const std::vector<CylinderLog>& ws, double shift) {
  if (log_sum(ws, 0, shift) <= 0) return 0;
  if (log_sum(ws, 1, shift) >= 0) return 1;
  double lo = 0;
  double hi = 1;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_sum(ws, mid, shift) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// enclosure of factor^s * sum_w |I(w)|^s
Interval weighted_sum(const std::vector<CylinderLog>& ws, const mpq_class& s, long factor_num, long factor_den) {
  const Precision prec = Precision::from_bits(96);
  const Interval si = Interval::point(s, prec);
  Interval total = Interval::point(0L, prec);
  for (const auto& w : ws) {
    const Interval len = Interval::point(1L, prec) / (Interval::point(w.q, prec) * Interval::point(w.q_sum, prec));
    total = total + pow(len, si);
  }
  const Interval factor = Interval::point(mpq_class(factor_num, factor_den), prec);
  return total * pow(factor, si);
}

mpq_class dyadic(double x, bool up) {
  const double scaled = std::ldexp(x, 32);
  mpq_class out(mpz_class(up ? std::ceil(scaled) : std::floor(scaled)), mpz_class(1) << 32);
  out.canonicalize();
  return out;
}

}  // namespace

PressureBracket pressure_bracket(const GaussSystem& sys, int depth) {
  if (depth < 3) throw std::invalid_argument("pressure bracket needs depth >= 3");
  const LabeledGraph& g = sys.graph;

  // distinct admissible words of the depth, via subsets of vertices
  std::vector<CylinderLog> words;
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) all[static_cast<std::size_t>(v)] = v;
  auto walk = [&](auto&& self, const std::vector<int>& from, int len, const mpz_class& q,
                  const mpz_class& q_prev) -> void {
    if (len == depth) {
      words.push_back(make_log(q, q_prev));
      return;
    }
    std::vector<std::pair<Digit, std::vector<int>>> by_label;
    for (int v : from) {
      const Digit d = g.label[static_cast<std::size_t>(v)];
      auto it = std::find_if(by_label.begin(), by_label.end(), [d](const auto& p) { return p.first == d; });
      if (it == by_label.end()) {
        by_label.emplace_back(d, std::vector<int>{});
        it = by_label.end() - 1;
      }
      const auto& nx = g.next[static_cast<std::size_t>(v)];
      it->second.insert(it->second.end(), nx.begin(), nx.end());
    }
    for (auto& [d, nx] : by_label) {
      std::sort(nx.begin(), nx.end());
      nx.erase(std::unique(nx.begin(), nx.end()), nx.end());
      self(self, nx, len + 1, d * q + q_prev, q);
    }
  };
  walk(walk, all, 0, mpz_class(1), mpz_class(0));

  PressureBracket out;
  out.set_name = sys.spec.name;
  out.depth = depth;

  const double up = root_in_unit(words, std::log(2.0));
  out.upper = 1;
  if (up < 1) {
    mpq_class candidate = dyadic(up, true);
    mpq_class step(1, mpz_class(1) << 32);
    while (candidate < 1) {
      if (weighted_sum(words, candidate, 2, 1).upper() < BigFloat(1, Precision::from_bits(96))) break;
      candidate += step;
      step *= 2;
    }
    out.upper = candidate < 1 ? candidate : mpq_class(1);
  }

  out.lower = 0;
  for (int v = 0; v < g.size(); ++v) {
    std::vector<CylinderLog> loops;
    auto close = [&](auto&& self, int u, int len, const mpz_class& q, const mpz_class& q_prev) -> void {
      const mpz_class q_next = g.label[static_cast<std::size_t>(u)] * q + q_prev;
      if (len + 1 == depth) {
        const auto& nx = g.next[static_cast<std::size_t>(u)];
        if (std::find(nx.begin(), nx.end(), v) != nx.end()) loops.push_back(make_log(q_next, q));
        return;
      }
      for (int x : g.next[static_cast<std::size_t>(u)]) self(self, x, len + 1, q_next, q);
    };
    close(close, v, 0, mpz_class(1), mpz_class(0));
    if (loops.empty()) continue;
    const double root = root_in_unit(loops, -std::log(4.0));
    if (root <= 0) continue;
    mpq_class candidate = dyadic(root, false);
    mpq_class step(1, mpz_class(1) << 32);
    while (candidate > out.lower) {
      if (weighted_sum(loops, candidate, 1, 4).lower() > BigFloat(1, Precision::from_bits(96))) break;
      candidate -= step;
      step *= 2;
    }
    if (candidate > out.lower) out.lower = candidate;
  }
  return out;
}

}  // namespace mlgap
