#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mlgap/bigfloat.hpp"
#include "mlgap/interval.hpp"
#include "mlgap/sft.hpp"
#include "mlgap/surd.hpp"

namespace mlgap {

/// Gauss map restricted to the points of a letter subshift (forbidden words
/// only, no generator blocks), presented as a memory-k vertex shift.
struct GaussSystem {
  SftSpec spec;
  LabeledGraph graph;
  int memory = 0;  ///< longest forbidden word minus one
};

/// Throws std::invalid_argument for block shifts and non-transitive specs.
GaussSystem make_gauss_system(const SftSpec& spec);

/// Orbit sizes above this are refused by the enumerator.
inline constexpr int kMaxOrbitPeriod = 16;

/// trace(A^n) for the vertex-shift adjacency matrix, i.e. the number of
/// points of period dividing n.
mpz_class trace_power(const GaussSystem& sys, int n);

struct PeriodicOrbit {
  Word word;          ///< least rotation, primitive
  Surd multiplier;    ///< prod of x_i^2 over the orbit points, exact
  BigFloat log_multiplier;
};

/// 1/(Q + Q' x)^2 where x = [0; (w)] and M(w) = [[P', P], [Q', Q]].
Surd multiplier_by_continuants(const Word& w);
/// prod_i [0; (rot_i w)]^2.
Surd multiplier_by_points(const Word& w);

/// Primitive orbits of exact period n, one least-rotation word each. Every
/// closed path of length n in the presentation graph is read once.
std::vector<PeriodicOrbit> enumerate_orbits(const GaussSystem& sys, int n, Precision prec);

/// All orbits of period 1..max_period; periods are processed by up to
/// `threads` workers.
std::vector<PeriodicOrbit> orbit_table(const GaussSystem& sys, int max_period, Precision prec,
                                       int threads = 1);

/// Trace weight per fixed point of T^n: lambda^s / (1 - (-1)^n lambda)
/// (Alternating) or lambda^s / (1 - lambda) (Plain).
enum class TraceSign { Alternating, Plain };

/// Delta_N(s) = sum_{m <= N} c_m with c_0 = 1 and
/// c_m = -(1/m) sum_{j=1}^{m} t_j c_{m-j}. Orbits of period above N are ignored;
/// throws std::invalid_argument if the table cannot reach period N.
BigFloat jp_determinant(const std::vector<PeriodicOrbit>& orbits, int available_period, const BigFloat& s,
                        int order, TraceSign sign = TraceSign::Alternating);

/// Largest zero of s -> Delta_N(s): scan down from 0.99 in steps of 0.01 and
/// bisect the first sign change. Throws std::domain_error without one.
BigFloat largest_root(const std::vector<PeriodicOrbit>& orbits, int available_period, int order,
                      const BigFloat& tolerance, TraceSign sign = TraceSign::Alternating);

struct DimEstimate {
  std::string set_name;
  double value = 0;
  int order = 0;
  double residual = 0;  ///< |estimate_N - estimate_{N-1}|
  std::string method = "HEURISTIC";
};

/// 8 for alphabets of at most three letters, 6 otherwise.
int default_order(const GaussSystem& sys);

inline constexpr int kJpDecimalDigits = 60;

DimEstimate estimate_dimension(const GaussSystem& sys, int order, double tolerance = 1e-10,
                               int threads = 1);

struct PressureBracket {
  std::string set_name;
  int depth = 0;
  mpq_class lower;  ///< dyadic, 4^-s sum over loops at a vertex certified > 1
  mpq_class upper;  ///< dyadic, 2^s sum over words of the depth certified < 1
  std::string method = "RIGOROUS-UP-TO-DISTORTION-CONSTANT";
};

/// Upper end: root of 2^s sum_{|w| = n} |I(w)|^s = 1 (submultiplicativity
/// |I(uv)| <= 2|I(u)||I(v)|). Lower end: largest over vertices v of the root
/// of 4^-s sum_u |I(u)|^s = 1, u running over closed paths of length n at v,
/// which concatenate freely (|I(uv)| >= |I(u)||I(v)|/4). Both ends are
/// checked with outward-rounded interval sums.
PressureBracket pressure_bracket(const GaussSystem& sys, int depth);

}  // namespace mlgap
