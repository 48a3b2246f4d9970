#pragma once

#include <string>

#include "mlgap/cf_value.hpp"
#include "mlgap/sft.hpp"
#include "mlgap/surd.hpp"

namespace mlgap {

/// Bi-infinite repetition of a nonempty word.
struct PeriodicSeq {
  Word period;
};

/// f at `position`: [b_0; b_1, ...] + [0; b_-1, b_-2, ...], position taken
/// modulo the period. Future and past tails share one quadratic field, so the
/// result is a single exact surd.
Surd height(const PeriodicSeq& seq, long position);

struct MarkovValue {
  Surd value;
  std::size_t position = 0;  ///< first shift attaining the maximum
};

/// Maximum of the height over one period of shifts. For a periodic sequence
/// this is also its Lagrange value.
MarkovValue markov_value(const PeriodicSeq& seq);

enum class Side { Future, Past };
enum class Extremum { Min, Max };

/// K(A) = {[0; g] : g admissible from a block boundary} (Future) or the same
/// set for reversed sequences (Past).
struct CantorSetHandle {
  SftSpec spec;
  Side side = Side::Future;
};

struct ExtremalResult {
  CfExpansion witness;
  Surd value;
};

/// Exact min or max of K under an optional prefix. Greedy on the presentation
/// graph: at odd depth the max takes the smallest readable digit and the min
/// the largest, at even depth the reverse. The walk state (vertex set, depth
/// parity) recurs, which gives an eventually periodic witness.
ExtremalResult extremal_value(const CantorSetHandle& k, Extremum which, const Word& prefix = {});
ExtremalResult extremal_value(const LabeledGraph& g, Extremum which, const Word& prefix = {});

struct GapConstant {
  /// max over letters n of 1/beta + [0; n, alpha] where n begins a block of B
  /// and beta runs over the B-continuations after that letter.
  SurdSum value;
  Digit letter = 0;
  CfExpansion beta;   ///< minimising [0; b_0, b_1, ...] for the winning letter
  CfExpansion alpha;  ///< maximising [0; n, ...] in K(C)
  /// max 1/beta over K(B) plus max [0; n, ...] over letters n starting K(B).
  SurdSum majorant;
  CfExpansion majorant_beta;
  CfExpansion majorant_alpha;

  /// "[b_0; b_1, ...] + [0; n, ...]" for the winning term.
  std::string expression() const;
};

/// Requires both specs transitive and symmetric and B inside C; throws
/// std::invalid_argument naming the failed check otherwise.
GapConstant gap_constant(const SftSpec& b, const SftSpec& c);

}  // namespace mlgap
