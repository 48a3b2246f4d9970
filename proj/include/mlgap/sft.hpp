#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mlgap/word.hpp"

namespace mlgap {

enum class AdjacencyKind { NotFollowedBy, OnlyFollowedBy, NotPrecededBy, OnlyPrecededBy };

std::string_view to_string(AdjacencyKind kind);
/// Accepts the spellings produced by `to_string`, e.g. "only-preceded-by".
AdjacencyKind parse_adjacency_kind(std::string_view text);

/// Constraint on which block may sit next to `block` in a block shift.
/// "31311 only-preceded-by 3" means the block before 31311 must be 3.
struct AdjacencyRule {
  Word block;
  AdjacencyKind kind = AdjacencyKind::NotFollowedBy;
  std::vector<Word> others;

  friend bool operator==(const AdjacencyRule&, const AdjacencyRule&) = default;
};

/// Subshift given either by forbidden words over an alphabet (letter shift)
/// or by free concatenations of generator blocks, optionally restricted by
/// adjacency rules and forbidden words.
struct SftSpec {
  std::string name;
  std::vector<Digit> alphabet;
  std::vector<Word> blocks;
  std::vector<Word> forbidden;
  std::vector<AdjacencyRule> adjacency;

  bool is_block_shift() const { return !blocks.empty(); }
  /// Throws std::invalid_argument when letters fall outside the alphabet or
  /// a rule names an unknown block.
  void validate() const;

  friend bool operator==(const SftSpec&, const SftSpec&) = default;
};

/// Finite presentation of a spec: bi-infinite label sequences of paths are
/// the points of the subshift. Every vertex lies on a bi-infinite path.
struct LabeledGraph {
  std::vector<Digit> label;
  std::vector<std::vector<int>> next;
  /// Vertex begins a generator block (all vertices for a letter shift).
  std::vector<bool> block_start;
  /// Vertex ends a generator block (all vertices for a letter shift).
  std::vector<bool> block_end;

  int size() const { return static_cast<int>(label.size()); }
  std::vector<int> aligned_starts() const;
};

/// Block graph times a window of the last (longest forbidden - 1) letters,
/// trimmed to vertices with both a predecessor and a successor.
LabeledGraph compile(const SftSpec& spec);

/// Same vertices with every edge reversed; block starts and ends swap.
LabeledGraph reversed(const LabeledGraph& g);

bool is_transitive(const LabeledGraph& g);
bool is_transitive(const SftSpec& spec);

/// Every finite word of `inner` is a word of `outer`.
bool language_contains(const LabeledGraph& outer, const LabeledGraph& inner);
bool language_contains(const SftSpec& outer, const SftSpec& inner);

/// The language is closed under word reversal.
bool is_symmetric(const LabeledGraph& g);
bool is_symmetric(const SftSpec& spec);

bool avoids(const Word& w, const std::vector<Word>& forbidden);
/// Scan of the bi-infinite repetition of `period`.
bool avoids_cyclic(const Word& period, const std::vector<Word>& forbidden);

}  // namespace mlgap
