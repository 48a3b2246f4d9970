#include "mlgap/symbolic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mlgap {

Surd height(const PeriodicSeq& seq, long position) {
  const Word& w = seq.period;
  if (w.empty()) throw std::invalid_argument("periodic sequence with an empty period");
  const long n = static_cast<long>(w.size());
  const auto j = static_cast<std::size_t>(((position % n) + n) % n);
  const Word here = w.rotated(j);
  const Surd future = eval_periodic(Word{}, w.rotated(j + 1));
  const Surd past = eval_periodic(Word{}, here.reversed());
  return Surd(here[0]) + future + past;
}

MarkovValue markov_value(const PeriodicSeq& seq) {
  MarkovValue best{height(seq, 0), 0};
  for (std::size_t j = 1; j < seq.period.size(); ++j) {
    Surd h = height(seq, static_cast<long>(j));
    if (h > best.value) best = MarkovValue{std::move(h), j};
  }
  return best;
}

namespace {

using VertexSet = std::vector<int>;

VertexSet step(const LabeledGraph& g, const VertexSet& s, Digit d) {
  VertexSet out;
  for (int v : s) {
    if (g.label[static_cast<std::size_t>(v)] != d) continue;
    const auto& n = g.next[static_cast<std::size_t>(v)];
    out.insert(out.end(), n.begin(), n.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtremalResult greedy(const LabeledGraph& g, VertexSet current, Extremum which, const Word& prefix) {
  if (current.empty()) throw std::invalid_argument("empty Cantor set");
  for (Digit d : prefix) {
    current = step(g, current, d);
    if (current.empty()) {
      throw std::invalid_argument("no admissible sequence starts with " + prefix.to_string());
    }
  }
  std::vector<Digit> digits;
  std::map<std::pair<VertexSet, int>, std::size_t> seen;
  std::size_t depth = prefix.size() + 1;
  while (true) {
    const int parity = static_cast<int>(depth % 2);
    auto [it, fresh] = seen.try_emplace({current, parity}, digits.size());
    if (!fresh) {
      const std::size_t loop = it->second;
      std::vector<Digit> pre(prefix.begin(), prefix.end());
      pre.insert(pre.end(), digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(loop));
      const CfExpansion witness = normalized(
          {Word(std::move(pre)),
           Word(std::vector<Digit>(digits.begin() + static_cast<std::ptrdiff_t>(loop), digits.end()))});
      Surd value = value_of(witness);
      return ExtremalResult{witness, std::move(value)};
    }
    Digit lo = 0;
    Digit hi = 0;
    for (int v : current) {
      const Digit d = g.label[static_cast<std::size_t>(v)];
      if (lo == 0 || d < lo) lo = d;
      if (d > hi) hi = d;
    }
    const bool odd = parity == 1;
    const bool take_small = (which == Extremum::Max) == odd;
    const Digit pick = take_small ? lo : hi;
    digits.push_back(pick);
    current = step(g, current, pick);
    ++depth;
  }
}

/// 1/[0; a, rest...] written as [a; rest...].
std::string reciprocal_string(const CfExpansion& x) {
  const Digit head = x.digit(0);
  CfExpansion rest;
  if (!x.pre.empty()) {
    rest = CfExpansion{x.pre.slice(1, x.pre.size()), x.period};
  } else {
    rest = CfExpansion{Word{}, x.period.rotated(1)};
  }
  if (rest.pre.empty() && rest.period.empty()) return "[" + std::to_string(head) + "]";
  return "[" + std::to_string(head) + ";" + rest.to_string().substr(3);
}

}  // namespace

ExtremalResult extremal_value(const LabeledGraph& g, Extremum which, const Word& prefix) {
  return greedy(g, g.aligned_starts(), which, prefix);
}

ExtremalResult extremal_value(const CantorSetHandle& k, Extremum which, const Word& prefix) {
  const LabeledGraph g = compile(k.spec);
  if (k.side == Side::Future) return extremal_value(g, which, prefix);
  return extremal_value(reversed(g), which, prefix);
}

std::string GapConstant::expression() const {
  return reciprocal_string(beta) + " + " + alpha.to_string();
}

GapConstant gap_constant(const SftSpec& b, const SftSpec& c) {
  const LabeledGraph gb = compile(b);
  const LabeledGraph gc = compile(c);
  if (!is_transitive(gb)) throw std::invalid_argument(b.name + " is not transitive");
  if (!is_transitive(gc)) throw std::invalid_argument(c.name + " is not transitive");
  if (!is_symmetric(gb)) throw std::invalid_argument(b.name + " is not symmetric");
  if (!is_symmetric(gc)) throw std::invalid_argument(c.name + " is not symmetric");
  if (!language_contains(gc, gb)) {
    throw std::invalid_argument(b.name + " is not contained in " + c.name);
  }

  // continuations after each block-initial letter
  std::map<Digit, VertexSet> after;
  for (int v : gb.aligned_starts()) {
    auto& set = after[gb.label[static_cast<std::size_t>(v)]];
    const auto& n = gb.next[static_cast<std::size_t>(v)];
    set.insert(set.end(), n.begin(), n.end());
  }

  GapConstant out;
  bool first = true;
  for (auto& [letter, set] : after) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    const ExtremalResult beta = greedy(gb, set, Extremum::Min, Word{});
    const ExtremalResult alpha = extremal_value(gc, Extremum::Max, Word{letter});
    SurdSum term = SurdSum(Surd(1) / beta.value) + SurdSum(alpha.value);
    if (first || term > out.value) {
      out.value = std::move(term);
      out.letter = letter;
      out.beta = beta.witness;
      out.alpha = alpha.witness;
      first = false;
    }
  }

  const ExtremalResult beta_min = extremal_value(gb, Extremum::Min);
  bool first_alpha = true;
  ExtremalResult best_alpha;
  for (const auto& entry : after) {
    ExtremalResult alpha = extremal_value(gc, Extremum::Max, Word{entry.first});
    if (first_alpha || SurdSum(alpha.value) > SurdSum(best_alpha.value)) {
      best_alpha = std::move(alpha);
      first_alpha = false;
    }
  }
  out.majorant = SurdSum(Surd(1) / beta_min.value) + SurdSum(best_alpha.value);
  out.majorant_beta = beta_min.witness;
  out.majorant_alpha = best_alpha.witness;
  return out;
}

}  // namespace mlgap
