#include "mlgap/sft.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace mlgap {

std::string_view to_string(AdjacencyKind kind) {
  switch (kind) {
    case AdjacencyKind::NotFollowedBy: return "not-followed-by";
    case AdjacencyKind::OnlyFollowedBy: return "only-followed-by";
    case AdjacencyKind::NotPrecededBy: return "not-preceded-by";
    case AdjacencyKind::OnlyPrecededBy: return "only-preceded-by";
  }
  return "?";
}

AdjacencyKind parse_adjacency_kind(std::string_view text) {
  for (AdjacencyKind k : {AdjacencyKind::NotFollowedBy, AdjacencyKind::OnlyFollowedBy,
                          AdjacencyKind::NotPrecededBy, AdjacencyKind::OnlyPrecededBy}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown adjacency kind '" + std::string(text) + "'");
}

void SftSpec::validate() const {
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  auto in_alphabet = [&](const Word& w, const char* what) {
    for (Digit d : w) {
      if (std::find(alphabet.begin(), alphabet.end(), d) == alphabet.end()) {
        throw std::invalid_argument(std::string(what) + " " + w.to_string() + " uses letter " +
                                    std::to_string(d) + " outside the alphabet");
      }
    }
  };
  for (const Word& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    in_alphabet(b, "block");
  }
  for (const Word& f : forbidden) {
    if (f.empty()) throw std::invalid_argument("empty forbidden word");
    in_alphabet(f, "forbidden word");
  }
  auto known = [&](const Word& w) {
    if (std::find(blocks.begin(), blocks.end(), w) == blocks.end()) {
      throw std::invalid_argument("adjacency rule names " + w.to_string() + ", which is not a block");
    }
  };
  for (const AdjacencyRule& r : adjacency) {
    known(r.block);
    for (const Word& o : r.others) known(o);
  }
}

std::vector<int> LabeledGraph::aligned_starts() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (block_start[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

namespace {

struct BaseGraph {
  std::vector<Digit> label;
  std::vector<std::vector<int>> next;
  std::vector<bool> start;
  std::vector<bool> end;
};

bool contains_word(const std::vector<Word>& list, const Word& w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

bool blocks_may_touch(const SftSpec& spec, const Word& left, const Word& right) {
  for (const AdjacencyRule& r : spec.adjacency) {
    switch (r.kind) {
      case AdjacencyKind::NotFollowedBy:
        if (r.block == left && contains_word(r.others, right)) return false;
        break;
      case AdjacencyKind::OnlyFollowedBy:
        if (r.block == left && !contains_word(r.others, right)) return false;
        break;
      case AdjacencyKind::NotPrecededBy:
        if (r.block == right && contains_word(r.others, left)) return false;
        break;
      case AdjacencyKind::OnlyPrecededBy:
        if (r.block == right && !contains_word(r.others, left)) return false;
        break;
    }
  }
  return true;
}

BaseGraph base_graph(const SftSpec& spec) {
  BaseGraph g;
  if (!spec.is_block_shift()) {
    const int n = static_cast<int>(spec.alphabet.size());
    g.label = spec.alphabet;
    g.next.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g.next[static_cast<std::size_t>(i)].push_back(j);
    }
    g.start.assign(static_cast<std::size_t>(n), true);
    g.end.assign(static_cast<std::size_t>(n), true);
    return g;
  }
  std::vector<int> first;
  for (const Word& b : spec.blocks) {
    first.push_back(static_cast<int>(g.label.size()));
    for (std::size_t p = 0; p < b.size(); ++p) {
      g.label.push_back(b[p]);
      g.start.push_back(p == 0);
      g.end.push_back(p + 1 == b.size());
    }
  }
  g.next.assign(g.label.size(), {});
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const Word& b = spec.blocks[i];
    for (std::size_t p = 0; p + 1 < b.size(); ++p) {
      g.next[static_cast<std::size_t>(first[i]) + p].push_back(first[i] + static_cast<int>(p) + 1);
    }
    const std::size_t last = static_cast<std::size_t>(first[i]) + b.size() - 1;
    for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
      if (blocks_may_touch(spec, b, spec.blocks[j])) g.next[last].push_back(first[j]);
    }
  }
  return g;
}

bool ends_with_forbidden(const std::vector<Digit>& window, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    if (f.size() > window.size()) continue;
    if (std::equal(f.begin(), f.end(), window.end() - static_cast<std::ptrdiff_t>(f.size()))) {
      return true;
    }
  }
  return false;
}

}  // namespace

LabeledGraph compile(const SftSpec& spec) {
  spec.validate();
  const BaseGraph base = base_graph(spec);
  std::size_t k = 0;
  for (const Word& f : spec.forbidden) k = std::max(k, f.size() - 1);

  // product vertices: (base vertex, last k letters read)
  using Key = std::pair<int, std::vector<Digit>>;
  std::map<Key, int> index;
  std::vector<Key> keys;
  std::vector<std::vector<int>> edges;
  std::deque<int> queue;
  auto intern = [&](Key key) {
    auto [it, inserted] = index.try_emplace(key, static_cast<int>(keys.size()));
    if (inserted) {
      keys.push_back(std::move(key));
      edges.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  auto trim_window = [&](std::vector<Digit> w) {
    if (w.size() > k) w.erase(w.begin(), w.end() - static_cast<std::ptrdiff_t>(k));
    return w;
  };
  for (int v = 0; v < static_cast<int>(base.label.size()); ++v) {
    std::vector<Digit> w{base.label[static_cast<std::size_t>(v)]};
    if (ends_with_forbidden(w, spec.forbidden)) continue;
    intern({v, trim_window(std::move(w))});
  }
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const Key key = keys[static_cast<std::size_t>(id)];
    for (int u : base.next[static_cast<std::size_t>(key.first)]) {
      std::vector<Digit> w = key.second;
      w.push_back(base.label[static_cast<std::size_t>(u)]);
      if (ends_with_forbidden(w, spec.forbidden)) continue;
      const int target = intern({u, trim_window(std::move(w))});
      edges[static_cast<std::size_t>(id)].push_back(target);
    }
  }

  // keep only vertices on bi-infinite paths
  const std::size_t n = keys.size();
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> in_degree(n, 0);
    std::vector<int> out_degree(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      for (int u : edges[v]) {
        if (!alive[static_cast<std::size_t>(u)]) continue;
        ++out_degree[v];
        ++in_degree[static_cast<std::size_t>(u)];
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && (in_degree[v] == 0 || out_degree[v] == 0)) {
        alive[v] = false;
        changed = true;
      }
    }
  }

  std::vector<int> renumber(n, -1);
  LabeledGraph g;
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    renumber[v] = g.size();
    const int b = keys[v].first;
    g.label.push_back(base.label[static_cast<std::size_t>(b)]);
    g.block_start.push_back(base.start[static_cast<std::size_t>(b)]);
    g.block_end.push_back(base.end[static_cast<std::size_t>(b)]);
  }
  g.next.assign(static_cast<std::size_t>(g.size()), {});
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    auto& out = g.next[static_cast<std::size_t>(renumber[v])];
    for (int u : edges[v]) {
      if (alive[static_cast<std::size_t>(u)]) out.push_back(renumber[static_cast<std::size_t>(u)]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return g;
}

LabeledGraph reversed(const LabeledGraph& g) {
  LabeledGraph r;
  r.label = g.label;
  r.block_start = g.block_end;
  r.block_end = g.block_start;
  r.next.assign(g.next.size(), {});
  for (int v = 0; v < g.size(); ++v) {
    for (int u : g.next[static_cast<std::size_t>(v)]) r.next[static_cast<std::size_t>(u)].push_back(v);
  }
  for (auto& out : r.next) std::sort(out.begin(), out.end());
  return r;
}

namespace {

std::vector<bool> reach(const std::vector<std::vector<int>>& next, int from) {
  std::vector<bool> seen(next.size(), false);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : next[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

using VertexSet = std::vector<int>;

VertexSet all_vertices(const LabeledGraph& g) {
  VertexSet s(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) s[static_cast<std::size_t>(v)] = v;
  return s;
}

/// Vertices of `s` carrying `d`; empty means `d` cannot be read here.
VertexSet filter(const LabeledGraph& g, const VertexSet& s, Digit d) {
  VertexSet out;
  for (int v : s) {
    if (g.label[static_cast<std::size_t>(v)] == d) out.push_back(v);
  }
  return out;
}

VertexSet successors(const LabeledGraph& g, const VertexSet& s) {
  VertexSet out;
  for (int v : s) {
    const auto& n = g.next[static_cast<std::size_t>(v)];
    out.insert(out.end(), n.begin(), n.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Digit> labels_of(const LabeledGraph& g) {
  std::vector<Digit> out = g.label;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool is_transitive(const LabeledGraph& g) {
  if (g.size() == 0) return false;
  const auto forward = reach(g.next, 0);
  if (std::find(forward.begin(), forward.end(), false) != forward.end()) return false;
  const LabeledGraph r = reversed(g);
  const auto back = reach(r.next, 0);
  return std::find(back.begin(), back.end(), false) == back.end();
}

bool is_transitive(const SftSpec& spec) { return is_transitive(compile(spec)); }

bool language_contains(const LabeledGraph& outer, const LabeledGraph& inner) {
  const std::vector<Digit> letters = labels_of(inner);
  std::set<std::pair<VertexSet, VertexSet>> seen;
  std::deque<std::pair<VertexSet, VertexSet>> queue;
  queue.emplace_back(all_vertices(inner), all_vertices(outer));
  seen.insert(queue.front());
  while (!queue.empty()) {
    auto [in, out] = queue.front();
    queue.pop_front();
    for (Digit d : letters) {
      const VertexSet fi = filter(inner, in, d);
      if (fi.empty()) continue;
      const VertexSet fo = filter(outer, out, d);
      if (fo.empty()) return false;
      std::pair<VertexSet, VertexSet> state{successors(inner, fi), successors(outer, fo)};
      if (seen.insert(state).second) queue.push_back(std::move(state));
    }
  }
  return true;
}

bool language_contains(const SftSpec& outer, const SftSpec& inner) {
  return language_contains(compile(outer), compile(inner));
}

bool is_symmetric(const LabeledGraph& g) {
  const LabeledGraph r = reversed(g);
  return language_contains(g, r) && language_contains(r, g);
}

bool is_symmetric(const SftSpec& spec) { return is_symmetric(compile(spec)); }

bool avoids(const Word& w, const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    if (w.contains(f)) return false;
  }
  return true;
}

bool avoids_cyclic(const Word& period, const std::vector<Word>& forbidden) {
  const std::size_t n = period.size();
  if (n == 0) return true;
  for (const Word& f : forbidden) {
    for (std::size_t i = 0; i < n; ++i) {
      bool match = true;
      for (std::size_t j = 0; j < f.size() && match; ++j) match = period[(i + j) % n] == f[j];
      if (match) return false;
    }
  }
  return true;
}

}  // namespace mlgap
