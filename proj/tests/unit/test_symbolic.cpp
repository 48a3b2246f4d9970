#include <doctest.h>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>

#include "mlgap/continuant.hpp"
#include "mlgap/sft_io.hpp"
#include "mlgap/symbolic.hpp"

using namespace mlgap;

namespace {

const Precision kPrec = Precision::decimal_digits(40);

SftSpec builtin(const char* name) {
  auto s = find_builtin_spec(name);
  REQUIRE(s);
  return *s;
}

// [0; d_0, d_1, ...] for a long finite truncation, rational arithmetic
mpq_class truncated(const std::vector<Digit>& d) {
  mpq_class x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    x = 1 / (*it + x);
    x.canonicalize();
  }
  return x;
}

// height by unrolling the period 40 times in both directions
Interval height_oracle(const Word& period, std::size_t j) {
  const std::size_t n = period.size();
  std::vector<Digit> future;
  std::vector<Digit> past;
  for (std::size_t k = 1; k <= 40 * n; ++k) {
    future.push_back(period[(j + k) % n]);
    past.push_back(period[(j + 40 * n - k) % n]);
  }
  // truncation error of a depth-40n tail is far below 2^-39
  const Interval eps = Interval(BigFloat(-1, kPrec), BigFloat(1, kPrec)) *
                       Interval::point(mpq_class(1, mpz_class(1) << 39), kPrec);
  return Interval::point(mpq_class(period[j]) + truncated(future) + truncated(past), kPrec) + eps;
}

bool overlaps(const Interval& a, const Interval& b) {
  return !a.certainly_less(b) && !b.certainly_less(a);
}

std::vector<Word> all_words(std::size_t len, Digit top) {
  std::vector<Word> out;
  std::vector<Digit> d(len, 1);
  while (true) {
    out.emplace_back(d);
    std::size_t i = 0;
    while (i < len && d[i] == top) d[i++] = 1;
    if (i == len) break;
    ++d[i];
  }
  return out;
}

// An admissible eventually periodic point: random walk, then a cycle back to
// the last vertex through breadth-first search (the graph is strongly connected).
CfExpansion random_point(const LabeledGraph& g, std::mt19937& rng, std::size_t depth) {
  const std::vector<int> starts = g.aligned_starts();
  int v = starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)];
  std::vector<Digit> pre;
  for (std::size_t i = 0; i < depth; ++i) {
    pre.push_back(g.label[static_cast<std::size_t>(v)]);
    const auto& nx = g.next[static_cast<std::size_t>(v)];
    v = nx[std::uniform_int_distribution<std::size_t>(0, nx.size() - 1)(rng)];
  }
  std::vector<int> parent(static_cast<std::size_t>(g.size()), -1);
  std::deque<int> queue{v};
  int closing = -1;
  while (!queue.empty() && closing < 0) {
    const int u = queue.front();
    queue.pop_front();
    for (int x : g.next[static_cast<std::size_t>(u)]) {
      if (x == v) {
        closing = u;
        break;
      }
      if (parent[static_cast<std::size_t>(x)] < 0) {
        parent[static_cast<std::size_t>(x)] = u;
        queue.push_back(x);
      }
    }
  }
  REQUIRE(closing >= 0);
  std::vector<Digit> cycle;
  for (int u = closing; u != v; u = parent[static_cast<std::size_t>(u)]) cycle.push_back(g.label[static_cast<std::size_t>(u)]);
  cycle.push_back(g.label[static_cast<std::size_t>(v)]);
  std::reverse(cycle.begin(), cycle.end());
  return CfExpansion{Word(pre), Word(cycle)};
}

// all admissible words of length `len` read from the vertex set `from`
void walks(const LabeledGraph& g, const std::vector<int>& from, std::size_t len, std::vector<Digit>& cur,
           const std::function<void(const std::vector<Digit>&)>& visit) {
  if (cur.size() == len) {
    visit(cur);
    return;
  }
  std::map<Digit, std::vector<int>> by_label;
  for (int v : from) {
    auto& nx = by_label[g.label[static_cast<std::size_t>(v)]];
    nx.insert(nx.end(), g.next[static_cast<std::size_t>(v)].begin(), g.next[static_cast<std::size_t>(v)].end());
  }
  for (auto& [d, nx] : by_label) {
    std::sort(nx.begin(), nx.end());
    nx.erase(std::unique(nx.begin(), nx.end()), nx.end());
    cur.push_back(d);
    walks(g, nx, len, cur, visit);
    cur.pop_back();
  }
}

struct Bracket {
  mpq_class lo;
  mpq_class hi;
};

// min and max of [0; w...] over admissible continuations, bracketed by the
// extreme cylinder endpoints at a fixed depth
Bracket extremes_by_cylinders(const LabeledGraph& g, const std::vector<int>& from, std::size_t depth,
                              bool want_max) {
  bool first = true;
  Bracket out;
  std::vector<Digit> cur;
  walks(g, from, depth, cur, [&](const std::vector<Digit>& w) {
    const CylinderInterval c = cylinder(Word(w));
    mpq_class lo = std::min(c.left, c.right);
    mpq_class hi = std::max(c.left, c.right);
    if (first) {
      out = Bracket{lo, hi};
      first = false;
      return;
    }
    if (want_max) {
      // the max lies in some cylinder: at most the largest right end, at least
      // the largest left end
      out.lo = std::max(out.lo, lo);
      out.hi = std::max(out.hi, hi);
    } else {
      out.lo = std::min(out.lo, lo);
      out.hi = std::min(out.hi, hi);
    }
  });
  return out;
}

}  // namespace

TEST_CASE("heights of constant sequences") {
  for (long j : {0L, 3L, -7L}) {
    CHECK(height(PeriodicSeq{Word::parse("2")}, j) == Surd(0, 2, 1, 2));
    CHECK(height(PeriodicSeq{Word::parse("1")}, j) == Surd::sqrt_of(5));
  }
  CHECK(markov_value(PeriodicSeq{Word::parse("1")}).value == Surd::sqrt_of(5));
  CHECK(markov_value(PeriodicSeq{Word::parse("2")}).value == Surd::sqrt_of(8));
}

TEST_CASE("heights agree with unrolled evaluation") {
  for (const char* p : {"21", "2211", "12", "1121", "3121", "2321", "11313"}) {
    const Word w = Word::parse(p);
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Surd h = height(PeriodicSeq{w}, static_cast<long>(j));
      INFO(p << " at " << j << " = " << h.to_string());
      CHECK(overlaps(h.enclose(kPrec), height_oracle(w, j)));
    }
  }
  const Surd h0 = height(PeriodicSeq{Word::parse("21")}, 0);
  const Surd h1 = height(PeriodicSeq{Word::parse("21")}, 1);
  CHECK(h0 != h1);
  CHECK(markov_value(PeriodicSeq{Word::parse("21")}).value == std::max(h0, h1));
}

TEST_CASE("Markov value of 2211 from all four shifts") {
  const Word w = Word::parse("2211");
  Interval best = height_oracle(w, 0);
  for (std::size_t j = 1; j < 4; ++j) best = max(best, height_oracle(w, j));
  const MarkovValue m = markov_value(PeriodicSeq{w});
  CHECK(overlaps(m.value.enclose(kPrec), best));
  // sqrt(9 * 5^2 - 4)/5 for the Markov number 5, below sqrt(10)
  CHECK(m.value == Surd(0, 1, 5, 221));
  CHECK(SurdSum(m.value) < SurdSum(Surd::sqrt_of(10)));
}

TEST_CASE("Markov value is shift invariant and dominates every height") {
  std::vector<Word> periods;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Word& w : all_words(n, 2)) periods.push_back(w);
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Word& w : all_words(n, 3)) periods.push_back(w);
  }
  for (const Word& w : periods) {
    const MarkovValue m = markov_value(PeriodicSeq{w});
    for (std::size_t j = 0; j < w.size(); ++j) {
      CHECK(markov_value(PeriodicSeq{w.rotated(j)}).value == m.value);
      CHECK(m.value >= height(PeriodicSeq{w}, static_cast<long>(j)));
    }
  }
}

TEST_CASE("forbidden word scans") {
  const std::vector<Word> f = {Word::parse("13"), Word::parse("31")};
  CHECK_FALSE(avoids(Word::parse("131"), f));
  CHECK(avoids(Word::parse("1221"), f));
  // cyclic oracle: scan the doubled word
  auto cyclic_oracle = [&](const Word& p) { return avoids(p.concat(p), f); };
  CHECK(avoids_cyclic(Word::parse("213"), f) == cyclic_oracle(Word::parse("213")));
  CHECK_FALSE(avoids_cyclic(Word::parse("213"), f));
  CHECK(avoids(Word::parse("213"), f) == false);
  CHECK(avoids_cyclic(Word::parse("3"), f));
  CHECK_FALSE(avoids_cyclic(Word::parse("1223"), f));
  CHECK(avoids(Word::parse("1223"), f));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Word& w : all_words(n, 3)) CHECK(avoids_cyclic(w, f) == cyclic_oracle(w));
  }
}

TEST_CASE("extremal values quoted for the full shift and the block shift") {
  const ExtremalResult mx = extremal_value(CantorSetHandle{builtin("E2")}, Extremum::Max);
  CHECK(mx.value == Surd(-1, 1, 1, 3));
  CHECK(mx.witness.to_string() == "[0;(1,2)]");
  const ExtremalResult mn = extremal_value(CantorSetHandle{builtin("B4.1")}, Extremum::Min);
  CHECK(mn.value == Surd(-1, 1, 1, 2));
  CHECK(Surd(1) / mn.value == Surd(1, 1, 1, 2));
  const ExtremalResult e3 = extremal_value(CantorSetHandle{builtin("E3")}, Extremum::Max, Word::parse("1"));
  CHECK(e3.witness.to_string() == "[0;(1,3)]");
}

TEST_CASE("extremal values bracketed by depth-12 cylinders") {
  for (const char* name : {"E2", "B4.1", "B4.3", "X3a", "B5.3"}) {
    const LabeledGraph g = compile(builtin(name));
    for (Extremum which : {Extremum::Min, Extremum::Max}) {
      const bool want_max = which == Extremum::Max;
      const Bracket b = extremes_by_cylinders(g, g.aligned_starts(), 12, want_max);
      const ExtremalResult r = extremal_value(g, which);
      INFO(name << (want_max ? " max " : " min ") << r.witness.to_string());
      CHECK(r.value >= Surd(b.lo));
      CHECK(r.value <= Surd(b.hi));
    }
  }
}

TEST_CASE("extremal values dominate random admissible points") {
  std::mt19937 rng(2024);
  for (const char* name : {"E2", "E3", "B4.1", "B4.3", "B4.4", "B5.4", "X3b", "X4"}) {
    const SftSpec spec = builtin(name);
    const LabeledGraph g = compile(spec);
    const ExtremalResult hi = extremal_value(g, Extremum::Max);
    const ExtremalResult lo = extremal_value(g, Extremum::Min);
    for (int trial = 0; trial < 1250; ++trial) {
      const CfExpansion x = random_point(g, rng, 15);
      const Surd v = value_of(x);
      INFO(name << " " << x.to_string());
      CHECK(SurdSum(v) <= SurdSum(hi.value));
      CHECK(SurdSum(v) >= SurdSum(lo.value));
    }
  }
}

TEST_CASE("extremal search reports empty sets") {
  CHECK_THROWS_AS(extremal_value(CantorSetHandle{builtin("X3a")}, Extremum::Max, Word::parse("13")),
                  std::invalid_argument);
  CHECK_THROWS_AS(extremal_value(CantorSetHandle{builtin("E2")}, Extremum::Max, Word::parse("3")),
                  std::invalid_argument);
}

TEST_CASE("past side equals future side for symmetric specs") {
  for (const SftSpec& s : builtin_specs()) {
    for (Extremum which : {Extremum::Min, Extremum::Max}) {
      CHECK(extremal_value(CantorSetHandle{s, Side::Future}, which).value ==
            extremal_value(CantorSetHandle{s, Side::Past}, which).value);
    }
  }
  SftSpec lopsided{"L", {1, 2, 3}, {}, {Word::parse("123")}, {}};
  CHECK(is_transitive(lopsided));
  CHECK_FALSE(is_symmetric(lopsided));
}

TEST_CASE("every builtin spec is transitive and symmetric") {
  for (const SftSpec& s : builtin_specs()) {
    INFO(s.name);
    CHECK(is_transitive(s));
    CHECK(is_symmetric(s));
  }
  SftSpec one_way{"W", {1, 2}, {}, {Word::parse("21")}, {}};
  CHECK_FALSE(is_transitive(one_way));
}

TEST_CASE("gap constants for the quoted pairs") {
  const GapConstant c41 = gap_constant(builtin("B4.1"), builtin("E2"));
  const SurdSum root2_plus_root3 = SurdSum(Surd::sqrt_of(2)) + SurdSum(Surd::sqrt_of(3));
  CHECK(c41.majorant == root2_plus_root3);
  CHECK(c41.value <= c41.majorant);
  CHECK(c41.majorant < SurdSum(Surd::sqrt_of(10)));

  const GapConstant c42 = gap_constant(builtin("E2"), builtin("E3"));
  // [2;(1,2)] + [0;(1,3)]
  const SurdSum bound = SurdSum(Surd(2) + eval_periodic(Word{}, Word::parse("12"))) +
                        SurdSum(eval_periodic(Word{}, Word::parse("13")));
  CHECK(c42.majorant == bound);
  CHECK(c42.value <= bound);
  CHECK(bound < SurdSum(Surd::sqrt_of(13)));

  const GapConstant c43 = gap_constant(builtin("B4.3"), builtin("E3"));
  CHECK(c43.value < SurdSum(Surd(mpq_class(384, 100))));
  // the printed witness pair evaluates below 3.81
  const SurdSum printed = SurdSum(Surd(3) + eval_periodic(Word{}, Word::parse("21"))) +
                          SurdSum(eval_periodic(Word::parse("2"), Word::parse("31")));
  CHECK(printed < SurdSum(Surd(mpq_class(381, 100))));
  // continuing the block 2321 with 1 gives a smaller beta than that witness
  CHECK(c43.expression() == "[3;2,1,(1,2)] + [0;2,(3,1)]");
}

TEST_CASE("gap constants against a cylinder-scan oracle") {
  struct Pair {
    const char* b;
    const char* c;
  };
  for (const Pair p : {Pair{"B4.1", "E2"}, Pair{"E2", "E3"}, Pair{"B4.3", "E3"}, Pair{"B5.3", "X3b"},
                       Pair{"B5.5", "E3"}}) {
    const LabeledGraph gb = compile(builtin(p.b));
    const LabeledGraph gc = compile(builtin(p.c));
    std::map<Digit, std::vector<int>> after;
    for (int v : gb.aligned_starts()) {
      auto& s = after[gb.label[static_cast<std::size_t>(v)]];
      s.insert(s.end(), gb.next[static_cast<std::size_t>(v)].begin(), gb.next[static_cast<std::size_t>(v)].end());
    }
    Interval lo_total = Interval::point(0L, kPrec);
    Interval hi_total = Interval::point(0L, kPrec);
    bool first = true;
    for (auto& [n, set] : after) {
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      const Bracket beta = extremes_by_cylinders(gb, set, 10, false);
      std::vector<int> starts_n;
      for (int v : gc.aligned_starts()) {
        if (gc.label[static_cast<std::size_t>(v)] == n) starts_n.push_back(v);
      }
      const Bracket alpha = extremes_by_cylinders(gc, starts_n, 10, true);
      const Interval lo = Interval::point(mpq_class(1 / beta.hi + alpha.lo), kPrec);
      const Interval hi = Interval::point(mpq_class(1 / beta.lo + alpha.hi), kPrec);
      lo_total = first ? lo : max(lo_total, lo);
      hi_total = first ? hi : max(hi_total, hi);
      first = false;
    }
    const Interval c = gap_constant(builtin(p.b), builtin(p.c)).value.enclose(kPrec);
    INFO(p.b << "/" << p.c << " " << c.to_string(8));
    CHECK_FALSE(c.certainly_less(lo_total));
    CHECK_FALSE(hi_total.certainly_less(c));
  }
}

TEST_CASE("gap constants sit below the guarded intervals") {
  struct Row {
    const char* b;
    const char* c;
    Surd below;
  };
  const Row rows[] = {
      {"B4.1", "E2", Surd::sqrt_of(10)},          {"B4.2", "E3", Surd::sqrt_of(13)},
      {"B4.3", "E3", Surd(mpq_class(384, 100))}, {"B5.3", "X3b", Surd(mpq_class(384, 100))},
      {"B5.4", "X3c", Surd(mpq_class(392, 100))}, {"B5.5", "E3", Surd(mpq_class(401, 100))},
      {"B4.4", "X4", Surd::sqrt_of(20)},          {"B5.1", "E2", Surd(mpq_class(306, 100))},
  };
  for (const Row& r : rows) {
    const GapConstant g = gap_constant(builtin(r.b), builtin(r.c));
    INFO(r.b << "/" << r.c << " " << approx(g.value, 10).to_string(10));
    CHECK(g.value < SurdSum(r.below));
  }
}

TEST_CASE("gap constant preconditions") {
  CHECK_THROWS_AS(gap_constant(builtin("E3"), builtin("E2")), std::invalid_argument);
  SftSpec one_way{"W", {1, 2}, {}, {Word::parse("21")}, {}};
  CHECK_THROWS_AS(gap_constant(one_way, builtin("E2")), std::invalid_argument);
  SftSpec lopsided{"L", {1, 2, 3}, {}, {Word::parse("123")}, {}};
  CHECK_THROWS_AS(gap_constant(builtin("E2"), lopsided), std::invalid_argument);
}

TEST_CASE("spec files round trip and locate errors") {
  for (const SftSpec& s : builtin_specs()) {
    CHECK(parse_spec(format_spec(s)) == s);
    CHECK(format_spec(parse_spec(format_spec(s))) == format_spec(s));
  }
  try {
    (void)parse_spec("name: t\nalphabet: 1 2\nforbidden: 13\n", "t.sft");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(e.field() == "forbidden");
  }
  try {
    (void)parse_spec("name: t\nalphabet: 1 2\n\nbogus: 1\n", "t.sft");
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(e.line() == 4);
  }
}
