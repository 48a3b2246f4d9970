#include <doctest.h>

#include <gmpxx.h>

#include <set>

#include "mlgap/report.hpp"

using namespace mlgap;

namespace {

const ReportInputs& rigorous_inputs() {
  static const ReportInputs in = compute_inputs(Mode::Rigorous);
  return in;
}

// Exact cross-check of a decimal sum: scale everything to integers.
mpz_class scaled(const std::string& text, int decimals) {
  std::string digits;
  int seen = -1;
  for (char ch : text) {
    if (ch == '.') {
      seen = 0;
      continue;
    }
    digits += ch;
    if (seen >= 0) ++seen;
  }
  if (seen < 0) seen = 0;
  digits.append(static_cast<std::size_t>(decimals - seen), '0');
  return mpz_class(digits, 10);
}

std::string interval_of(const PieceBound& p) {
  return (p.lower.closed ? "[" : "(") + p.lower.text + ", " + p.upper.text + ")";
}

void check_tiling(const GlobalReport& r) {
  REQUIRE_FALSE(r.pieces.empty());
  CHECK(r.pieces.front().lower.text == "-inf");
  CHECK(r.pieces.back().upper.text == "inf");
  for (std::size_t i = 0; i + 1 < r.pieces.size(); ++i) {
    CHECK(r.pieces[i].upper.text == r.pieces[i + 1].lower.text);
  }
}

}  // namespace

TEST_CASE("decimal helpers") {
  CHECK(decimal_add({{1, "0.531291"}, {1, "0.174813"}}) == "0.706104");
  CHECK(decimal_add({{1, "0.705661"}, {1, "0.281266"}}) == "0.986927");
  CHECK(decimal_add({{2, "0.365"}}) == "0.730");
  CHECK(decimal_add({{1, "0.65"}, {1, "0.177645"}}) == "0.827645");
  CHECK(round_up("0.855266", 3) == "0.856");
  CHECK(round_up("0.730", 2) == "0.73");
  CHECK(round_up("0.8", 3) == "0.800");
  CHECK(decimals_of("0.93") == 2);
  CHECK(decimals_of("1") == 0);
  // against integer arithmetic
  const char* terms[] = {"0.531291", "0.174813", "0.25966", "0.612", "0.715", "0.172825"};
  for (const char* a : terms) {
    for (const char* b : terms) {
      const mpz_class expected = scaled(a, 6) + scaled(b, 6);
      const std::string got = decimal_add({{1, a}, {1, b}});
      CHECK(scaled(got, 6) == expected);
    }
  }
  CHECK(parse_mode("heuristic") == Mode::Heuristic);
  CHECK_THROWS_AS(parse_mode("exact"), std::invalid_argument);
}

TEST_CASE("rigorous report reproduces the per-interval sums") {
  const GlobalReport r = assemble(Mode::Rigorous, rigorous_inputs());
  check_tiling(r);
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"(-inf, sqrt(10))", "0.93"},       {"(sqrt(10), sqrt(13))", "0.706104"},
      {"(sqrt(13), 3.84)", "0.986927"},   {"(3.84, sqrt(20))", "0.986927"},
      {"(sqrt(20), sqrt(21))", "0.961772"}, {"[sqrt(21), inf)", ""},
  };
  REQUIRE(r.pieces.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    INFO(interval_of(r.pieces[i]));
    CHECK(interval_of(r.pieces[i]) == expected[i].first);
    CHECK(r.pieces[i].sum_bound == expected[i].second);
    CHECK(r.pieces[i].label == "rigorous");
  }
  CHECK(r.pieces.back().kind == "empty");
  CHECK(r.global_bound == "0.986927");
  CHECK(report_passes(r));
  // the quoted sums are exact, no rounding needed
  for (const PieceBound& p : r.pieces) {
    if (p.kind == "sum") CHECK(p.exact == p.printed);
  }
  CHECK(r.certificates.size() == 4);
  CHECK(r.gap_constants.size() == 4);
}

TEST_CASE("rigorous report never carries a JP-labeled dimension") {
  const GlobalReport r = assemble(Mode::Rigorous, rigorous_inputs());
  CHECK(r.estimates.empty());
  for (const PieceBound& p : r.pieces) {
    for (const Alternative& a : p.alternatives) {
      for (const Term& t : a.terms) CHECK(t.source.find("JP") == std::string::npos);
    }
  }
  // extra estimates in the inputs are ignored
  ReportInputs in = rigorous_inputs();
  in.estimates["E3"] = EstimateRecord{"E3", "0.705661", 8, "1e-10", "HEURISTIC", "0.705661", "Hensley", true};
  CHECK(assemble(Mode::Rigorous, in) == assemble(Mode::Rigorous, rigorous_inputs()));
}

TEST_CASE("heuristic report reproduces the quoted pieces") {
  ReportInputs in;
  for (const char* name : {"4.1", "4.2", "4.4", "5.3", "5.4", "5.5"}) {
    in.certificates[name] = make_record(name, default_precision());
  }
  for (const char* label : {"B5.1/E2", "B4.2/E3", "B5.3/X3b", "B5.4/X3c", "B5.5/E3", "B4.4/X4"}) {
    in.gaps[label] = make_gap_check(label, default_precision());
  }
  const GlobalReport r = assemble(Mode::Heuristic, in);
  check_tiling(r);
  const std::vector<std::tuple<std::string, std::string, std::string>> expected = {
      {"(-inf, sqrt(13))", "0.730", "0.73"},  {"(sqrt(13), 3.84)", "0.855266", "0.856"},
      {"(3.84, 3.92)", "0.87166", "0.872"},   {"(3.92, 4.01)", "0.827645", "0.828"},
      {"(4.01, sqrt(20))", "0.873316", "0.873316"}, {"(sqrt(20), sqrt(21))", "0.887825", "0.888"},
      {"[sqrt(21), inf)", "", ""},
  };
  REQUIRE(r.pieces.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& [where, exact, bound] = expected[i];
    INFO(where);
    CHECK(interval_of(r.pieces[i]) == where);
    CHECK(r.pieces[i].exact == exact);
    CHECK(r.pieces[i].sum_bound == bound);
    CHECK(r.pieces[i].label == "heuristic");
  }
  // (-inf, sqrt(13)) takes the larger of 2 * 0.365 and 0.706104
  CHECK(r.pieces[0].alternatives.size() == 2);
  CHECK(r.pieces[0].alternatives[1].sum == "0.706104");
  CHECK(r.global_bound == "0.888");
  CHECK(report_passes(r));
}

TEST_CASE("global bound is the max of the piece bounds") {
  for (Mode mode : {Mode::Rigorous}) {
    const GlobalReport r = assemble(mode, rigorous_inputs());
    mpq_class best = 0;
    std::string text;
    for (const PieceBound& p : r.pieces) {
      if (p.sum_bound.empty()) continue;
      const mpq_class v(scaled(p.sum_bound, 6), mpz_class(1000000));
      if (v > best) {
        best = v;
        text = p.sum_bound;
      }
    }
    CHECK(r.global_bound == text);
  }
}

TEST_CASE("missing or failed inputs name the piece") {
  ReportInputs in = rigorous_inputs();
  in.certificates.erase("4.3");
  try {
    (void)assemble(Mode::Rigorous, in);
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    CHECK(what.find("(3.84, sqrt(20))") != std::string::npos);
    CHECK(what.find("4.3") != std::string::npos);
  }
  in = rigorous_inputs();
  in.gaps["B4.1/E2"].holds = false;
  CHECK_THROWS_WITH_AS(assemble(Mode::Rigorous, in), doctest::Contains("(sqrt(10), sqrt(13))"), std::runtime_error);
  in = rigorous_inputs();
  in.certificates["4.4"].verdict = false;
  CHECK_THROWS_WITH_AS(assemble(Mode::Rigorous, in), doctest::Contains("(sqrt(20), sqrt(21))"), std::runtime_error);
  CHECK_THROWS_WITH_AS(assemble(Mode::Substituted, rigorous_inputs()), doctest::Contains("JP estimate"),
                       std::runtime_error);
}

TEST_CASE("structured output round trips and is byte-stable") {
  const GlobalReport r = assemble(Mode::Rigorous, rigorous_inputs());
  const std::string text = to_structured(r);
  const GlobalReport back = from_structured(text);
  CHECK(back == r);
  CHECK(to_structured(back) == text);
  CHECK(to_structured(assemble(Mode::Rigorous, compute_inputs(Mode::Rigorous))) == text);
  for (const char* field : {"\"mode\"", "\"pieces\"", "\"global_bound\"", "\"certificates\""}) {
    CHECK(text.find(field) != std::string::npos);
  }
  const std::string table = to_text(r);
  CHECK(table.find("0.986927") != std::string::npos);
  CHECK(table.find("HD(M \\ L) < 0.986927") != std::string::npos);
}

TEST_CASE("report verdict catches broken reports") {
  GlobalReport r = assemble(Mode::Rigorous, rigorous_inputs());
  CHECK(report_passes(r));
  GlobalReport gap = r;
  gap.pieces[2].lower.text = "3.6";
  CHECK_FALSE(report_passes(gap));
  GlobalReport wrong = r;
  wrong.global_bound = "0.961772";
  CHECK_FALSE(report_passes(wrong));
  GlobalReport cert = r;
  cert.certificates[0].margin_met = false;
  CHECK_FALSE(report_passes(cert));
}

TEST_CASE("substituted report stays near the rigorous bound") {
  ReportInputs in = rigorous_inputs();
  for (const char* name : {"E2", "E3", "E4"}) in.estimates[name] = make_estimate(name);
  const GlobalReport r = assemble(Mode::Substituted, in);
  check_tiling(r);
  CHECK(r.mode == "substituted");
  std::set<std::string> sources;
  for (const PieceBound& p : r.pieces) {
    CHECK(p.label == "heuristic");
    for (const Alternative& a : p.alternatives) {
      for (const Term& t : a.terms) sources.insert(t.source);
    }
  }
  CHECK(sources.count("JP estimate") == 1);
  CHECK(sources.count("Hensley") == 0);
  const double global = std::stod(r.global_bound);
  CHECK(std::abs(global - 0.986927) < 0.01);
  CHECK(r.estimates.size() == 3);
  for (const EstimateRecord& e : r.estimates) {
    INFO(e.set_name << " " << e.value);
    CHECK(e.reference_source == "Hensley");
    CHECK(e.within_tolerance);
  }
  CHECK(report_passes(r));
}
