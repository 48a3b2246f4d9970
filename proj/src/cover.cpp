#include "mlgap/cover.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mlgap/sft_io.hpp"

namespace mlgap {

Certificate verify_case_at(const BranchCase& c, const Interval& s) {
  const Precision prec = s.precision();
  Certificate cert;
  cert.case_name = c.name;
  cert.s = c.s_target;
  cert.margin_target = c.margin_target;
  cert.sum_at_s = Interval::point(0L, prec);
  bool first = true;
  for (const BranchRule& rule : c.rules) {
    RuleSum rs{rule.label, {}, Interval::point(0L, prec)};
    for (const Word& w : rule.terms) {
      RatioFn fn = ratio_fn(w);
      RatioMax m = max_ratio(fn, prec);
      TermBound t{w, std::move(fn), std::move(m), Interval(prec)};
      // x^s is increasing in x for s > 0, so the upper end bounds the term
      const Interval top(t.max.value.upper(), t.max.value.upper());
      t.power = Interval(pow(t.max.value, s).lower(), pow(top, s).upper());
      rs.sum = rs.sum + t.power;
      rs.terms.push_back(std::move(t));
    }
    cert.sum_at_s = first ? rs.sum : max(cert.sum_at_s, rs.sum);
    first = false;
    cert.rules.push_back(std::move(rs));
  }
  const BigFloat one(1, prec);
  cert.verdict = cert.sum_at_s.upper() < one;
  const Interval margin = Interval::decimal(c.margin_target.empty() ? "1" : c.margin_target, prec);
  cert.margin_met = cert.sum_at_s.upper() < margin.lower();
  return cert;
}

Certificate verify_case(const BranchCase& c, Precision prec) {
  return verify_case_at(c, Interval::decimal(c.s_target, prec));
}

mpq_class min_admissible_s(const BranchCase& c, const mpq_class& tolerance, Precision prec) {
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  std::vector<std::vector<Interval>> maxima;
  for (const BranchRule& rule : c.rules) {
    auto& row = maxima.emplace_back();
    for (const Word& w : rule.terms) {
      const RatioMax m = max_ratio(ratio_fn(w), prec);
      if (!(m.value.upper() < BigFloat(1, prec))) {
        throw std::domain_error("term " + w.to_string() + " has maximum ratio >= 1");
      }
      row.emplace_back(m.value.upper(), m.value.upper());
    }
  }
  // same test as verify_case_at, with the maxima computed once
  auto passes = [&](const mpq_class& s) {
    const Interval e = Interval::point(s, prec);
    for (const auto& row : maxima) {
      Interval sum = Interval::point(0L, prec);
      for (const Interval& top : row) sum = sum + pow(top, e);
      if (!(sum.upper() < BigFloat(1, prec))) return false;
    }
    return true;
  };
  mpq_class lo = 0;
  mpq_class hi = 1;
  while (!passes(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > 1024) throw std::domain_error("no admissible exponent below 1024");
  }
  while (hi - lo > tolerance) {
    mpq_class mid = (lo + hi) / 2;
    mid.canonicalize();
    if (passes(mid)) hi = mid;
    else lo = mid;
  }
  mpq_class out = (lo + hi) / 2;
  out.canonicalize();
  return out;
}

BranchCase parse_case(std::string_view text, const std::string& source) {
  BranchCase c;
  bool have_name = false;
  bool have_s = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw SpecError(source, line_no, line, "expected 'field: value'");
    std::string field = line.substr(0, colon);
    field.erase(field.find_last_not_of(" \t") + 1);
    std::string value = line.substr(colon + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (field == "name") {
      if (have_name) throw SpecError(source, line_no, field, "given twice");
      have_name = true;
      c.name = value;
    } else if (field == "s" || field == "margin") {
      try {
        (void)BigFloat::from_string(value, Precision::from_bits(64));
      } catch (const std::invalid_argument&) {
        throw SpecError(source, line_no, field, "not a decimal number: '" + value + "'");
      }
      if (field == "s") {
        if (have_s) throw SpecError(source, line_no, field, "given twice");
        have_s = true;
        c.s_target = value;
      } else {
        c.margin_target = value;
      }
    } else if (field == "rule") {
      std::istringstream parts(value);
      BranchRule rule;
      if (!(parts >> rule.label)) throw SpecError(source, line_no, field, "missing rule label");
      for (std::string t; parts >> t;) {
        try {
          Word w = Word::parse(t);
          if (w.empty()) throw std::invalid_argument("empty extension word");
          rule.terms.push_back(std::move(w));
        } catch (const std::invalid_argument& e) {
          throw SpecError(source, line_no, field, e.what());
        }
      }
      c.rules.push_back(std::move(rule));
    } else if (field == "note") {
      c.note = value;
    } else {
      throw SpecError(source, line_no, field, "unknown field");
    }
  }
  if (!have_name) throw SpecError(source, 0, "name", "missing");
  if (!have_s) throw SpecError(source, 0, "s", "missing");
  if (c.margin_target.empty()) c.margin_target = "1";
  return c;
}

BranchCase load_case(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open case file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_case(buffer.str(), path);
}

std::string format_case(const BranchCase& c) {
  std::string out = "name: " + c.name + "\ns: " + c.s_target + "\nmargin: " + c.margin_target + "\n";
  for (const BranchRule& r : c.rules) {
    out += "rule: " + r.label;
    for (const Word& w : r.terms) out += " " + w.to_string();
    out += '\n';
  }
  if (!c.note.empty()) out += "note: " + c.note + "\n";
  return out;
}

namespace {

BranchRule rule(const char* label, std::initializer_list<const char*> words) {
  BranchRule r{label, {}};
  for (const char* w : words) r.terms.push_back(Word::parse(w));
  return r;
}

std::vector<BranchCase> make_cases() {
  std::vector<BranchCase> out;
  out.push_back({"4.1", {rule("g", {"112", "221"})}, "0.174813", "1",
                 "gap set for Markov values in (sqrt(10), sqrt(13))"});
  out.push_back({"4.2", {rule("g", {"3", "21"}), rule("h", {"221", "23", "1121"})}, "0.281266", "0.999999",
                 "(sqrt(13), 3.84); the 113 continuation is omitted since it only occurs "
                 "above Bumby's 3.84 threshold"});
  out.push_back({"4.3", {rule("g", {"3", "21"}), rule("h", {"23", "1121", "113"})}, "0.281266", "0.999999",
                 "(3.84, sqrt(20))"});
  out.push_back({"4.4",
                 {rule("g", {"4", "3131"}), rule("h", {"33131", "34", "2131"}), rule("i", {"23", "1131"})},
                 "0.172825", "0.999997", "(sqrt(20), sqrt(21))"});
  out.push_back({"5.3", {rule("g", {"33", "21"}), rule("h", {"23", "113", "1121"})}, "0.25966", "0.99999",
                 "(3.84, 3.92)"});
  out.push_back({"5.4", {rule("g", {"331", "21"}), rule("h", {"23", "113"})}, "0.177645", "0.99999",
                 "(3.92, 4.01); 0.177645 is the exponent these sums certify"});
  out.push_back({"5.5", {rule("g", {"331", "213"}), rule("h", {"23", "113"})}, "0.167655", "0.9999",
                 "(4.01, sqrt(20))"});
  return out;
}

}  // namespace

const std::vector<BranchCase>& builtin_cases() {
  static const std::vector<BranchCase> cases = make_cases();
  return cases;
}

std::optional<BranchCase> find_builtin_case(std::string_view name) {
  for (const BranchCase& c : builtin_cases()) {
    if (c.name == name) return c;
  }
  return std::nullopt;
}

BranchCase resolve_case(const std::string& path_or_name) {
  if (std::filesystem::is_regular_file(path_or_name)) return load_case(path_or_name);
  if (auto c = find_builtin_case(path_or_name)) return *c;
  throw std::runtime_error("no case file or builtin case named '" + path_or_name + "'");
}

}  // namespace mlgap
