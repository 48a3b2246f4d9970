#include "mlgap/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

#include "mlgap/constants.hpp"
#include "mlgap/cover.hpp"
#include "mlgap/sft_io.hpp"
#include "mlgap/symbolic.hpp"

namespace mlgap {

namespace {

using json = nlohmann::ordered_json;

struct GapRow {
  const char* label;
  const char* b;
  const char* c;
  const char* threshold;
};

// Each piece above sqrt(10) opens with a gap check: c(B, C) below its lower end.
const GapRow kGapRows[] = {
    {"B4.1/E2", "B4.1", "E2", "sqrt(10)"}, {"B4.2/E3", "B4.2", "E3", "sqrt(13)"},
    {"B4.3/E3", "B4.3", "E3", "3.84"},     {"B4.4/X4", "B4.4", "X4", "sqrt(20)"},
    {"B5.1/E2", "B5.1", "E2", "3.06"},     {"B5.3/X3b", "B5.3", "X3b", "3.84"},
    {"B5.4/X3c", "B5.4", "X3c", "3.92"},   {"B5.5/E3", "B5.5", "E3", "4.01"},
};

const GapRow& gap_row(const std::string& label) {
  for (const GapRow& r : kGapRows) {
    if (label == r.label) return r;
  }
  throw std::invalid_argument("unknown gap check '" + label + "'");
}

Surd threshold_value(std::string_view text) {
  if (text.rfind("sqrt(", 0) == 0) {
    return Surd::sqrt_of(std::stol(std::string(text.substr(5, text.size() - 6))));
  }
  mpq_class q;
  const std::size_t dot = text.find('.');
  const std::string digits = std::string(text.substr(0, dot)) +
                             (dot == std::string_view::npos ? "" : std::string(text.substr(dot + 1)));
  const std::size_t scale = dot == std::string_view::npos ? 0 : text.size() - dot - 1;
  q = mpq_class(mpz_class(digits, 10), mpz_class(1));
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
  q /= den;
  q.canonicalize();
  return Surd(q);
}

mpq_class parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty decimal");
  const std::size_t dot = text.find('.');
  std::string digits = text;
  std::size_t scale = 0;
  if (dot != std::string::npos) {
    digits = text.substr(0, dot) + text.substr(dot + 1);
    scale = text.size() - dot - 1;
  }
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Exact rendering when q * 10^decimals is an integer; rounds up otherwise.
std::string format_decimal(const mpq_class& q, int decimals) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  const mpq_class scaled = q * scale;
  mpz_class n;
  mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const bool negative = n < 0;
  if (negative) n = -n;
  std::string digits = n.get_str();
  if (decimals == 0) return (negative ? "-" : "") + digits;
  if (digits.size() <= static_cast<std::size_t>(decimals)) {
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  return (negative ? "-" : "") + digits;
}

Term hensley(const constants::Imported& c) {
  return Term{"HD(" + std::string(c.key) + ")", std::string(c.value), std::string(c.source), 1};
}

Term published(const constants::Imported& c, int weight = 1) {
  return Term{"HD(" + std::string(c.key) + ")", std::string(c.value), std::string(c.source), weight};
}

const constants::Imported* reference_for(const std::string& set_name) {
  using namespace constants;
  for (const Imported* c : {&kHensleyE2, &kHensleyE3, &kHensleyE4, &kPublishedX2, &kPublishedX3a,
                            &kPublishedX3b, &kPublishedX3c, &kPublishedX4}) {
    if (c->key == set_name) return c;
  }
  return nullptr;
}

// A planned piece: endpoints, quoted value, alternatives still referring to
// inputs by name.
struct PlanTerm {
  enum class Kind { Imported, Certificate, Estimate } kind;
  std::string key;  // case name or set name for the last two kinds
  Term imported;
  int weight = 1;
};

struct Plan {
  std::string lower;
  std::string upper;
  bool closed_lower = false;
  std::string kind;
  std::vector<std::vector<PlanTerm>> alternatives;
  std::vector<std::string> gaps;
  std::vector<std::string> conditions;
  std::string printed;
};

PlanTerm imported(const Term& t) { return PlanTerm{PlanTerm::Kind::Imported, "", t, t.weight}; }
PlanTerm certificate(const std::string& name) { return PlanTerm{PlanTerm::Kind::Certificate, name, {}, 1}; }
PlanTerm estimate(const std::string& name, int weight = 1) {
  return PlanTerm{PlanTerm::Kind::Estimate, name, {}, weight};
}

std::vector<Plan> plan_for(Mode mode) {
  using namespace constants;
  const std::string low(kLowSpectrum.value);
  const Term low_term{"HD(M below sqrt(10))", low, std::string(kLowSpectrum.source), 1};
  const Plan hall{"sqrt(21)", "inf", true, "empty", {}, {}, {"[sqrt(21), inf) lies in L (" + std::string(kHallRaySource) + ")"}, ""};
  const bool sub = mode == Mode::Substituted;
  auto dim = [&](const Imported& c) { return sub ? estimate(std::string(c.key)) : imported(hensley(c)); };

  if (mode == Mode::Heuristic) {
    return {
        {"-inf", "sqrt(13)", false, "sum",
         {{imported(published(kPublishedX2, 2))}, {imported(hensley(kHensleyE2)), certificate("4.1")}},
         {"B5.1/E2"},
         {"below 3.06 the sequences avoid 121 and 212 (Jackson)"},
         "0.73"},
        {"sqrt(13)", "3.84", false, "sum", {{imported(published(kPublishedX3a)), certificate("4.2")}},
         {"B4.2/E3"}, {"13 and 31 force values above 3.84 (Bumby)"}, "0.856"},
        {"3.84", "3.92", false, "sum", {{imported(published(kPublishedX3b)), certificate("5.3")}},
         {"B5.3/X3b"}, {}, "0.872"},
        {"3.92", "4.01", false, "sum", {{imported(published(kPublishedX3c)), certificate("5.4")}},
         {"B5.4/X3c"}, {}, "0.828"},
        {"4.01", "sqrt(20)", false, "sum", {{imported(hensley(kHensleyE3)), certificate("5.5")}},
         {"B5.5/E3"}, {}, "0.873316"},
        {"sqrt(20)", "sqrt(21)", false, "sum", {{imported(published(kPublishedX4)), certificate("4.4")}},
         {"B4.4/X4"}, {}, "0.888"},
        hall,
    };
  }
  return {
      {"-inf", "sqrt(10)", false, "imported", {{imported(low_term)}}, {}, {}, sub ? "" : low},
      {"sqrt(10)", "sqrt(13)", false, "sum", {{dim(kHensleyE2), certificate("4.1")}}, {"B4.1/E2"}, {},
       sub ? "" : "0.706104"},
      {"sqrt(13)", "3.84", false, "sum", {{dim(kHensleyE3), certificate("4.2")}}, {"B4.2/E3"},
       {"13 and 31 force values above 3.84 (Bumby)"}, sub ? "" : "0.986927"},
      {"3.84", "sqrt(20)", false, "sum", {{dim(kHensleyE3), certificate("4.3")}}, {"B4.3/E3"}, {},
       sub ? "" : "0.986927"},
      {"sqrt(20)", "sqrt(21)", false, "sum", {{dim(kHensleyE4), certificate("4.4")}}, {"B4.4/X4"}, {},
       sub ? "" : "0.961772"},
      hall,
  };
}

std::string piece_name(const Plan& p) {
  return std::string(p.closed_lower ? "[" : "(") + p.lower + ", " + p.upper + ")";
}

std::vector<std::string> needed_cases(const std::vector<Plan>& plans) {
  std::vector<std::string> out;
  for (const Plan& p : plans) {
    for (const auto& alt : p.alternatives) {
      for (const PlanTerm& t : alt) {
        if (t.kind == PlanTerm::Kind::Certificate && std::find(out.begin(), out.end(), t.key) == out.end()) {
          out.push_back(t.key);
        }
      }
    }
  }
  return out;
}

std::vector<std::string> needed_gaps(const std::vector<Plan>& plans) {
  std::vector<std::string> out;
  for (const Plan& p : plans) {
    for (const std::string& g : p.gaps) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

// Sets whose estimates a mode embeds: the published ones in heuristic mode,
// the substituted Hensley sets otherwise.
std::vector<std::string> needed_estimates(Mode mode) {
  switch (mode) {
    case Mode::Rigorous: return {};
    case Mode::Heuristic: return {"X2", "X3a", "X3b", "X3c", "X4"};
    case Mode::Substituted: return {"E2", "E3", "E4"};
  }
  return {};
}

std::string format_residual(double r) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1e", r);
  return buffer;
}

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Rigorous: return "rigorous";
    case Mode::Heuristic: return "heuristic";
    case Mode::Substituted: return "substituted";
  }
  return "rigorous";
}

Mode parse_mode(std::string_view text) {
  if (text == "rigorous") return Mode::Rigorous;
  if (text == "heuristic") return Mode::Heuristic;
  if (text == "substituted") return Mode::Substituted;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

int decimals_of(const std::string& decimal) {
  const std::size_t dot = decimal.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(decimal.size() - dot - 1);
}

std::string decimal_add(const std::vector<std::pair<int, std::string>>& weighted) {
  mpq_class total = 0;
  int decimals = 0;
  for (const auto& [w, text] : weighted) {
    total += w * parse_decimal(text);
    decimals = std::max(decimals, decimals_of(text));
  }
  return format_decimal(total, decimals);
}

std::string round_up(const std::string& decimal, int decimals) {
  return format_decimal(parse_decimal(decimal), decimals);
}

CertificateRecord make_record(const std::string& case_name, Precision prec) {
  const auto c = find_builtin_case(case_name);
  if (!c) throw std::invalid_argument("no builtin case '" + case_name + "'");
  const Certificate cert = verify_case(*c, prec);
  return CertificateRecord{cert.case_name, cert.s, cert.margin_target, cert.sum_at_s.upper().to_fixed(10, MPFR_RNDU),
                           cert.verdict, cert.margin_met};
}

GapCheck make_gap_check(const std::string& label, Precision prec) {
  const GapRow& row = gap_row(label);
  const GapConstant g = gap_constant(*find_builtin_spec(row.b), *find_builtin_spec(row.c));
  const Interval v = g.value.enclose(prec);
  return GapCheck{row.label, row.b, row.c, v.upper().to_fixed(12, MPFR_RNDU), row.threshold,
                  g.value < SurdSum(threshold_value(row.threshold))};
}

EstimateRecord make_estimate(const std::string& set_name, int threads) {
  const auto spec = find_builtin_spec(set_name);
  if (!spec) throw std::invalid_argument("no builtin spec '" + set_name + "'");
  const GaussSystem sys = make_gauss_system(*spec);
  const DimEstimate e = estimate_dimension(sys, default_order(sys), 1e-10, threads);
  char value[32];
  std::snprintf(value, sizeof value, "%.6f", e.value);
  EstimateRecord r{set_name, value, e.order, format_residual(e.residual), e.method, "", "", true};
  if (const constants::Imported* ref = reference_for(set_name)) {
    r.reference = std::string(ref->value);
    r.reference_source = std::string(ref->source);
    const double tol =
        ref->source == constants::kHensleyE2.source ? constants::kHensleyTolerance : constants::kPublishedTolerance;
    r.within_tolerance = std::abs(e.value - std::stod(r.reference)) <= tol;
  }
  return r;
}

ReportInputs compute_inputs(Mode mode, Precision prec, int threads) {
  const std::vector<Plan> plans = plan_for(mode);
  ReportInputs in;
  // estimates dominate the cost; run them alongside the exact checks
  std::vector<std::future<EstimateRecord>> jobs;
  for (const std::string& name : needed_estimates(mode)) {
    const auto policy = threads > 1 ? std::launch::async : std::launch::deferred;
    jobs.push_back(std::async(policy, [name] { return make_estimate(name, 1); }));
  }
  for (const std::string& name : needed_cases(plans)) in.certificates[name] = make_record(name, prec);
  for (const std::string& label : needed_gaps(plans)) in.gaps[label] = make_gap_check(label, prec);
  for (auto& j : jobs) {
    EstimateRecord r = j.get();
    in.estimates[r.set_name] = std::move(r);
  }
  return in;
}

GlobalReport assemble(Mode mode, const ReportInputs& inputs) {
  GlobalReport out;
  out.mode = std::string(to_string(mode));
  const std::string label = mode == Mode::Rigorous ? "rigorous" : "heuristic";
  mpq_class global = 0;
  for (const Plan& plan : plan_for(mode)) {
    const std::string where = piece_name(plan);
    PieceBound piece;
    piece.lower = Endpoint{plan.lower, plan.closed_lower};
    piece.upper = Endpoint{plan.upper, false};
    piece.kind = plan.kind;
    piece.printed = plan.printed;
    piece.label = label;
    piece.conditions = plan.conditions;
    for (const std::string& g : plan.gaps) {
      const auto it = inputs.gaps.find(g);
      if (it == inputs.gaps.end()) throw std::runtime_error("piece " + where + ": missing gap check " + g);
      if (!it->second.holds) throw std::runtime_error("piece " + where + ": gap check " + g + " fails");
      piece.conditions.push_back("c(" + it->second.b + ", " + it->second.c + ") < " + it->second.threshold);
    }
    if (plan.kind == "empty") {
      out.pieces.push_back(std::move(piece));
      continue;
    }
    mpq_class best = -1;
    for (const auto& alt : plan.alternatives) {
      Alternative a;
      std::vector<std::pair<int, std::string>> weighted;
      for (const PlanTerm& t : alt) {
        Term term = t.imported;
        if (t.kind == PlanTerm::Kind::Certificate) {
          const auto it = inputs.certificates.find(t.key);
          if (it == inputs.certificates.end()) {
            throw std::runtime_error("piece " + where + ": missing certificate " + t.key);
          }
          if (!it->second.verdict) throw std::runtime_error("piece " + where + ": certificate " + t.key + " fails");
          term = Term{"HD(gap set " + t.key + ")", it->second.s, "certificate " + t.key, 1};
        } else if (t.kind == PlanTerm::Kind::Estimate) {
          const auto it = inputs.estimates.find(t.key);
          if (it == inputs.estimates.end()) {
            throw std::runtime_error("piece " + where + ": missing JP estimate for " + t.key);
          }
          term = Term{"HD(" + t.key + ")", it->second.value, "JP estimate", t.weight};
        }
        weighted.emplace_back(term.weight, term.value);
        a.terms.push_back(std::move(term));
      }
      a.sum = decimal_add(weighted);
      const mpq_class v = parse_decimal(a.sum);
      if (v > best) {
        best = v;
        piece.exact = a.sum;
      }
      piece.alternatives.push_back(std::move(a));
    }
    piece.sum_bound = piece.printed.empty() ? piece.exact : round_up(piece.exact, decimals_of(piece.printed));
    global = std::max(global, parse_decimal(piece.sum_bound));
    out.pieces.push_back(std::move(piece));
  }
  int decimals = 0;
  for (const PieceBound& p : out.pieces) {
    if (!p.sum_bound.empty() && parse_decimal(p.sum_bound) == global) decimals = decimals_of(p.sum_bound);
  }
  out.global_bound = format_decimal(global, decimals);
  for (const auto& [name, rec] : inputs.certificates) out.certificates.push_back(rec);
  for (const auto& [name, gap] : inputs.gaps) out.gap_constants.push_back(gap);
  if (mode != Mode::Rigorous) {
    for (const auto& [name, est] : inputs.estimates) out.estimates.push_back(est);
  }
  return out;
}

namespace {

json to_json(const Endpoint& e) { return json{{"text", e.text}, {"closed", e.closed}}; }
Endpoint endpoint_from(const json& j) { return Endpoint{j.at("text").get<std::string>(), j.at("closed").get<bool>()}; }

}  // namespace

std::string to_structured(const GlobalReport& r) {
  json pieces = json::array();
  for (const PieceBound& p : r.pieces) {
    json alts = json::array();
    for (const Alternative& a : p.alternatives) {
      json terms = json::array();
      for (const Term& t : a.terms) {
        terms.push_back(json{{"quantity", t.quantity}, {"value", t.value}, {"source", t.source}, {"weight", t.weight}});
      }
      alts.push_back(json{{"terms", terms}, {"sum", a.sum}});
    }
    pieces.push_back(json{{"lower", to_json(p.lower)},
                          {"upper", to_json(p.upper)},
                          {"kind", p.kind},
                          {"alternatives", alts},
                          {"conditions", p.conditions},
                          {"exact", p.exact},
                          {"printed", p.printed},
                          {"sum_bound", p.sum_bound},
                          {"label", p.label}});
  }
  json certs = json::array();
  for (const CertificateRecord& c : r.certificates) {
    certs.push_back(json{{"case", c.case_name},
                         {"s", c.s},
                         {"margin_target", c.margin_target},
                         {"sum_upper", c.sum_upper},
                         {"verdict", c.verdict},
                         {"margin_met", c.margin_met}});
  }
  json gaps = json::array();
  for (const GapCheck& g : r.gap_constants) {
    gaps.push_back(json{{"label", g.label},
                        {"b", g.b},
                        {"c", g.c},
                        {"value_upper", g.value},
                        {"threshold", g.threshold},
                        {"holds", g.holds}});
  }
  json ests = json::array();
  for (const EstimateRecord& e : r.estimates) {
    ests.push_back(json{{"set", e.set_name},
                        {"value", e.value},
                        {"order", e.order},
                        {"residual", e.residual},
                        {"method", e.method},
                        {"reference", e.reference},
                        {"reference_source", e.reference_source},
                        {"within_tolerance", e.within_tolerance}});
  }
  const json doc{{"mode", r.mode},           {"pieces", pieces},       {"global_bound", r.global_bound},
                 {"certificates", certs},    {"gap_constants", gaps},  {"estimates", ests}};
  return doc.dump(2) + "\n";
}

GlobalReport from_structured(std::string_view text) {
  const json doc = json::parse(text);
  GlobalReport r;
  r.mode = doc.at("mode").get<std::string>();
  r.global_bound = doc.at("global_bound").get<std::string>();
  for (const json& p : doc.at("pieces")) {
    PieceBound piece;
    piece.lower = endpoint_from(p.at("lower"));
    piece.upper = endpoint_from(p.at("upper"));
    piece.kind = p.at("kind").get<std::string>();
    for (const json& a : p.at("alternatives")) {
      Alternative alt;
      alt.sum = a.at("sum").get<std::string>();
      for (const json& t : a.at("terms")) {
        alt.terms.push_back(Term{t.at("quantity").get<std::string>(), t.at("value").get<std::string>(),
                                 t.at("source").get<std::string>(), t.at("weight").get<int>()});
      }
      piece.alternatives.push_back(std::move(alt));
    }
    piece.conditions = p.at("conditions").get<std::vector<std::string>>();
    piece.exact = p.at("exact").get<std::string>();
    piece.printed = p.at("printed").get<std::string>();
    piece.sum_bound = p.at("sum_bound").get<std::string>();
    piece.label = p.at("label").get<std::string>();
    r.pieces.push_back(std::move(piece));
  }
  for (const json& c : doc.at("certificates")) {
    r.certificates.push_back(CertificateRecord{c.at("case").get<std::string>(), c.at("s").get<std::string>(),
                                               c.at("margin_target").get<std::string>(),
                                               c.at("sum_upper").get<std::string>(), c.at("verdict").get<bool>(),
                                               c.at("margin_met").get<bool>()});
  }
  for (const json& g : doc.at("gap_constants")) {
    r.gap_constants.push_back(GapCheck{g.at("label").get<std::string>(), g.at("b").get<std::string>(),
                                       g.at("c").get<std::string>(), g.at("value_upper").get<std::string>(),
                                       g.at("threshold").get<std::string>(), g.at("holds").get<bool>()});
  }
  for (const json& e : doc.at("estimates")) {
    r.estimates.push_back(EstimateRecord{e.at("set").get<std::string>(), e.at("value").get<std::string>(),
                                         e.at("order").get<int>(), e.at("residual").get<std::string>(),
                                         e.at("method").get<std::string>(), e.at("reference").get<std::string>(),
                                         e.at("reference_source").get<std::string>(),
                                         e.at("within_tolerance").get<bool>()});
  }
  return r;
}

std::string to_text(const GlobalReport& r) {
  std::ostringstream out;
  out << "mode: " << r.mode << "\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %-10s %-10s %-10s %s\n", "interval", "bound", "exact", "quoted", "terms");
  out << line;
  for (const PieceBound& p : r.pieces) {
    const std::string interval = (p.lower.closed ? "[" : "(") + p.lower.text + ", " + p.upper.text + ")";
    std::string terms;
    if (p.kind == "empty") terms = "empty";
    for (const Alternative& a : p.alternatives) {
      if (!terms.empty()) terms += "  |  ";
      for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const Term& t = a.terms[i];
        if (i) terms += " + ";
        if (t.weight != 1) terms += std::to_string(t.weight) + "*";
        terms += t.value + " " + t.quantity + " [" + t.source + "]";
      }
    }
    std::string quoted = p.printed;
    if (!quoted.empty() && quoted == p.exact) quoted = "=";
    std::snprintf(line, sizeof line, "%-22s %-10s %-10s %-10s ", interval.c_str(),
                  p.kind == "empty" ? "-" : p.sum_bound.c_str(), p.exact.empty() ? "-" : p.exact.c_str(),
                  quoted.empty() ? "-" : quoted.c_str());
    out << line << terms << "\n";
    for (const std::string& c : p.conditions) out << std::string(24, ' ') << "given " << c << "\n";
  }
  out << "\nglobal bound: HD(M \\ L) < " << r.global_bound << "  (" << (r.mode == "rigorous" ? "rigorous" : "heuristic")
      << ")\n";
  if (!r.certificates.empty()) {
    out << "\ncertificates\n";
    for (const CertificateRecord& c : r.certificates) {
      std::snprintf(line, sizeof line, "  %-4s s = %-9s max rule sum <= %s  target < %-9s %s\n", c.case_name.c_str(),
                    c.s.c_str(), c.sum_upper.c_str(), c.margin_target.c_str(),
                    c.verdict && c.margin_met ? "PASS" : "FAIL");
      out << line;
    }
  }
  if (!r.gap_constants.empty()) {
    out << "\ngap constants\n";
    for (const GapCheck& g : r.gap_constants) {
      std::snprintf(line, sizeof line, "  c(%s, %s) <= %s < %-9s %s\n", g.b.c_str(), g.c.c_str(), g.value.c_str(),
                    g.threshold.c_str(), g.holds ? "PASS" : "FAIL");
      out << line;
    }
  }
  if (!r.estimates.empty()) {
    out << "\nJP estimates (HEURISTIC)\n";
    for (const EstimateRecord& e : r.estimates) {
      std::snprintf(line, sizeof line, "  %-4s %s  order %d  residual %s  vs %s (%s)%s\n", e.set_name.c_str(),
                    e.value.c_str(), e.order, e.residual.c_str(), e.reference.c_str(), e.reference_source.c_str(),
                    e.within_tolerance ? "" : "  DEVIATES");
      out << line;
    }
  }
  return out.str();
}

bool report_passes(const GlobalReport& r) {
  for (const CertificateRecord& c : r.certificates) {
    if (!c.verdict || !c.margin_met) return false;
  }
  for (const GapCheck& g : r.gap_constants) {
    if (!g.holds) return false;
  }
  if (r.pieces.empty() || r.pieces.front().lower.text != "-inf" || r.pieces.back().upper.text != "inf") return false;
  mpq_class global = 0;
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    const PieceBound& p = r.pieces[i];
    if (i + 1 < r.pieces.size() && p.upper.text != r.pieces[i + 1].lower.text) return false;
    if (p.kind == "empty") continue;
    if (!p.printed.empty() && p.sum_bound != p.printed) return false;
    if (parse_decimal(p.sum_bound) < parse_decimal(p.exact)) return false;
    global = std::max(global, parse_decimal(p.sum_bound));
  }
  return parse_decimal(r.global_bound) == global;
}

}  // namespace mlgap
