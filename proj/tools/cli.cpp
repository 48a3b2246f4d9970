#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "mlgap/cover.hpp"
#include "mlgap/jp.hpp"
#include "mlgap/report.hpp"
#include "mlgap/sft_io.hpp"
#include "mlgap/symbolic.hpp"

namespace mlgap::cli {

namespace {

struct Options {
  int precision = kDefaultDecimalDigits;
  int threads = 1;

  std::vector<std::string> period;

  std::string spec;
  bool want_min = false;
  bool want_max = false;
  std::string prefix;
  bool past = false;

  std::string b_spec;
  std::string c_spec;
  std::string below;

  std::string case_ref;
  bool find_s = false;
  std::string tolerance = "0.000001";

  int order = 0;
  int oracle_depth = 8;

  std::string mode = "rigorous";
  std::string format = "text";
};

Precision working(const Options& o) { return Precision::decimal_digits(o.precision); }

// Shown digits; enclosures are computed at the working precision.
int shown(const Options& o) { return std::min(o.precision, 40); }

Word period_word(const std::vector<std::string>& tokens) {
  if (tokens.size() == 1) return Word::parse(tokens.front());
  std::vector<Digit> digits;
  for (const std::string& t : tokens) {
    const Word w = Word::parse(t);
    digits.insert(digits.end(), w.digits().begin(), w.digits().end());
  }
  return Word(digits);
}

// "sqrt(20)", "3.84" or "381/100".
SurdSum parse_threshold(const std::string& text) {
  if (text.rfind("sqrt(", 0) == 0 && text.back() == ')') {
    return SurdSum(Surd::sqrt_of(mpz_class(text.substr(5, text.size() - 6), 10)));
  }
  const std::size_t dot = text.find('.');
  if (dot == std::string::npos) {
    mpq_class q(text, 10);
    q.canonicalize();
    return SurdSum(Surd(q));
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
  mpq_class q(mpz_class(text.substr(0, dot) + text.substr(dot + 1), 10), den);
  q.canonicalize();
  return SurdSum(Surd(q));
}

int markov_value_cmd(const Options& o, std::ostream& out) {
  const PeriodicSeq seq{period_word(o.period)};
  const MarkovValue m = markov_value(seq);
  out << "period      " << seq.period.to_string() << "\n";
  out << "m           " << m.value.to_string() << "\n";
  out << "enclosure   " << approx(SurdSum(m.value), shown(o)).to_string(shown(o)) << "\n";
  out << "attained at shift " << m.position << "\n";
  return 0;
}

int extremal_cmd(const Options& o, std::ostream& out) {
  const CantorSetHandle k{resolve_spec(o.spec), o.past ? Side::Past : Side::Future};
  const Extremum which = o.want_min ? Extremum::Min : Extremum::Max;
  const ExtremalResult r = extremal_value(k, which, Word::parse(o.prefix));
  out << (which == Extremum::Min ? "min" : "max") << " of K(" << k.spec.name << ")"
      << (o.past ? " (past)" : "") << (o.prefix.empty() ? "" : " with prefix " + o.prefix) << "\n";
  out << "witness     " << r.witness.to_string() << "\n";
  out << "value       " << r.value.to_string() << "\n";
  out << "enclosure   " << approx(SurdSum(r.value), shown(o)).to_string(shown(o)) << "\n";
  return 0;
}

int gap_constant_cmd(const Options& o, std::ostream& out) {
  const SftSpec b = resolve_spec(o.b_spec);
  const SftSpec c = resolve_spec(o.c_spec);
  const GapConstant g = gap_constant(b, c);
  out << "c(" << b.name << ", " << c.name << ")\n";
  out << "value       " << g.expression() << "\n";
  out << "exact       " << g.value.to_string() << "\n";
  out << "enclosure   " << approx(g.value, shown(o)).to_string(shown(o)) << "\n";
  out << "majorant    " << g.majorant.to_string() << " ~ " << approx(g.majorant, 12).to_string(12) << "\n";
  if (o.below.empty()) return 0;
  const bool holds = g.value < parse_threshold(o.below);
  out << "c < " << o.below << "  " << (holds ? "PASS" : "FAIL") << "\n";
  return holds ? 0 : 1;
}

int verify_cover_cmd(const Options& o, std::ostream& out) {
  const BranchCase c = resolve_case(o.case_ref);
  const Certificate cert = verify_case(c, working(o));
  out << "case " << c.name << (c.note.empty() ? "" : "  (" + c.note + ")") << "\n";
  out << "s = " << cert.s << "\n";
  for (const RuleSum& r : cert.rules) {
    out << "  rule " << r.label << "\n";
    for (const TermBound& t : r.terms) {
      out << "    " << t.extension.to_string() << "  " << t.fn.to_string() << "  max <= "
          << t.max.value.upper().to_fixed(10, MPFR_RNDU) << "\n";
    }
    out << "    sum <= " << r.sum.upper().to_fixed(12, MPFR_RNDU) << "\n";
  }
  out << "max rule sum <= " << cert.sum_at_s.upper().to_fixed(12, MPFR_RNDU) << "  (< 1: "
      << (cert.verdict ? "yes" : "no") << ", < " << cert.margin_target << ": " << (cert.margin_met ? "yes" : "no")
      << ")\n";
  if (o.find_s) {
    const mpq_class tol = parse_threshold(o.tolerance).rational_part();
    const mpq_class s = min_admissible_s(c, tol, working(o));
    out << "smallest admissible s ~ " << BigFloat::from_rational(s, working(o)).to_fixed(8, MPFR_RNDU) << " (+- "
        << o.tolerance << ")\n";
  }
  const bool pass = cert.verdict && cert.margin_met;
  out << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int dim_cmd(const Options& o, std::ostream& out) {
  const SftSpec spec = resolve_spec(o.spec);
  const GaussSystem sys = make_gauss_system(spec);
  const int order = o.order > 0 ? o.order : default_order(sys);
  const DimEstimate e = estimate_dimension(sys, order, 1e-10, o.threads);
  char line[160];
  std::snprintf(line, sizeof line, "HD(K(%s)) ~ %.6f  order %d  residual %.1e  %s\n", spec.name.c_str(), e.value,
                e.order, e.residual, e.method.c_str());
  out << line;
  if (o.oracle_depth <= 0) return 0;
  const PressureBracket b = pressure_bracket(sys, o.oracle_depth);
  const bool inside = b.lower.get_d() <= e.value && e.value <= b.upper.get_d();
  std::snprintf(line, sizeof line, "bracket at depth %d: [%.6f, %.6f]  %s\n", b.depth, b.lower.get_d(),
                b.upper.get_d(), b.method.c_str());
  out << line;
  out << "estimate inside bracket  " << (inside ? "PASS" : "FAIL") << "\n";
  return inside ? 0 : 1;
}

int report_cmd(const Options& o, std::ostream& out) {
  const Mode mode = parse_mode(o.mode);
  const GlobalReport r = assemble(mode, compute_inputs(mode, working(o), o.threads));
  out << (o.format == "structured" ? to_structured(r) : to_text(r));
  return report_passes(r) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov and Lagrange spectra: exact values, gap constants, covering certificates and dimension bounds",
               "mlgap"};
  Options o;
  app.add_option("--precision", o.precision, "working precision in decimal digits")
      ->check(CLI::Range(10, 2000));
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  app.require_subcommand(1);

  auto* mv = app.add_subcommand("markov-value", "Markov value of a periodic sequence");
  mv->add_option("period", o.period, "period digits, e.g. 2211 or 2 2 1 1")->required();

  auto* ex = app.add_subcommand("extremal", "min or max of K(spec)");
  ex->add_option("spec", o.spec, "spec file or builtin name")->required();
  auto* fmin = ex->add_flag("--min", o.want_min);
  auto* fmax = ex->add_flag("--max", o.want_max);
  fmin->excludes(fmax);
  ex->add_option("--prefix", o.prefix, "required leading digits");
  ex->add_flag("--past", o.past, "use reversed sequences");

  auto* gc = app.add_subcommand("gap-constant", "enclosure of c(B, C)");
  gc->add_option("B", o.b_spec, "spec file or builtin name")->required();
  gc->add_option("C", o.c_spec, "spec file or builtin name")->required();
  gc->add_option("--below", o.below, "threshold to certify, e.g. sqrt(10) or 3.84");

  auto* vc = app.add_subcommand("verify-cover", "covering certificate for a branch case");
  vc->add_option("case", o.case_ref, "case file or builtin name (4.1 ... 5.5)")->required();
  vc->add_flag("--find-s", o.find_s, "also bisect for the smallest admissible exponent");
  vc->add_option("--tolerance", o.tolerance, "bisection tolerance for --find-s");

  auto* dm = app.add_subcommand("dim", "Jenkinson-Pollicott dimension estimate");
  dm->add_option("spec", o.spec, "spec file or builtin name")->required();
  dm->add_option("--order", o.order, "determinant order")->check(CLI::Range(1, 12));
  dm->add_option("--oracle-depth", o.oracle_depth, "pressure bracket depth, 0 to skip")->check(CLI::Range(0, 14));

  auto* rp = app.add_subcommand("report", "piecewise global bound");
  rp->add_option("--mode", o.mode)->check(CLI::IsMember({"rigorous", "heuristic", "substituted"}));
  rp->add_option("--format", o.format)->check(CLI::IsMember({"text", "structured"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (ex->parsed() && !o.want_min && !o.want_max) {
    err << "error: extremal needs --min or --max\n";
    return 2;
  }

  try {
    if (mv->parsed()) return markov_value_cmd(o, out);
    if (ex->parsed()) return extremal_cmd(o, out);
    if (gc->parsed()) return gap_constant_cmd(o, out);
    if (vc->parsed()) return verify_cover_cmd(o, out);
    if (dm->parsed()) return dim_cmd(o, out);
    if (rp->parsed()) return report_cmd(o, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mlgap::cli
